use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::word::{Alphabet, Generator, Word};
use super::Rational;

/// Element of the free associative algebra over the rationals on two
/// generators.
///
/// The term map never stores a zero coefficient, so structural equality is
/// value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NCPoly::monomial(Word::empty(), c)
    }

    pub fn generator(g: Generator) -> Self {
        NCPoly::monomial(Word::letter(g), Rational::one())
    }

    pub fn a() -> Self {
        NCPoly::generator(Generator::A)
    }

    pub fn b() -> Self {
        NCPoly::generator(Generator::B)
    }

    pub fn word(w: Word) -> Self {
        NCPoly::monomial(w, Rational::one())
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    /// Sums the given terms; repeated words are merged and zeros dropped.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = NCPoly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in deglex order of their words.
    pub fn terms(&self) -> btree_map::Iter<'_, Word, Rational> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximal word degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        // deglex order puts the longest words last
        self.terms.keys().next_back().map(Word::degree)
    }

    /// Smallest word degree, `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::degree)
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == d)
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &NCPoly) -> NCPoly {
        self * other - other * self
    }

    /// `k`-fold iterated commutator `[self, [self, ... [self, arg]]]`.
    pub fn ad_power(&self, arg: &NCPoly, k: usize) -> NCPoly {
        let mut out = arg.clone();
        for _ in 0..k {
            out = self.commutator(&out);
        }
        out
    }

    /// Anti-automorphism reversing every word.
    pub fn reverse(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.clone()))
                .collect(),
        }
    }

    /// Automorphism exchanging the two generators.
    pub fn swap_generators(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.swapped(), c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn grade(&self, d: usize) -> NCPoly {
        self.filter(|w| w.degree() == d)
    }

    /// Drops every word of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> NCPoly {
        self.filter(|w| w.degree() <= max_degree)
    }

    pub fn filter<F: Fn(&Word) -> bool>(&self, keep: F) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Product truncated at total degree `max_degree`.
    pub fn mul_truncated(&self, other: &NCPoly, max_degree: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, x) in &self.terms {
            if u.degree() > max_degree {
                break;
            }
            for (v, y) in &other.terms {
                if u.degree() + v.degree() > max_degree {
                    break;
                }
                out.add_term(u.concat(v), x * y);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> NCPoly {
        let mut out = NCPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if w.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push_str(&w.render(alphabet));
            }
        }
        out
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Alphabet::AB))
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::generator(g)
    }
}

impl FromIterator<(Word, Rational)> for NCPoly {
    fn from_iter<I: IntoIterator<Item = (Word, Rational)>>(iter: I) -> Self {
        NCPoly::from_terms(iter)
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, x) in &self.terms {
            for (v, y) in &rhs.terms {
                out.add_term(u.concat(v), x * y);
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(mut self) -> NCPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: &NCPoly) -> NCPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for NCPoly {
    fn sum<I: Iterator<Item = NCPoly>>(iter: I) -> NCPoly {
        let mut out = NCPoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rational;
    use Generator::{A, B};

    fn w(s: &str) -> Word {
        Word::parse(s, Alphabet::AB).unwrap()
    }

    fn poly(terms: &[(&str, i64)]) -> NCPoly {
        terms.iter().map(|&(s, c)| (w(s), rational(c, 1))).collect()
    }

    #[test]
    fn additive_identity_and_cancellation() {
        assert_eq!(NCPoly::a() + NCPoly::zero(), NCPoly::a());
        let ab = NCPoly::word(w("AB"));
        let sum = &ab + &ab.scale(&rational(-1, 1));
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn disjoint_supports_merge() {
        let comm = NCPoly::a().commutator(&NCPoly::b());
        let sum = NCPoly::b() + comm;
        assert_eq!(sum, poly(&[("B", 1), ("AB", 1), ("BA", -1)]));
    }

    #[test]
    fn products() {
        assert_eq!(NCPoly::a() * NCPoly::b(), NCPoly::word(w("AB")));
        let s = NCPoly::a() + NCPoly::b();
        assert_eq!(&s * &s, poly(&[("AA", 1), ("AB", 1), ("BA", 1), ("BB", 1)]));
        let comm = NCPoly::a().commutator(&NCPoly::b());
        assert_eq!(comm * NCPoly::b(), poly(&[("ABB", 1), ("BAB", -1)]));
    }

    #[test]
    fn product_degree_adds() {
        let p = poly(&[("A", 1), ("ABB", 2)]);
        let q = poly(&[("B", 3), ("BA", -1)]);
        assert_eq!((&p * &q).degree(), Some(5));
        assert_eq!(NCPoly::zero().degree(), None);
        assert_eq!(NCPoly::one().degree(), Some(0));
    }

    #[test]
    fn commutators() {
        assert_eq!(
            NCPoly::a().commutator(&NCPoly::b()),
            poly(&[("AB", 1), ("BA", -1)])
        );
        assert!(NCPoly::a().commutator(&NCPoly::a()).is_zero());
        let inner = poly(&[("AB", 1), ("BA", -1)]);
        assert_eq!(
            NCPoly::a().commutator(&inner),
            poly(&[("AAB", 1), ("ABA", -2), ("BAA", 1)])
        );
    }

    #[test]
    fn ad_powers() {
        let a = NCPoly::a();
        let b = NCPoly::b();
        assert_eq!(a.ad_power(&b, 0), b);
        assert_eq!(a.ad_power(&b, 1), poly(&[("AB", 1), ("BA", -1)]));
        assert_eq!(a.ad_power(&b, 2), a.commutator(&a.commutator(&b)));
        assert_eq!(
            a.ad_power(&b, 2),
            poly(&[("AAB", 1), ("ABA", -2), ("BAA", 1)])
        );
    }

    #[test]
    fn reversal() {
        assert_eq!(NCPoly::word(w("AB")).reverse(), NCPoly::word(w("BA")));
        assert_eq!(NCPoly::word(w("AAB")).reverse(), NCPoly::word(w("BAA")));
        let comm = NCPoly::a().commutator(&NCPoly::b());
        assert_eq!(comm.reverse(), -comm);
    }

    #[test]
    fn grading() {
        let p = poly(&[("A", 1), ("AB", 1)]);
        assert_eq!(p.grade(1), NCPoly::a());
        assert!(p.grade(3).is_zero());
        let s = (NCPoly::a() + NCPoly::b()).pow(2);
        assert_eq!(s.grade(2), s);
    }

    #[test]
    fn truncated_product_matches_full() {
        let p = poly(&[("", 1), ("A", 1), ("AB", 2)]);
        let q = poly(&[("", 1), ("B", -1), ("BBA", 1)]);
        assert_eq!(p.mul_truncated(&q, 3), (&p * &q).truncate(3));
    }

    #[test]
    fn render_text() {
        let p = poly(&[("", 1), ("AB", 1), ("BA", -1)]).scale(&rational(1, 2));
        assert_eq!(p.to_string(), "1/2 + 1/2 AB - 1/2 BA");
        assert_eq!(NCPoly::zero().to_string(), "0");
        let q = NCPoly::generator(B).scale(&rational(-1, 1)) + NCPoly::generator(A);
        assert_eq!(q.render(Alphabet::XY), "X - Y");
    }
}
