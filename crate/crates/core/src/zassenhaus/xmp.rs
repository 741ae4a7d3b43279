//! The reordered powers `X_m` and their B-graded pieces `X_{m,p}`.
//!
//! Moving every `A` in `(A+B)^n` to the right gives
//! `(A+B)^n = sum_m C(n,m) X_m A^{n-m}`, and `X_m` splits by the number
//! of `B` letters into `X_{m,1} + ... + X_{m,m}`.

use num_bigint::BigInt;
use num_traits::One;

use super::composition::Composition;
use crate::error::{Error, Result};
use crate::freealg::{factorial, inv_factorial, NCPoly, Rational};

fn check_positive(name: &'static str, m: usize) -> Result<()> {
    if m < 1 {
        return Err(Error::IndexOutOfRange {
            name,
            value: m,
            expected: ">= 1".into(),
        });
    }
    Ok(())
}

fn check_mp(m: usize, p: usize) -> Result<()> {
    check_positive("m", m)?;
    if p < 1 || p > m {
        return Err(Error::IndexOutOfRange {
            name: "p",
            value: p,
            expected: format!("1 <= p <= m = {m}"),
        });
    }
    Ok(())
}

/// Nested commutator `(ad_A)^{m-1} B`.
pub fn script_b_prime(m: usize) -> Result<NCPoly> {
    check_positive("m", m)?;
    Ok(NCPoly::a().ad_power(&NCPoly::b(), m - 1))
}

/// `(ad_A)^{m-1} B / m!`.
pub fn script_b(m: usize) -> Result<NCPoly> {
    Ok(script_b_prime(m)?.scale(&inv_factorial(m)))
}

/// `[script_b(1), ..., script_b(n)]`, built with one commutator per step.
pub fn script_b_list(n: usize) -> Vec<NCPoly> {
    let a = NCPoly::a();
    let mut out = Vec::with_capacity(n);
    let mut nested = NCPoly::b();
    for m in 1..=n {
        if m > 1 {
            nested = a.commutator(&nested);
        }
        out.push(nested.scale(&inv_factorial(m)));
    }
    out
}

/// Memo table for `X_{m,p}` filled by the three-case recursion
///
/// * `X_{m+1,1} = [A, X_{m,1}]`
/// * `X_{m+1,m+1} = B X_{m,m}`
/// * `X_{m+1,p} = [A, X_{m,p}] + B X_{m,p-1}` for `2 <= p <= m`
///
/// starting from `X_{1,1} = B`. Rows are filled in order, so reaching row
/// `m` costs `O(m^2)` polynomial operations.
#[derive(Debug, Default)]
pub struct XmpTable {
    rows: Vec<Vec<NCPoly>>,
}

impl XmpTable {
    pub fn new() -> Self {
        XmpTable::default()
    }

    fn fill_to(&mut self, m: usize) {
        let a = NCPoly::a();
        let b = NCPoly::b();
        if self.rows.is_empty() {
            self.rows.push(vec![b.clone()]);
        }
        while self.rows.len() < m {
            let prev = self.rows.last().expect("row 1 is always present");
            let k = prev.len();
            let mut next = Vec::with_capacity(k + 1);
            next.push(a.commutator(&prev[0]));
            for p in 2..=k {
                next.push(a.commutator(&prev[p - 1]) + &b * &prev[p - 2]);
            }
            next.push(&b * &prev[k - 1]);
            self.rows.push(next);
        }
    }

    pub fn get(&mut self, m: usize, p: usize) -> Result<&NCPoly> {
        check_mp(m, p)?;
        self.fill_to(m);
        Ok(&self.rows[m - 1][p - 1])
    }

    /// `X_m`, with `X_0 = 1`.
    pub fn xm(&mut self, m: usize) -> NCPoly {
        if m == 0 {
            return NCPoly::one();
        }
        self.fill_to(m);
        self.rows[m - 1].iter().cloned().sum()
    }

    /// Number of rows materialised so far.
    pub fn rows_filled(&self) -> usize {
        self.rows.len()
    }
}

/// `X_{m,p}` from the recursion.
pub fn xmp_recursive(m: usize, p: usize) -> Result<NCPoly> {
    XmpTable::new().get(m, p).cloned()
}

/// Weight of the product `script_b(m-K) script_b(k_{p-1}) ... script_b(k_1)`
/// in `X_{m,p}`:
/// `m! k_1 ... k_{p-1} / (m (m-k_1) ... (m-k_1-...-k_{p-2}))`.
pub fn closed_form_weight(m: usize, ks: &[usize]) -> Rational {
    let mut num = factorial(m);
    let mut den = BigInt::one();
    let mut rest = m;
    for &k in ks {
        num *= BigInt::from(k);
        den *= BigInt::from(rest);
        rest -= k;
    }
    Rational::new(num, den)
}

/// Index tuples `(k_1, ..., k_{p-1})` of the iterated closed form: every
/// `k_i >= 1` and `m - k_1 - ... - k_{p-1} >= 1`.
fn closed_form_indices(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn walk(rest: usize, left: usize, ks: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(ks.clone());
            return;
        }
        // leave at least one unit for each remaining k and for the last factor
        for k in 1..=rest - left {
            ks.push(k);
            walk(rest - k, left - 1, ks, out);
            ks.pop();
        }
    }
    let mut out = Vec::new();
    walk(m, p - 1, &mut Vec::new(), &mut out);
    out
}

/// `X_{m,p}` from the fully iterated closed form, summed over
/// `(k_1, ..., k_{p-1})`.
pub fn xmp_closed(m: usize, p: usize) -> Result<NCPoly> {
    check_mp(m, p)?;
    let bs = script_b_list(m);
    let mut out = NCPoly::zero();
    for ks in closed_form_indices(m, p) {
        let last = m - ks.iter().sum::<usize>();
        let mut prod = bs[last - 1].clone();
        for &k in ks.iter().rev() {
            prod = &prod * &bs[k - 1];
        }
        out += &prod.scale(&closed_form_weight(m, &ks));
    }
    Ok(out)
}

/// `X_{m,p}` written over products of nested commutators
/// `B'_{n_p} ... B'_{n_1}`, where `B'_n = (ad_A)^{n-1} B`.
///
/// Each entry pairs the composition `(n_1, ..., n_p)` with its coefficient.
pub fn xmp_prime_form(m: usize, p: usize) -> Result<Vec<(Composition, Rational)>> {
    check_mp(m, p)?;
    let mut out = Vec::new();
    for ks in closed_form_indices(m, p) {
        let last = m - ks.iter().sum::<usize>();
        let mut parts = ks.clone();
        parts.push(last);
        let fact: BigInt = parts.iter().map(|&n| factorial(n)).product();
        let coeff = closed_form_weight(m, &ks) / Rational::from_integer(fact);
        out.push((Composition::new(parts)?, coeff));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// `X_m = sum_p X_{m,p}`, `X_0 = 1`.
pub fn xm(m: usize) -> NCPoly {
    XmpTable::new().xm(m)
}

/// `sum_{m<=n} C(n,m) X_m A^{n-m}`.
pub fn reconstruct_power(n: usize) -> NCPoly {
    let mut table = XmpTable::new();
    let a = NCPoly::a();
    let mut out = NCPoly::zero();
    let mut binom = BigInt::one();
    for m in 0..=n {
        if m > 0 {
            binom = binom * BigInt::from(n - m + 1) / BigInt::from(m);
        }
        let term = &table.xm(m) * &a.pow(n - m);
        out += &term.scale(&Rational::from_integer(binom.clone()));
    }
    out
}
