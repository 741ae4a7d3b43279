//! Exact identity suites run by `verify` and by the acceptance tests.

use std::fmt;
use std::str::FromStr;

use crate::bch::{self, bch_product_x, bch_product_y, bch_symmetrized, taylor_product};
use crate::error::{Error, Result};
use crate::freealg::{rational, taylor_exp, Alphabet, NCPoly, Rational};
use crate::zassenhaus::{
    classical_zassenhaus, exp_sum_series, expansion, rebuild_product, reconstruct_power,
    script_b_prime, xm, xmp_closed, xmp_recursive, ExpansionConfig, Side, XmpTable,
};

/// Bounds used by the suites.
pub const XMP_MAX_M: usize = 8;
pub const INDUCTION_MAX_M: usize = 7;
pub const POWER_MAX_N: usize = 8;
pub const EXPANSION_MAX_N: usize = 6;
pub const BCH_MAX_N: usize = 6;
pub const CLASSICAL_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Golden,
    Xmp,
    Induction,
    Resum,
    Duality,
    Bch,
    Classical,
    All,
}

impl Suite {
    pub const EACH: [Suite; 7] = [
        Suite::Golden,
        Suite::Xmp,
        Suite::Induction,
        Suite::Resum,
        Suite::Duality,
        Suite::Bch,
        Suite::Classical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Xmp => "xmp",
            Suite::Induction => "induction",
            Suite::Resum => "resum",
            Suite::Duality => "duality",
            Suite::Bch => "bch",
            Suite::Classical => "classical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of a single identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// For a failed identity, the nonzero difference `lhs - rhs`.
    pub counterexample: Option<String>,
}

impl Check {
    fn equal(name: impl Into<String>, lhs: &NCPoly, rhs: &NCPoly, alphabet: Alphabet) -> Check {
        let passed = lhs == rhs;
        Check {
            name: name.into(),
            passed,
            counterexample: (!passed).then(|| (lhs - rhs).render(alphabet)),
        }
    }

    fn truth(name: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) -> Check {
        Check {
            name: name.into(),
            passed,
            counterexample: (!passed).then(detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

pub fn run(suite: Suite) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::EACH.into_iter().map(run_one).collect(),
        s => vec![run_one(s)],
    }
}

fn run_one(suite: Suite) -> SuiteReport {
    let checks = match suite {
        Suite::Golden => golden(),
        Suite::Xmp => xmp(),
        Suite::Induction => induction(),
        Suite::Resum => resum(),
        Suite::Duality => duality(),
        Suite::Bch => bch_suite(),
        Suite::Classical => classical(),
        Suite::All => unreachable!("expanded by run"),
    };
    SuiteReport { suite, checks }
}

/// Reference table of `X_{m,p}` in nested-commutator notation: `B` is the
/// generator, `B'n` is `(ad_A)^{n-1} B`.
pub const XMP_TABLE: [(usize, usize, &str); 14] = [
    (2, 1, "B'2"),
    (2, 2, "B^2"),
    (3, 1, "B'3"),
    (3, 2, "B'2 B + 2 B B'2"),
    (3, 3, "B^3"),
    (4, 1, "B'4"),
    (4, 2, "B'3 B + 3 (B'2)^2 + 3 B B'3"),
    (4, 3, "(B'2 B + 2 B B'2) B + 3 B^2 B'2"),
    (4, 4, "B^4"),
    (5, 1, "B'5"),
    (5, 2, "B'4 B + 4 B'3 B'2 + 6 B'2 B'3 + 4 B B'4"),
    (
        5,
        3,
        "(B'3 B + 3 (B'2)^2 + 3 B B'3) B + 4 (B'2 B + 2 B B'2) B'2 + 6 B^2 B'3",
    ),
    (5, 4, "{(B'2 B + 2 B B'2) B + 3 B^2 B'2} B + 4 B^3 B'2"),
    (5, 5, "B^5"),
];

/// Reference value of `X_2`.
pub const X2_TABLE: &str = "B^2 + B'2";

fn golden() -> Vec<Check> {
    let mut checks = Vec::new();
    let x2 = parse_commutator_expr(X2_TABLE).expect("fixture parses");
    checks.push(Check::equal("X_2 = B^2 + B'2", &xm(2), &x2, Alphabet::AB));
    for (m, p, text) in XMP_TABLE {
        let expected = parse_commutator_expr(text).expect("fixture parses");
        let rec = xmp_recursive(m, p).expect("valid index");
        let closed = xmp_closed(m, p).expect("valid index");
        let name = format!("X_{{{m},{p}}} = {text}");
        let mut check = Check::equal(name.clone(), &rec, &expected, Alphabet::AB);
        if check.passed {
            check = Check::equal(name, &closed, &expected, Alphabet::AB);
        }
        checks.push(check);
    }
    checks
}

fn xmp() -> Vec<Check> {
    let mut table = XmpTable::new();
    let mut checks = Vec::new();
    for m in 1..=XMP_MAX_M {
        for p in 1..=m {
            let closed = xmp_closed(m, p).expect("valid index");
            let rec = table.get(m, p).expect("valid index");
            checks.push(Check::equal(
                format!("closed X_{{{m},{p}}} = recursive X_{{{m},{p}}}"),
                &closed,
                rec,
                Alphabet::AB,
            ));
        }
    }
    checks
}

fn induction() -> Vec<Check> {
    let a = NCPoly::a();
    let b = NCPoly::b();
    let mut checks = Vec::new();
    for m in 2..=INDUCTION_MAX_M {
        for p in 2..=m {
            let lhs = a.commutator(&xmp_closed(m, p).expect("valid"))
                + &b * &xmp_closed(m, p - 1).expect("valid");
            let rhs = xmp_closed(m + 1, p).expect("valid");
            checks.push(Check::equal(
                format!(
                    "[A, X_{{{m},{p}}}] + B X_{{{m},{}}} = X_{{{},{p}}}",
                    p - 1,
                    m + 1
                ),
                &lhs,
                &rhs,
                Alphabet::AB,
            ));
        }
    }
    checks
}

/// Degree-graded comparison of `lhs` against `rhs` for degrees `0..=n`.
fn graded_checks(
    label: &str,
    lhs: &NCPoly,
    rhs: &NCPoly,
    n: usize,
    alphabet: Alphabet,
) -> Vec<Check> {
    (0..=n)
        .map(|d| {
            Check::equal(
                format!("{label}, degree {d}"),
                &lhs.grade(d),
                &rhs.grade(d),
                alphabet,
            )
        })
        .collect()
}

/// `T_N e^A` and `e^{A+B}`, both truncated at degree `n`.
pub fn right_resummation(n: usize) -> (NCPoly, NCPoly) {
    let t = expansion(&ExpansionConfig::right(n));
    let lhs = t.mul_truncated(&taylor_exp(&NCPoly::a(), n), n);
    (lhs, taylor_exp(&(NCPoly::a() + NCPoly::b()), n))
}

/// `e^A T'_N` and `e^{A+B}`, both truncated at degree `n`.
pub fn left_resummation(n: usize) -> (NCPoly, NCPoly) {
    let t = expansion(&ExpansionConfig::left(n));
    let lhs = taylor_exp(&NCPoly::a(), n).mul_truncated(&t, n);
    (lhs, taylor_exp(&(NCPoly::a() + NCPoly::b()), n))
}

fn resum() -> Vec<Check> {
    let sum = NCPoly::a() + NCPoly::b();
    let mut checks = Vec::new();
    for n in 0..=POWER_MAX_N {
        checks.push(Check::equal(
            format!("sum_m C({n},m) X_m A^({n}-m) = (A+B)^{n}"),
            &reconstruct_power(n),
            &sum.pow(n),
            Alphabet::AB,
        ));
    }
    let (lhs, rhs) = right_resummation(EXPANSION_MAX_N);
    checks.extend(graded_checks(
        &format!("right form T_{EXPANSION_MAX_N} e^A = e^(A+B)"),
        &lhs,
        &rhs,
        EXPANSION_MAX_N,
        Alphabet::AB,
    ));
    checks
}

fn duality() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 0..=EXPANSION_MAX_N {
        let right = expansion(&ExpansionConfig::right(n));
        let left = expansion(&ExpansionConfig::left(n));
        checks.push(Check::equal(
            format!("left T'_{n} = reverse(right T_{n})"),
            &left,
            &right.reverse(),
            Alphabet::AB,
        ));
    }
    let (lhs, rhs) = left_resummation(EXPANSION_MAX_N);
    checks.extend(graded_checks(
        &format!("left form e^A T'_{EXPANSION_MAX_N} = e^(A+B)"),
        &lhs,
        &rhs,
        EXPANSION_MAX_N,
        Alphabet::AB,
    ));
    checks
}

/// Degree-3 part of `e^X e^Y` as displayed at the end of the symmetrized
/// cubic-order computation.
pub fn bch_cubic_display() -> NCPoly {
    let (x, y) = (bch::x(), bch::y());
    let s = &x + &y;
    let xy = x.commutator(&y);
    let nested = y.commutator(&y.commutator(&x)) + x.commutator(&x.commutator(&y));
    nested.scale(&rational(1, 12))
        + (&xy * &s + &s * &xy).scale(&rational(1, 4))
        + s.pow(3).scale(&rational(1, 6))
}

fn bch_suite() -> Vec<Check> {
    let n = BCH_MAX_N;
    let reference = taylor_product(n);
    let px = bch_product_x(n);
    let py = bch_product_y(n);
    let sym = bch_symmetrized(n);
    let mut checks = Vec::new();
    checks.extend(graded_checks(
        "X-form = e^X e^Y",
        &px,
        &reference,
        n,
        Alphabet::XY,
    ));
    checks.extend(graded_checks(
        "Y-form = e^X e^Y",
        &py,
        &reference,
        n,
        Alphabet::XY,
    ));
    checks.extend(graded_checks(
        "symmetrized = e^X e^Y",
        &sym,
        &reference,
        n,
        Alphabet::XY,
    ));
    checks.push(Check::equal(
        "symmetrized degree 3 = 1/12 nested + 1/4 anticommutator + 1/6 cube",
        &sym.grade(3),
        &bch_cubic_display(),
        Alphabet::XY,
    ));
    checks.push(Check::equal(
        "reverse(swap(X-form)) = Y-form",
        &px.swap_generators().reverse(),
        &py,
        Alphabet::XY,
    ));
    checks
}

fn classical() -> Vec<Check> {
    let n = CLASSICAL_N;
    let (a, b) = (NCPoly::a(), NCPoly::b());
    let ab = a.commutator(&b);
    let mut checks = Vec::new();

    let right = classical_zassenhaus(n, n, Side::Right).expect("valid range");
    let left = classical_zassenhaus(n, n, Side::Left).expect("valid range");
    checks.push(Check::equal(
        "Z_2 = -1/2 [A,B]",
        &right.factors[0],
        &ab.scale(&rational(-1, 2)),
        Alphabet::AB,
    ));
    let z3 = b.commutator(&ab).scale(&rational(1, 3)) + a.commutator(&ab).scale(&rational(1, 6));
    checks.push(Check::equal(
        "Z_3 = 1/3 [B,[A,B]] + 1/6 [A,[A,B]]",
        &right.factors[1],
        &z3,
        Alphabet::AB,
    ));
    checks.push(Check::equal(
        "transposed W_2 = 1/2 [A,B]",
        &left.factors[0],
        &ab.scale(&rational(1, 2)),
        Alphabet::AB,
    ));
    for (label, run) in [
        ("e^tA e^tB prod e^(t^n Z_n)", &right),
        ("prod e^(t^n W_n) e^tB e^tA", &left),
    ] {
        let rebuilt = rebuild_product(&run.factors, n, run.ordering).expect("same truncation");
        let target = exp_sum_series(n).expect("nilpotent argument");
        checks.push(Check::truth(
            format!("{label} = e^t(A+B) through t^{n}"),
            rebuilt == target,
            || {
                let k = (0..=n)
                    .find(|&k| rebuilt.coeff(k) != target.coeff(k))
                    .unwrap_or(0);
                format!("t^{k}: {}", (rebuilt.coeff(k) - target.coeff(k)))
            },
        ));
    }
    for (i, (z, w)) in right.factors.iter().zip(&left.factors).enumerate() {
        let k = i + 2;
        checks.push(Check::equal(
            format!("W_{k} = reverse(Z_{k})"),
            w,
            &z.reverse(),
            Alphabet::AB,
        ));
        let sign = if k % 2 == 0 {
            rational(-1, 1)
        } else {
            rational(1, 1)
        };
        checks.push(Check::equal(
            format!("W_{k} = (-1)^({k}+1) Z_{k}"),
            w,
            &z.scale(&sign),
            Alphabet::AB,
        ));
    }
    checks
}

/// Parses sums of products of `B` and `B'n` (nested commutator
/// `(ad_A)^{n-1} B`) with integer coefficients, `^` powers, and `(...)` or
/// `{...}` grouping. Juxtaposition is multiplication.
pub fn parse_commutator_expr(text: &str) -> Result<NCPoly> {
    let mut p = ExprParser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let out = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!(
            "unexpected input at column {}",
            p.pos
        )));
    }
    Ok(out)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| {
            self.chars[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .expect("digits")
        })
    }

    fn sum(&mut self) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        let mut sign = 1;
        loop {
            let term = self.product()?;
            out += &term.scale(&rational(sign, 1));
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }

    fn product(&mut self) -> Result<NCPoly> {
        let coeff = self.number().unwrap_or(1);
        let mut out = NCPoly::constant(Rational::from_integer(coeff.into()));
        let mut factors = 0;
        while let Some(f) = self.factor()? {
            out = &out * &f;
            factors += 1;
        }
        if factors == 0 {
            return Err(Error::Parse(format!(
                "expected a factor at column {}",
                self.pos
            )));
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Option<NCPoly>> {
        let base = match self.peek() {
            Some('B') => {
                self.pos += 1;
                if self.peek() == Some('\'') {
                    self.pos += 1;
                    let n = self
                        .number()
                        .ok_or_else(|| Error::Parse("expected index after B'".into()))?;
                    script_b_prime(n)?
                } else {
                    NCPoly::b()
                }
            }
            Some(open @ ('(' | '{')) => {
                self.pos += 1;
                let inner = self.sum()?;
                let close = if open == '(' { ')' } else { '}' };
                if self.peek() != Some(close) {
                    return Err(Error::Parse(format!(
                        "expected {close:?} at column {}",
                        self.pos
                    )));
                }
                self.pos += 1;
                inner
            }
            _ => return Ok(None),
        };
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self
                .number()
                .ok_or_else(|| Error::Parse("expected exponent after ^".into()))?;
            return Ok(Some(base.pow(k)));
        }
        Ok(Some(base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_basics() {
        let b = NCPoly::b();
        assert_eq!(parse_commutator_expr("B^2").unwrap(), b.pow(2));
        let bp2 = script_b_prime(2).unwrap();
        let e = parse_commutator_expr("B'2 B + 2 B B'2").unwrap();
        assert_eq!(e, &bp2 * &b + (&b * &bp2).scale(&rational(2, 1)));
        assert_eq!(
            parse_commutator_expr("{(B)^2}B - B^3").unwrap(),
            NCPoly::zero()
        );
        assert!(parse_commutator_expr("B +").is_err());
        assert!(parse_commutator_expr("(B").is_err());
        assert!(parse_commutator_expr("B'").is_err());
        assert!(parse_commutator_expr("B'0").is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn xmp_suite_has_36_identities() {
        let r = run(Suite::Xmp);
        assert_eq!(r[0].checks.len(), 36);
        assert!(r[0].passed());
    }

    #[test]
    fn failing_check_reports_difference() {
        let c = Check::equal("x", &NCPoly::a(), &NCPoly::b(), Alphabet::AB);
        assert!(!c.passed);
        assert_eq!(c.counterexample.as_deref(), Some("A - B"));
    }
}
