use super::poly::NCPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Polynomial in a formal commuting parameter `t` with free-algebra
/// coefficients, truncated after `t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    coeffs: Vec<NCPoly>,
}

impl TSeries {
    pub fn zero(truncation: usize) -> Self {
        TSeries {
            coeffs: vec![NCPoly::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        TSeries::constant(NCPoly::one(), truncation)
    }

    pub fn constant(p: NCPoly, truncation: usize) -> Self {
        TSeries::monomial(0, p, truncation)
    }

    /// `t^power * p`; vanishes when `power` exceeds the truncation.
    pub fn monomial(power: usize, p: NCPoly, truncation: usize) -> Self {
        let mut s = TSeries::zero(truncation);
        if power <= truncation {
            s.coeffs[power] = p;
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<NCPoly>, truncation: usize) -> Self {
        coeffs.resize(truncation + 1, NCPoly::zero());
        TSeries { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &NCPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[NCPoly] {
        &self.coeffs
    }

    fn check_same(&self, other: &TSeries) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(Error::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TSeries) -> Result<TSeries> {
        self.check_same(other)?;
        Ok(TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn neg(&self) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Cauchy product, dropping powers of `t` above the truncation.
    pub fn mul(&self, other: &TSeries) -> Result<TSeries> {
        self.check_same(other)?;
        let n = self.truncation();
        let mut out = TSeries::zero(n);
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !y.is_zero() {
                    out.coeffs[i + j] += &(x * y);
                }
            }
        }
        Ok(out)
    }

    /// `sum_{j<=N} s^j / j!` for a series without constant term.
    pub fn exp(&self) -> Result<TSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentExp);
        }
        let n = self.truncation();
        let mut out = TSeries::one(n);
        let mut term = TSeries::one(n);
        for j in 1..=n {
            term = term.mul(self)?.scale(&Rational::new(1.into(), j.into()));
            if term.is_zero() {
                break;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NCPoly::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == NCPoly::one() && self.coeffs[1..].iter().all(NCPoly::is_zero)
    }

    /// Lowest power of `t` above zero with a nonzero coefficient.
    pub fn first_nonconstant_power(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&k| !self.coeffs[k].is_zero())
    }
}

/// Ordered product of a list of series, left to right.
pub fn product<'a, I>(factors: I, truncation: usize) -> Result<TSeries>
where
    I: IntoIterator<Item = &'a TSeries>,
{
    factors
        .into_iter()
        .try_fold(TSeries::one(truncation), |acc, f| acc.mul(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::rational;

    #[test]
    fn cauchy_product_truncates() {
        let one_ta = TSeries::one(1)
            .add(&TSeries::monomial(1, NCPoly::a(), 1))
            .unwrap();
        let one_tb = TSeries::one(1)
            .add(&TSeries::monomial(1, NCPoly::b(), 1))
            .unwrap();
        let prod = one_ta.mul(&one_tb).unwrap();
        assert_eq!(prod.coeff(0), &NCPoly::one());
        assert_eq!(prod.coeff(1), &(NCPoly::a() + NCPoly::b()));

        let one_ta = TSeries::one(2)
            .add(&TSeries::monomial(1, NCPoly::a(), 2))
            .unwrap();
        let one_tb = TSeries::one(2)
            .add(&TSeries::monomial(1, NCPoly::b(), 2))
            .unwrap();
        let prod = one_ta.mul(&one_tb).unwrap();
        assert_eq!(prod.coeff(2), &(NCPoly::a() * NCPoly::b()));
        assert_eq!(prod.mul(&TSeries::one(2)).unwrap(), prod);
    }

    #[test]
    fn mismatched_truncation_is_an_error() {
        let err = TSeries::one(2).mul(&TSeries::one(3)).unwrap_err();
        assert_eq!(err, Error::TruncationMismatch { left: 2, right: 3 });
    }

    #[test]
    fn exp_of_generator() {
        let e = TSeries::monomial(1, NCPoly::a(), 2).exp().unwrap();
        assert_eq!(e.coeff(0), &NCPoly::one());
        assert_eq!(e.coeff(1), &NCPoly::a());
        assert_eq!(e.coeff(2), &NCPoly::a().pow(2).scale(&rational(1, 2)));
        assert!(TSeries::zero(4).exp().unwrap().is_one());
    }

    #[test]
    fn exp_inverse() {
        let s = TSeries::monomial(1, NCPoly::a(), 5);
        let prod = s.exp().unwrap().mul(&s.neg().exp().unwrap()).unwrap();
        assert!(prod.is_one());
    }

    #[test]
    fn exp_rejects_constant_term() {
        assert_eq!(TSeries::one(3).exp().unwrap_err(), Error::NonNilpotentExp);
    }

    #[test]
    fn monomial_beyond_truncation_vanishes() {
        assert!(TSeries::monomial(4, NCPoly::a(), 3).is_zero());
    }
}
