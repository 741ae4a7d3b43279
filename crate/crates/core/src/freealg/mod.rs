//! Free associative algebra on two generators with exact rational
//! coefficients, and truncated formal series over it.

mod poly;
mod series;
mod word;

use num_bigint::BigInt;
use num_traits::One;

pub use poly::NCPoly;
pub use series::{product, TSeries};
pub use word::{Alphabet, Generator, Word};

/// Exact coefficient type. Always stored in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `1 / n!` as an exact rational.
pub fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// `sum_{j<=max_degree} p^j / j!`, truncated at total word degree
/// `max_degree`. `p` must have no constant term.
pub fn taylor_exp(p: &NCPoly, max_degree: usize) -> NCPoly {
    debug_assert!(p.coefficient(&Word::empty()) == Rational::from_integer(0.into()));
    let mut out = NCPoly::one();
    let mut power = NCPoly::one();
    for j in 1..=max_degree {
        power = power.mul_truncated(p, max_degree);
        if power.is_zero() {
            break;
        }
        out += &power.scale(&inv_factorial(j));
    }
    out
}
