//! JSON wire types. Exact coefficients travel as decimal strings.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, NCPoly, Rational, Word};
use crate::numeric::MatrixJson;
use crate::zassenhaus::Composition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl RationalJson {
    pub fn parse(&self) -> Result<Rational> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {:?}", self.num)))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {:?}", self.den)))?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Rational::new(num, den))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub composition: Vec<usize>,
    pub coefficient: RationalJson,
}

impl TermJson {
    pub fn new(c: &Composition, coefficient: &Rational) -> Self {
        TermJson {
            composition: c.parts().to_vec(),
            coefficient: coefficient.into(),
        }
    }

    pub fn parse(&self) -> Result<(Composition, Rational)> {
        Ok((
            Composition::new(self.composition.clone())?,
            self.coefficient.parse()?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub word: String,
    pub coefficient: RationalJson,
}

/// `{"generators": "AB", "terms": [{"word": "AB", "coefficient": ...}]}`,
/// terms in deglex order; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub generators: String,
    pub terms: Vec<WordTermJson>,
}

impl PolyJson {
    pub fn new(p: &NCPoly, alphabet: Alphabet) -> Self {
        PolyJson {
            generators: [alphabet.first, alphabet.second].iter().collect(),
            terms: p
                .terms()
                .map(|(w, c)| WordTermJson {
                    word: w.render(alphabet),
                    coefficient: c.into(),
                })
                .collect(),
        }
    }

    pub fn parse(&self) -> Result<NCPoly> {
        let letters: Vec<char> = self.generators.chars().collect();
        let [first, second] = letters[..] else {
            return Err(Error::Parse(format!(
                "expected two generators, got {:?}",
                self.generators
            )));
        };
        let alphabet = Alphabet { first, second };
        self.terms
            .iter()
            .map(|t| {
                let w = Word::parse(&t.word, alphabet)
                    .ok_or_else(|| Error::Parse(format!("bad word {:?}", t.word)))?;
                Ok((w, t.coefficient.parse()?))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpandJson {
    pub side: String,
    pub degree: usize,
    pub factors: Option<usize>,
    pub unit: RationalJson,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XmpJson {
    pub m: usize,
    pub p: usize,
    pub polynomial: PolyJson,
    /// Coefficients of `B'_{n_p} ... B'_{n_1}` indexed by `(n_1, ..., n_p)`.
    pub commutator_form: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteJson {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub passed: bool,
    pub suites: Vec<SuiteJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchJson {
    pub form: String,
    pub degree: usize,
    pub terms: Option<Vec<TermJson>>,
    pub polynomial: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalJson {
    pub side: String,
    pub degree: usize,
    pub factors: Option<usize>,
    pub result: MatrixJson,
    pub oracle: MatrixJson,
    pub frobenius_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRowJson {
    pub dim: usize,
    pub fixture: String,
    pub side: String,
    pub total_degree: usize,
    pub factor_cap: Option<usize>,
    pub frobenius_error: f64,
    pub terms_evaluated: u128,
    pub seconds: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchJson {
    pub seed: u64,
    pub rows: Vec<BenchRowJson>,
}
