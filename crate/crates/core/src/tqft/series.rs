//! Finitely supported Laurent series in `t^{1/2}` and `u` with exact
//! rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign};

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::Result;
use crate::json::{int_number, RationalJson};

/// Exponent of a monomial: `t^{t2/2} u^{u}`.
pub type Exponent = (i64, i64);

/// `Σ c · t^{t2/2} u^u`, with `t`-exponents stored doubled. Zero
/// coefficients are never stored, so structural equality is series equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiSeries {
    coeffs: BTreeMap<Exponent, BigRational>,
}

impl BiSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(t2: i64, u: i64, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(t2, u, c);
        s
    }

    pub fn add_term(&mut self, t2: i64, u: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((t2, u)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(t2, u));
        }
    }

    pub fn coefficient(&self, t2: i64, u: i64) -> BigRational {
        self.coeffs.get(&(t2, u)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiSeries {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^{t2/2} u^u`.
    pub fn shift(&self, t2: i64, u: i64) -> Self {
        BiSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(a, b), v)| ((a + t2, b + u), v.clone()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> Vec<SeriesTermJson> {
        self.terms()
            .map(|((t2, u), c)| SeriesTermJson {
                t2,
                u,
                num: int_number(c.numer()),
                den: int_number(c.denom()),
            })
            .collect()
    }

    pub fn from_json(terms: &[SeriesTermJson]) -> Result<Self> {
        let mut s = Self::zero();
        for term in terms {
            s.add_term(
                term.t2,
                term.u,
                RationalJson {
                    num: term.num.clone(),
                    den: term.den.clone(),
                }
                .to_rational()?,
            );
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    /// Doubled exponent of `t`.
    pub t2: i64,
    pub u: i64,
    pub num: Number,
    pub den: Number,
}

impl AddAssign<&BiSeries> for BiSeries {
    fn add_assign(&mut self, rhs: &BiSeries) {
        for (&(t2, u), c) in &rhs.coeffs {
            self.add_term(t2, u, c.clone());
        }
    }
}

impl Add for BiSeries {
    type Output = BiSeries;

    fn add(mut self, rhs: BiSeries) -> BiSeries {
        self += &rhs;
        self
    }
}

impl fmt::Display for BiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((t2, u), c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let t = if t2 % 2 == 0 {
                format!("{}", t2 / 2)
            } else {
                format!("{t2}/2")
            };
            write!(f, "({c})·t^{t}·u^{u}")?;
        }
        Ok(())
    }
}
