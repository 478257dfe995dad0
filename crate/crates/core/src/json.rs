//! Exact JSON encodings shared by reports and table files.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::error::{Error, Result};

pub fn int_number(n: &BigInt) -> Number {
    n.to_string().parse().expect("decimal integer is a JSON number")
}

fn number_int(n: &Number) -> Result<BigInt> {
    n.to_string()
        .parse()
        .map_err(|_| Error::Parse(format!("{n} is not an integer")))
}

/// A rational as `{num, den}` in lowest terms with `den > 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: Number,
    pub den: Number,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson {
            num: int_number(r.numer()),
            den: int_number(r.denom()),
        }
    }
}

impl RationalJson {
    pub fn to_rational(&self) -> Result<BigRational> {
        let num = number_int(&self.num)?;
        let den = number_int(&self.den)?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}
