//! JSON-facing value helpers: exact rationals travel as decimal strings with
//! a float mirror.

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
    pub approx: f64,
}

impl From<&BigRational> for RationalJson {
    fn from(r: &BigRational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
            approx: rational_f64(r),
        }
    }
}

pub fn rational_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

pub fn option_rational_json(r: &Option<BigRational>) -> Option<RationalJson> {
    r.as_ref().map(RationalJson::from)
}
