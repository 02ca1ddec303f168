//! The six-parameter family of local vertex rules.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketParams {
    pub w12: Scalar,
    pub w13: Scalar,
    pub w23: Scalar,
    pub b12: Scalar,
    pub b13: Scalar,
    pub b23: Scalar,
}

impl BracketParams {
    /// `w12 = 1/2`, `b12 = -1/2`, all others zero.
    pub fn standard() -> BracketParams {
        BracketParams {
            w12: Scalar::ratio(1, 2),
            w13: Scalar::zero(),
            w23: Scalar::zero(),
            b12: Scalar::ratio(-1, 2),
            b13: Scalar::zero(),
            b23: Scalar::zero(),
        }
    }

    /// `W = w12 + w13 - w23`.
    pub fn w(&self) -> Scalar {
        &(&self.w12 + &self.w13) - &self.w23
    }

    /// `B = b12 + b13 - b23`.
    pub fn b(&self) -> Scalar {
        &(&self.b12 + &self.b13) - &self.b23
    }

    /// Reads `{"w12": "1/2", ...}`; values may be strings or integers, missing keys are zero.
    pub fn from_json(text: &str) -> Result<BracketParams> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let obj = v.as_object().ok_or_else(|| Error::Parse("parameters must be an object".into()))?;
        let mut p = BracketParams {
            w12: Scalar::zero(),
            w13: Scalar::zero(),
            w23: Scalar::zero(),
            b12: Scalar::zero(),
            b13: Scalar::zero(),
            b23: Scalar::zero(),
        };
        for (k, val) in obj {
            let s = match val {
                Value::String(s) => parse_scalar(s)?,
                Value::Number(n) => {
                    let i = n.as_i64().ok_or_else(|| Error::Parse(format!("{k}: use a string for {n}")))?;
                    Scalar::int(i)
                }
                _ => return Err(Error::Parse(format!("{k}: expected a string or integer"))),
            };
            if !s.is_constant() {
                return Err(Error::Parse(format!("{k}: parameters are constants")));
            }
            let slot = match k.as_str() {
                "w12" => &mut p.w12,
                "w13" => &mut p.w13,
                "w23" => &mut p.w23,
                "b12" => &mut p.b12,
                "b13" => &mut p.b13,
                "b23" => &mut p.b23,
                _ => return Err(Error::Parse(format!("unknown parameter {k:?}"))),
            };
            *slot = s;
        }
        Ok(p)
    }
}

impl Default for BracketParams {
    fn default() -> Self {
        BracketParams::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_derived_values() {
        let p = BracketParams::standard();
        assert_eq!(p.w(), Scalar::ratio(1, 2));
        assert_eq!(p.b(), Scalar::ratio(-1, 2));
    }

    #[test]
    fn json_reading() {
        let p = BracketParams::from_json(r#"{"w12": "1/4", "w13": "1/4", "b23": "1/2"}"#).unwrap();
        assert_eq!(p.w(), Scalar::ratio(1, 2));
        assert_eq!(p.b(), Scalar::ratio(-1, 2));
        assert!(BracketParams::from_json(r#"{"w99": 1}"#).is_err());
        assert!(BracketParams::from_json(r#"{"w12": "λ"}"#).is_err());
    }
}
