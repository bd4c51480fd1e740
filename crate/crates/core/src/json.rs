//! Wire formats shared by the CLI and scripting harnesses.
//!
//! Rationals travel as `"p/q"` strings (bare integers accepted on input),
//! index sets as sorted integer arrays, and certificates as the
//! `{W, N, d, n1, n2, n3, nPrime, kPrime}` object with the owning instance
//! supplied out of band.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequality::{IneqKind, LinearInequality};
use crate::minors::MinorCertDto;
use crate::ratio::{format_rat, parse_rat, Rat};

/// Inequality document: `{coeffs, rhs, kind, cert?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InequalityDto {
    pub coeffs: Vec<String>,
    pub rhs: String,
    pub kind: IneqKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cert: Option<MinorCertDto>,
}

impl InequalityDto {
    pub fn from_inequality(ineq: &LinearInequality, cert: Option<MinorCertDto>) -> Self {
        InequalityDto {
            coeffs: ineq.coeffs().iter().map(format_rat).collect(),
            rhs: format_rat(ineq.rhs()),
            kind: ineq.kind(),
            cert,
        }
    }

    pub fn to_inequality(&self) -> Result<LinearInequality> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<Rat>>>()?;
        Ok(LinearInequality::new(
            coeffs,
            parse_rat(&self.rhs)?,
            self.kind,
        ))
    }
}

/// Parses a JSON array of rationals (`"p/q"` strings or integers).
pub fn parse_rat_array(text: &str) -> Result<Vec<Rat>> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("not a JSON array: {e}")))?;
    values
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => parse_rat(s),
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(crate::ratio::rat_int(i))
                } else {
                    Err(Error::ParseRational(n.to_string()))
                }
            }
            other => Err(Error::ParseRational(other.to_string())),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::CirculantInstance;
    use crate::minors::{cert_from_transversal, MinorCert};
    use crate::ratio::rat_int;
    use crate::set::IndexSet;

    #[test]
    fn inequality_document_round_trip() {
        let inst = CirculantInstance::new(10, 5).unwrap();
        let w = IndexSet::from_members(10, [0u32, 2, 4, 6, 8]).unwrap();
        let cert = cert_from_transversal(&inst, &w).unwrap();
        let ineq = crate::inequality::minor_inequality(&cert).unwrap();
        let dto = InequalityDto::from_inequality(&ineq, Some(cert.to_dto()));
        let text = serde_json::to_string(&dto).unwrap();
        let back: InequalityDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_inequality().unwrap(), ineq);
        let cert_back = MinorCert::from_dto(inst, back.cert.as_ref().unwrap()).unwrap();
        assert_eq!(cert_back, cert);
    }

    #[test]
    fn rat_arrays_accept_strings_and_integers() {
        let v = parse_rat_array(r#"["1/2", 3, "4"]"#).unwrap();
        assert_eq!(v, vec![crate::ratio::rat(1, 2), rat_int(3), rat_int(4)]);
        assert!(parse_rat_array(r#"[1.5]"#).is_err());
        assert!(parse_rat_array(r#"{"a":1}"#).is_err());
    }
}
