//! Canonical JSON form of cubic scalars.
//!
//! ```json
//! {"n":2,"t":["1","0"],"carrier":[1,2],"coeffs":{"∅":"1","1":"2","2":"0","12":"-1/2"},"backend":"rational"}
//! ```
//!
//! Exact values are written as strings, floats and residues as numbers.
//! Subsets are named as in [`Subset::name`].

use serde_json::{json, Map, Value};

use super::{CubicParams, CubicScalar};
use crate::error::{Error, Result};
use crate::scalars::{Backend, RingValue};
use crate::subset::Subset;

impl CubicScalar {
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (a, v) in self.terms() {
            coeffs.insert(a.name(), v.to_json());
        }
        json!({
            "n": self.params.n(),
            "t": self.params.t_values().iter().map(RingValue::to_json).collect::<Vec<_>>(),
            "carrier": self.carrier.dirs().collect::<Vec<_>>(),
            "coeffs": coeffs,
            "backend": self.params.backend().to_string(),
        })
    }

    /// Compact canonical text form.
    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    /// Reads the canonical form. `backend` is used when the document carries no
    /// `"backend"` field; `"n"` defaults to the length of `"t"`, `"carrier"` to
    /// all directions, and missing coefficients to zero.
    pub fn from_json(value: &Value, backend: &Backend) -> Result<CubicScalar> {
        let obj = value.as_object().ok_or_else(|| Error::Json("expected an object".into()))?;
        let backend = match obj.get("backend") {
            Some(Value::String(s)) => {
                let declared: Backend = s.parse()?;
                if declared.same_ring(backend) { *backend } else { declared }
            }
            Some(other) => return Err(Error::Json(format!("bad backend {other}"))),
            None => *backend,
        };
        let t = match obj.get("t") {
            Some(Value::Array(items)) => items
                .iter()
                .map(|v| RingValue::from_json(v, &backend))
                .collect::<Result<Vec<_>>>()?,
            None => Vec::new(),
            Some(other) => return Err(Error::Json(format!("`t` must be an array, found {other}"))),
        };
        if let Some(n) = obj.get("n") {
            let n = n.as_u64().ok_or_else(|| Error::Json(format!("bad order {n}")))? as usize;
            if n != t.len() {
                return Err(Error::Dimension { expected: n, found: t.len() });
            }
        }
        let params = CubicParams::new(backend, t)?;
        let carrier = match obj.get("carrier") {
            Some(Value::Array(dirs)) => {
                let mut c = Subset::EMPTY;
                for d in dirs {
                    let k = d.as_u64().ok_or_else(|| Error::Json(format!("bad direction {d}")))? as usize;
                    params.check_dir(k)?;
                    c = c.with(k);
                }
                c
            }
            None => params.full(),
            Some(other) => return Err(Error::Json(format!("`carrier` must be an array, found {other}"))),
        };
        let mut terms = Vec::new();
        match obj.get("coeffs") {
            Some(Value::Object(map)) => {
                for (name, v) in map {
                    terms.push((Subset::parse_name(name)?, RingValue::from_json(v, &backend)?));
                }
            }
            None => {}
            Some(other) => return Err(Error::Json(format!("`coeffs` must be an object, found {other}"))),
        }
        CubicScalar::from_terms(&params, carrier, terms)
    }

    pub fn from_json_str(text: &str, backend: &Backend) -> Result<CubicScalar> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_json(&value, backend)
    }
}
