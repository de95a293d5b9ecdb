//! Parameter-file loading: JSON records `{n, c, alpha, beta, symmetric?}`
//! with scalars as `"p/q"` strings.

use braidtn_core::exact::Scalar;
use braidtn_core::tn::ParamSet;
use serde_json::Value;

use crate::sampling::parse_rational;
use crate::CliError;

fn scalar_field(v: &Value, what: &str) -> Result<Scalar, CliError> {
    let s = v
        .as_str()
        .ok_or_else(|| CliError::Usage(format!("{what}: expected a \"p/q\" string")))?;
    parse_rational(s)
        .map(Scalar::Rat)
        .ok_or_else(|| CliError::Usage(format!("{what}: cannot parse {s:?} as a rational")))
}

pub fn load_params_file(path: &str) -> Result<ParamSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{path}: invalid JSON: {e}")))?;
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Usage(format!("{path}: missing integer field n")))? as usize;
    let symmetric = v.get("symmetric").and_then(Value::as_bool).unwrap_or(true);
    let grid = |field: &str| -> Result<Vec<Vec<Scalar>>, CliError> {
        let rows = v
            .get(field)
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Usage(format!("{path}: missing array field {field}")))?;
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                let row = row
                    .as_array()
                    .ok_or_else(|| CliError::Usage(format!("{path}: {field}[{i}] not an array")))?;
                row.iter()
                    .enumerate()
                    .map(|(j, e)| scalar_field(e, &format!("{field}[{i}][{j}]")))
                    .collect()
            })
            .collect()
    };
    let list = |field: &str| -> Result<Vec<Scalar>, CliError> {
        let row = v
            .get(field)
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Usage(format!("{path}: missing array field {field}")))?;
        row.iter()
            .enumerate()
            .map(|(i, e)| scalar_field(e, &format!("{field}[{i}]")))
            .collect()
    };
    let c = grid("c")?;
    let alpha = list("alpha")?;
    let beta = list("beta")?;
    ParamSet::generic(n, c, alpha, beta, symmetric).map_err(CliError::from)
}
