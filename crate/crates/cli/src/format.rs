//! Serialization of scalars, matrices and reports: JSON (machine-readable,
//! round-trippable), CSV, and LaTeX for the matrix arrays.

use braidtn_core::analysis::{CharPolyReport, DimensionReport, ScalarPoly};
use braidtn_core::exact::{Poly, RatFn, Rational, Scalar};
use braidtn_core::matrix::Matrix;
use braidtn_core::report::Report;
use num_traits::One;
use serde_json::{json, Value};

use crate::sampling::parse_rational;

/// Rational as `"p/q"` (or `"p"` when the denominator is 1); rational
/// function as `{num, den}` with coefficient strings, lowest degree first.
pub fn scalar_to_json(s: &Scalar) -> Value {
    if let Some(r) = s.as_rat() {
        return Value::String(rational_string(&r));
    }
    let f = s.as_fun();
    json!({
        "num": poly_coeff_strings(f.num()),
        "den": poly_coeff_strings(f.den()),
    })
}

pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn poly_coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

pub fn scalar_from_json(v: &Value) -> Option<Scalar> {
    match v {
        Value::String(s) => parse_rational(s).map(Scalar::Rat),
        Value::Object(map) => {
            let num = poly_from_json(map.get("num")?)?;
            let den = poly_from_json(map.get("den")?)?;
            RatFn::new(num, den).ok().map(Scalar::Fun)
        }
        _ => None,
    }
}

fn poly_from_json(v: &Value) -> Option<Poly> {
    let arr = v.as_array()?;
    let coeffs = arr
        .iter()
        .map(|c| c.as_str().and_then(parse_rational))
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::new(coeffs))
}

/// `{basis, n, entries}` with row-major entries.
pub fn matrix_to_json(m: &Matrix, basis: &str, n: usize) -> Value {
    let rows: Vec<Value> = (0..m.dim())
        .map(|r| {
            Value::Array(
                (0..m.dim())
                    .map(|c| scalar_to_json(m.get(r, c)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "basis": basis,
        "n": n,
        "entries": rows,
    })
}

pub fn matrix_from_json(v: &Value) -> Option<Matrix> {
    let rows = v.get("entries")?.as_array()?;
    let parsed: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|row| {
            row.as_array()?
                .iter()
                .map(scalar_from_json)
                .collect::<Option<Vec<_>>>()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_rows(parsed))
}

pub fn report_to_json(report: &Report) -> Value {
    Value::Array(
        report
            .entries
            .iter()
            .map(|e| {
                let mut obj = serde_json::Map::new();
                obj.insert("check".into(), Value::String(e.check.clone()));
                obj.insert("instance".into(), Value::String(e.instance.clone()));
                obj.insert(
                    "status".into(),
                    Value::String(if e.pass { "pass" } else { "fail" }.into()),
                );
                if let Some(cert) = &e.certificate {
                    obj.insert("certificate".into(), Value::String(cert.clone()));
                }
                Value::Object(obj)
            })
            .collect(),
    )
}

fn scalar_poly_to_json(p: &ScalarPoly) -> Value {
    Value::Array(p.coeffs().iter().map(scalar_to_json).collect())
}

pub fn char_poly_report_to_json(r: &CharPolyReport) -> Value {
    json!({
        "n": r.n,
        "generator": r.generator,
        "basis": r.basis.as_str(),
        "method": r.method.as_str(),
        "degree": r.char_poly.degree(),
        "char_poly": scalar_poly_to_json(&r.char_poly),
        "char_poly_display": r.char_poly.display(),
        "determinant": scalar_to_json(&r.determinant),
        "conjecture": {
            "as_stated": {
                "poly": scalar_poly_to_json(&r.conjectured_as_stated),
                "matches": r.matches_as_stated,
                "certificate": r.certificate_as_stated,
            },
            "sign_flipped": {
                "poly": scalar_poly_to_json(&r.conjectured_flipped),
                "matches": r.matches_flipped,
                "certificate": r.certificate_flipped,
            },
        },
    })
}

pub fn dimension_report_to_json(r: &DimensionReport) -> Value {
    json!({
        "n": r.n,
        "basis": r.basis.as_str(),
        "mu_samples": r.mu_samples.iter().map(rational_string).collect::<Vec<_>>(),
        "algebra_dim": r.dims.algebra_dim,
        "centralizer_dim": r.dims.centralizer_dim,
        "center_dim": r.dims.center_dim,
        "trace_form_rank": r.dims.trace_form_rank,
        "double_centralizer_dim": r.dims.double_centralizer_dim,
        "stable": r.stable,
        "per_sample": r.per_sample.iter().map(|s| json!({
            "algebra_dim": s.algebra_dim,
            "centralizer_dim": s.centralizer_dim,
            "center_dim": s.center_dim,
            "trace_form_rank": s.trace_form_rank,
            "double_centralizer_dim": s.double_centralizer_dim,
        })).collect::<Vec<_>>(),
        "block_consistency": r.block_consistency,
    })
}

// ---- LaTeX ----

fn rational_latex(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        let neg = r.numer() < &num_bigint::BigInt::from(0);
        let mag = if neg { -r.numer() } else { r.numer().clone() };
        let frac = format!("\\frac{{{}}}{{{}}}", mag, r.denom());
        if neg {
            format!("-{frac}")
        } else {
            frac
        }
    }
}

fn poly_latex(p: &Poly) -> String {
    use num_traits::Signed;
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    let coeffs = p.coeffs();
    let mut first = true;
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && k > 0 {
            String::new()
        } else {
            rational_latex(&mag)
        };
        let var_part = match k {
            0 => String::new(),
            1 => "\\mu".into(),
            _ => format!("\\mu^{{{k}}}"),
        };
        out.push_str(&coeff_part);
        out.push_str(&var_part);
    }
    out
}

pub fn scalar_to_latex(s: &Scalar) -> String {
    if let Some(r) = s.as_rat() {
        return rational_latex(&r);
    }
    let f = s.as_fun();
    if f.den() == &Poly::one() {
        poly_latex(f.num())
    } else {
        // pull a leading minus sign out of the fraction
        use num_traits::Signed;
        let num = f.num();
        let neg = num.leading().map(|c| c.is_negative()).unwrap_or(false);
        let body = if neg { -num } else { num.clone() };
        let frac = format!("\\frac{{{}}}{{{}}}", poly_latex(&body), poly_latex(f.den()));
        if neg {
            format!("-{frac}")
        } else {
            frac
        }
    }
}

/// A matrix as a LaTeX array, mirroring the display layout of the source
/// matrices.
pub fn matrix_to_latex(m: &Matrix, label: &str) -> String {
    let d = m.dim();
    let cols = "c".repeat(d);
    let mut out = format!("{label}=\\left(\n\\begin{{array}}{{{cols}}}\n");
    for r in 0..d {
        let row: Vec<String> = (0..d).map(|c| scalar_to_latex(m.get(r, c))).collect();
        out.push_str(&row.join(" & "));
        if r + 1 < d {
            out.push_str(" \\\\\n");
        } else {
            out.push('\n');
        }
    }
    out.push_str("\\end{array}\n\\right)\n");
    out
}

/// A matrix as CSV rows of exact entry strings.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let d = m.dim();
    let mut out = String::new();
    for r in 0..d {
        let row: Vec<String> = (0..d).map(|c| format!("{}", m.get(r, c))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn report_to_csv(report: &Report) -> String {
    let mut out = String::from("check,instance,status,certificate\n");
    for e in &report.entries {
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_quote(&e.check),
            csv_quote(&e.instance),
            if e.pass { "pass" } else { "fail" },
            csv_quote(e.certificate.as_deref().unwrap_or("")),
        ));
    }
    out
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.into()
    }
}
