//! Text and JSON rendering of invariant reports.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::algebra::{variable_names, FieldMatrix};
use crate::invariants::{AlexanderPolynomial, FiberednessReport, InvariantReport};

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    }
}

pub fn alexander_json(a: &AlexanderPolynomial) -> Value {
    Value::Array(a.coefficients().iter().map(int_value).collect())
}

pub fn verdict_json(f: &FiberednessReport) -> Value {
    json!({
        "torsion_trivial": f.torsion_trivial,
        "magnus_integral": f.magnus_integral,
        "verdict": f.verdict.as_str(),
    })
}

pub fn magnus_json(m: &FieldMatrix, names: &[String]) -> Value {
    let rows = (0..m.rows())
        .map(|i| {
            Value::Array(
                m.row(i)
                    .iter()
                    .map(|e| {
                        json!({
                            "num": e.numerator().to_text(names),
                            "den": e.denominator().to_text(names),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn report_json(r: &InvariantReport) -> Value {
    let names = variable_names(2 * r.genus);
    let mut classes = Map::new();
    for (x, c) in r.homology.iter() {
        classes.insert(x.to_string(), json!(c.as_slice()));
    }
    json!({
        "name": r.name.clone().unwrap_or_default(),
        "genus": r.genus,
        "z_count": r.internal_count,
        "homology_classes": Value::Object(classes),
        "monodromy": r.monodromy.rows(),
        "torsion_det": {
            "raw": r.torsion.raw().to_text(&names),
            "unit": r.torsion.unit().to_text(&names),
            "normal": r.torsion.normal().to_text(&names),
        },
        "magnus": magnus_json(&r.magnus, &names),
        "alexander": alexander_json(&r.alexander),
        "verdict": verdict_json(&r.fiberedness),
    })
}

pub fn verdict_text(f: &FiberednessReport) -> String {
    format!(
        "torsion trivial: {}\nmagnus integral: {}\nverdict: {}\n",
        f.torsion_trivial, f.magnus_integral, f.verdict
    )
}

pub fn report_text(r: &InvariantReport) -> String {
    let names = variable_names(2 * r.genus);
    let mut out = String::new();
    if let Some(n) = &r.name {
        out.push_str(&format!("name: {n}\n"));
    }
    out.push_str(&format!(
        "genus: {}, internal generators: {}\n",
        r.genus, r.internal_count
    ));
    out.push_str("homology classes:\n");
    for (x, c) in r.homology.iter() {
        out.push_str(&format!("  {x:<4} {:?}\n", c.as_slice()));
    }
    out.push_str("monodromy:\n");
    for line in r.monodromy.to_string().lines() {
        out.push_str(&format!("  {line}\n"));
    }
    out.push_str(&format!(
        "torsion determinant: {}\n",
        r.torsion.raw().to_text(&names)
    ));
    out.push_str(&format!("  unit:   {}\n", r.torsion.unit().to_text(&names)));
    out.push_str(&format!(
        "  normal: {}\n",
        r.torsion.normal().to_text(&names)
    ));
    out.push_str("magnus matrix:\n");
    for i in 0..r.magnus.rows() {
        for j in 0..r.magnus.cols() {
            out.push_str(&format!(
                "  ({},{}) {}\n",
                i + 1,
                j + 1,
                r.magnus[(i, j)].to_text(&names)
            ));
        }
    }
    out.push_str(&format!("alexander polynomial: {}\n", r.alexander));
    out.push_str(&verdict_text(&r.fiberedness));
    out
}
