//! JSON renderings: g-numbers as `{"g11": ...}` objects, matrices as nested
//! arrays, complex numbers as `[re, im]` pairs, reports with an explicit
//! `tag` field.

use gnum::{CGNum, Complex64, ConjugationSide, GNum, Mat2, SpectralKind};
use serde_json::{json, Map, Value as Json};

use crate::eval::Value;
use crate::format::{class_tag, euler_tag};

fn num(x: f64) -> Json {
    json!(x)
}

fn complex(z: Complex64) -> Json {
    if z.im == 0.0 {
        num(z.re)
    } else {
        json!([z.re, z.im])
    }
}

fn gnum(g: &GNum) -> Json {
    json!({"g11": g.g11, "g12": g.g12, "g21": g.g21, "g22": g.g22})
}

fn cgnum(c: &CGNum) -> Json {
    match c.as_real() {
        Some(g) => gnum(&g),
        None => json!({
            "g11": [c.g11.re, c.g11.im],
            "g12": [c.g12.re, c.g12.im],
            "g21": [c.g21.re, c.g21.im],
            "g22": [c.g22.re, c.g22.im],
        }),
    }
}

fn mat(m: &Mat2<Complex64>) -> Json {
    let real = [m.m11, m.m12, m.m21, m.m22].iter().all(|z| z.im == 0.0);
    if real {
        json!([[m.m11.re, m.m12.re], [m.m21.re, m.m22.re]])
    } else {
        json!([
            [[m.m11.re, m.m11.im], [m.m12.re, m.m12.im]],
            [[m.m21.re, m.m21.im], [m.m22.re, m.m22.im]]
        ])
    }
}

fn side(s: ConjugationSide) -> Json {
    match s {
        ConjugationSide::GOnLeft => json!("g-on-left"),
        ConjugationSide::GOnRight => json!("g-on-right"),
    }
}

pub fn render_json(v: &Value) -> String {
    let value = match v {
        Value::Scalar(z) => complex(*z),
        Value::G(g) => gnum(g),
        Value::CG(c) => cgnum(c),
        Value::Mat(m) => mat(m),
        Value::Coords(ac) => {
            let mut coords = Map::new();
            for (label, x) in ac.signature.blade_labels().iter().zip(&ac.coords) {
                coords.insert((*label).to_string(), num(*x));
            }
            json!({"signature": ac.signature.name(), "coords": coords})
        }
        Value::Class(c) => json!({
            "tag": class_tag(c.class),
            "vsq": c.vsq,
            "singular": c.singular,
        }),
        Value::Euler(e) => json!({
            "tag": euler_tag(e.class),
            "sign": e.sign,
            "rho": e.rho,
            "phi": e.phi,
            "axis": gnum(&e.axis),
        }),
        Value::Spectral(s) => {
            let mut obj = Map::new();
            match s.kind {
                SpectralKind::Scalar => {
                    obj.insert("tag".into(), json!("Scalar"));
                    obj.insert("lambda".into(), complex(s.lambda1));
                }
                SpectralKind::Jordan => {
                    obj.insert("tag".into(), json!("Jordan"));
                    obj.insert("alpha0".into(), complex(s.lambda1));
                    obj.insert("nilpart".into(), gnum(&s.nilpart.unwrap_or(gnum::ZERO)));
                }
                SpectralKind::Diagonalizable => {
                    obj.insert("tag".into(), json!("Diagonalizable"));
                    obj.insert("lambda1".into(), complex(s.lambda1));
                    obj.insert("lambda2".into(), complex(s.lambda2));
                    if let Some((vp, vm)) = &s.projectors {
                        obj.insert("vplus".into(), cgnum(vp));
                        obj.insert("vminus".into(), cgnum(vm));
                    }
                }
            }
            if let Some(basis) = &s.basis {
                obj.insert(
                    "basis".into(),
                    json!({
                        "BA": cgnum(&basis.ba),
                        "B": cgnum(&basis.b),
                        "A": cgnum(&basis.a),
                        "AB": cgnum(&basis.ab),
                        "side": side(basis.side),
                    }),
                );
            }
            if let Some(rel) = &s.relative_matrix {
                obj.insert("relmat".into(), mat(rel));
            }
            Json::Object(obj)
        }
        Value::Pair(l1, l2) => json!({"lambda1": complex(*l1), "lambda2": complex(*l2)}),
    };
    value.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnum_object_shape() {
        let v = Value::G(gnum::A_GEN);
        assert_eq!(render_json(&v), r#"{"g11":0.0,"g12":0.0,"g21":1.0,"g22":0.0}"#);
    }

    #[test]
    fn complex_matrix_entries_are_pairs() {
        let v = Value::Mat(gnum::to_matrix(&gnum::pauli_vector(2)));
        assert_eq!(
            render_json(&v),
            "[[[0.0,0.0],[0.0,-1.0]],[[0.0,1.0],[0.0,0.0]]]"
        );
    }
}
