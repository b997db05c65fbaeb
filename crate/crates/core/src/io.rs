//! JSON and text formats shared by the command-line front end.
//!
//! Instance files:
//! ```json
//! { "group": "Z^2 + Z/4", "list": [[2,2,1],[0,2,3]] }
//! { "cw": { "A": [[1]], "B": [[4]], "ell": 1 } }
//! ```
//! Matrices in `cw` are given as lists of columns, like element lists.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::group::{ElementList, FgAbelianGroup};
use crate::poly::{BivariatePolynomial, IntPolynomial};
use crate::quasi::QuasiPolynomial;
use crate::transforms::{CwInstance, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Bm(ElementList),
    Cw(CwInstance),
}

pub fn bigint_to_json(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse().expect("integers are valid JSON numbers"))
}

fn bigint_from_json(v: &Value, field: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| Error::parse(field, format!("`{n}` is not an integer"))),
        other => Err(Error::parse(field, format!("expected an integer, got {other}"))),
    }
}

fn vectors_from_json(v: &Value, field: &str) -> Result<Vec<Vec<BigInt>>> {
    let rows = v.as_array().ok_or_else(|| Error::parse(field, "expected an array of integer arrays"))?;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let f = format!("{field}[{i}]");
            row.as_array()
                .ok_or_else(|| Error::parse(&f, "expected an array of integers"))?
                .iter()
                .map(|x| bigint_from_json(x, &f))
                .collect()
        })
        .collect()
}

fn vectors_to_json(v: &[Vec<BigInt>]) -> Value {
    Value::Array(v.iter().map(|c| Value::Array(c.iter().map(bigint_to_json).collect())).collect())
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse("<root>", e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| Error::parse("<root>", "expected a JSON object"))?;
    match (obj.get("group"), obj.get("cw")) {
        (Some(_), Some(_)) => Err(Error::parse("<root>", "give either `group`/`list` or `cw`, not both")),
        (Some(g), None) => {
            let group: FgAbelianGroup =
                g.as_str().ok_or_else(|| Error::parse("group", "expected a string such as \"Z^2 + Z/4\""))?.parse()?;
            let list = match obj.get("list") {
                Some(l) => vectors_from_json(l, "list")?,
                None => return Err(Error::parse("list", "missing")),
            };
            ElementList::from_coords(group, &list)
                .map(Instance::Bm)
                .map_err(|e| Error::parse("list", e.to_string()))
        }
        (None, Some(cw)) => {
            let ell = cw
                .get("ell")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse("cw.ell", "expected a nonnegative integer"))? as usize;
            let a = vectors_from_json(cw.get("A").unwrap_or(&json!([])), "cw.A")?;
            let b = vectors_from_json(cw.get("B").unwrap_or(&json!([])), "cw.B")?;
            CwInstance::from_columns(ell, &a, &b).map(Instance::Cw)
        }
        (None, None) => Err(Error::parse("group", "missing (and no `cw` section)")),
    }
}

pub fn instance_to_json(inst: &Instance) -> Value {
    match inst {
        Instance::Bm(list) => {
            let mut m = Map::new();
            m.insert("group".into(), Value::String(list.group().to_string()));
            m.insert("list".into(), vectors_to_json(&list.coords()));
            Value::Object(m)
        }
        Instance::Cw(cw) => {
            let mut inner = Map::new();
            inner.insert("A".into(), vectors_to_json(&cw.a.columns()));
            inner.insert("B".into(), vectors_to_json(&cw.b.columns()));
            inner.insert("ell".into(), json!(cw.ell));
            let mut m = Map::new();
            m.insert("cw".into(), Value::Object(inner));
            Value::Object(m)
        }
    }
}

fn coeffs_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

pub fn poly_to_json(p: &IntPolynomial, var: &str) -> Value {
    let mut m = Map::new();
    m.insert("coeffs".into(), coeffs_json(p));
    m.insert("text".into(), Value::String(p.to_text(var)));
    Value::Object(m)
}

pub fn quasi_to_json(f: &QuasiPolynomial) -> Value {
    let constituents = f
        .stored()
        .into_iter()
        .map(|(k, p)| {
            let mut c = Map::new();
            c.insert("class".into(), json!(k));
            c.insert("coeffs".into(), coeffs_json(p));
            Value::Object(c)
        })
        .collect();
    let mut m = Map::new();
    m.insert("period".into(), json!(f.period()));
    m.insert("constituents".into(), Value::Array(constituents));
    m.insert("compressed".into(), Value::Bool(f.is_compressed()));
    Value::Object(m)
}

pub fn quasi_from_json(v: &Value) -> Result<QuasiPolynomial> {
    let period = v.get("period").and_then(Value::as_u64).ok_or_else(|| Error::parse("period", "expected a positive integer"))?;
    let compressed = v.get("compressed").and_then(Value::as_bool).unwrap_or(false);
    let items = v
        .get("constituents")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("constituents", "expected an array"))?;
    let mut classes = BTreeMap::new();
    for (i, item) in items.iter().enumerate() {
        let field = format!("constituents[{i}]");
        let k = item.get("class").and_then(Value::as_u64).ok_or_else(|| Error::parse(&field, "missing `class`"))?;
        let coeffs = item
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse(&field, "missing `coeffs`"))?
            .iter()
            .map(|c| bigint_from_json(c, &field))
            .collect::<Result<Vec<_>>>()?;
        classes.insert(k, IntPolynomial::from_coeffs(coeffs));
    }
    let bad = |e: Error| Error::parse("constituents", e.to_string());
    if compressed {
        QuasiPolynomial::from_gcd_classes(period, classes).map_err(bad)
    } else {
        if classes.keys().copied().ne(1..=period) {
            return Err(Error::parse("constituents", format!("expected classes 1..={period}")));
        }
        QuasiPolynomial::from_constituents(classes.into_values().collect()).map_err(bad)
    }
}

pub fn tutte_to_json(t: &BivariatePolynomial) -> Value {
    let terms = t
        .terms()
        .map(|((i, j), c)| {
            let mut m = Map::new();
            m.insert("x".into(), json!(i));
            m.insert("y".into(), json!(j));
            m.insert("coeff".into(), bigint_to_json(c));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("terms".into(), Value::Array(terms));
    m.insert("text".into(), Value::String(t.to_text()));
    Value::Object(m)
}

/// Parses the edge-list format: the vertex count, then one `i j` pair per
/// edge with 1-based vertices. Newlines and `;` both separate records and
/// `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut records = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(str::trim)
        .filter(|r| !r.is_empty());
    let n: usize = records
        .next()
        .ok_or_else(|| Error::parse("graph", "missing vertex count"))?
        .parse()
        .map_err(|_| Error::parse("graph", "vertex count must be a nonnegative integer"))?;
    let mut edges = Vec::new();
    for rec in records {
        let ends: Vec<usize> = rec
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse("graph", format!("bad vertex `{t}`"))))
            .collect::<Result<_>>()?;
        let [i, j] = ends[..] else {
            return Err(Error::parse("graph", format!("edge `{rec}` must have two endpoints")));
        };
        for v in [i, j] {
            if v == 0 || v > n {
                return Err(Error::BadVertexIndex { vertex: v, vertices: n });
            }
        }
        edges.push((i - 1, j - 1));
    }
    Graph::new(n, edges)
}
