//! JSON file formats.
//!
//! Groupoids are written as one compact object
//! `{"n":…,"sigma":[…],"tau":[…],"upsilon":[…],"mu":[[…]]}` with `-1`
//! for an undefined composite, followed by a newline. Algebraic data uses
//! `{"field":"Q"|"Fp:<p>","dim":d,"sc":[[[…]]]}` and maps
//! `{"matrix":[[…]]}` (row-major, codomain × domain). Rationals are written
//! as strings `"a"` or `"a/b"`, residues as numbers; both spellings are
//! accepted on input.

use serde_json::{json, Map, Value};

use crate::actions::FiniteAction;
use crate::algebra::{AlgebraGroupoidObject, Bimodule, FiniteDimAlgebra};
use crate::classical::ClassicalPresentation;
use crate::cogroupoid::{Cogroupoid, CommAlgebra, HopfPresentation};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groupoid::{FiniteGroupoid, GroupoidParts};
use crate::linalg::{Matrix, Vector};
use crate::report::{AxiomId, ValidationReport};

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::malformed("json", e.to_string()))
}

fn to_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Error::malformed(what, "expected a JSON object"))
}

fn field_of<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::malformed(key, "missing"))
}

fn reject_unknown(obj: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::malformed(what, format!("unknown key {k:?}"))),
        None => Ok(()),
    }
}

fn as_usize(v: &Value, name: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::malformed(name, format!("expected a nonnegative integer, got {v}")))
}

fn as_array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::malformed(name, "expected an array"))
}

fn index_list(v: &Value, name: &str) -> Result<Vec<usize>> {
    as_array(v, name)?.iter().map(|x| as_usize(x, name)).collect()
}

/// Entries `-1` become `None`; other negatives are malformed.
fn partial_table(v: &Value, name: &str) -> Result<Vec<Vec<Option<usize>>>> {
    as_array(v, name)?
        .iter()
        .map(|row| {
            as_array(row, name)?
                .iter()
                .map(|x| match x.as_i64() {
                    Some(-1) => Ok(None),
                    Some(k) if k >= 0 => Ok(Some(k as usize)),
                    _ => Err(Error::malformed(name, format!("entry {x} is neither -1 nor an index"))),
                })
                .collect()
        })
        .collect()
}

fn encode_partial(row: &[Option<usize>]) -> Vec<i64> {
    row.iter().map(|x| x.map_or(-1, |v| v as i64)).collect()
}

pub fn groupoid_to_value(g: &FiniteGroupoid) -> Value {
    let n = g.n();
    let mut obj = Map::new();
    obj.insert("n".into(), json!(n));
    obj.insert("sigma".into(), json!(g.sigma_map()));
    obj.insert("tau".into(), json!(g.tau_map()));
    if let Some(u) = g.upsilon_map() {
        obj.insert("upsilon".into(), json!(u));
    }
    let mu: Vec<Vec<i64>> = (0..n).map(|x| encode_partial(&g.mu_table()[x * n..(x + 1) * n])).collect();
    obj.insert("mu".into(), json!(mu));
    Value::Object(obj)
}

/// Canonical compact text, newline-terminated.
pub fn groupoid_to_json(g: &FiniteGroupoid) -> String {
    to_line(&groupoid_to_value(g))
}

pub fn groupoid_from_value(v: &Value) -> Result<FiniteGroupoid> {
    let obj = object(v, "groupoid")?;
    reject_unknown(obj, &["n", "sigma", "tau", "upsilon", "mu"], "groupoid")?;
    let n = as_usize(field_of(obj, "n")?, "n")?;
    let sigma = index_list(field_of(obj, "sigma")?, "sigma")?;
    let tau = index_list(field_of(obj, "tau")?, "tau")?;
    let upsilon = match obj.get("upsilon") {
        None | Some(Value::Null) => None,
        Some(u) => Some(index_list(u, "upsilon")?),
    };
    let rows = partial_table(field_of(obj, "mu")?, "mu")?;
    if sigma.len() != n {
        return Err(Error::malformed("sigma", format!("length {} but n = {n}", sigma.len())));
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::malformed("mu", format!("expected a {n}x{n} table")));
    }
    FiniteGroupoid::from_parts(GroupoidParts {
        sigma,
        tau,
        upsilon,
        mu: rows.into_iter().flatten().collect(),
    })
}

pub fn groupoid_from_json(text: &str) -> Result<FiniteGroupoid> {
    groupoid_from_value(&parse_json(text)?)
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Q(_) => Value::String(s.to_text()),
        Scalar::Fp { value, .. } => json!(value),
    }
}

pub fn scalar_from_value(field: Field, v: &Value, name: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s).map_err(|_| Error::malformed(name, format!("bad scalar {s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(|x| field.from_i64(x))
            .ok_or_else(|| Error::malformed(name, format!("non-integer number {n}; use \"a/b\""))),
        _ => Err(Error::malformed(name, format!("bad scalar {v}"))),
    }
}

fn vector_to_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_value).collect())
}

fn vector_from_value(field: Field, v: &Value, name: &str) -> Result<Vector> {
    as_array(v, name)?.iter().map(|x| scalar_from_value(field, x, name)).collect()
}

fn rows_to_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_to_value(r)).collect())
}

/// Rows as nested arrays; an empty outer array is a `0 × cols` matrix.
fn rows_from_value(field: Field, v: &Value, name: &str, cols_if_empty: usize) -> Result<Matrix> {
    let rows: Vec<Vector> = as_array(v, name)?
        .iter()
        .map(|r| vector_from_value(field, r, name))
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(cols_if_empty, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::malformed(name, "ragged matrix"));
    }
    Ok(Matrix::from_rows(field, cols, rows))
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    json!({ "matrix": rows_to_value(m) })
}

/// `{"matrix": [[…]]}`; `cols_if_empty` fixes the width of a matrix with
/// no rows.
pub fn matrix_from_value(field: Field, v: &Value, name: &str, cols_if_empty: usize) -> Result<Matrix> {
    let obj = object(v, name)?;
    reject_unknown(obj, &["matrix"], name)?;
    rows_from_value(field, field_of(obj, "matrix")?, name, cols_if_empty)
}

fn insert_algebra(obj: &mut Map<String, Value>, a: &FiniteDimAlgebra) {
    obj.insert("field".into(), json!(a.field().descriptor()));
    obj.insert("dim".into(), json!(a.dim()));
    obj.insert("sc".into(), sc_to_value(a));
}

fn sc_to_value(a: &FiniteDimAlgebra) -> Value {
    Value::Array(
        a.structure_constants()
            .iter()
            .map(|row| Value::Array(row.iter().map(|v| vector_to_value(v)).collect()))
            .collect(),
    )
}

pub fn algebra_to_value(a: &FiniteDimAlgebra) -> Value {
    let mut obj = Map::new();
    insert_algebra(&mut obj, a);
    Value::Object(obj)
}

fn parse_field(obj: &Map<String, Value>) -> Result<Field> {
    let f = field_of(obj, "field")?
        .as_str()
        .ok_or_else(|| Error::malformed("field", "expected a string"))?;
    f.parse()
}

fn sc_from_value(field: Field, dim: usize, v: &Value) -> Result<FiniteDimAlgebra> {
    let sc = as_array(v, "sc")?
        .iter()
        .map(|row| as_array(row, "sc")?.iter().map(|p| vector_from_value(field, p, "sc")).collect())
        .collect::<Result<Vec<Vec<Vector>>>>()?;
    FiniteDimAlgebra::new(field, dim, sc)
}

fn algebra_from_object(obj: &Map<String, Value>) -> Result<FiniteDimAlgebra> {
    let field = parse_field(obj)?;
    let dim = as_usize(field_of(obj, "dim")?, "dim")?;
    sc_from_value(field, dim, field_of(obj, "sc")?)
}

pub fn algebra_from_json(text: &str) -> Result<FiniteDimAlgebra> {
    let v = parse_json(text)?;
    let obj = object(&v, "algebra")?;
    reject_unknown(obj, &["field", "dim", "sc"], "algebra")?;
    algebra_from_object(obj)
}

pub fn algebra_to_json(a: &FiniteDimAlgebra) -> String {
    to_line(&algebra_to_value(a))
}

/// `{"dim": d_N, "left": [[[…]]], "right": [[[…]]]}`, one `d_N × d_N`
/// matrix per basis element of `H`.
pub fn bimodule_from_json(text: &str, field: Field) -> Result<Bimodule> {
    let v = parse_json(text)?;
    let obj = object(&v, "bimodule")?;
    reject_unknown(obj, &["dim", "left", "right"], "bimodule")?;
    let dim = as_usize(field_of(obj, "dim")?, "dim")?;
    let mats = |key: &str| -> Result<Vec<Matrix>> {
        as_array(field_of(obj, key)?, key)?
            .iter()
            .map(|m| rows_from_value(field, m, key, dim))
            .collect()
    };
    Ok(Bimodule { dim, left: mats("left")?, right: mats("right")? })
}

pub fn bimodule_to_json(b: &Bimodule) -> String {
    let mats = |ms: &[Matrix]| Value::Array(ms.iter().map(rows_to_value).collect());
    to_line(&json!({ "dim": b.dim, "left": mats(&b.left), "right": mats(&b.right) }))
}

const OBJECT_KEYS: [&str; 8] = ["field", "dim", "sc", "sigma", "tau", "upsilon", "g2_basis", "mu"];

pub fn algebra_groupoid_to_json(a: &AlgebraGroupoidObject) -> String {
    let mut obj = Map::new();
    insert_algebra(&mut obj, &a.g);
    obj.insert("sigma".into(), matrix_to_value(&a.sigma));
    obj.insert("tau".into(), matrix_to_value(&a.tau));
    obj.insert("upsilon".into(), matrix_to_value(&a.upsilon));
    obj.insert("g2_basis".into(), matrix_to_value(&a.g2_basis));
    obj.insert("mu".into(), matrix_to_value(&a.mu));
    to_line(&Value::Object(obj))
}

pub fn algebra_groupoid_from_json(text: &str) -> Result<AlgebraGroupoidObject> {
    let v = parse_json(text)?;
    let obj = object(&v, "algebra groupoid")?;
    reject_unknown(obj, &OBJECT_KEYS, "algebra groupoid")?;
    let g = algebra_from_object(obj)?;
    let (f, d) = (g.field(), g.dim());
    let map = |key: &str, cols: usize| matrix_from_value(f, field_of(obj, key)?, key, cols);
    let g2_basis = map("g2_basis", 0)?;
    let k = g2_basis.cols();
    Ok(AlgebraGroupoidObject {
        sigma: map("sigma", d)?,
        tau: map("tau", d)?,
        upsilon: map("upsilon", d)?,
        mu: map("mu", k)?,
        g2_basis,
        g,
    })
}

const COGROUPOID_KEYS: [&str; 11] = ["field", "dim", "sc", "unit", "S", "T", "U", "m", "i1", "i2", "csq"];

pub fn cogroupoid_to_json(c: &Cogroupoid) -> String {
    let mut obj = Map::new();
    insert_algebra(&mut obj, c.c.algebra());
    obj.insert("unit".into(), vector_to_value(c.c.unit()));
    for (key, m) in [("S", &c.s), ("T", &c.t), ("U", &c.u), ("m", &c.m), ("i1", &c.i1), ("i2", &c.i2)] {
        obj.insert(key.into(), matrix_to_value(m));
    }
    obj.insert("csq".into(), json!({ "dim": c.csq.dim(), "sc": sc_to_value(c.csq.algebra()) }));
    to_line(&Value::Object(obj))
}

/// A stated unit must be the algebra's unit.
fn check_unit(a: &CommAlgebra, stated: Option<&Value>) -> Result<()> {
    if let Some(u) = stated {
        let u = vector_from_value(a.field(), u, "unit")?;
        if u != a.unit() {
            let mut r = ValidationReport::new();
            r.push(AxiomId::Alg3, "stated unit is not the unit of the algebra");
            return Err(Error::rejected("commutative algebra", r));
        }
    }
    Ok(())
}

pub fn cogroupoid_from_json(text: &str) -> Result<Cogroupoid> {
    let v = parse_json(text)?;
    let obj = object(&v, "cogroupoid")?;
    reject_unknown(obj, &COGROUPOID_KEYS, "cogroupoid")?;
    let c = CommAlgebra::new(algebra_from_object(obj)?)?;
    check_unit(&c, obj.get("unit"))?;
    let (f, d) = (c.field(), c.dim());
    let csq_obj = object(field_of(obj, "csq")?, "csq")?;
    reject_unknown(csq_obj, &["dim", "sc"], "csq")?;
    let dq = as_usize(field_of(csq_obj, "dim")?, "csq.dim")?;
    let csq = CommAlgebra::new(sc_from_value(f, dq, field_of(csq_obj, "sc")?)?)?;
    let map = |key: &str| matrix_from_value(f, field_of(obj, key)?, key, d);
    Ok(Cogroupoid {
        s: map("S")?,
        t: map("T")?,
        u: map("U")?,
        m: map("m")?,
        i1: map("i1")?,
        i2: map("i2")?,
        c,
        csq,
    })
}

pub fn hopf_to_json(h: &HopfPresentation) -> String {
    let mut obj = Map::new();
    insert_algebra(&mut obj, h.algebra.algebra());
    obj.insert("unit".into(), vector_to_value(h.algebra.unit()));
    obj.insert("counit".into(), vector_to_value(&h.counit));
    obj.insert("comultiplication".into(), matrix_to_value(&h.comultiplication));
    obj.insert("antipode".into(), matrix_to_value(&h.antipode));
    to_line(&Value::Object(obj))
}

pub fn hopf_from_json(text: &str) -> Result<HopfPresentation> {
    let v = parse_json(text)?;
    let obj = object(&v, "hopf")?;
    reject_unknown(obj, &["field", "dim", "sc", "unit", "counit", "comultiplication", "antipode"], "hopf")?;
    let algebra = CommAlgebra::new(algebra_from_object(obj)?)?;
    check_unit(&algebra, obj.get("unit"))?;
    let (f, d) = (algebra.field(), algebra.dim());
    Ok(HopfPresentation {
        counit: vector_from_value(f, field_of(obj, "counit")?, "counit")?,
        comultiplication: matrix_from_value(f, field_of(obj, "comultiplication")?, "comultiplication", d)?,
        antipode: matrix_from_value(f, field_of(obj, "antipode")?, "antipode", d)?,
        algebra,
    })
}

pub fn action_to_json(a: &FiniteAction) -> String {
    let m = a.m();
    let theta: Vec<Vec<i64>> = (0..a.groupoid().n())
        .map(|g| encode_partial(&a.theta_table()[g * m..(g + 1) * m]))
        .collect();
    let mut obj = Map::new();
    obj.insert("groupoid".into(), groupoid_to_value(a.groupoid()));
    obj.insert("m".into(), json!(m));
    obj.insert("phi".into(), json!(a.phi()));
    obj.insert("theta".into(), json!(theta));
    to_line(&Value::Object(obj))
}

pub fn action_from_json(text: &str) -> Result<FiniteAction> {
    let v = parse_json(text)?;
    let obj = object(&v, "action")?;
    reject_unknown(obj, &["groupoid", "m", "phi", "theta"], "action")?;
    let gpd = groupoid_from_value(field_of(obj, "groupoid")?)?;
    let m = as_usize(field_of(obj, "m")?, "m")?;
    let phi = index_list(field_of(obj, "phi")?, "phi")?;
    let rows = partial_table(field_of(obj, "theta")?, "theta")?;
    if rows.len() != gpd.n() || rows.iter().any(|r| r.len() != m) {
        return Err(Error::malformed("theta", format!("expected a {}x{m} table", gpd.n())));
    }
    FiniteAction::new(gpd, m, phi, rows.into_iter().flatten().collect())
}

pub fn classical_to_json(c: &ClassicalPresentation) -> String {
    let n = c.n();
    let mu: Vec<Vec<i64>> = (0..n).map(|x| encode_partial(&c.mu[x * n..(x + 1) * n])).collect();
    let mut obj = Map::new();
    obj.insert("identity_section".into(), json!(c.identity_section));
    obj.insert("source".into(), json!(c.source));
    obj.insert("target".into(), json!(c.target));
    obj.insert("inverse".into(), json!(c.inverse));
    obj.insert("mu".into(), json!(mu));
    to_line(&Value::Object(obj))
}

pub fn classical_from_json(text: &str) -> Result<ClassicalPresentation> {
    let v = parse_json(text)?;
    let obj = object(&v, "classical")?;
    reject_unknown(obj, &["identity_section", "source", "target", "inverse", "mu"], "classical")?;
    let source = index_list(field_of(obj, "source")?, "source")?;
    let n = source.len();
    let rows = partial_table(field_of(obj, "mu")?, "mu")?;
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::malformed("mu", format!("expected a {n}x{n} table")));
    }
    Ok(ClassicalPresentation {
        identity_section: index_list(field_of(obj, "identity_section")?, "identity_section")?,
        source,
        target: index_list(field_of(obj, "target")?, "target")?,
        inverse: index_list(field_of(obj, "inverse")?, "inverse")?,
        mu: rows.into_iter().flatten().collect(),
    })
}

/// `{"map": [int]}`.
pub fn carrier_map_from_json(text: &str) -> Result<Vec<usize>> {
    let v = parse_json(text)?;
    let obj = object(&v, "map")?;
    reject_unknown(obj, &["map"], "map")?;
    index_list(field_of(obj, "map")?, "map")
}

pub fn carrier_map_to_json(map: &[usize]) -> String {
    to_line(&json!({ "map": map }))
}
