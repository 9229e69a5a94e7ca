//! Groupoid objects in finite-dimensional associative algebras.
//!
//! Every such object splits as `G = N ⊕ H` with `H = im Σ`, `N = ker Σ`
//! a square-zero ideal, `Σ = T`, `Υ = id_H ⊕ (−id_N)` and
//! `μ(g, f) = g + f − Σg`. [`build_abelian_extension`] produces these
//! objects and [`structure_theorem_check`] recovers the decomposition from
//! an arbitrary validated object.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, unit_vector, Matrix, Vector};
use crate::report::{AxiomId, ValidationReport};

/// `e_i · e_j = Σ_k sc[i][j][k] e_k`, stored sparsely: one list of nonzero
/// `(k, c)` terms per basis pair, `k` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    field: Field,
    dim: usize,
    sc: Vec<Vec<(usize, Scalar)>>,
}

fn sparse(v: Vector) -> Vec<(usize, Scalar)> {
    v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
}

impl FiniteDimAlgebra {
    /// `sc[i][j]` is the coordinate vector of `e_i · e_j`.
    pub fn new(field: Field, dim: usize, sc: Vec<Vec<Vec<Scalar>>>) -> Result<FiniteDimAlgebra> {
        if sc.len() != dim {
            return Err(Error::malformed("sc", format!("{} rows for dimension {dim}", sc.len())));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in sc.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::malformed("sc", format!("row {i} has {} entries", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::malformed("sc", format!("product ({i},{j}) has {} coordinates", v.len())));
                }
                if v.iter().any(|s| s.field() != field) {
                    return Err(Error::malformed("sc", format!("product ({i},{j}) mixes fields")));
                }
                flat.push(sparse(v));
            }
        }
        Ok(FiniteDimAlgebra { field, dim, sc: flat })
    }

    /// Builds from a product rule on basis indices.
    pub fn from_fn(field: Field, dim: usize, f: impl Fn(usize, usize) -> Vector) -> FiniteDimAlgebra {
        let mut sc = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                sc.push(sparse(v));
            }
        }
        FiniteDimAlgebra { field, dim, sc }
    }

    /// Builds from sparse products: `f(i, j)` lists the nonzero `(k, c)`.
    pub fn from_sparse_fn(
        field: Field,
        dim: usize,
        f: impl Fn(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> FiniteDimAlgebra {
        let mut sc = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut terms: Vec<(usize, Scalar)> =
                    f(i, j).into_iter().filter(|(_, c)| !c.is_zero()).collect();
                terms.sort_by_key(|t| t.0);
                assert!(terms.iter().all(|t| t.0 < dim));
                sc.push(terms);
            }
        }
        FiniteDimAlgebra { field, dim, sc }
    }

    pub fn zero_algebra(field: Field, dim: usize) -> FiniteDimAlgebra {
        FiniteDimAlgebra::from_fn(field, dim, |_, _| vec![field.zero(); dim])
    }

    /// `k^d` with coordinatewise product.
    pub fn diagonal(field: Field, dim: usize) -> FiniteDimAlgebra {
        FiniteDimAlgebra::from_fn(field, dim, |i, j| {
            if i == j {
                unit_vector(field, dim, i)
            } else {
                vec![field.zero(); dim]
            }
        })
    }

    /// `k[x]/(x^d)` on the basis `1, x, …, x^{d-1}`.
    pub fn truncated_polynomials(field: Field, dim: usize) -> FiniteDimAlgebra {
        FiniteDimAlgebra::from_fn(field, dim, |i, j| {
            if i + j < dim {
                unit_vector(field, dim, i + j)
            } else {
                vec![field.zero(); dim]
            }
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Nonzero coordinates of `e_i · e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sc[i * self.dim + j]
    }

    pub fn structure_constants(&self) -> Vec<Vec<Vector>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_product(i, j)).collect())
            .collect()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = vec![self.field.zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    pub fn basis(&self) -> Vec<Vector> {
        (0..self.dim).map(|i| unit_vector(self.field, self.dim, i)).collect()
    }

    /// Associativity on basis triples (`Alg1`).
    pub fn check_associative(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = self.mul(&ij, &unit_vector(self.field, d, k));
                    let right = self.mul(&unit_vector(self.field, d, i), &self.basis_product(j, k));
                    r.check(left == right, AxiomId::Alg1, || format!("(e{i}e{j})e{k} ≠ e{i}(e{j}e{k})"));
                }
            }
        }
        r
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.product_terms(i, j) == self.product_terms(j, i)))
    }

    /// The two-sided unit, if any.
    pub fn unit(&self) -> Option<Vector> {
        let d = self.dim;
        // u · e_j = e_j and e_j · u = e_j are linear in u.
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let dense: Vec<Vector> =
            (0..d * d).map(|x| self.basis_product(x / d, x % d)).collect();
        for j in 0..d {
            for (k, delta) in (0..d).map(|k| (k, j == k)) {
                rows.push((0..d).map(|i| dense[i * d + j][k].clone()).collect());
                rhs.push(if delta { self.field.one() } else { self.field.zero() });
                rows.push((0..d).map(|i| dense[j * d + i][k].clone()).collect());
                rhs.push(if delta { self.field.one() } else { self.field.zero() });
            }
        }
        if d == 0 {
            return Some(Vec::new());
        }
        Matrix::from_rows(self.field, d, rows).solve(&rhs)
    }

    /// Matrix of `x ↦ a · x`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Matrix {
        Matrix::from_columns(
            self.field,
            self.dim,
            &self.basis().iter().map(|e| self.mul(a, e)).collect::<Vec<_>>(),
        )
    }

    /// `A × B` with coordinatewise product; basis of `A` first.
    pub fn product(&self, other: &FiniteDimAlgebra) -> FiniteDimAlgebra {
        let (da, db) = (self.dim, other.dim);
        FiniteDimAlgebra::from_fn(self.field, da + db, |i, j| {
            let mut v = vec![self.field.zero(); da + db];
            if i < da && j < da {
                v[..da].clone_from_slice(&self.basis_product(i, j));
            } else if i >= da && j >= da {
                v[da..].clone_from_slice(&other.basis_product(i - da, j - da));
            }
            v
        })
    }

    /// `A ⊗ B` on the basis `e_i ⊗ f_j` indexed `i · dim B + j`.
    pub fn tensor(&self, other: &FiniteDimAlgebra) -> FiniteDimAlgebra {
        let db = other.dim;
        let d = self.dim * db;
        FiniteDimAlgebra::from_fn(self.field, d, |x, y| {
            let (a, b) = (x / db, x % db);
            let (c, e) = (y / db, y % db);
            let mut v = vec![self.field.zero(); d];
            for (i, s) in self.product_terms(a, c) {
                for (j, t) in other.product_terms(b, e) {
                    v[i * db + j] = s * t;
                }
            }
            v
        })
    }

    /// The same algebra written in a new basis: `new_basis` columns are the
    /// new basis vectors in old coordinates.
    pub fn change_basis(&self, new_basis: &Matrix) -> Result<FiniteDimAlgebra> {
        let inv = new_basis
            .inverse()
            .ok_or_else(|| Error::Precondition("basis change is not invertible".into()))?;
        let cols = new_basis.columns();
        Ok(FiniteDimAlgebra::from_fn(self.field, self.dim, |i, j| {
            inv.apply(&self.mul(&cols[i], &cols[j]))
        }))
    }
}

/// Multiplicativity of a linear map on basis pairs (`Alg4`), reported
/// under `name`.
pub fn check_multiplicative(
    domain: &FiniteDimAlgebra,
    codomain: &FiniteDimAlgebra,
    map: &Matrix,
    name: &str,
) -> ValidationReport {
    let mut r = ValidationReport::new();
    let d = domain.dim();
    let images: Vec<Vector> = (0..d).map(|i| map.column(i)).collect();
    for i in 0..d {
        for j in 0..d {
            let lhs = map.apply(&domain.basis_product(i, j));
            let rhs = codomain.mul(&images[i], &images[j]);
            r.check(lhs == rhs, AxiomId::Alg4, || format!("{name}(e{i}e{j}) ≠ {name}(e{i}){name}(e{j})"));
        }
    }
    r
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, name: &str, field: Field) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::malformed(
            name,
            format!("expected {rows}x{cols} matrix, got {}x{}", m.rows(), m.cols()),
        ));
    }
    if m.field() != field {
        return Err(Error::malformed(name, format!("matrix over {} but algebra over {field}", m.field())));
    }
    Ok(())
}

/// Splits `G` along an idempotent `P`: returns (kernel basis, image basis).
pub fn split_projection(g: &FiniteDimAlgebra, p: &Matrix) -> Result<(Vec<Vector>, Vec<Vector>)> {
    check_shape(p, g.dim(), g.dim(), "projection", g.field())?;
    let mut r = ValidationReport::new();
    r.check(&(p * p) == p, AxiomId::Proj, || "P∘P ≠ P".into());
    r.into_result("projection")?;
    Ok((p.kernel(), p.image()))
}

/// A bimodule over `H`: `left[i]` and `right[i]` are the matrices of
/// `n ↦ e_i · n` and `n ↦ n · e_i` on `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    pub fn zero(h: &FiniteDimAlgebra) -> Bimodule {
        let m = Matrix::zeros(h.field(), 0, 0);
        Bimodule { dim: 0, left: vec![m.clone(); h.dim()], right: vec![m; h.dim()] }
    }

    /// `H` acting on itself by multiplication.
    pub fn regular(h: &FiniteDimAlgebra) -> Bimodule {
        let left = h.basis().iter().map(|e| h.left_multiplication(e)).collect();
        let right = h
            .basis()
            .iter()
            .map(|e| {
                let cols: Vec<Vector> = h.basis().iter().map(|x| h.mul(x, e)).collect();
                Matrix::from_columns(h.field(), h.dim(), &cols)
            })
            .collect();
        Bimodule { dim: h.dim(), left, right }
    }

    fn combine(&self, mats: &[Matrix], coeffs: &[Scalar], field: Field) -> Matrix {
        let mut acc = Matrix::zeros(field, self.dim, self.dim);
        for (m, c) in mats.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = &acc + &m.scale(c);
            }
        }
        acc
    }

    /// Bimodule laws `Bim1`..`Bim3` on basis elements; malformed shapes are
    /// an error.
    pub fn check(&self, h: &FiniteDimAlgebra) -> Result<ValidationReport> {
        let f = h.field();
        if self.left.len() != h.dim() || self.right.len() != h.dim() {
            return Err(Error::malformed(
                "bimodule",
                format!("need {} left and right matrices", h.dim()),
            ));
        }
        for m in self.left.iter().chain(&self.right) {
            check_shape(m, self.dim, self.dim, "bimodule", f)?;
        }
        let mut r = ValidationReport::new();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let prod = h.basis_product(i, j);
                let l = self.combine(&self.left, &prod, f);
                r.check(l == &self.left[i] * &self.left[j], AxiomId::Bim1, || {
                    format!("(e{i}e{j})·n ≠ e{i}·(e{j}·n)")
                });
                let rr = self.combine(&self.right, &prod, f);
                r.check(rr == &self.right[j] * &self.right[i], AxiomId::Bim2, || {
                    format!("n·(e{i}e{j}) ≠ (n·e{i})·e{j}")
                });
                r.check(
                    &self.right[j] * &self.left[i] == &self.left[i] * &self.right[j],
                    AxiomId::Bim3,
                    || format!("(e{i}·n)·e{j} ≠ e{i}·(n·e{j})"),
                );
            }
        }
        Ok(r)
    }
}

/// A groupoid object in algebras. `g2_basis` has one column per basis
/// vector of `G₂ ⊆ G × G` (first `dim G` rows: the `g` leg, last: the `f`
/// leg); `mu` maps `G₂`-coordinates to `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraGroupoidObject {
    pub g: FiniteDimAlgebra,
    pub sigma: Matrix,
    pub tau: Matrix,
    pub upsilon: Matrix,
    pub g2_basis: Matrix,
    pub mu: Matrix,
}

impl AlgebraGroupoidObject {
    /// Assembles an object, computing `G₂` as `ker[Σ | −T]`.
    pub fn with_computed_pullback(
        g: FiniteDimAlgebra,
        sigma: Matrix,
        tau: Matrix,
        upsilon: Matrix,
        mu_on_pairs: impl Fn(&[Scalar], &[Scalar]) -> Vector,
    ) -> Result<AlgebraGroupoidObject> {
        let d = g.dim();
        for (m, name) in [(&sigma, "sigma"), (&tau, "tau"), (&upsilon, "upsilon")] {
            check_shape(m, d, d, name, g.field())?;
        }
        let basis = pullback_basis(&sigma, &tau);
        let g2_basis = Matrix::from_columns(g.field(), 2 * d, &basis);
        let images: Vec<Vector> = basis.iter().map(|v| mu_on_pairs(&v[..d], &v[d..])).collect();
        let mu = Matrix::from_columns(g.field(), d, &images);
        Ok(AlgebraGroupoidObject { g, sigma, tau, upsilon, g2_basis, mu })
    }

    pub fn g2_dim(&self) -> usize {
        self.g2_basis.cols()
    }

    /// `G₂`-coordinates of a pair, if it lies in `G₂`.
    pub fn pair_coordinates(&self, g: &[Scalar], f: &[Scalar]) -> Option<Vector> {
        let v: Vector = g.iter().chain(f).cloned().collect();
        if self.g2_dim() == 0 {
            return is_zero_vector(&v).then(Vec::new);
        }
        self.g2_basis.solve(&v)
    }

    /// `μ(g, f)` when `(g, f) ∈ G₂`.
    pub fn compose(&self, g: &[Scalar], f: &[Scalar]) -> Option<Vector> {
        self.pair_coordinates(g, f).map(|c| self.mu.apply(&c))
    }

    fn g2_algebra(&self) -> Option<FiniteDimAlgebra> {
        let d = self.g.dim();
        let cols = self.g2_basis.columns();
        let mut sc = Vec::new();
        for a in &cols {
            let mut row = Vec::new();
            for b in &cols {
                let g = self.g.mul(&a[..d], &b[..d]);
                let f = self.g.mul(&a[d..], &b[d..]);
                row.push(self.pair_coordinates(&g, &f)?);
            }
            sc.push(row);
        }
        FiniteDimAlgebra::new(self.g.field(), cols.len(), sc).ok()
    }
}

/// Basis of `{(g, f) : Σg = Tf}` as vectors in `G × G`.
pub fn pullback_basis(sigma: &Matrix, tau: &Matrix) -> Vec<Vector> {
    sigma.hstack(&(-tau)).kernel()
}

/// Checks the category and groupoid axioms by exact linear algebra.
pub fn validate_algebra_groupoid(a: &AlgebraGroupoidObject) -> Result<ValidationReport> {
    let g = &a.g;
    let d = g.dim();
    let field = g.field();
    for (m, name) in [(&a.sigma, "sigma"), (&a.tau, "tau"), (&a.upsilon, "upsilon")] {
        check_shape(m, d, d, name, field)?;
    }
    check_shape(&a.g2_basis, 2 * d, a.g2_basis.cols(), "g2_basis", field)?;
    check_shape(&a.mu, d, a.g2_basis.cols(), "mu", field)?;

    let mut r = g.check_associative();
    for (m, name) in [(&a.sigma, "Σ"), (&a.tau, "T"), (&a.upsilon, "Υ")] {
        r.merge(check_multiplicative(g, g, m, name));
    }

    // G₂ is exactly the pullback, and a subalgebra of G × G.
    let expected = pullback_basis(&a.sigma, &a.tau);
    let k = a.g2_dim();
    let independent = a.g2_basis.rank() == k;
    let inside = a
        .g2_basis
        .columns()
        .iter()
        .all(|v| a.sigma.apply(&v[..d]) == a.tau.apply(&v[d..]));
    r.check(independent && inside && k == expected.len(), AxiomId::Alg6, || {
        format!("basis of rank {} with {k} columns; pullback has dimension {}", a.g2_basis.rank(), expected.len())
    });
    if !r.is_valid() {
        return Ok(r);
    }
    match a.g2_algebra() {
        None => r.push(AxiomId::Alg7, "a product of G₂ basis vectors leaves G₂"),
        Some(g2) => r.merge(check_multiplicative(&g2, g, &a.mu, "μ")),
    }

    let (s, t, u) = (&a.sigma, &a.tau, &a.upsilon);
    let id = Matrix::identity(field, d);
    r.check(t * s == *s, AxiomId::A1, || "TΣ ≠ Σ".into());
    r.check(s * t == *t, AxiomId::A2, || "ΣT ≠ T".into());
    r.check(s * s == *s && t * t == *t, AxiomId::D1, || "ΣΣ ≠ Σ or TT ≠ T".into());
    r.check(t * u == *s, AxiomId::G1, || "TΥ ≠ Σ".into());
    r.check(u * s == *s, AxiomId::G1, || "ΥΣ ≠ Σ".into());
    r.check(u * u == id, AxiomId::G1, || "ΥΥ ≠ id".into());
    r.check(s * u == *t, AxiomId::D2, || "ΣΥ ≠ T".into());

    // Σμ = Σ∘pr₂ and Tμ = T∘pr₁ on G₂.
    for (c, v) in a.g2_basis.columns().iter().enumerate() {
        let m = a.mu.column(c);
        r.check(s.apply(&m) == s.apply(&v[d..]), AxiomId::A6, || {
            format!("Σμ ≠ Σ∘pr₂ on G₂ basis vector {c}")
        });
        r.check(t.apply(&m) == t.apply(&v[..d]), AxiomId::A7, || {
            format!("Tμ ≠ T∘pr₁ on G₂ basis vector {c}")
        });
    }

    for (j, e) in g.basis().iter().enumerate() {
        let se = s.apply(e);
        let te = t.apply(e);
        let ue = u.apply(e);
        unit_law(&mut r, a, AxiomId::A4, e, &se, e, || format!("μ(e{j},Σe{j}) ≠ e{j}"));
        unit_law(&mut r, a, AxiomId::A5, &te, e, e, || format!("μ(Te{j},e{j}) ≠ e{j}"));
        unit_law(&mut r, a, AxiomId::G2, e, &ue, &te, || format!("μ(e{j},Υe{j}) ≠ Te{j}"));
        unit_law(&mut r, a, AxiomId::G3, &ue, e, &se, || format!("μ(Υe{j},e{j}) ≠ Σe{j}"));
    }

    check_triple_associativity(&mut r, a);
    if r.is_valid() {
        r.note(format!("dim G = {d}, dim G₂ = {k}"));
    }
    Ok(r)
}

fn unit_law(
    r: &mut ValidationReport,
    a: &AlgebraGroupoidObject,
    id: AxiomId,
    g: &[Scalar],
    f: &[Scalar],
    want: &[Scalar],
    detail: impl FnOnce() -> String,
) {
    match a.compose(g, f) {
        Some(v) => r.check(v == want, id, detail),
        None => r.push(id, format!("{} (pair not in G₂)", detail())),
    }
}

/// `μ(μ(h, g), f) = μ(h, μ(g, f))` on a basis of the triple pullback.
fn check_triple_associativity(r: &mut ValidationReport, a: &AlgebraGroupoidObject) {
    let d = a.g.dim();
    let field = a.g.field();
    let z = Matrix::zeros(field, d, d);
    // Rows: Σh − Tg = 0 and Σg − Tf = 0.
    let top = a.sigma.hstack(&(-&a.tau)).hstack(&z);
    let bottom = z.hstack(&a.sigma).hstack(&(-&a.tau));
    for (c, v) in top.vstack(&bottom).kernel().iter().enumerate() {
        let (h, g, f) = (&v[..d], &v[d..2 * d], &v[2 * d..]);
        let left = a.compose(h, g).and_then(|hg| a.compose(&hg, f));
        let right = a.compose(g, f).and_then(|gf| a.compose(h, &gf));
        match (left, right) {
            (Some(x), Some(y)) => {
                r.check(x == y, AxiomId::A8, || format!("triple basis vector {c}"))
            }
            _ => r.push(AxiomId::A8, format!("triple basis vector {c}: a composite leaves G₂")),
        }
    }
}

/// `G = H ⊕ N` with `(h, n)(h', n') = (hh', h·n' + n·h')`, `Σ = T` the
/// projection onto `H`, `Υ = id ⊕ −id` and `μ(g, f) = g + f − Σg`.
pub fn build_abelian_extension(h: &FiniteDimAlgebra, n: &Bimodule) -> Result<AlgebraGroupoidObject> {
    let field = h.field();
    let hr = h.check_associative();
    hr.into_result("algebra H")?;
    n.check(h)?.into_result("bimodule")?;
    let (dh, dn) = (h.dim(), n.dim);
    let d = dh + dn;
    let g = FiniteDimAlgebra::from_fn(field, d, |i, j| {
        let mut v = vec![field.zero(); d];
        match (i < dh, j < dh) {
            (true, true) => v[..dh].clone_from_slice(&h.basis_product(i, j)),
            (true, false) => v[dh..].clone_from_slice(&n.left[i].column(j - dh)),
            (false, true) => v[dh..].clone_from_slice(&n.right[j].column(i - dh)),
            (false, false) => {}
        }
        v
    });
    let proj = Matrix::identity(field, dh).direct_sum(&Matrix::zeros(field, dn, dn));
    let upsilon =
        Matrix::identity(field, dh).direct_sum(&-&Matrix::identity(field, dn));
    // G₂ ≅ N ⊕ N ⊕ H: (n, 0), then (0, n), then (h, h).
    let zero = vec![field.zero(); d];
    let mut cols: Vec<Vector> = Vec::new();
    let mut images: Vec<Vector> = Vec::new();
    for a in 0..dn {
        let e = unit_vector(field, d, dh + a);
        cols.push([e.clone(), zero.clone()].concat());
        images.push(e);
    }
    for a in 0..dn {
        let e = unit_vector(field, d, dh + a);
        cols.push([zero.clone(), e.clone()].concat());
        images.push(e);
    }
    for i in 0..dh {
        let e = unit_vector(field, d, i);
        cols.push([e.clone(), e.clone()].concat());
        images.push(e);
    }
    Ok(AlgebraGroupoidObject {
        g,
        sigma: proj.clone(),
        tau: proj,
        upsilon,
        g2_basis: Matrix::from_columns(field, 2 * d, &cols),
        mu: Matrix::from_columns(field, d, &images),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub sigma_equals_tau: bool,
    /// `Υ = −id` on `ker Σ` and `Υ = id` on `im Σ`.
    pub upsilon_splits: bool,
    pub kernel_square_zero: bool,
    pub mu_is_sum: bool,
    pub dim_kernel: usize,
    pub dim_image: usize,
    pub details: Vec<String>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.sigma_equals_tau && self.upsilon_splits && self.kernel_square_zero && self.mu_is_sum
    }
}

/// Recovers `G = ker Σ ⊕ im Σ` from a validated object and checks the four
/// consequences of the axioms. A failure here on a validated object means
/// the checker itself is unsound.
pub fn structure_theorem_check(a: &AlgebraGroupoidObject) -> Result<StructureReport> {
    validate_algebra_groupoid(a)?.into_result("algebra groupoid")?;
    let g = &a.g;
    let (kernel, image) = split_projection(g, &a.sigma)?;
    let mut details = Vec::new();

    let sigma_equals_tau = a.sigma == a.tau;
    if !sigma_equals_tau {
        details.push("Σ ≠ T".to_string());
    }
    let mut upsilon_splits = true;
    for (i, v) in kernel.iter().enumerate() {
        if a.upsilon.apply(v) != v.iter().map(|x| -x).collect::<Vector>() {
            upsilon_splits = false;
            details.push(format!("Υ ≠ −id on kernel vector {i}"));
        }
    }
    for (i, v) in image.iter().enumerate() {
        if a.upsilon.apply(v) != *v {
            upsilon_splits = false;
            details.push(format!("Υ ≠ id on image vector {i}"));
        }
    }
    let mut kernel_square_zero = true;
    for (i, p) in kernel.iter().enumerate() {
        for (j, q) in kernel.iter().enumerate() {
            if !is_zero_vector(&g.mul(p, q)) {
                kernel_square_zero = false;
                details.push(format!("kernel vectors {i},{j} multiply to a nonzero element"));
            }
        }
    }
    let d = g.dim();
    let mut mu_is_sum = true;
    for (c, v) in a.g2_basis.columns().iter().enumerate() {
        let (x, y) = (&v[..d], &v[d..]);
        let want = sub_vectors(&add_vectors(x, y), &a.sigma.apply(x));
        if a.mu.column(c) != want {
            mu_is_sum = false;
            details.push(format!("μ ≠ g + f − Σg on G₂ basis vector {c}"));
        }
    }
    Ok(StructureReport {
        sigma_equals_tau,
        upsilon_splits,
        kernel_square_zero,
        mu_is_sum,
        dim_kernel: kernel.len(),
        dim_image: image.len(),
        details,
    })
}
