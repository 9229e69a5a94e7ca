//! Cogroupoids in finite-dimensional commutative unital algebras.
//!
//! Pushouts are computed as `(B ⊗ D) / I` where `I` is the ideal generated
//! by `f(a) ⊗ 1 − 1 ⊗ g(a)`. The quotient is represented on the standard
//! pure tensors that are not pivots of `I` in reduced echelon form, so the
//! chosen basis is deterministic.

use crate::algebra::{check_multiplicative, FiniteDimAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groupoid::{require_groupoid, FiniteGroupoid};
use crate::linalg::{is_zero_vector, unit_vector, EchelonBasis, Matrix, Vector};
use crate::report::{AxiomId, ValidationReport};

/// A nonzero commutative associative algebra with a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommAlgebra {
    algebra: FiniteDimAlgebra,
    unit: Vector,
}

impl CommAlgebra {
    pub fn new(algebra: FiniteDimAlgebra) -> Result<CommAlgebra> {
        let mut r = algebra.check_associative();
        r.check(algebra.is_commutative(), AxiomId::Alg2, || "e_i e_j ≠ e_j e_i".into());
        let unit = if algebra.dim() == 0 { None } else { algebra.unit() };
        if unit.is_none() {
            r.push(AxiomId::Alg3, "no unit element");
        }
        r.into_result("commutative algebra")?;
        Ok(CommAlgebra { algebra, unit: unit.expect("checked") })
    }

    /// Functions on an `n`-point set, pointwise product, `δ` basis.
    pub fn functions(field: Field, n: usize) -> Result<CommAlgebra> {
        CommAlgebra::new(FiniteDimAlgebra::diagonal(field, n))
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }
}

/// Multiplicative and unit-preserving, reported under `id`.
fn check_unital_hom(
    r: &mut ValidationReport,
    dom: &CommAlgebra,
    cod: &CommAlgebra,
    m: &Matrix,
    name: &str,
    id: AxiomId,
) -> bool {
    let mult = check_multiplicative(dom.algebra(), cod.algebra(), m, name).is_valid();
    let unital = m.apply(dom.unit()) == cod.unit();
    r.check(mult, id, || format!("{name} is not multiplicative"));
    r.check(unital, id, || format!("{name} does not preserve the unit"));
    mult && unital
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, name: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::malformed(
            name,
            format!("expected {rows}x{cols} matrix, got {}x{}", m.rows(), m.cols()),
        ));
    }
    Ok(())
}

/// `(B ⊗ D) / I` with its structure maps.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub algebra: CommAlgebra,
    pub i1: Matrix,
    pub i2: Matrix,
    /// Quotient basis element `q` is the class of `e_a ⊗ e_b`, `lifts[q] = (a, b)`.
    pub lifts: Vec<(usize, usize)>,
    ideal: EchelonBasis,
    right_dim: usize,
    /// Position of each pure tensor in `lifts`, if it is not a pivot.
    position: Vec<Option<usize>>,
}

impl Pushout {
    /// Quotient coordinates of a vector of `B ⊗ D`.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let r = self.ideal.reduce(v);
        self.lifts.iter().map(|&(a, b)| r[a * self.right_dim + b].clone()).collect()
    }

    /// Class of `e_a ⊗ e_b`.
    pub fn class_of(&self, a: usize, b: usize) -> Vector {
        let f = self.algebra.field();
        self.reduce(&unit_vector(f, self.ideal.ambient_dim(), a * self.right_dim + b))
    }

    /// Quotient terms of a sparse vector of `B ⊗ D`.
    fn reduce_terms(&self, terms: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
        if terms.iter().all(|(i, _)| self.position[*i].is_some()) {
            return terms.iter().map(|(i, c)| (self.position[*i].unwrap(), c.clone())).collect();
        }
        let mut v = vec![self.algebra.field().zero(); self.ideal.ambient_dim()];
        for (i, c) in terms {
            v[*i] += c;
        }
        self.reduce(&v).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.rank()
    }

    pub fn ideal_basis(&self) -> &[Vector] {
        self.ideal.rows()
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }
}

/// `u · v` in `B ⊗ D` for `u` a pure tensor `x ⊗ y`.
fn pure_times(b: &CommAlgebra, d: &CommAlgebra, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vector {
    let dd = d.dim();
    let f = b.field();
    let mut out = vec![f.zero(); v.len()];
    for (idx, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let left = b.mul(x, &unit_vector(f, b.dim(), idx / dd));
        let right = d.mul(y, &unit_vector(f, dd, idx % dd));
        for (i, l) in left.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let cl = c * l;
            for (j, r) in right.iter().enumerate() {
                if !r.is_zero() {
                    out[i * dd + j] += &cl * r;
                }
            }
        }
    }
    out
}

fn outer(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

/// Pushout of `f: A → B` and `g: A → D` in commutative algebras.
pub fn pushout(
    a: &CommAlgebra,
    b: &CommAlgebra,
    d: &CommAlgebra,
    f: &Matrix,
    g: &Matrix,
) -> Result<Pushout> {
    check_shape(f, b.dim(), a.dim(), "pushout leg f")?;
    check_shape(g, d.dim(), a.dim(), "pushout leg g")?;
    let mut r = ValidationReport::new();
    check_unital_hom(&mut r, a, b, f, "f", AxiomId::Alg4);
    check_unital_hom(&mut r, a, d, g, "g", AxiomId::Alg4);
    r.into_result("pushout legs")?;

    let field = a.field();
    let (db, dd) = (b.dim(), d.dim());
    let mut ideal = EchelonBasis::new(field, db * dd);
    let mut queue: Vec<Vector> = Vec::new();
    for c in 0..a.dim() {
        let gen: Vector = outer(&f.column(c), d.unit())
            .iter()
            .zip(outer(b.unit(), &g.column(c)))
            .map(|(x, y)| x - &y)
            .collect();
        if ideal.insert(&gen) {
            queue.push(gen);
        }
    }
    // Closure under the algebra generators e_i ⊗ 1 and 1 ⊗ e_j.
    let mut multipliers: Vec<(Vector, Vector)> =
        (0..db).map(|i| (unit_vector(field, db, i), d.unit().to_vec())).collect();
    multipliers.extend((0..dd).map(|j| (b.unit().to_vec(), unit_vector(field, dd, j))));
    while let Some(w) = queue.pop() {
        for (x, y) in &multipliers {
            let p = pure_times(b, d, x, y, &w);
            if ideal.insert(&p) {
                queue.push(p);
            }
        }
    }

    let complement = ideal.complement();
    let mut position = vec![None; db * dd];
    for (q, &i) in complement.iter().enumerate() {
        position[i] = Some(q);
    }
    let lifts: Vec<(usize, usize)> = complement.into_iter().map(|i| (i / dd, i % dd)).collect();
    let partial = Pushout {
        algebra: CommAlgebra { algebra: FiniteDimAlgebra::zero_algebra(field, 0), unit: Vec::new() },
        i1: Matrix::zeros(field, 0, 0),
        i2: Matrix::zeros(field, 0, 0),
        lifts,
        ideal,
        right_dim: dd,
        position,
    };
    let k = partial.lifts.len();
    let quotient = FiniteDimAlgebra::from_sparse_fn(field, k, |p, q| {
        let (a1, b1) = partial.lifts[p];
        let (a2, b2) = partial.lifts[q];
        let mut terms = Vec::new();
        for (i, x) in b.algebra().product_terms(a1, a2) {
            for (j, y) in d.algebra().product_terms(b1, b2) {
                terms.push((i * dd + j, x * y));
            }
        }
        partial.reduce_terms(&terms)
    });
    let i1 = Matrix::from_columns(
        field,
        k,
        &(0..db).map(|i| partial.reduce(&outer(&unit_vector(field, db, i), d.unit()))).collect::<Vec<_>>(),
    );
    let i2 = Matrix::from_columns(
        field,
        k,
        &(0..dd).map(|j| partial.reduce(&outer(b.unit(), &unit_vector(field, dd, j)))).collect::<Vec<_>>(),
    );
    let unit = partial.reduce(&outer(b.unit(), d.unit()));
    let algebra = if k == 0 {
        // Only happens when 1 ∈ I; the quotient is the zero ring.
        return Err(Error::Precondition("pushout is the zero ring".into()));
    } else {
        CommAlgebra { algebra: quotient, unit }
    };
    Ok(Pushout { algebra, i1, i2, ..partial })
}

/// The map `P → target`, `[e_a ⊗ e_b] ↦ x(e_a) · y(e_b)`, if it kills the
/// ideal.
fn induced(p: &Pushout, target: &CommAlgebra, x: &Matrix, y: &Matrix) -> Option<Matrix> {
    let dd = p.right_dim;
    let db = p.ideal.ambient_dim() / dd.max(1);
    let xs = x.columns();
    let ys = y.columns();
    let mut cache: Vec<Option<Vector>> = vec![None; db * dd];
    let mut image = |idx: usize| -> Vector {
        cache[idx].get_or_insert_with(|| target.mul(&xs[idx / dd], &ys[idx % dd])).clone()
    };
    let field = target.field();
    for v in p.ideal_basis() {
        let mut acc = vec![field.zero(); target.dim()];
        for (idx, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (s, t) in acc.iter_mut().zip(image(idx)) {
                if !t.is_zero() {
                    *s += &(c * &t);
                }
            }
        }
        if !is_zero_vector(&acc) {
            return None;
        }
    }
    let cols: Vec<Vector> = p.lifts.iter().map(|&(a, b)| image(a * dd + b)).collect();
    Some(Matrix::from_columns(field, target.dim(), &cols))
}

/// A cogroupoid: `C` with `S`, `T`, `U`, the pushout `C²` of `(S, T)` with
/// its legs `i₁`, `i₂`, and the comultiplication `m: C → C²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cogroupoid {
    pub c: CommAlgebra,
    pub s: Matrix,
    pub t: Matrix,
    pub u: Matrix,
    pub csq: CommAlgebra,
    pub i1: Matrix,
    pub i2: Matrix,
    pub m: Matrix,
}

pub fn validate_cogroupoid(c: &Cogroupoid) -> Result<ValidationReport> {
    let d = c.c.dim();
    let dq = c.csq.dim();
    for (m, name) in [(&c.s, "S"), (&c.t, "T"), (&c.u, "U")] {
        check_shape(m, d, d, name)?;
    }
    for (m, name) in [(&c.i1, "i1"), (&c.i2, "i2"), (&c.m, "m")] {
        check_shape(m, dq, d, name)?;
    }
    if c.csq.field() != c.c.field() {
        return Err(Error::malformed("csq", "field differs from C"));
    }
    let mut r = ValidationReport::new();
    let mut homs = true;
    for (m, name) in [(&c.s, "S"), (&c.t, "T"), (&c.u, "U")] {
        homs &= check_unital_hom(&mut r, &c.c, &c.c, m, name, AxiomId::CoA16);
    }
    for (m, name) in [(&c.i1, "i₁"), (&c.i2, "i₂"), (&c.m, "m")] {
        homs &= check_unital_hom(&mut r, &c.c, &c.csq, m, name, AxiomId::CoA16);
    }
    let (s, t, u) = (&c.s, &c.t, &c.u);
    let id = Matrix::identity(c.c.field(), d);
    r.check(s * s == *s, AxiomId::CoA1, || "S² ≠ S".into());
    r.check(t * t == *t, AxiomId::CoA2, || "T² ≠ T".into());
    r.check(s * t == *s, AxiomId::CoA3, || "ST ≠ S".into());
    r.check(t * s == *t, AxiomId::CoA4, || "TS ≠ T".into());
    r.check(u * t == *s, AxiomId::CoA5, || "UT ≠ S".into());
    r.check(s * u == *s, AxiomId::CoA6, || "SU ≠ S".into());
    r.check(u * u == id, AxiomId::CoA7, || "U² ≠ id".into());
    r.check(&c.i1 * s == &c.i2 * t, AxiomId::CoA8, || "i₁S ≠ i₂T".into());
    r.check(&c.m * t == &c.i1 * t, AxiomId::CoA9, || "mT ≠ i₁T".into());
    r.check(&c.m * s == &c.i2 * s, AxiomId::CoA10, || "mS ≠ i₂S".into());
    if !homs {
        return Ok(r);
    }

    let p = pushout(&c.c, &c.c, &c.c, s, t)?;
    let psi = induced(&p, &c.csq, &c.i1, &c.i2);
    let psi_inv = psi.as_ref().and_then(Matrix::inverse);
    let Some(psi_inv) = psi_inv else {
        r.push(AxiomId::CoA17, format!(
            "canonical pushout has dimension {} and does not map isomorphically onto C² (dimension {dq})",
            p.algebra.dim()
        ));
        return Ok(r);
    };
    let m_p = &psi_inv * &c.m;

    let laws = [
        (AxiomId::CoA11, t, &id, &id, "T⊔id"),
        (AxiomId::CoA12, &id, s, &id, "id⊔S"),
        (AxiomId::CoA13, u, &id, s, "U⊔id"),
        (AxiomId::CoA14, &id, u, t, "id⊔U"),
    ];
    for (axiom, x, y, want, name) in laws {
        match induced(&p, &c.c, x, y) {
            None => r.push(axiom, format!("{name} is not defined on C²")),
            Some(map) => r.check(&map * &m_p == *want, axiom, || format!("δ({name})m differs")),
        }
    }
    check_coassociativity(&mut r, c, &p, &m_p)?;
    if r.is_valid() {
        r.note(format!("dim C = {d}, dim C² = {dq}"));
    }
    Ok(r)
}

/// Compares `(m⊔id)m` and `(id⊔m)m` through the canonical isomorphism
/// between the two bracketings of `C³`.
fn check_coassociativity(
    r: &mut ValidationReport,
    c: &Cogroupoid,
    p: &Pushout,
    m_p: &Matrix,
) -> Result<()> {
    let (s, t) = (&c.s, &c.t);
    let left = pushout(&c.c, &p.algebra, &c.c, &(&p.i2 * s), t)?;
    let right = pushout(&c.c, &c.c, &p.algebra, s, &(&p.i1 * t))?;
    let m_id = induced(p, &left.algebra, &(&left.i1 * m_p), &left.i2);
    let id_m = induced(p, &right.algebra, &right.i1, &(&right.i2 * m_p));
    let (Some(m_id), Some(id_m)) = (m_id, id_m) else {
        r.push(AxiomId::CoA15, "m⊔id or id⊔m is not defined");
        return Ok(());
    };
    let inner = induced(p, &right.algebra, &right.i1, &(&right.i2 * &p.i1));
    let assoc = inner.and_then(|x| induced(&left, &right.algebra, &x, &(&right.i2 * &p.i2)));
    match assoc {
        Some(phi) if phi.inverse().is_some() => {
            r.check(&(&phi * &m_id) * m_p == &id_m * m_p, AxiomId::CoA15, || {
                "(m⊔id)m and (id⊔m)m differ".into()
            });
        }
        _ => r.push(AxiomId::CoA15, "the two bracketings of C³ are not canonically isomorphic"),
    }
    Ok(())
}

/// Functions on a finite groupoid: `S(f) = f∘Σ`, `T(f) = f∘T`,
/// `U(f) = f∘Υ`, and `m(f)(g₁, g₂) = f(μ(g₁, g₂))` carried into the
/// canonical pushout along `δ_(g,f) ↦ [δ_g ⊗ δ_f]`.
pub fn dualize_groupoid(g: &FiniteGroupoid, field: Field) -> Result<Cogroupoid> {
    require_groupoid(g)?;
    let n = g.n();
    if n == 0 {
        let mut r = ValidationReport::new();
        r.push(AxiomId::Alg3, "functions on the empty carrier form the zero ring");
        return Err(Error::rejected("dual algebra", r));
    }
    let c = CommAlgebra::functions(field, n)?;
    let pullback = |map: &dyn Fn(usize) -> usize| {
        let mut m = Matrix::zeros(field, n, n);
        for y in 0..n {
            m.set(y, map(y), field.one());
        }
        m
    };
    let s = pullback(&|y| g.sigma(y));
    let t = pullback(&|y| g.tau(y));
    let u = pullback(&|y| g.upsilon(y));
    let p = pushout(&c, &c, &c, &s, &t)?;

    let pairs = g.composable_pairs();
    let theta = Matrix::from_columns(
        field,
        p.algebra.dim(),
        &pairs.iter().map(|&(a, b)| p.class_of(a, b)).collect::<Vec<_>>(),
    );
    if theta.inverse().is_none() {
        return Err(Error::Precondition(format!(
            "functions on G₂ ({} pairs) do not match the pushout (dimension {})",
            pairs.len(),
            p.algebra.dim()
        )));
    }
    let mut mu_star = Matrix::zeros(field, pairs.len(), n);
    for (k, &(a, b)) in pairs.iter().enumerate() {
        let h = g.mu(a, b).expect("composable");
        mu_star.set(k, h, field.one());
    }
    Ok(Cogroupoid {
        c,
        s,
        t,
        u,
        csq: p.algebra,
        i1: p.i1,
        i2: p.i2,
        m: &theta * &mu_star,
    })
}

/// Fixed points of `S`. The result is checked to span `im S` and to be
/// carried isomorphically onto the fixed points of `T` by `T`, with `S` as
/// the inverse.
pub fn cobase(c: &Cogroupoid) -> Result<Vec<Vector>> {
    validate_cogroupoid(c)?.into_result("cogroupoid")?;
    let field = c.c.field();
    let d = c.c.dim();
    let id = Matrix::identity(field, d);
    let fixed_s = (&c.s - &id).kernel();
    let fixed_t = (&c.t - &id).kernel();
    let k = fixed_s.len();
    let rank = |vs: &[Vector]| {
        if vs.is_empty() {
            0
        } else {
            Matrix::from_columns(field, d, vs).rank()
        }
    };
    let with_image: Vec<Vector> = fixed_s.iter().chain(&c.s.image()).cloned().collect();
    let carried: Vec<Vector> = fixed_s.iter().map(|x| c.t.apply(x)).collect();
    let with_t: Vec<Vector> = fixed_t.iter().chain(&carried).cloned().collect();
    let round_trip = fixed_s.iter().zip(&carried).all(|(x, y)| c.s.apply(y) == *x);
    if rank(&with_image) != k || fixed_t.len() != k || rank(&with_t) != k || !round_trip {
        return Err(Error::Precondition(
            "fixed points of S and T are not matched by T and S".into(),
        ));
    }
    Ok(fixed_s)
}

/// A commutative Hopf algebra: comultiplication `C → C ⊗ C` on the basis
/// `e_i ⊗ e_j` (index `i · d + j`), counit as a row, antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub algebra: CommAlgebra,
    pub counit: Vector,
    pub comultiplication: Matrix,
    pub antipode: Matrix,
}

/// Checks `Hopf1`..`Hopf5`.
pub fn check_hopf(h: &HopfPresentation) -> Result<ValidationReport> {
    let c = &h.algebra;
    let d = c.dim();
    let field = c.field();
    check_shape(&h.comultiplication, d * d, d, "comultiplication")?;
    check_shape(&h.antipode, d, d, "antipode")?;
    if h.counit.len() != d {
        return Err(Error::malformed("counit", format!("length {} for dimension {d}", h.counit.len())));
    }
    let cc = CommAlgebra::new(c.algebra().tensor(c.algebra()))?;
    let delta = &h.comultiplication;
    let eps = Matrix::from_rows(field, d, vec![h.counit.clone()]);
    let id = Matrix::identity(field, d);
    let mut r = ValidationReport::new();

    // (ε ⊗ id) and (id ⊗ ε) as maps C ⊗ C → C.
    let eps_left = kron(&eps, &id);
    let eps_right = kron(&id, &eps);
    r.check(&eps_left * delta == id, AxiomId::Hopf1, || "(ε⊗id)m ≠ id".into());
    r.check(&eps_right * delta == id, AxiomId::Hopf1, || "(id⊗ε)m ≠ id".into());

    let mult = Matrix::from_columns(
        field,
        d,
        &(0..d * d)
            .map(|x| c.mul(&unit_vector(field, d, x / d), &unit_vector(field, d, x % d)))
            .collect::<Vec<_>>(),
    );
    let unit_col = Matrix::from_columns(field, d, &[c.unit().to_vec()]);
    let iota_eps = &unit_col * &eps;
    r.check(&(&mult * &kron(&h.antipode, &id)) * delta == iota_eps, AxiomId::Hopf2, || {
        "μ(U⊗id)m ≠ ιε".into()
    });
    r.check(&(&mult * &kron(&id, &h.antipode)) * delta == iota_eps, AxiomId::Hopf2, || {
        "μ(id⊗U)m ≠ ιε".into()
    });
    r.check(
        &kron(delta, &id) * delta == &kron(&id, delta) * delta,
        AxiomId::Hopf3,
        || "(m⊗id)m ≠ (id⊗m)m".into(),
    );
    let ground = CommAlgebra::functions(field, 1)?;
    check_unital_hom(&mut r, c, &cc, delta, "m", AxiomId::Hopf4);
    check_unital_hom(&mut r, c, &ground, &eps, "ε", AxiomId::Hopf4);
    r.check(delta.apply(c.unit()) == outer(c.unit(), c.unit()), AxiomId::Hopf5, || {
        "m(1) ≠ 1⊗1".into()
    });
    Ok(r)
}

/// Kronecker product: the matrix of `A ⊗ B` on `e_i ⊗ e_j` bases.
fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let y = b.get(k, l);
                    if !y.is_zero() {
                        m.set(i * b.rows() + k, j * b.cols() + l, x * y);
                    }
                }
            }
        }
    }
    m
}

/// The Hopf algebra inside a cogroupoid with `S = T = ι∘ε`, if any.
pub fn hopf_check(c: &Cogroupoid) -> Result<Option<HopfPresentation>> {
    validate_cogroupoid(c)?.into_result("cogroupoid")?;
    let alg = &c.c;
    let field = alg.field();
    let d = alg.dim();
    if c.s != c.t || c.s.rank() != 1 || c.s.apply(alg.unit()) != alg.unit() {
        return Ok(None);
    }
    // S(e_j) = ε(e_j) · 1; read ε off the unit's first nonzero coordinate.
    let k = alg.unit().iter().position(|x| !x.is_zero()).expect("nonzero unit");
    let inv = alg.unit()[k].inv();
    let counit: Vector = (0..d).map(|j| c.s.get(k, j) * &inv).collect();
    // With S = T = ιε the ideal vanishes and C² is C ⊗ C up to the
    // canonical map a ⊗ b ↦ i₁(a) i₂(b).
    let psi_cols: Vec<Vector> = (0..d * d)
        .map(|x| alg_mul_csq(c, x / d, x % d))
        .collect();
    let psi = Matrix::from_columns(field, c.csq.dim(), &psi_cols);
    let Some(psi_inv) = psi.inverse() else {
        return Ok(None);
    };
    let h = HopfPresentation {
        algebra: alg.clone(),
        counit,
        comultiplication: &psi_inv * &c.m,
        antipode: c.u.clone(),
    };
    check_hopf(&h)?.into_result("Hopf presentation")?;
    Ok(Some(h))
}

fn alg_mul_csq(c: &Cogroupoid, a: usize, b: usize) -> Vector {
    c.csq.mul(&c.i1.column(a), &c.i2.column(b))
}

/// `S = T = ι∘ε`, `U` the antipode, `C² = C ⊗ C`, `m` the comultiplication.
pub fn cogroupoid_from_hopf(h: &HopfPresentation) -> Result<Cogroupoid> {
    check_hopf(h)?.into_result("Hopf presentation")?;
    let c = &h.algebra;
    let field = c.field();
    let unit_col = Matrix::from_columns(field, c.dim(), &[c.unit().to_vec()]);
    let s = &unit_col * &Matrix::from_rows(field, c.dim(), vec![h.counit.clone()]);
    let p = pushout(c, c, c, &s, &s)?;
    debug_assert_eq!(p.ideal_dim(), 0);
    Ok(Cogroupoid {
        c: c.clone(),
        s: s.clone(),
        t: s,
        u: h.antipode.clone(),
        csq: p.algebra,
        i1: p.i1,
        i2: p.i2,
        m: h.comultiplication.clone(),
    })
}
