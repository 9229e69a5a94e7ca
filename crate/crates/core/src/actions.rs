//! Actions of a finite category or groupoid on a finite set along a moment
//! map, the self-action, and the action groupoid.

use crate::error::{Error, Result};
use crate::groupoid::{require_category, require_groupoid, validate_category, validate_groupoid, FiniteGroupoid};
use crate::report::{AxiomId, ValidationReport};

/// `C` acting on `E = [0..m)` through `φ: E → C`; `θ(g, e)` is stored at
/// `theta[g * m + e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAction {
    gpd: FiniteGroupoid,
    m: usize,
    phi: Vec<usize>,
    theta: Vec<Option<usize>>,
}

impl FiniteAction {
    pub fn new(
        gpd: FiniteGroupoid,
        m: usize,
        phi: Vec<usize>,
        theta: Vec<Option<usize>>,
    ) -> Result<FiniteAction> {
        let n = gpd.n();
        if phi.len() != m {
            return Err(Error::malformed("phi", format!("length {} but m = {m}", phi.len())));
        }
        if let Some(&v) = phi.iter().find(|&&v| v >= n) {
            return Err(Error::malformed("phi", format!("value {v} outside carrier 0..{n}")));
        }
        if theta.len() != n * m {
            return Err(Error::malformed(
                "theta",
                format!("{} entries, expected {n}x{m}", theta.len()),
            ));
        }
        if let Some(v) = theta.iter().flatten().find(|&&v| v >= m) {
            return Err(Error::malformed("theta", format!("value {v} outside 0..{m}")));
        }
        Ok(FiniteAction { gpd, m, phi, theta })
    }

    pub fn from_fn(
        gpd: FiniteGroupoid,
        m: usize,
        phi: Vec<usize>,
        theta: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<FiniteAction> {
        let n = gpd.n();
        let table = (0..n * m).map(|x| theta(x / m, x % m)).collect();
        FiniteAction::new(gpd, m, phi, table)
    }

    pub fn groupoid(&self) -> &FiniteGroupoid {
        &self.gpd
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn theta(&self, g: usize, e: usize) -> Option<usize> {
        self.theta[g * self.m + e]
    }

    pub fn theta_table(&self) -> &[Option<usize>] {
        &self.theta
    }

    /// `φ_Σ = Σ∘φ`.
    pub fn anchor(&self, e: usize) -> usize {
        self.gpd.sigma(self.phi[e])
    }

    /// Pairs `(g, e)` where `θ` is defined, `g`-major.
    pub fn defined_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.gpd.n())
            .flat_map(|g| (0..self.m).map(move |e| (g, e)))
            .filter(|&(g, e)| self.theta(g, e).is_some())
            .collect()
    }
}

/// Checks `Act1`..`Act4` exhaustively. The acting structure must be a
/// lawful category.
pub fn validate_action(a: &FiniteAction) -> Result<ValidationReport> {
    validate_category(&a.gpd).into_result("acting category")?;
    let g = &a.gpd;
    let mut r = ValidationReport::new();
    for x in 0..g.n() {
        for e in 0..a.m {
            let should = g.sigma(x) == a.anchor(e);
            let got = a.theta(x, e);
            r.check(got.is_some() == should, AxiomId::Act1, || {
                format!("θ({x},{e}) defined={} but Σg={} and Σφ(e)={}", got.is_some(), g.sigma(x), a.anchor(e))
            });
            if let Some(y) = got {
                r.check(a.anchor(y) == g.tau(x), AxiomId::Act3, || {
                    format!("Σφθ({x},{e})={} but T({x})={}", a.anchor(y), g.tau(x))
                });
            }
        }
    }
    for e in 0..a.m {
        let unit = a.anchor(e);
        r.check(a.theta(unit, e) == Some(e), AxiomId::Act2, || {
            format!("θ({unit},{e})={:?}", a.theta(unit, e))
        });
    }
    for (h, x) in g.composable_pairs() {
        let hx = g.mu(h, x).expect("composable");
        for e in 0..a.m {
            let Some(y) = a.theta(x, e) else { continue };
            let left = a.theta(hx, e);
            let right = a.theta(h, y);
            r.check(left == right, AxiomId::Act4, || {
                format!("θ(μ({h},{x}),{e})={left:?} but θ({h},θ({x},{e}))={right:?}")
            });
        }
    }
    Ok(r)
}

/// `E` is the carrier, `φ = T` and `θ = μ`.
pub fn self_action(g: &FiniteGroupoid) -> Result<FiniteAction> {
    require_category(g)?;
    FiniteAction::from_fn(g.clone(), g.n(), g.tau_map().to_vec(), |x, e| g.mu(x, e))
}

/// Objects `E`, arrows the defined pairs `(g, e): e → θ(g, e)`.
pub fn action_groupoid(a: &FiniteAction) -> Result<FiniteGroupoid> {
    require_groupoid(&a.gpd)?;
    validate_action(a)?.into_result("action")?;
    let g = &a.gpd;
    let pairs = a.defined_pairs();
    let index = |x: usize, e: usize| {
        pairs.binary_search(&(x, e)).expect("defined pair")
    };
    let theta = |x: usize, e: usize| a.theta(x, e).expect("defined pair");
    let sigma = pairs.iter().map(|&(_, e)| index(a.anchor(e), e)).collect();
    let tau = pairs
        .iter()
        .map(|&(x, e)| {
            let y = theta(x, e);
            index(a.anchor(y), y)
        })
        .collect();
    let upsilon = pairs.iter().map(|&(x, e)| index(g.upsilon(x), theta(x, e))).collect();
    let out = FiniteGroupoid::from_fn(sigma, tau, Some(upsilon), |p, q| {
        let (h, e2) = pairs[p];
        let (x, e) = pairs[q];
        if e2 != theta(x, e) {
            return None;
        }
        g.mu(h, x).map(|hx| index(hx, e))
    })?;
    validate_groupoid(&out)?.into_result("action groupoid")?;
    Ok(out)
}

/// Orbits of `E`, each ascending, ordered by least element.
pub fn orbits(a: &FiniteAction) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..a.m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (x, e) in a.defined_pairs() {
        let y = a.theta(x, e).expect("defined");
        let (r1, r2) = (find(&mut parent, e), find(&mut parent, y));
        if r1 != r2 {
            parent[r1.max(r2)] = r1.min(r2);
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; a.m];
    for e in 0..a.m {
        let r = find(&mut parent, e);
        if slot[r] == usize::MAX {
            slot[r] = out.len();
            out.push(Vec::new());
        }
        out[slot[r]].push(e);
    }
    out
}

/// A right action: `e · g` at `right[e * n + g]`, defined iff
/// `Tg = T(φ(e))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightAction {
    pub gpd: FiniteGroupoid,
    pub m: usize,
    pub phi: Vec<usize>,
    pub right: Vec<Option<usize>>,
}

impl RightAction {
    /// The equivalent left action `θ(g, e) = e · Υg` along `Υ∘φ`.
    pub fn to_left(&self) -> Result<FiniteAction> {
        require_groupoid(&self.gpd)?;
        let n = self.gpd.n();
        if self.right.len() != n * self.m {
            return Err(Error::malformed("right", format!("{} entries, expected {}x{n}", self.right.len(), self.m)));
        }
        if let Some(&v) = self.phi.iter().find(|&&v| v >= n) {
            return Err(Error::malformed("phi", format!("value {v} outside carrier 0..{n}")));
        }
        let phi = self.phi.iter().map(|&x| self.gpd.upsilon(x)).collect();
        FiniteAction::from_fn(self.gpd.clone(), self.m, phi, |g, e| {
            self.right[e * n + self.gpd.upsilon(g)]
        })
    }
}

pub fn validate_right_action(a: &RightAction) -> Result<ValidationReport> {
    validate_action(&a.to_left()?)
}
