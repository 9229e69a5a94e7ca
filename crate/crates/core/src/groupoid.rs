//! The one-object presentation of a finite groupoid.
//!
//! A groupoid is a single carrier `[0..n)` of morphisms with source `Σ`,
//! target `T`, inversion `Υ` and a partial composition `μ`. Objects are not
//! primitive; they are recovered as the fixed points of `Σ` (see [`base`]).
//!
//! `μ(g, f)` is "g after f" and is defined exactly when `Σg = Tf`.
//! Pullbacks are taken literally as subsets of cartesian products, so the
//! composable pairs are the pairs `(g, f)` with `Σg = Tf` and associativity
//! is literal equality of flattened triples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{AxiomId, ValidationReport};

/// Raw tables, as they appear in files. No invariants are enforced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidParts {
    pub sigma: Vec<usize>,
    pub tau: Vec<usize>,
    /// Absent for plain category data.
    pub upsilon: Option<Vec<usize>>,
    /// Row-major `n × n`; `mu[g * n + f]` is `μ(g, f)`.
    pub mu: Vec<Option<usize>>,
}

/// Finite category or groupoid in one-object form.
///
/// Values are well-formed (every table has the right length and every entry
/// is in range) but not necessarily lawful; run [`validate_category`] or
/// [`validate_groupoid`] for that. When `upsilon` is absent the value is
/// category data only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteGroupoid {
    n: usize,
    sigma: Vec<usize>,
    tau: Vec<usize>,
    upsilon: Option<Vec<usize>>,
    mu: Vec<Option<usize>>,
}

impl FiniteGroupoid {
    pub fn from_parts(parts: GroupoidParts) -> Result<FiniteGroupoid> {
        let n = parts.sigma.len();
        check_map("tau", &parts.tau, n)?;
        check_map("sigma", &parts.sigma, n)?;
        if let Some(u) = &parts.upsilon {
            check_map("upsilon", u, n)?;
        }
        if parts.mu.len() != n * n {
            return Err(Error::malformed(
                "mu",
                format!("expected {} entries, found {}", n * n, parts.mu.len()),
            ));
        }
        if let Some((i, v)) = parts
            .mu
            .iter()
            .enumerate()
            .find_map(|(i, v)| v.filter(|&v| v >= n).map(|v| (i, v)))
        {
            return Err(Error::malformed(
                "mu",
                format!("entry mu[{}][{}] = {v} out of range 0..{n}", i / n.max(1), i % n.max(1)),
            ));
        }
        Ok(FiniteGroupoid {
            n,
            sigma: parts.sigma,
            tau: parts.tau,
            upsilon: parts.upsilon,
            mu: parts.mu,
        })
    }

    /// Builds from a closure for μ; used by constructors.
    pub fn from_fn(
        sigma: Vec<usize>,
        tau: Vec<usize>,
        upsilon: Option<Vec<usize>>,
        mu: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<FiniteGroupoid> {
        let n = sigma.len();
        let mu = (0..n * n).map(|i| mu(i / n, i % n)).collect();
        FiniteGroupoid::from_parts(GroupoidParts { sigma, tau, upsilon, mu })
    }

    pub fn empty() -> FiniteGroupoid {
        FiniteGroupoid { n: 0, sigma: vec![], tau: vec![], upsilon: Some(vec![]), mu: vec![] }
    }

    pub fn into_parts(self) -> GroupoidParts {
        GroupoidParts { sigma: self.sigma, tau: self.tau, upsilon: self.upsilon, mu: self.mu }
    }

    pub fn to_parts(&self) -> GroupoidParts {
        self.clone().into_parts()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sigma(&self, g: usize) -> usize {
        self.sigma[g]
    }

    pub fn tau(&self, g: usize) -> usize {
        self.tau[g]
    }

    /// Panics on category data without an inversion.
    pub fn upsilon(&self, g: usize) -> usize {
        self.upsilon.as_ref().expect("structure has no inversion map")[g]
    }

    pub fn sigma_map(&self) -> &[usize] {
        &self.sigma
    }

    pub fn tau_map(&self) -> &[usize] {
        &self.tau
    }

    pub fn upsilon_map(&self) -> Option<&[usize]> {
        self.upsilon.as_deref()
    }

    pub fn has_inversion(&self) -> bool {
        self.upsilon.is_some()
    }

    pub fn mu(&self, g: usize, f: usize) -> Option<usize> {
        self.mu[g * self.n + f]
    }

    pub fn mu_table(&self) -> &[Option<usize>] {
        &self.mu
    }

    pub fn is_composable(&self, g: usize, f: usize) -> bool {
        self.sigma[g] == self.tau[f]
    }

    /// The pullback `G₂ = {(g, f) : Σg = Tf}` in row-major order.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let by_target = self.by_target();
        let mut out = Vec::new();
        for g in 0..self.n {
            for &f in &by_target[self.sigma[g]] {
                out.push((g, f));
            }
        }
        out
    }

    /// `by_target()[x]` lists every `f` with `Tf = x`, ascending.
    pub fn by_target(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for f in 0..self.n {
            out[self.tau[f]].push(f);
        }
        out
    }

    /// `by_source()[x]` lists every `g` with `Σg = x`, ascending.
    pub fn by_source(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for g in 0..self.n {
            out[self.sigma[g]].push(g);
        }
        out
    }

    /// Fixed points of `Σ`, ascending. No validation.
    pub fn identities(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.sigma[x] == x).collect()
    }

    /// Transports the structure along `perm`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteGroupoid {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut sigma = vec![0; n];
        let mut tau = vec![0; n];
        let mut upsilon = self.upsilon.as_ref().map(|_| vec![0; n]);
        let mut mu = vec![None; n * n];
        for x in 0..n {
            sigma[perm[x]] = perm[self.sigma[x]];
            tau[perm[x]] = perm[self.tau[x]];
            if let (Some(u), Some(src)) = (upsilon.as_mut(), self.upsilon.as_ref()) {
                u[perm[x]] = perm[src[x]];
            }
        }
        for g in 0..n {
            for f in 0..n {
                mu[perm[g] * n + perm[f]] = self.mu(g, f).map(|h| perm[h]);
            }
        }
        FiniteGroupoid { n, sigma, tau, upsilon, mu }
    }

    /// Flat integer encoding `(Σ, T, Υ, μ)` with `-1` for undefined; the
    /// lexicographic order on these vectors defines canonical forms.
    pub fn encode(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(3 * self.n + self.n * self.n);
        out.extend(self.sigma.iter().map(|&x| x as i64));
        out.extend(self.tau.iter().map(|&x| x as i64));
        if let Some(u) = &self.upsilon {
            out.extend(u.iter().map(|&x| x as i64));
        }
        out.extend(self.mu.iter().map(|v| v.map_or(-1, |x| x as i64)));
        out
    }
}

fn check_map(name: &str, map: &[usize], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::malformed(
            name,
            format!("expected length {n}, found {}", map.len()),
        ));
    }
    if let Some((i, &v)) = map.iter().enumerate().find(|(_, &v)| v >= n) {
        return Err(Error::malformed(name, format!("entry {i} = {v} out of range 0..{n}")));
    }
    Ok(())
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "undefined".to_string(), |x| x.to_string())
}

/// Checks the eight category axioms and the derived idempotency `D1`.
/// Inversion data, if present, is ignored.
pub fn validate_category(g: &FiniteGroupoid) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n = g.n;
    let (s, t) = (&g.sigma, &g.tau);

    for f in 0..n {
        r.check(t[s[f]] == s[f], AxiomId::A1, || format!("f={f}: TΣf={}, Σf={}", t[s[f]], s[f]));
        r.check(s[t[f]] == t[f], AxiomId::A2, || format!("f={f}: ΣTf={}, Tf={}", s[t[f]], t[f]));
    }

    for a in 0..n {
        for b in 0..n {
            let defined = g.mu(a, b).is_some();
            let composable = s[a] == t[b];
            r.check(defined == composable, AxiomId::A3, || {
                format!("(g,f)=({a},{b}): Σg={}, Tf={}, μ={}", s[a], t[b], show(g.mu(a, b)))
            });
            if let Some(h) = g.mu(a, b) {
                r.check(s[h] == s[b], AxiomId::A6, || {
                    format!("(g,f)=({a},{b}): Σμ={}, Σf={}", s[h], s[b])
                });
                r.check(t[h] == t[a], AxiomId::A7, || {
                    format!("(g,f)=({a},{b}): Tμ={}, Tg={}", t[h], t[a])
                });
            }
        }
    }

    for f in 0..n {
        let right = g.mu(f, s[f]);
        r.check(right == Some(f), AxiomId::A4, || format!("f={f}: μ(f,Σf)={}", show(right)));
        let left = g.mu(t[f], f);
        r.check(left == Some(f), AxiomId::A5, || format!("f={f}: μ(Tf,f)={}", show(left)));
    }

    let by_target = g.by_target();
    let by_source = g.by_source();
    for gm in 0..n {
        for &h in &by_source[t[gm]] {
            for &f in &by_target[s[gm]] {
                let lhs = g.mu(h, gm).and_then(|hg| g.mu(hg, f));
                let rhs = g.mu(gm, f).and_then(|gf| g.mu(h, gf));
                if let (Some(l), Some(rr)) = (lhs, rhs) {
                    r.check(l == rr, AxiomId::A8, || {
                        format!("(h,g,f)=({h},{gm},{f}): μ(μ(h,g),f)={l}, μ(h,μ(g,f))={rr}")
                    });
                }
            }
        }
    }

    for f in 0..n {
        r.check(s[s[f]] == s[f] && t[t[f]] == t[f], AxiomId::D1, || {
            format!("f={f}: ΣΣf={}, Σf={}, TTf={}, Tf={}", s[s[f]], s[f], t[t[f]], t[f])
        });
    }

    if r.is_valid() {
        r.note(format!("coequalizers exist; base M = {:?}", g.identities()));
    }
    r
}

/// Category axioms, then `G1`..`G3` and the derived `ΣΥ = T` (`D2`).
pub fn validate_groupoid(g: &FiniteGroupoid) -> Result<ValidationReport> {
    let u = g
        .upsilon
        .as_ref()
        .ok_or_else(|| Error::malformed("upsilon", "groupoid data needs an inversion map"))?;
    let mut r = validate_category(g);
    let (s, t) = (&g.sigma, &g.tau);
    for x in 0..g.n {
        r.check(t[u[x]] == s[x], AxiomId::G1, || {
            format!("TΥ=Σ fails at g={x}: TΥg={}, Σg={}", t[u[x]], s[x])
        });
        r.check(u[s[x]] == s[x], AxiomId::G1, || {
            format!("ΥΣ=Σ fails at g={x}: ΥΣg={}, Σg={}", u[s[x]], s[x])
        });
        r.check(u[u[x]] == x, AxiomId::G1, || format!("ΥΥ=id fails at g={x}: ΥΥg={}", u[u[x]]));
        let right = g.mu(x, u[x]);
        r.check(right == Some(t[x]), AxiomId::G2, || {
            format!("g={x}: μ(g,Υg)={}, Tg={}", show(right), t[x])
        });
        let left = g.mu(u[x], x);
        r.check(left == Some(s[x]), AxiomId::G3, || {
            format!("g={x}: μ(Υg,g)={}, Σg={}", show(left), s[x])
        });
        r.check(s[u[x]] == t[x], AxiomId::D2, || {
            format!("g={x}: ΣΥg={}, Tg={}", s[u[x]], t[x])
        });
    }
    // The note from validate_category is only meaningful when everything passes.
    if !r.is_valid() {
        r.notes.clear();
    }
    Ok(r)
}

/// Rejects anything that is not a lawful groupoid.
pub fn require_groupoid(g: &FiniteGroupoid) -> Result<()> {
    validate_groupoid(g)?.into_result("groupoid")
}

/// Rejects anything that is not a lawful category.
pub fn require_category(g: &FiniteGroupoid) -> Result<()> {
    validate_category(g).into_result("category")
}

/// The object set `M`, as the sorted fixed points of `Σ`.
///
/// Asserts that this coincides with the fixed points of `T` and with the
/// images of `Σ` and `T`.
pub fn base(g: &FiniteGroupoid) -> Result<Vec<usize>> {
    require_category(g)?;
    let fixed_sigma = g.identities();
    let fixed_tau: Vec<usize> = (0..g.n).filter(|&x| g.tau[x] == x).collect();
    let image = |m: &[usize]| {
        let mut v = m.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    assert_eq!(fixed_sigma, fixed_tau, "Fix(Σ) ≠ Fix(T) on a valid category");
    assert_eq!(fixed_sigma, image(&g.sigma), "Fix(Σ) ≠ im(Σ) on a valid category");
    assert_eq!(fixed_sigma, image(&g.tau), "Fix(Σ) ≠ im(T) on a valid category");
    Ok(fixed_sigma)
}

/// `true` iff `Σ = T` is one constant map, i.e. the base is a single point.
///
/// When it is, the composition table is total and the carrier with `μ`, `Υ`
/// and the unique identity is a group; both facts are asserted.
pub fn is_group_object(g: &FiniteGroupoid) -> Result<bool> {
    if g.is_empty() {
        return Err(Error::Precondition(
            "the empty groupoid has no element e: 1 → G".to_string(),
        ));
    }
    require_groupoid(g)?;
    let e = g.sigma[0];
    let constant = g.sigma.iter().chain(&g.tau).all(|&x| x == e);
    if constant {
        let n = g.n;
        let m = |a: usize, b: usize| g.mu(a, b).expect("group object must compose totally");
        for a in 0..n {
            assert!(m(a, e) == a && m(e, a) == a, "identity law fails in group object");
            assert!(m(a, g.upsilon(a)) == e && m(g.upsilon(a), a) == e, "inverse law fails");
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(m(m(a, b), c), m(a, m(b, c)), "associativity fails");
                }
            }
        }
    }
    Ok(constant)
}
