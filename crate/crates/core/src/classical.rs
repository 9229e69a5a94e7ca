//! Conversion between the one-object form and the usual two-object form
//! (base set, source, target, identity section, inverse).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{base, require_groupoid, FiniteGroupoid, GroupoidParts};
use crate::report::{AxiomId, ValidationReport};

/// Two-object presentation over a base `M`.
///
/// `M` is indexed by position in `identity_section`, which lists the
/// carrier indices of the identities in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalPresentation {
    /// ε: M-index → carrier index.
    pub identity_section: Vec<usize>,
    /// σ: carrier → M-index.
    pub source: Vec<usize>,
    /// τ: carrier → M-index.
    pub target: Vec<usize>,
    /// ι.
    pub inverse: Vec<usize>,
    /// Same layout as [`GroupoidParts::mu`].
    pub mu: Vec<Option<usize>>,
}

impl ClassicalPresentation {
    /// Carrier indices of the identities, i.e. `M` embedded in the carrier.
    pub fn base(&self) -> &[usize] {
        &self.identity_section
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    fn mu_at(&self, h: usize, g: usize) -> Option<usize> {
        self.mu[h * self.n() + g]
    }

    /// Items i) to v) of the classical definition, plus well-formedness.
    pub fn validate(&self) -> Result<ValidationReport> {
        let n = self.n();
        let m = self.identity_section.len();
        for (name, map, bound) in [
            ("target", &self.target, m),
            ("inverse", &self.inverse, n),
            ("source", &self.source, m),
        ] {
            if map.len() != n {
                return Err(Error::malformed(name, format!("expected length {n}")));
            }
            if let Some(v) = map.iter().find(|&&v| v >= bound) {
                return Err(Error::malformed(name, format!("entry {v} out of range 0..{bound}")));
            }
        }
        if let Some(v) = self.identity_section.iter().find(|&&v| v >= n) {
            return Err(Error::malformed("identity_section", format!("entry {v} out of range")));
        }
        if self.mu.len() != n * n {
            return Err(Error::malformed("mu", format!("expected {} entries", n * n)));
        }
        if self.mu.iter().flatten().any(|&v| v >= n) {
            return Err(Error::malformed("mu", "entry out of range"));
        }

        let mut r = ValidationReport::new();
        let eps = &self.identity_section;
        let (src, tgt, inv) = (&self.source, &self.target, &self.inverse);

        let increasing = eps.windows(2).all(|w| w[0] < w[1]);
        r.check(increasing, AxiomId::C3, || {
            format!("identity section {eps:?} is not strictly increasing (so not injective in canonical order)")
        });
        for (x, &e) in eps.iter().enumerate() {
            r.check(src[e] == x && tgt[e] == x, AxiomId::C3, || {
                format!("x={x}: σ(ε(x))={}, τ(ε(x))={}", src[e], tgt[e])
            });
        }

        for h in 0..n {
            for g in 0..n {
                let composable = src[h] == tgt[g];
                let value = self.mu_at(h, g);
                r.check(value.is_some() == composable, AxiomId::C1, || {
                    format!("(h,g)=({h},{g}): σ(h)={}, τ(g)={}, μ defined={}", src[h], tgt[g], value.is_some())
                });
                if let Some(k) = value {
                    r.check(src[k] == src[g] && tgt[k] == tgt[h], AxiomId::C1, || {
                        format!("(h,g)=({h},{g}): σμ={}, σg={}, τμ={}, τh={}", src[k], src[g], tgt[k], tgt[h])
                    });
                }
            }
        }

        for k in 0..n {
            for h in 0..n {
                for g in 0..n {
                    let lhs = self.mu_at(k, h).and_then(|kh| self.mu_at(kh, g));
                    let rhs = self.mu_at(h, g).and_then(|hg| self.mu_at(k, hg));
                    if src[k] == tgt[h] && src[h] == tgt[g] {
                        r.check(lhs == rhs, AxiomId::C2, || {
                            format!("({k},{h},{g}): {lhs:?} vs {rhs:?}")
                        });
                    }
                }
            }
        }

        for g in 0..n {
            let right = eps.get(src[g]).and_then(|&e| self.mu_at(g, e));
            let left = eps.get(tgt[g]).and_then(|&e| self.mu_at(e, g));
            r.check(right == Some(g) && left == Some(g), AxiomId::C4, || {
                format!("g={g}: μ(g,ε(σg))={right:?}, μ(ε(τg),g)={left:?}")
            });
            let i = inv[g];
            let after = self.mu_at(i, g);
            let before = self.mu_at(g, i);
            let ok = src[i] == tgt[g]
                && tgt[i] == src[g]
                && after == eps.get(src[g]).copied()
                && before == eps.get(tgt[g]).copied();
            r.check(ok, AxiomId::C5, || {
                format!("g={g}: ι(g)={i}, μ(ι(g),g)={after:?}, μ(g,ι(g))={before:?}")
            });
        }
        Ok(r)
    }
}

/// Recovers the two-object form: `M = Fix(Σ)`, `σ = ε⁻¹Σ`, `τ = ε⁻¹T`, `ι = Υ`.
pub fn to_classical(g: &FiniteGroupoid) -> Result<ClassicalPresentation> {
    require_groupoid(g)?;
    let identities = base(g)?;
    let mut index_of = vec![usize::MAX; g.n()];
    for (i, &x) in identities.iter().enumerate() {
        index_of[x] = i;
    }
    let c = ClassicalPresentation {
        source: g.sigma_map().iter().map(|&x| index_of[x]).collect(),
        target: g.tau_map().iter().map(|&x| index_of[x]).collect(),
        inverse: g.upsilon_map().expect("validated groupoid").to_vec(),
        mu: g.mu_table().to_vec(),
        identity_section: identities,
    };
    debug_assert!(c.validate().map(|r| r.is_valid()).unwrap_or(false));
    Ok(c)
}

/// `Σ := εσ`, `T := ετ`, `Υ := ι`. Rejects presentations violating i) to v).
pub fn from_classical(c: &ClassicalPresentation) -> Result<FiniteGroupoid> {
    c.validate()?.into_result("classical presentation")?;
    let eps = &c.identity_section;
    let g = FiniteGroupoid::from_parts(GroupoidParts {
        sigma: c.source.iter().map(|&x| eps[x]).collect(),
        tau: c.target.iter().map(|&x| eps[x]).collect(),
        upsilon: Some(c.inverse.clone()),
        mu: c.mu.clone(),
    })?;
    require_groupoid(&g)?;
    Ok(g)
}
