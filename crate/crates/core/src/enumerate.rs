//! Exhaustive generation of every groupoid on the carrier `[0..n)`.
//!
//! The search follows the axioms in pruning order:
//!
//! 1. source/target pairs: a base `M`, then `Σ` and `T` retracting onto `M`
//!    (every idempotent pair with `TΣ = Σ`, `ΣT = T` arises this way);
//!    hom-set sizes must be constant on each connected piece;
//! 2. inversions `Υ` pairing `hom(x, y)` with `hom(y, x)` and fixing `M`;
//! 3. the composition table, cell by cell, with unit and inverse cells
//!    pre-filled, rows and columns injective, and associativity checked on
//!    every triple as soon as its four cells are known.
//!
//! Every completed table is re-validated by [`validate_groupoid`].
//! Branches are independent; results are merged in candidate order so the
//! output does not depend on the thread schedule.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groupoid::{validate_groupoid, FiniteGroupoid, GroupoidParts};
use crate::iso::{are_isomorphic, canonical_form, invariant_vector, InvariantVector};

pub const DEFAULT_LIMIT: usize = 6;

/// Hard ceiling regardless of configuration: masks are `u64`.
const MAX_SUPPORTED: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClassSummary {
    pub n: usize,
    pub count_labeled: usize,
    pub count_up_to_iso: usize,
    /// Canonical forms, sorted by their encoding.
    pub representatives: Vec<FiniteGroupoid>,
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit || n > MAX_SUPPORTED {
        return Err(Error::ResourceLimit(format!(
            "enumeration of order {n} exceeds the limit {}",
            limit.min(MAX_SUPPORTED)
        )));
    }
    Ok(())
}

/// Every lawful labeled groupoid on `[0..n)`, in deterministic order.
pub fn enumerate_labeled(n: usize, limit: usize) -> Result<Vec<FiniteGroupoid>> {
    check_limit(n, limit)?;
    if n == 0 {
        return Ok(vec![FiniteGroupoid::empty()]);
    }
    let candidates = source_target_pairs(n);
    let found: Vec<Vec<FiniteGroupoid>> = candidates
        .par_iter()
        .map(|(sigma, tau)| {
            let mut out = Vec::new();
            for upsilon in inversions(sigma, tau) {
                fill_compositions(sigma, tau, &upsilon, &mut out);
            }
            out
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Labeled count, isomorphism classes and canonical representatives.
pub fn enumerate_groupoids(n: usize, limit: usize) -> Result<IsoClassSummary> {
    let labeled = enumerate_labeled(n, limit)?;
    let mut buckets: HashMap<InvariantVector, Vec<usize>> = HashMap::new();
    let mut reps: Vec<FiniteGroupoid> = Vec::new();
    for g in &labeled {
        let bucket = buckets.entry(invariant_vector(g)).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&reps[i], g).is_some()) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(g.clone());
    }
    let mut representatives: Vec<FiniteGroupoid> = reps.par_iter().map(canonical_form).collect();
    representatives.sort_by_key(|g| g.encode());
    Ok(IsoClassSummary {
        n,
        count_labeled: labeled.len(),
        count_up_to_iso: representatives.len(),
        representatives,
    })
}

/// All `(Σ, T)` retracting onto a common base and passing the hom-set
/// size test.
fn source_target_pairs(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << n) {
        let base: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let retractions = retractions(n, &base, &rest);
        for sigma in &retractions {
            for tau in &retractions {
                if hom_sizes_consistent(n, &base, sigma, tau) {
                    out.push((sigma.clone(), tau.clone()));
                }
            }
        }
    }
    out
}

/// Maps `[0..n) → base` fixing `base`, in lexicographic order.
fn retractions(n: usize, base: &[usize], rest: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut choice = vec![0usize; rest.len()];
    loop {
        let mut map: Vec<usize> = (0..n).collect();
        for (&x, &c) in rest.iter().zip(&choice) {
            map[x] = base[c];
        }
        out.push(map);
        // odometer
        let mut i = rest.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < base.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// In a groupoid every hom-set between connected objects has the size of
/// the vertex group, and `hom(x, y)` is in bijection with `hom(y, x)`.
fn hom_sizes_consistent(n: usize, base: &[usize], sigma: &[usize], tau: &[usize]) -> bool {
    let mut size = vec![vec![0usize; n]; n];
    for g in 0..n {
        size[sigma[g]][tau[g]] += 1;
    }
    for &x in base {
        for &y in base {
            if size[x][y] != size[y][x] {
                return false;
            }
            if size[x][y] > 0 && (size[x][y] != size[x][x] || size[x][y] != size[y][y]) {
                return false;
            }
        }
    }
    // Connectivity is transitive: if x–y and y–z are linked then x–z must be.
    for &x in base {
        for &y in base {
            for &z in base {
                if size[x][y] > 0 && size[y][z] > 0 && size[x][z] == 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Involutions sending `hom(x, y)` onto `hom(y, x)` and fixing identities.
fn inversions(sigma: &[usize], tau: &[usize]) -> Vec<Vec<usize>> {
    let n = sigma.len();
    let mut out = Vec::new();
    let mut ups = vec![usize::MAX; n];
    fn go(i: usize, sigma: &[usize], tau: &[usize], ups: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = sigma.len();
        if i == n {
            out.push(ups.clone());
            return;
        }
        if ups[i] != usize::MAX {
            return go(i + 1, sigma, tau, ups, out);
        }
        if sigma[i] == i {
            ups[i] = i;
            go(i + 1, sigma, tau, ups, out);
            ups[i] = usize::MAX;
            return;
        }
        for j in i..n {
            if ups[j] != usize::MAX || sigma[j] == j {
                continue;
            }
            if sigma[j] != tau[i] || tau[j] != sigma[i] {
                continue;
            }
            ups[i] = j;
            ups[j] = i;
            go(i + 1, sigma, tau, ups, out);
            ups[i] = usize::MAX;
            ups[j] = usize::MAX;
        }
    }
    go(0, sigma, tau, &mut ups, &mut out);
    out
}

struct TableSearch<'a> {
    n: usize,
    sigma: &'a [usize],
    tau: &'a [usize],
    upsilon: &'a [usize],
    mu: Vec<Option<usize>>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    cells: Vec<(usize, usize)>,
    by_target: Vec<Vec<usize>>,
    by_source: Vec<Vec<usize>>,
    /// `hom[x * n + y]` lists the arrows with source `x` and target `y`.
    hom: Vec<Vec<usize>>,
}

impl<'a> TableSearch<'a> {
    fn get(&self, g: usize, f: usize) -> Option<usize> {
        self.mu[g * self.n + f]
    }

    /// Sets `μ(g, f) = h` if consistent; returns false on conflict.
    fn set(&mut self, g: usize, f: usize, h: usize) -> bool {
        if let Some(v) = self.get(g, f) { return v == h }
        if self.row_used[g] >> h & 1 == 1 || self.col_used[f] >> h & 1 == 1 {
            return false;
        }
        self.mu[g * self.n + f] = Some(h);
        self.row_used[g] |= 1 << h;
        self.col_used[f] |= 1 << h;
        if self.associative_at(g, f, h) {
            true
        } else {
            self.unset(g, f, h);
            false
        }
    }

    fn unset(&mut self, g: usize, f: usize, h: usize) {
        self.mu[g * self.n + f] = None;
        self.row_used[g] &= !(1 << h);
        self.col_used[f] &= !(1 << h);
    }

    /// Checks every triple in which the new cell `(p, q) = r` participates.
    fn associative_at(&self, p: usize, q: usize, r: usize) -> bool {
        let (s, t) = (self.sigma, self.tau);
        // (p, q) as the left pair of (p, q, z).
        for &z in &self.by_target[s[q]] {
            if let (Some(w), Some(l)) = (self.get(q, z), self.get(r, z)) {
                if self.get(p, w).is_some_and(|rr| rr != l) {
                    return false;
                }
            }
        }
        // (p, q) as the right pair of (x, p, q).
        for &x in &self.by_source[t[p]] {
            if let (Some(v), Some(rr)) = (self.get(x, p), self.get(x, r)) {
                if self.get(v, q).is_some_and(|l| l != rr) {
                    return false;
                }
            }
        }
        // (p, q) = (μ(x, y), z) and (p, q) = (x, μ(y, z)).
        for a in 0..self.n {
            for b in 0..self.n {
                let Some(v) = self.get(a, b) else { continue };
                if v == p && s[b] == t[q] {
                    if let Some(w) = self.get(b, q) {
                        if self.get(a, w).is_some_and(|rr| rr != r) {
                            return false;
                        }
                    }
                }
                if v == q && s[p] == t[a] {
                    if let Some(u) = self.get(p, a) {
                        if self.get(u, b).is_some_and(|l| l != r) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, i: usize, out: &mut Vec<FiniteGroupoid>) {
        let Some(&(g, f)) = self.cells.get(i) else {
            let parts = GroupoidParts {
                sigma: self.sigma.to_vec(),
                tau: self.tau.to_vec(),
                upsilon: Some(self.upsilon.to_vec()),
                mu: self.mu.clone(),
            };
            let candidate = FiniteGroupoid::from_parts(parts).expect("in-range by construction");
            if validate_groupoid(&candidate).map(|r| r.is_valid()).unwrap_or(false) {
                out.push(candidate);
            }
            return;
        };
        if self.get(g, f).is_some() {
            return self.run(i + 1, out);
        }
        let n = self.n;
        let options = self.hom[self.sigma[f] * n + self.tau[g]].clone();
        for h in options {
            if self.set(g, f, h) {
                self.run(i + 1, out);
                self.unset(g, f, h);
            }
        }
    }
}

fn fill_compositions(
    sigma: &[usize],
    tau: &[usize],
    upsilon: &[usize],
    out: &mut Vec<FiniteGroupoid>,
) {
    let n = sigma.len();
    let mut by_target = vec![Vec::new(); n];
    let mut by_source = vec![Vec::new(); n];
    let mut hom = vec![Vec::new(); n * n];
    for x in 0..n {
        by_target[tau[x]].push(x);
        by_source[sigma[x]].push(x);
        hom[sigma[x] * n + tau[x]].push(x);
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|g| by_target[sigma[g]].iter().map(move |&f| (g, f)))
        .collect();
    let mut search = TableSearch {
        n,
        sigma,
        tau,
        upsilon,
        mu: vec![None; n * n],
        row_used: vec![0; n],
        col_used: vec![0; n],
        cells,
        by_target,
        by_source,
        hom,
    };
    for f in 0..n {
        let forced = [
            (f, sigma[f], f),
            (tau[f], f, f),
            (f, upsilon[f], tau[f]),
            (upsilon[f], f, sigma[f]),
        ];
        for (a, b, c) in forced {
            if !search.set(a, b, c) {
                return;
            }
        }
    }
    search.run(0, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_groupoids(n, DEFAULT_LIMIT).unwrap().count_up_to_iso)
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7]);
    }

    #[test]
    fn limit_is_enforced() {
        assert!(matches!(enumerate_groupoids(7, DEFAULT_LIMIT), Err(Error::ResourceLimit(_))));
        assert!(enumerate_groupoids(3, 2).is_err());
    }

    #[test]
    fn retractions_fix_the_base() {
        let r = retractions(3, &[0, 2], &[1]);
        assert_eq!(r, vec![vec![0, 0, 2], vec![0, 2, 2]]);
    }
}
