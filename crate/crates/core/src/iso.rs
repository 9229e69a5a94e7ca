//! Isomorphism search, canonical forms and connected components.

use crate::groupoid::{require_groupoid, FiniteGroupoid};
use crate::Result;

/// Per-element invariant used to prune the bijection search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct ElementSignature {
    is_identity: bool,
    /// Number of composable partners on the right, i.e. `|{f : Tf = Σg}|`.
    right_degree: usize,
    /// Number of composable partners on the left.
    left_degree: usize,
    /// Order under μ when `Σg = Tg` (a loop), otherwise 0.
    loop_order: usize,
    /// Number of arrows sharing both endpoints with this one.
    parallel: usize,
    is_involution_fixed: bool,
}

fn signatures(g: &FiniteGroupoid) -> Vec<ElementSignature> {
    let n = g.n();
    let by_target = g.by_target();
    let by_source = g.by_source();
    (0..n)
        .map(|x| {
            let loop_order = if g.sigma(x) == g.tau(x) {
                let id = g.sigma(x);
                let mut p = x;
                let mut k = 1;
                while p != id && k <= n {
                    match g.mu(x, p) {
                        Some(q) => p = q,
                        None => break,
                    }
                    k += 1;
                }
                k
            } else {
                0
            };
            ElementSignature {
                is_identity: g.sigma(x) == x,
                right_degree: by_target[g.sigma(x)].len(),
                left_degree: by_source[g.tau(x)].len(),
                loop_order,
                parallel: (0..n)
                    .filter(|&y| g.sigma(y) == g.sigma(x) && g.tau(y) == g.tau(x))
                    .count(),
                is_involution_fixed: g.upsilon_map().is_some_and(|u| u[x] == x),
            }
        })
        .collect()
}

/// Isomorphism-invariant summary: carrier size, base size, Σ-fiber size
/// multiset and the sorted element signatures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantVector {
    n: usize,
    base_size: usize,
    fiber_sizes: Vec<usize>,
    signatures: Vec<ElementSignature>,
}

pub fn invariant_vector(g: &FiniteGroupoid) -> InvariantVector {
    let by_source = g.by_source();
    let mut fiber_sizes: Vec<usize> =
        g.identities().iter().map(|&x| by_source[x].len()).collect();
    fiber_sizes.sort_unstable();
    let mut signatures = signatures(g);
    signatures.sort();
    InvariantVector { n: g.n(), base_size: g.identities().len(), fiber_sizes, signatures }
}

/// Searches for a bijection `p` with `p` an isomorphism `g1 → g2`
/// (`p[x]` is the image of `x`). Inputs are assumed lawful; the search
/// itself checks every structure map, so a returned map is always a
/// structure-preserving bijection.
pub fn are_isomorphic(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> Option<Vec<usize>> {
    if g1.n() != g2.n() || g1.has_inversion() != g2.has_inversion() {
        return None;
    }
    if invariant_vector(g1) != invariant_vector(g2) {
        return None;
    }
    let s1 = signatures(g1);
    let s2 = signatures(g2);
    let n = g1.n();
    // Identities first so Σ/T images are forced early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (!s1[x].is_identity, x));
    let mut fwd = vec![usize::MAX; n];
    let mut back = vec![usize::MAX; n];
    if search(g1, g2, &s1, &s2, &order, 0, &mut fwd, &mut back) {
        Some(fwd)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    g1: &FiniteGroupoid,
    g2: &FiniteGroupoid,
    s1: &[ElementSignature],
    s2: &[ElementSignature],
    order: &[usize],
    depth: usize,
    fwd: &mut [usize],
    back: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    if fwd[x] != usize::MAX {
        return search(g1, g2, s1, s2, order, depth + 1, fwd, back);
    }
    for y in 0..g2.n() {
        if back[y] != usize::MAX || s1[x] != s2[y] {
            continue;
        }
        let mut assigned = Vec::new();
        if assign(g1, g2, x, y, fwd, back, &mut assigned)
            && search(g1, g2, s1, s2, order, depth + 1, fwd, back)
        {
            return true;
        }
        for a in assigned {
            back[fwd[a]] = usize::MAX;
            fwd[a] = usize::MAX;
        }
    }
    false
}

/// Assigns `x ↦ y` and propagates forced images through Σ, T, Υ and μ.
/// Records every new assignment in `assigned` so the caller can undo it.
fn assign(
    g1: &FiniteGroupoid,
    g2: &FiniteGroupoid,
    x: usize,
    y: usize,
    fwd: &mut [usize],
    back: &mut [usize],
    assigned: &mut Vec<usize>,
) -> bool {
    let mut queue = vec![(x, y)];
    while let Some((a, b)) = queue.pop() {
        if fwd[a] != usize::MAX || back[b] != usize::MAX {
            if fwd[a] != b || back[b] != a {
                return false;
            }
            continue;
        }
        fwd[a] = b;
        back[b] = a;
        assigned.push(a);
        queue.push((g1.sigma(a), g2.sigma(b)));
        queue.push((g1.tau(a), g2.tau(b)));
        if let (Some(u1), Some(u2)) = (g1.upsilon_map(), g2.upsilon_map()) {
            queue.push((u1[a], u2[b]));
        }
        // Check μ against every already-mapped partner.
        for (c, &d) in fwd.iter().enumerate() {
            if d == usize::MAX {
                continue;
            }
            for (p, q, pp, qq) in [(a, c, b, d), (c, a, d, b)] {
                match (g1.mu(p, q), g2.mu(pp, qq)) {
                    (None, None) => {}
                    (Some(r1), Some(r2)) => queue.push((r1, r2)),
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Lexicographically least encoding over all carrier permutations.
///
/// Exhaustive over all `n!` permutations; intended for `n ≤ 6`.
pub fn canonical_form(g: &FiniteGroupoid) -> FiniteGroupoid {
    let n = g.n();
    let mut best: Option<(Vec<i64>, FiniteGroupoid)> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let h = g.relabel(p);
        let e = h.encode();
        if best.as_ref().is_none_or(|(b, _)| e < *b) {
            best = Some((e, h));
        }
    });
    best.map(|(_, h)| h).unwrap_or_else(FiniteGroupoid::empty)
}

fn permute(p: &mut Vec<usize>, k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// A connected component: its base points, its morphisms (ascending) and
/// the induced groupoid relabelled onto `[0..|morphisms|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub base: Vec<usize>,
    pub morphisms: Vec<usize>,
    pub groupoid: FiniteGroupoid,
}

impl Component {
    /// Order of the vertex group at the first base point.
    pub fn vertex_group_order(&self) -> usize {
        let x = self.base[0];
        self.morphisms
            .iter()
            .filter(|&&f| self.groupoid_sigma(f) == x && self.groupoid_tau(f) == x)
            .count()
    }

    fn groupoid_sigma(&self, f: usize) -> usize {
        let local = self.morphisms.binary_search(&f).expect("member");
        self.morphisms[self.groupoid.sigma(local)]
    }

    fn groupoid_tau(&self, f: usize) -> usize {
        let local = self.morphisms.binary_search(&f).expect("member");
        self.morphisms[self.groupoid.tau(local)]
    }
}

/// Partition of the base by `x ~ y` iff some arrow goes from `x` to `y`,
/// ordered by least base point.
pub fn connected_components(g: &FiniteGroupoid) -> Result<Vec<Component>> {
    require_groupoid(g)?;
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for f in 0..n {
        let (a, b) = (find(&mut parent, g.sigma(f)), find(&mut parent, g.tau(f)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut out: Vec<Component> = Vec::new();
    for x in g.identities() {
        let root = find(&mut parent, x);
        if root != x {
            continue;
        }
        let base: Vec<usize> =
            g.identities().into_iter().filter(|&y| find(&mut parent, y) == root).collect();
        let morphisms: Vec<usize> =
            (0..n).filter(|&f| find(&mut parent, g.sigma(f)) == root).collect();
        let local = |f: usize| morphisms.binary_search(&f).expect("closed under structure maps");
        let sub = FiniteGroupoid::from_fn(
            morphisms.iter().map(|&f| local(g.sigma(f))).collect(),
            morphisms.iter().map(|&f| local(g.tau(f))).collect(),
            Some(morphisms.iter().map(|&f| local(g.upsilon(f))).collect()),
            |a, b| g.mu(morphisms[a], morphisms[b]).map(local),
        )?;
        out.push(Component { base, morphisms, groupoid: sub });
    }
    Ok(out)
}
