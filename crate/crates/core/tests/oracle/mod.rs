//! Reference implementations written straight from the definitions, sharing
//! no code with the library beyond the plain data types.

#![allow(dead_code)]

pub mod extensions;

use groupoid_core::{FiniteGroupoid, GroupoidParts};

/// Small category with inverses, in the usual two-sorted reading: objects
/// are the arrows fixed by `Σ`.
pub fn lawful(p: &GroupoidParts) -> bool {
    let n = p.sigma.len();
    let (s, t) = (&p.sigma, &p.tau);
    let Some(u) = &p.upsilon else { return false };
    let mu = |g: usize, f: usize| p.mu[g * n + f];
    for x in 0..n {
        // Sources and targets are objects, and objects are their own ends.
        if s[s[x]] != s[x] || t[s[x]] != s[x] || s[t[x]] != t[x] || t[t[x]] != t[x] {
            return false;
        }
    }
    for g in 0..n {
        for f in 0..n {
            match mu(g, f) {
                None if s[g] == t[f] => return false,
                Some(_) if s[g] != t[f] => return false,
                Some(h) if s[h] != s[f] || t[h] != t[g] => return false,
                _ => {}
            }
        }
        if mu(g, s[g]) != Some(g) || mu(t[g], g) != Some(g) {
            return false;
        }
    }
    for h in 0..n {
        for g in 0..n {
            let Some(hg) = mu(h, g) else { continue };
            for f in 0..n {
                let Some(gf) = mu(g, f) else { continue };
                if mu(hg, f) != mu(h, gf) {
                    return false;
                }
            }
        }
    }
    (0..n).all(|g| {
        let v = u[g];
        s[v] == t[g] && t[v] == s[g] && mu(g, v) == Some(t[g]) && mu(v, g) == Some(s[g])
    })
}

fn functions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every lawful structure on `[0..n)`, found by filtering all candidate
/// tables. Only sensible for `n ≤ 3`.
pub fn naive_labeled(n: usize) -> Vec<GroupoidParts> {
    let maps = functions(n);
    let mut found = Vec::new();
    for s in &maps {
        for t in &maps {
            let ends_ok = (0..n).all(|x| s[s[x]] == s[x] && t[s[x]] == s[x] && s[t[x]] == t[x]);
            if !ends_ok {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|g| (0..n).map(move |f| (g, f)))
                .filter(|&(g, f)| s[g] == t[f])
                .collect();
            for u in &maps {
                if !(0..n).all(|g| s[u[g]] == t[g] && t[u[g]] == s[g]) {
                    continue;
                }
                for values in functions_onto(pairs.len(), n) {
                    let mut mu = vec![None; n * n];
                    for (&(g, f), &h) in pairs.iter().zip(&values) {
                        mu[g * n + f] = Some(h);
                    }
                    let p = GroupoidParts { sigma: s.clone(), tau: t.clone(), upsilon: Some(u.clone()), mu };
                    if lawful(&p) {
                        found.push(p);
                    }
                }
            }
        }
    }
    found
}

/// All maps from a `len`-set to `[0..n)`.
fn functions_onto(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Least relabeled encoding over all `n!` permutations.
pub fn brute_canonical(p: &GroupoidParts) -> Vec<i64> {
    let n = p.sigma.len();
    let u = p.upsilon.as_ref().expect("inversion");
    permutations(n)
        .into_iter()
        .map(|pi| {
            let mut inv = vec![0; n];
            for (i, &x) in pi.iter().enumerate() {
                inv[x] = i;
            }
            let mut code = Vec::new();
            for map in [&p.sigma, &p.tau, u] {
                code.extend((0..n).map(|i| pi[map[inv[i]]] as i64));
            }
            for g in 0..n {
                for f in 0..n {
                    code.push(p.mu[inv[g] * n + inv[f]].map_or(-1, |h| pi[h] as i64));
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

pub fn brute_class_count(all: &[GroupoidParts]) -> usize {
    let mut codes: Vec<Vec<i64>> = all.iter().map(brute_canonical).collect();
    codes.sort();
    codes.dedup();
    codes.len()
}

/// Number of groups of each order below 13.
const GROUPS_OF_ORDER: [usize; 13] = [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];

/// Isomorphism classes of groupoids with `n` arrows counted from the
/// classification: a connected groupoid on `k` objects with vertex group
/// `H` has `k²|H|` arrows, and a groupoid is a multiset of connected ones.
pub fn structural_class_count(n: usize) -> usize {
    assert!(n < GROUPS_OF_ORDER.len());
    let mut ways = vec![0usize; n + 1];
    ways[0] = 1;
    for size in 1..=n {
        let kinds: usize = (1..=size)
            .filter(|k| size % (k * k) == 0)
            .map(|k| GROUPS_OF_ORDER[size / (k * k)])
            .sum();
        for _ in 0..kinds {
            for total in size..=n {
                ways[total] += ways[total - size];
            }
        }
    }
    ways[n]
}

/// Classical left action of a group given by its multiplication table.
pub fn is_group_action(mul: &[Vec<usize>], unit: usize, act: &[Vec<usize>]) -> bool {
    let k = mul.len();
    let m = act.first().map_or(0, Vec::len);
    (0..m).all(|x| act[unit][x] == x)
        && (0..k).all(|g| (0..k).all(|h| (0..m).all(|x| act[mul[g][h]][x] == act[g][act[h][x]])))
}

pub fn parts(g: &FiniteGroupoid) -> GroupoidParts {
    g.to_parts()
}
