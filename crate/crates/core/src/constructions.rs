//! Canonical groupoid families: pair groupoids, groups, partial bijections,
//! disjoint unions and products.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groupoid::{require_groupoid, FiniteGroupoid};
use crate::report::{AxiomId, ValidationReport};

/// Carrier budget for [`partial_bijection_groupoid`].
pub const DEFAULT_CARRIER_LIMIT: usize = 4096;

/// Multiplication table of a finite group, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    k: usize,
    table: Vec<usize>,
    unit: usize,
}

impl CayleyTable {
    /// Shape and range checks only; group axioms are checked by [`CayleyTable::validate`].
    pub fn new(rows: Vec<Vec<usize>>, unit: usize) -> Result<CayleyTable> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::malformed("table", "a group needs at least one element"));
        }
        if unit >= k {
            return Err(Error::malformed("unit", format!("{unit} out of range 0..{k}")));
        }
        let mut table = Vec::with_capacity(k * k);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != k {
                return Err(Error::malformed("table", format!("row {i} has length {}", row.len())));
            }
            if let Some(v) = row.iter().find(|&&v| v >= k) {
                return Err(Error::malformed("table", format!("entry {v} in row {i} out of range")));
            }
            table.extend(row);
        }
        Ok(CayleyTable { k, table, unit })
    }

    fn from_fn(k: usize, unit: usize, op: impl Fn(usize, usize) -> usize) -> CayleyTable {
        let table = (0..k * k).map(|i| op(i / k, i % k)).collect();
        CayleyTable { k, table, unit }
    }

    pub fn trivial() -> CayleyTable {
        CayleyTable::cyclic(1)
    }

    pub fn cyclic(k: usize) -> CayleyTable {
        assert!(k > 0);
        CayleyTable::from_fn(k, 0, |a, b| (a + b) % k)
    }

    /// Z/2 × Z/2, with `(a, b)` encoded as `2a + b`.
    pub fn klein_four() -> CayleyTable {
        CayleyTable::direct_product(&CayleyTable::cyclic(2), &CayleyTable::cyclic(2))
    }

    /// Dihedral group of order `2m`; `r^i s^j` is encoded as `i + m j`.
    pub fn dihedral(m: usize) -> CayleyTable {
        assert!(m > 0);
        CayleyTable::from_fn(2 * m, 0, |x, y| {
            let (a, b) = (x % m, x / m);
            let (c, d) = (y % m, y / m);
            let rot = if b == 0 { (a + c) % m } else { (a + m - c) % m };
            rot + m * ((b + d) % 2)
        })
    }

    /// Quaternion group: `±1, ±i, ±j, ±k` encoded as `unit + 4 * negative`.
    pub fn quaternion() -> CayleyTable {
        // Products of the units 1, i, j, k as (sign flip, unit).
        const UNITS: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        CayleyTable::from_fn(8, 0, |x, y| {
            let (flip, u) = UNITS[x % 4][y % 4];
            u + 4 * ((x / 4 + y / 4 + flip) % 2)
        })
    }

    /// `(a, b)` is encoded as `a * |B| + b`.
    pub fn direct_product(a: &CayleyTable, b: &CayleyTable) -> CayleyTable {
        let kb = b.k;
        CayleyTable::from_fn(a.k * kb, a.unit * kb + b.unit, |x, y| {
            a.mul(x / kb, y / kb) * kb + b.mul(x % kb, y % kb)
        })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.k + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.k).map(|r| r.to_vec()).collect()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.k).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let k = self.k;
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    let (l, rr) = (self.mul(self.mul(a, b), c), self.mul(a, self.mul(b, c)));
                    r.check(l == rr, AxiomId::Grp1, || format!("({a}{b}){c}={l}, {a}({b}{c})={rr}"));
                }
            }
            let e = self.unit;
            r.check(self.mul(a, e) == a && self.mul(e, a) == a, AxiomId::Grp2, || {
                format!("a={a}: ae={}, ea={}", self.mul(a, e), self.mul(e, a))
            });
            r.check(self.inverse(a).is_some(), AxiomId::Grp3, || format!("a={a} has no inverse"));
        }
        r
    }
}

/// All ordered pairs `(a, b)` over `[0..k)`, encoded as `a k + b`.
/// `(a, b)` is the arrow from `b` to `a`.
pub fn pair_groupoid(k: usize) -> Result<FiniteGroupoid> {
    if k == 0 {
        return Err(Error::Precondition(
            "pair groupoid needs k ≥ 1; use FiniteGroupoid::empty() for the empty groupoid".into(),
        ));
    }
    let enc = |a: usize, b: usize| a * k + b;
    let n = k * k;
    let sigma = (0..n).map(|x| enc(x % k, x % k)).collect();
    let tau = (0..n).map(|x| enc(x / k, x / k)).collect();
    let upsilon = (0..n).map(|x| enc(x % k, x / k)).collect();
    FiniteGroupoid::from_fn(sigma, tau, Some(upsilon), |g, f| {
        (g % k == f / k).then(|| enc(g / k, f % k))
    })
}

pub fn group_groupoid(t: &CayleyTable) -> Result<FiniteGroupoid> {
    t.validate().into_result("Cayley table")?;
    let k = t.order();
    let upsilon = (0..k).map(|a| t.inverse(a).expect("validated")).collect();
    FiniteGroupoid::from_fn(vec![t.unit; k], vec![t.unit; k], Some(upsilon), |a, b| {
        Some(t.mul(a, b))
    })
}

/// Tagged union: elements of `g2` are shifted by `|g1|`.
pub fn disjoint_union(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> Result<FiniteGroupoid> {
    require_groupoid(g1)?;
    require_groupoid(g2)?;
    let off = g1.n();
    let n = off + g2.n();
    let lift = |x: usize| -> (bool, usize) { (x >= off, if x >= off { x - off } else { x }) };
    let map = |f1: &dyn Fn(usize) -> usize, f2: &dyn Fn(usize) -> usize| -> Vec<usize> {
        (0..n)
            .map(|x| match lift(x) {
                (false, y) => f1(y),
                (true, y) => f2(y) + off,
            })
            .collect()
    };
    let sigma = map(&|x| g1.sigma(x), &|x| g2.sigma(x));
    let tau = map(&|x| g1.tau(x), &|x| g2.tau(x));
    let upsilon = map(&|x| g1.upsilon(x), &|x| g2.upsilon(x));
    FiniteGroupoid::from_fn(sigma, tau, Some(upsilon), |a, b| match (lift(a), lift(b)) {
        ((false, x), (false, y)) => g1.mu(x, y),
        ((true, x), (true, y)) => g2.mu(x, y).map(|z| z + off),
        _ => None,
    })
}

/// Componentwise product; `(a, b)` is encoded as `a |g2| + b`.
pub fn product_groupoid(g1: &FiniteGroupoid, g2: &FiniteGroupoid) -> Result<FiniteGroupoid> {
    require_groupoid(g1)?;
    require_groupoid(g2)?;
    let m = g2.n();
    let n = g1.n() * m;
    let pair = |f1: &dyn Fn(usize) -> usize, f2: &dyn Fn(usize) -> usize| -> Vec<usize> {
        (0..n).map(|x| f1(x / m) * m + f2(x % m)).collect()
    };
    let sigma = pair(&|x| g1.sigma(x), &|x| g2.sigma(x));
    let tau = pair(&|x| g1.tau(x), &|x| g2.tau(x));
    let upsilon = pair(&|x| g1.upsilon(x), &|x| g2.upsilon(x));
    FiniteGroupoid::from_fn(sigma, tau, Some(upsilon), |a, b| {
        let x = g1.mu(a / m, b / m)?;
        let y = g2.mu(a % m, b % m)?;
        Some(x * m + y)
    })
}

/// Number of partial bijections of a `k`-set: `Σ_j C(k,j)² j!`.
pub fn partial_bijection_count(k: usize) -> Option<usize> {
    let mut total: usize = 0;
    for j in 0..=k {
        let c = binomial(k, j)?;
        let fact = (1..=j).try_fold(1usize, |acc, x| acc.checked_mul(x))?;
        total = total.checked_add(c.checked_mul(c)?.checked_mul(fact)?)?;
    }
    Some(total)
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    (0..k).try_fold(1usize, |acc, i| Some(acc.checked_mul(n - i)? / (i + 1)))
}

/// A partial bijection of `[0..k)`: `map[x] = Some(y)` on the domain.
type PartialMap = Vec<Option<usize>>;

fn bijections(dom: &[usize], img: &[usize]) -> Vec<PartialMap> {
    // Lexicographic order of (f(d_0), f(d_1), ...) for ascending d_i.
    fn go(dom: &[usize], free: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == dom.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..free.len() {
            let y = free.remove(i);
            cur.push(y);
            go(dom, free, cur, out);
            cur.pop();
            free.insert(i, y);
        }
    }
    let mut images = Vec::new();
    go(dom, &mut img.to_vec(), &mut Vec::new(), &mut images);
    let k = dom.iter().chain(img).max().map_or(0, |m| m + 1);
    images
        .into_iter()
        .map(|ys| {
            let mut f = vec![None; k];
            for (&d, y) in dom.iter().zip(ys) {
                f[d] = Some(y);
            }
            f
        })
        .collect()
}

/// The groupoid of all bijections between subsets of `[0..k)`.
///
/// Carrier order: domain subsets in binary-counter order, then image
/// subsets in binary-counter order, then bijections in lexicographic order
/// of their graphs. `μ(g, f) = g ∘ f` is defined iff `dom g = im f`.
pub fn partial_bijection_groupoid(k: usize, carrier_limit: usize) -> Result<FiniteGroupoid> {
    let count = partial_bijection_count(k).filter(|&c| c <= carrier_limit).ok_or_else(|| {
        Error::ResourceLimit(format!(
            "partial bijections on {k} points exceed the carrier limit {carrier_limit}"
        ))
    })?;
    let subset = |mask: usize| -> Vec<usize> { (0..k).filter(|i| mask >> i & 1 == 1).collect() };
    let mut elems: Vec<PartialMap> = Vec::with_capacity(count);
    for dmask in 0..1usize << k {
        for imask in 0..1usize << k {
            if dmask.count_ones() != imask.count_ones() {
                continue;
            }
            for mut f in bijections(&subset(dmask), &subset(imask)) {
                f.resize(k, None);
                elems.push(f);
            }
        }
    }
    debug_assert_eq!(elems.len(), count);
    let index: HashMap<PartialMap, usize> =
        elems.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let id_on = |mask: Vec<bool>| -> usize {
        let f: PartialMap = mask.iter().enumerate().map(|(i, &b)| b.then_some(i)).collect();
        index[&f]
    };
    let dom_mask = |f: &PartialMap| -> Vec<bool> { f.iter().map(Option::is_some).collect() };
    let img_mask = |f: &PartialMap| -> Vec<bool> {
        let mut m = vec![false; k];
        f.iter().flatten().for_each(|&y| m[y] = true);
        m
    };
    let sigma = elems.iter().map(|f| id_on(dom_mask(f))).collect();
    let tau = elems.iter().map(|f| id_on(img_mask(f))).collect();
    let upsilon = elems
        .iter()
        .map(|f| {
            let mut inv = vec![None; k];
            for (x, y) in f.iter().enumerate() {
                if let Some(y) = *y {
                    inv[y] = Some(x);
                }
            }
            index[&inv]
        })
        .collect();
    FiniteGroupoid::from_fn(sigma, tau, Some(upsilon), |g, f| {
        let (gm, fm) = (&elems[g], &elems[f]);
        if dom_mask(gm) != img_mask(fm) {
            return None;
        }
        let comp: PartialMap = fm.iter().map(|y| y.and_then(|y| gm[y])).collect();
        Some(index[&comp])
    })
}
