//! Seeded random abelian-extension inputs: an algebra `H` of dimension at
//! most 3 from a small catalogue, written in a random basis, and an
//! `H`-bimodule of dimension at most 3.

use groupoid_core::linalg::Vector;
use groupoid_core::{Bimodule, Field, FiniteDimAlgebra, Matrix, Scalar};
use rand::Rng;

/// A catalogue algebra with its characters `H → k` (rows of values on the
/// basis). The zero map is always a character.
struct Entry {
    algebra: FiniteDimAlgebra,
    characters: Vec<Vec<i64>>,
}

fn unit_vec(f: Field, d: usize, k: usize) -> Vector {
    (0..d).map(|i| if i == k { f.one() } else { f.zero() }).collect()
}

fn catalogue(f: Field) -> Vec<Entry> {
    let zero = |d: usize| vec![0; d];
    let upper = FiniteDimAlgebra::from_fn(f, 3, |i, j| match (i, j) {
        // e11, e12, e22
        (0, 0) => unit_vec(f, 3, 0),
        (0, 1) | (1, 2) => unit_vec(f, 3, 1),
        (2, 2) => unit_vec(f, 3, 2),
        _ => vec![f.zero(); 3],
    });
    vec![
        Entry { algebra: FiniteDimAlgebra::diagonal(f, 1), characters: vec![vec![1], zero(1)] },
        Entry { algebra: FiniteDimAlgebra::zero_algebra(f, 1), characters: vec![zero(1)] },
        Entry { algebra: FiniteDimAlgebra::diagonal(f, 2), characters: vec![vec![1, 0], vec![0, 1], zero(2)] },
        Entry { algebra: FiniteDimAlgebra::truncated_polynomials(f, 2), characters: vec![vec![1, 0], zero(2)] },
        Entry {
            algebra: FiniteDimAlgebra::diagonal(f, 3),
            characters: vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], zero(3)],
        },
        Entry { algebra: FiniteDimAlgebra::truncated_polynomials(f, 3), characters: vec![vec![1, 0, 0], zero(3)] },
        Entry { algebra: upper, characters: vec![vec![1, 0, 0], vec![0, 0, 1], zero(3)] },
    ]
}

fn random_invertible(f: Field, d: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..d).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_i64(f, &refs);
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Matrices for the new basis `b_j = Σ_i P_ij e_i`.
fn rebase(mats: &[Matrix], p: &Matrix, dim: usize, f: Field) -> Vec<Matrix> {
    (0..p.cols())
        .map(|j| {
            let mut acc = Matrix::zeros(f, dim, dim);
            for (i, m) in mats.iter().enumerate() {
                let c: Scalar = p.get(i, j).clone();
                if !c.is_zero() {
                    acc = &acc + &m.scale(&c);
                }
            }
            acc
        })
        .collect()
}

pub struct ExtensionInput {
    pub h: FiniteDimAlgebra,
    pub n: Bimodule,
    pub label: String,
}

pub fn random_extension(f: Field, rng: &mut impl Rng) -> ExtensionInput {
    let cat = catalogue(f);
    let idx = rng.gen_range(0..cat.len());
    let entry = &cat[idx];
    let h0 = &entry.algebra;
    let d = h0.dim();
    let (n0, kind) = if d <= 3 && rng.gen_bool(0.25) {
        (Bimodule::regular(h0), "regular")
    } else {
        let dn = rng.gen_range(1..=3);
        let pick = |rng: &mut dyn rand::RngCore| entry.characters[rng.gen_range(0..entry.characters.len())].clone();
        let pairs: Vec<(Vec<i64>, Vec<i64>)> = (0..dn).map(|_| (pick(rng), pick(rng))).collect();
        let diag = |side: usize, basis: usize| {
            let vals: Vec<i64> = pairs.iter().map(|(l, r)| if side == 0 { l[basis] } else { r[basis] }).collect();
            let mut m = Matrix::zeros(f, dn, dn);
            for (a, &v) in vals.iter().enumerate() {
                m.set(a, a, f.from_i64(v));
            }
            m
        };
        let left = (0..d).map(|i| diag(0, i)).collect();
        let right = (0..d).map(|i| diag(1, i)).collect();
        (Bimodule { dim: dn, left, right }, "characters")
    };
    let p = random_invertible(f, d, rng);
    let h = h0.change_basis(&p).expect("invertible");
    let n = Bimodule {
        dim: n0.dim,
        left: rebase(&n0.left, &p, n0.dim, f),
        right: rebase(&n0.right, &p, n0.dim, f),
    };
    ExtensionInput { h, n, label: format!("catalogue #{idx}, {kind}, dim N = {}", n0.dim) }
}
