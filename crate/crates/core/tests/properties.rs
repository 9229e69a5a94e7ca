mod oracle;

use std::sync::OnceLock;

use groupoid_core::format::{groupoid_from_json, groupoid_to_json};
use groupoid_core::{
    are_isomorphic, canonical_form, check_hom, enumerate_groupoids, enumerate_labeled, from_classical,
    group_groupoid, invariant_vector, pair_groupoid, partial_bijection_groupoid, to_classical,
    validate_groupoid, AxiomId, CayleyTable, FiniteGroupoid, GroupoidHom,
};
use proptest::prelude::*;

fn fixtures() -> &'static [FiniteGroupoid] {
    static CELL: OnceLock<Vec<FiniteGroupoid>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v: Vec<FiniteGroupoid> = (0..=4).flat_map(|n| enumerate_labeled(n, 6).unwrap()).collect();
        v.push(pair_groupoid(3).unwrap());
        v.push(group_groupoid(&CayleyTable::dihedral(3)).unwrap());
        v.push(group_groupoid(&CayleyTable::quaternion()).unwrap());
        v.push(partial_bijection_groupoid(2, 100).unwrap());
        v
    })
}

fn small_reps() -> &'static [FiniteGroupoid] {
    static CELL: OnceLock<Vec<FiniteGroupoid>> = OnceLock::new();
    CELL.get_or_init(|| (1..=3).flat_map(|n| enumerate_groupoids(n, 6).unwrap().representatives).collect())
}

fn groupoid_and_perm() -> impl Strategy<Value = (FiniteGroupoid, Vec<usize>)> {
    (0..fixtures().len()).prop_flat_map(|i| {
        let g = fixtures()[i].clone();
        let perm = Just((0..g.n()).collect::<Vec<usize>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn relabeling_preserves_everything((g, perm) in groupoid_and_perm()) {
        let h = g.relabel(&perm);
        prop_assert!(validate_groupoid(&h).unwrap().is_valid());
        prop_assert_eq!(invariant_vector(&g), invariant_vector(&h));
        let iso = are_isomorphic(&g, &h);
        prop_assert!(iso.is_some());
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn derived_identities_hold((g, _) in groupoid_and_perm()) {
        let n = g.n();
        for x in 0..n {
            prop_assert_eq!(g.sigma(g.sigma(x)), g.sigma(x));
            prop_assert_eq!(g.tau(g.tau(x)), g.tau(x));
            prop_assert_eq!(g.sigma(g.upsilon(x)), g.tau(x));
        }
        // Left translation by g is a bijection from arrows ending at Σg
        // onto arrows ending at Tg.
        for x in 0..n {
            let mut image: Vec<usize> = (0..n)
                .filter(|&f| g.tau(f) == g.sigma(x))
                .map(|f| g.mu(x, f).unwrap())
                .collect();
            image.sort_unstable();
            let target: Vec<usize> = (0..n).filter(|&h| g.tau(h) == g.tau(x)).collect();
            prop_assert_eq!(image, target);
        }
    }

    #[test]
    fn classical_round_trip((g, perm) in groupoid_and_perm()) {
        let g = g.relabel(&perm);
        let c = to_classical(&g).unwrap();
        prop_assert!(c.validate().unwrap().is_valid());
        let back = from_classical(&c).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_classical(&back).unwrap(), c);
    }

    #[test]
    fn file_round_trip((g, perm) in groupoid_and_perm()) {
        let g = g.relabel(&perm);
        let text = groupoid_to_json(&g);
        prop_assert!(text.ends_with('\n'));
        prop_assert_eq!(groupoid_from_json(&text).unwrap(), g);
    }

    #[test]
    fn checker_agrees_with_reference_on_mutations(
        (g, _) in groupoid_and_perm(),
        which in 0usize..4,
        pos in any::<prop::sample::Index>(),
        value in any::<prop::sample::Index>(),
    ) {
        prop_assume!(g.n() > 0);
        let n = g.n();
        let mut p = g.to_parts();
        let v = value.index(n + 1);
        match which {
            0 => p.sigma[pos.index(n)] = v % n,
            1 => p.tau[pos.index(n)] = v % n,
            2 => p.upsilon.as_mut().unwrap()[pos.index(n)] = v % n,
            _ => p.mu[pos.index(n * n)] = (v < n).then_some(v),
        }
        let reference = oracle::lawful(&p);
        let h = FiniteGroupoid::from_parts(p).unwrap();
        let r = validate_groupoid(&h).unwrap();
        prop_assert_eq!(r.is_valid(), reference, "{:?}", r.violations);
        prop_assert!(!r.has_soundness_bug());
    }

    #[test]
    fn hom_squares_imply_inversion_square(
        i in 0usize..small_reps().len(),
        j in 0usize..small_reps().len(),
        raw in prop::collection::vec(any::<prop::sample::Index>(), 3),
    ) {
        let (g, k) = (&small_reps()[i], &small_reps()[j]);
        let map: Vec<usize> = (0..g.n()).map(|x| raw[x].index(k.n())).collect();
        let r = check_hom(&GroupoidHom::new(g, k, map.clone())).unwrap();
        let primitive = [AxiomId::H1, AxiomId::H2, AxiomId::H3].iter().all(|&a| !r.has(a));
        if primitive {
            prop_assert!(r.is_valid(), "{:?}", r.violations);
            for x in 0..g.n() {
                prop_assert_eq!(map[g.upsilon(x)], k.upsilon(map[x]));
            }
        }
    }
}

#[test]
fn every_map_between_small_representatives() {
    // Exhaustive version of the property above for n ≤ 3.
    let reps = small_reps();
    let mut homs = 0;
    for g in reps {
        for k in reps {
            let total = k.n().pow(g.n() as u32);
            for code in 0..total {
                let map: Vec<usize> = (0..g.n()).map(|x| code / k.n().pow(x as u32) % k.n()).collect();
                let r = check_hom(&GroupoidHom::new(g, k, map)).unwrap();
                if ![AxiomId::H1, AxiomId::H2, AxiomId::H3].iter().any(|&a| r.has(a)) {
                    assert!(r.is_valid());
                    homs += 1;
                }
            }
        }
    }
    assert!(homs > reps.len());
}
