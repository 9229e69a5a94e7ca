use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::report::{AxiomId, ValidationReport};

/// A carrier map between two groupoids, not yet known to be a homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidHom<'a> {
    pub domain: &'a FiniteGroupoid,
    pub codomain: &'a FiniteGroupoid,
    pub map: Vec<usize>,
}

impl<'a> GroupoidHom<'a> {
    pub fn new(domain: &'a FiniteGroupoid, codomain: &'a FiniteGroupoid, map: Vec<usize>) -> Self {
        GroupoidHom { domain, codomain, map }
    }
}

/// Checks the three defining squares (`H1`..`H3`) and, as derived
/// identities, that `F × F` preserves composability (`D4`) and that `F`
/// commutes with inversion (`D3`).
pub fn check_hom(h: &GroupoidHom<'_>) -> Result<ValidationReport> {
    let (g, k, f) = (h.domain, h.codomain, &h.map);
    if f.len() != g.n() {
        return Err(Error::malformed(
            "map",
            format!("length {} but domain carrier has {} elements", f.len(), g.n()),
        ));
    }
    if let Some(&v) = f.iter().find(|&&v| v >= k.n()) {
        return Err(Error::malformed("map", format!("value {v} outside codomain 0..{}", k.n())));
    }
    let mut r = ValidationReport::new();
    for x in 0..g.n() {
        r.check(f[g.sigma(x)] == k.sigma(f[x]), AxiomId::H1, || {
            format!("x={x}: FΣx={}, ΣFx={}", f[g.sigma(x)], k.sigma(f[x]))
        });
        r.check(f[g.tau(x)] == k.tau(f[x]), AxiomId::H2, || {
            format!("x={x}: FTx={}, TFx={}", f[g.tau(x)], k.tau(f[x]))
        });
    }
    for (a, b) in g.composable_pairs() {
        let image_composable = k.is_composable(f[a], f[b]);
        r.check(image_composable, AxiomId::D4, || {
            format!("({a},{b}) composable but ({},{}) is not", f[a], f[b])
        });
        if let (Some(ab), Some(fab)) = (g.mu(a, b), k.mu(f[a], f[b])) {
            r.check(f[ab] == fab, AxiomId::H3, || {
                format!("(g,f)=({a},{b}): F(μ(g,f))={}, μ(Fg,Ff)={fab}", f[ab])
            });
        }
    }
    if let (Some(ug), Some(uk)) = (g.upsilon_map(), k.upsilon_map()) {
        for x in 0..g.n() {
            r.check(f[ug[x]] == uk[f[x]], AxiomId::D3, || {
                format!("x={x}: FΥx={}, ΥFx={}", f[ug[x]], uk[f[x]])
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{group_groupoid, pair_groupoid, CayleyTable};

    #[test]
    fn identity_is_a_hom() {
        let g = pair_groupoid(3).unwrap();
        let id: Vec<usize> = (0..g.n()).collect();
        assert!(check_hom(&GroupoidHom::new(&g, &g, id)).unwrap().is_valid());
    }

    #[test]
    fn collapse_to_trivial_group() {
        let g = pair_groupoid(2).unwrap();
        let one = pair_groupoid(1).unwrap();
        assert!(check_hom(&GroupoidHom::new(&g, &one, vec![0; 4])).unwrap().is_valid());
    }

    #[test]
    fn swapping_z2_fails_the_source_square() {
        let z2 = group_groupoid(&CayleyTable::cyclic(2)).unwrap();
        let r = check_hom(&GroupoidHom::new(&z2, &z2, vec![1, 0])).unwrap();
        assert!(r.has(AxiomId::H1));
    }

    #[test]
    fn wrong_length_is_malformed() {
        let z2 = group_groupoid(&CayleyTable::cyclic(2)).unwrap();
        assert!(check_hom(&GroupoidHom::new(&z2, &z2, vec![0])).unwrap_err().is_input_error());
    }
}
