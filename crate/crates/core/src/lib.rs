//! Finite internal groupoids in one-object form.

pub mod actions;
pub mod algebra;
pub mod classical;
pub mod cogroupoid;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod format;
pub mod groupoid;
pub mod hom;
pub mod iso;
pub mod linalg;
pub mod report;

pub use classical::{from_classical, to_classical, ClassicalPresentation};
pub use constructions::{
    disjoint_union, group_groupoid, pair_groupoid, partial_bijection_groupoid, product_groupoid,
    CayleyTable,
};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use groupoid::{
    base, is_group_object, validate_category, validate_groupoid, FiniteGroupoid, GroupoidParts,
};
pub use hom::{check_hom, GroupoidHom};
pub use report::{AxiomId, ValidationReport, Violation};
pub use enumerate::{enumerate_groupoids, enumerate_labeled, IsoClassSummary};
pub use iso::{are_isomorphic, canonical_form, connected_components, invariant_vector, Component};
pub use algebra::{
    build_abelian_extension, split_projection, structure_theorem_check, validate_algebra_groupoid,
    AlgebraGroupoidObject, Bimodule, FiniteDimAlgebra, StructureReport,
};
pub use linalg::Matrix;
pub use cogroupoid::{
    check_hopf, cobase, cogroupoid_from_hopf, dualize_groupoid, hopf_check, pushout,
    validate_cogroupoid, Cogroupoid, CommAlgebra, HopfPresentation, Pushout,
};
pub use actions::{
    action_groupoid, orbits, self_action, validate_action, validate_right_action, FiniteAction,
    RightAction,
};
