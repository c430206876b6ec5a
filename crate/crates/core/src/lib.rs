//! Finite simplicial sets, the simplicial enrichment of their category, and a
//! verification harness that machine-checks the cylinder/path structure laws
//! (uniqueness, functoriality, naturality, adjunctions) on finite fixtures.

pub mod axioms;
pub mod ctx;
pub mod cylinder;
pub mod enrich;
pub mod error;
pub mod harness;
pub mod mutate;
pub mod ord;
pub mod report;
pub mod product;
pub mod smap;
pub mod sset;

pub use axioms::{check_enrichment_axioms, check_enrichment_axioms_with};
pub use ctx::Ctx;
pub use cylinder::{canonical_cylinder, canonical_path, canonical_path_self_probed, check_cylinder_def, check_path_def, derived_cotensor_on_object, derived_cotensor_on_sset, derived_tensor_on_object, derived_tensor_on_sset, shuffle_cylinder, shuffle_path, uniqueness_solve_cylinder, uniqueness_solve_path, CylinderStructure, PathStructure, ProbeIso, ProbeSpec};
pub use enrich::{constant_cell, curry, enriched_compose, evaluation_map, hom_action_post, hom_action_pre, simplex_operator_map, uncurry, zero_cell, zero_cell_map, ComposeVariant, EnrichedZeroSimplex, FunctionComplex};
pub use harness::{prepare, run_suite, verify_adjunctions, verify_definitions, verify_functoriality, verify_lemma_squares, verify_naturality, verify_uniqueness, FixtureCategory, Prepared, RunConfig, Suite};
pub use mutate::{constant_coeval, swap_faces};
pub use error::{Error, Result};
pub use ord::{factor_monotone, Injection, MonotoneMap, Surjection};
pub use report::{Check, Outcome, VerificationReport};
pub use product::{assoc_iso, swap_iso, unit_r_iso, IsoKind, Isomorphism, Product};
pub use smap::{enumerate_maps, yoneda, SimplicialMap};
pub use sset::{
    boundary, empty, horn, standard_simplex, FiniteSimplicialSet, ObjectId, SSet, SSetBuilder,
    SimplexId, SimplexRef,
};
