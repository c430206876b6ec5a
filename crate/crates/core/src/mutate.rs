//! Deliberate defect constructors.
//!
//! The verification suites must be able to *fail*: each function here builds
//! a slightly broken variant of an otherwise correct value, and the relevant
//! suite is expected to produce at least one FAIL with a witness. These are
//! fixtures for sensitivity tests, not production paths.

use crate::ctx::Ctx;
use crate::cylinder::CylinderStructure;
use crate::error::{Error, Result};
use crate::ord::Surjection;
use crate::smap::SimplicialMap;
use crate::sset::{SSet, SSetBuilder, SimplexId, SimplexRef};

pub use crate::enrich::ComposeVariant;

/// Replace the structure map of a cylinder by the constant map onto the cell
/// of its first vertex; the defining diagram then fails wherever the
/// parameter has more than one cell.
pub fn constant_coeval(ctx: &Ctx, s: &CylinderStructure) -> Result<CylinderStructure> {
    let _ = ctx;
    let first = s
        .k
        .all_nondeg()
        .next()
        .ok_or_else(|| Error::ShapeMismatch("parameter object has no simplices".into()))?;
    if s.k.dim_of(first) != 0 {
        return Err(Error::ShapeMismatch("parameter object has no vertex".into()));
    }
    let cell = s.coeval.assignment(first).base;
    let assign = s
        .k
        .all_nondeg()
        .map(|t| SimplexRef { base: cell, deg: Surjection::terminal(s.k.dim_of(t)) })
        .collect();
    let coeval = SimplicialMap::new(s.k.clone(), s.coeval.cod.clone(), assign)?;
    Ok(CylinderStructure {
        x: s.x.clone(),
        k: s.k.clone(),
        object: s.object.clone(),
        coeval,
        coeval_fc: s.coeval_fc.clone(),
        transposes: s
            .transposes
            .iter()
            .map(|p| crate::cylinder::ProbeIso {
                probe: p.probe.clone(),
                level: p.level,
                iso: p.iso.clone(),
                dom_fc: p.dom_fc.clone(),
                inner_fc: p.inner_fc.clone(),
                outer_fc: p.outer_fc.clone(),
            })
            .collect(),
        level: s.level,
    })
}

/// Copy a simplicial set with two face entries of one simplex swapped; the
/// simplicial identities then fail and `validate` names the culprit.
pub fn swap_faces(x: &SSet, simplex: SimplexId, i: usize, j: usize) -> Result<SSet> {
    if simplex.0 >= x.simplex_count() {
        return Err(Error::ShapeMismatch("no such simplex".into()));
    }
    let dim = x.dim_of(simplex);
    if dim == 0 || i > dim || j > dim || i == j {
        return Err(Error::ShapeMismatch("face indices out of range".into()));
    }
    let mut b = SSetBuilder::annotated(format!("{}-faceswap", x.name()), x.trunc());
    for s in 0..x.simplex_count() {
        let id = SimplexId(s);
        b.add_simplex(x.name_of(id), x.dim_of(id));
    }
    for s in 0..x.simplex_count() {
        let id = SimplexId(s);
        if x.dim_of(id) == 0 {
            continue;
        }
        let mut faces = x.faces_of(id).to_vec();
        if id == simplex {
            faces.swap(i, j);
        }
        b.set_faces(id, faces);
    }
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cylinder::{canonical_cylinder, check_cylinder_def, ProbeSpec};
    use crate::sset::standard_simplex;

    #[test]
    fn face_swap_is_caught_with_a_witness() {
        let d2 = standard_simplex(2);
        let cell = d2.all_nondeg().find(|&s| d2.dim_of(s) == 2).unwrap();
        let broken = swap_faces(&d2, cell, 0, 1).unwrap();
        let report = broken.validate();
        assert!(!report.is_pass());
        let failure = report.failures().next().unwrap();
        assert_eq!(failure.anchor, "sset.identity");
        assert!(failure.instance.contains("012"));
    }

    #[test]
    fn constant_structure_map_breaks_the_diagram() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let s = canonical_cylinder(
            &ctx,
            &d1,
            &d1,
            &[ProbeSpec::new(&ctx.delta(1), 1)],
            1,
        )
        .unwrap();
        let broken = constant_coeval(&ctx, &s).unwrap();
        let report = check_cylinder_def(&ctx, &broken).unwrap();
        assert!(!report.is_pass());
        let failure = report.failures().next().unwrap();
        assert_eq!(failure.anchor, "cylinder.diagram");
        assert!(matches!(failure.outcome, crate::report::Outcome::Fail { ref witness } if !witness.is_empty()));
    }
}
