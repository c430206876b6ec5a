//! Cylinder and path structures over finite simplicial sets.
//!
//! A cylinder structure for `(X, K)` is an object together with a structure
//! map `K -> hom(X, object)` and, per probe object `Y`, a transpose
//! isomorphism `hom(object, Y) -> hom(K, hom(X, Y))` making the defining
//! diagram commute; path structures are the dual with `hom(object, X)` and
//! probes on the other side. The canonical instances take the product
//! `X × K` and the function complex `hom(K, X)`.
//!
//! Derived morphisms (the functorial actions in both slots) are solved
//! through the level-0 inverse of the transpose and certified by an
//! exhaustive filter over the full hom-set.

use std::sync::Arc;

use crate::ctx::Ctx;
use crate::enrich::{
    curry, enriched_compose, evaluation_map, uncurry, zero_cell, zero_cell_map, constant_cell,
    EnrichedZeroSimplex, FunctionComplex,
};
use crate::error::{Error, Result};
use crate::product::{assoc_iso, swap_iso, Isomorphism};
use crate::report::{Check, VerificationReport};
use crate::smap::{enumerate_maps, yoneda, SimplicialMap};
use crate::sset::{ObjectId, SSet, SimplexRef};

/// A probe request: materialize the transpose family at this object, with
/// carrier data up to the given level.
#[derive(Clone)]
pub struct ProbeSpec {
    pub object: SSet,
    pub level: usize,
}

impl ProbeSpec {
    pub fn new(object: &SSet, level: usize) -> Self {
        Self { object: object.clone(), level }
    }
}

/// One materialized transpose isomorphism together with the three function
/// complexes it connects.
pub struct ProbeIso {
    pub probe: SSet,
    pub level: usize,
    /// cylinder: `hom(object, Y) -> hom(K, hom(X, Y))`;
    /// path: `hom(Y, object) -> hom(K, hom(Y, X))`
    pub iso: SimplicialMap,
    pub dom_fc: Arc<FunctionComplex>,
    pub inner_fc: Arc<FunctionComplex>,
    pub outer_fc: Arc<FunctionComplex>,
}

pub struct CylinderStructure {
    pub x: SSet,
    pub k: SSet,
    pub object: SSet,
    /// `K -> hom(X, object)`
    pub coeval: SimplicialMap,
    pub coeval_fc: Arc<FunctionComplex>,
    pub transposes: Vec<ProbeIso>,
    pub level: usize,
}

pub struct PathStructure {
    pub x: SSet,
    pub k: SSet,
    pub object: SSet,
    /// `K -> hom(object, X)`
    pub eval: SimplicialMap,
    pub eval_fc: Arc<FunctionComplex>,
    pub transposes: Vec<ProbeIso>,
    pub level: usize,
}

impl CylinderStructure {
    pub fn transpose_for(&self, object: ObjectId) -> Option<&ProbeIso> {
        self.transposes.iter().find(|p| p.probe.id() == object)
    }
}

impl PathStructure {
    pub fn transpose_for(&self, object: ObjectId) -> Option<&ProbeIso> {
        self.transposes.iter().find(|p| p.probe.id() == object)
    }
}

fn top(x: &SSet) -> usize {
    x.top_dim().unwrap_or(0)
}

/// Rebase a carrier simplex between two materializations of the same
/// function complex.
fn transport_ref(
    ctx: &Ctx,
    from: &FunctionComplex,
    to: &FunctionComplex,
    r: &SimplexRef,
) -> Result<SimplexRef> {
    if from.carrier().id() == to.carrier().id() {
        return Ok(r.clone());
    }
    if from.source().id() != to.source().id() || from.target().id() != to.target().id() {
        return Err(Error::DomainMismatch(format!(
            "cannot transport a cell from {} to {}",
            from.carrier().name(),
            to.carrier().name()
        )));
    }
    to.simplex_for_map(&from.map_for_ref(ctx, r)?, r.dim())
}

/// Materialize a batch of function complexes, each at the maximum level any
/// consumer asked for. Constructors call this before building structure maps
/// so that later, shallower requests hit the same carrier objects.
fn materialize(ctx: &Ctx, wants: &[(&SSet, &SSet, usize)]) -> Result<()> {
    let mut order: Vec<(ObjectId, ObjectId)> = Vec::new();
    let mut max: std::collections::HashMap<(ObjectId, ObjectId), (SSet, SSet, usize)> =
        std::collections::HashMap::new();
    for (s, t, d) in wants {
        let key = (s.id(), t.id());
        match max.get_mut(&key) {
            Some(e) => e.2 = e.2.max(*d),
            None => {
                order.push(key);
                max.insert(key, ((*s).clone(), (*t).clone(), *d));
            }
        }
    }
    for key in order {
        let (s, t, d) = &max[&key];
        ctx.fncx(s, t, *d)?;
    }
    Ok(())
}

/// The canonical cylinder: object `X × K`, structure map classifying
/// `id × (classifying map of k)`, transposes by currying across the
/// re-bracketing `(X × K) × Δ[n] ≅ X × (K × Δ[n])`.
pub fn canonical_cylinder(
    ctx: &Ctx,
    x: &SSet,
    k: &SSet,
    probes: &[ProbeSpec],
    level: usize,
) -> Result<CylinderStructure> {
    let product = ctx.product(x, k)?;
    let object = product.sset.clone();
    let mut wants: Vec<(&SSet, &SSet, usize)> = vec![(x, &object, level.max(top(k)))];
    for p in probes {
        wants.push((x, &p.object, top(k) + p.level));
        wants.push((&object, &p.object, p.level));
    }
    materialize(ctx, &wants)?;
    let outer_wants: Vec<(SSet, SSet, usize)> = probes
        .iter()
        .map(|p| {
            let inner = ctx.fncx(x, &p.object, top(k) + p.level)?;
            Ok((k.clone(), inner.carrier().clone(), p.level))
        })
        .collect::<Result<_>>()?;
    materialize(
        ctx,
        &outer_wants.iter().map(|(a, b, d)| (a, b, *d)).collect::<Vec<_>>(),
    )?;
    let coeval_fc = ctx.fncx(x, &object, level.max(top(k)))?;
    let mut assign = Vec::new();
    for s in k.all_nondeg() {
        let n = k.dim_of(s);
        let yo = yoneda(&ctx.delta(n), k, &k.canonical(s))?;
        let p_x_dn = ctx.product(x, &ctx.delta(n))?;
        let widened = p_x_dn.product_map(&product, &SimplicialMap::identity(x), &yo)?;
        assign.push(coeval_fc.simplex_for_map(&widened, n)?);
    }
    let coeval = SimplicialMap::new(k.clone(), coeval_fc.carrier().clone(), assign)?;

    let mut transposes = Vec::new();
    for probe in probes {
        transposes.push(cylinder_transpose(ctx, x, k, &object, probe)?);
    }
    Ok(CylinderStructure {
        x: x.clone(),
        k: k.clone(),
        object,
        coeval,
        coeval_fc,
        transposes,
        level,
    })
}

fn cylinder_transpose(
    ctx: &Ctx,
    x: &SSet,
    k: &SSet,
    object: &SSet,
    probe: &ProbeSpec,
) -> Result<ProbeIso> {
    let ell = probe.level;
    let y = &probe.object;
    let dom_fc = ctx.fncx(object, y, ell)?;
    let inner_fc = ctx.fncx(x, y, top(k) + ell)?;
    let outer_fc = ctx.fncx(k, inner_fc.carrier(), ell)?;
    let p_xk = ctx.product(x, k)?;

    let mut assign = Vec::new();
    for s in dom_fc.carrier().all_nondeg() {
        let n = dom_fc.carrier().dim_of(s);
        let m_hat = dom_fc.map_for_ref(ctx, &dom_fc.carrier().canonical(s))?;
        let dn = ctx.delta(n);
        let p_k_dn = ctx.product(k, &dn)?;
        let p_xk_dn = ctx.product(&p_xk.sset, &dn)?;
        let p_x_kdn = ctx.product(x, &p_k_dn.sset)?;
        let rebracket = assoc_iso(&p_xk, &p_xk_dn, &p_k_dn, &p_x_kdn)?;
        let flat = SimplicialMap::compose(&m_hat, &rebracket.inverse)?;
        let curried = curry(ctx, &inner_fc, &p_k_dn.sset, &flat)?;
        assign.push(outer_fc.simplex_for_map(&curried, n)?);
    }
    let iso = SimplicialMap::new(
        dom_fc.carrier().clone(),
        outer_fc.carrier().clone(),
        assign,
    )?;
    Ok(ProbeIso { probe: y.clone(), level: ell, iso, dom_fc, inner_fc, outer_fc })
}

/// Materialization level the canonical path object needs for a probe family.
pub fn required_path_level(k: &SSet, probes: &[ProbeSpec], level: usize) -> usize {
    probes
        .iter()
        .map(|p| top(&p.object) + p.level)
        .chain([level, top(k)])
        .max()
        .unwrap_or(level)
}

/// The canonical path: object `hom(K, X)`, structure map built from the
/// evaluation of `hom(K, X)` against classifying maps, transposes by
/// uncurrying, shuffling the parameters and recurrying over the probe.
pub fn canonical_path(
    ctx: &Ctx,
    x: &SSet,
    k: &SSet,
    probes: &[ProbeSpec],
    level: usize,
) -> Result<PathStructure> {
    let d_obj = required_path_level(k, probes, level);
    let fc_kx = ctx.fncx(k, x, d_obj)?;
    let object = fc_kx.carrier().clone();
    if let Some(p) = probes.iter().find(|p| !object.supports(top(&p.object) + p.level)) {
        return Err(Error::Truncation {
            what: format!("path object {} against probe {}", object.name(), p.object.name()),
            needed: top(&p.object) + p.level,
            available: object.trunc(),
        });
    }
    let mut wants: Vec<(&SSet, &SSet, usize)> = vec![(&object, x, level.max(top(k)))];
    for p in probes {
        wants.push((&p.object, x, top(k) + p.level));
        wants.push((&p.object, &object, p.level));
    }
    materialize(ctx, &wants)?;
    let outer_wants: Vec<(SSet, SSet, usize)> = probes
        .iter()
        .map(|p| {
            let inner = ctx.fncx(&p.object, x, top(k) + p.level)?;
            Ok((k.clone(), inner.carrier().clone(), p.level))
        })
        .collect::<Result<_>>()?;
    materialize(
        ctx,
        &outer_wants.iter().map(|(a, b, d)| (a, b, *d)).collect::<Vec<_>>(),
    )?;

    let eval_fc = ctx.fncx(&object, x, level.max(top(k)))?;
    let ev = evaluation_map(ctx, &fc_kx)?;
    let p_k_obj = ctx.product(k, &object)?;
    let mut assign = Vec::new();
    for s in k.all_nondeg() {
        let n = k.dim_of(s);
        let dn = ctx.delta(n);
        let yo = yoneda(&dn, k, &k.canonical(s))?;
        let p_obj_dn = ctx.product(&object, &dn)?;
        let p_dn_obj = ctx.product(&dn, &object)?;
        let swap = swap_iso(&p_obj_dn, &p_dn_obj)?;
        let widened = p_dn_obj.product_map(&p_k_obj, &yo, &SimplicialMap::identity(&object))?;
        let total = SimplicialMap::compose(&ev, &SimplicialMap::compose(&widened, &swap.forward)?)?;
        assign.push(eval_fc.simplex_for_map(&total, n)?);
    }
    let eval = SimplicialMap::new(k.clone(), eval_fc.carrier().clone(), assign)?;

    let mut transposes = Vec::new();
    for probe in probes {
        transposes.push(path_transpose(ctx, x, k, &object, &fc_kx, probe)?);
    }
    Ok(PathStructure {
        x: x.clone(),
        k: k.clone(),
        object,
        eval,
        eval_fc,
        transposes,
        level,
    })
}

/// Canonical path whose probe family also contains its own object (the
/// uniqueness solver and the self-functoriality checks need that). The
/// object depends on the probe levels, so iterate until it stabilizes;
/// nondegenerate tops are intrinsic, hence this terminates.
pub fn canonical_path_self_probed(
    ctx: &Ctx,
    x: &SSet,
    k: &SSet,
    probes: &[ProbeSpec],
    self_level: usize,
    level: usize,
) -> Result<PathStructure> {
    let mut extra: Vec<ProbeSpec> = Vec::new();
    for _ in 0..4 {
        let mut all = probes.to_vec();
        all.extend(extra.iter().cloned());
        let s = canonical_path(ctx, x, k, &all, level)?;
        if s.transpose_for(s.object.id()).is_some() {
            return Ok(s);
        }
        extra = vec![ProbeSpec::new(&s.object, self_level)];
    }
    Err(Error::Internal("path object failed to stabilize under self-probing".into()))
}

fn path_transpose(
    ctx: &Ctx,
    x: &SSet,
    k: &SSet,
    object: &SSet,
    fc_kx: &Arc<FunctionComplex>,
    probe: &ProbeSpec,
) -> Result<ProbeIso> {
    let ell = probe.level;
    let y = &probe.object;
    let dom_fc = ctx.fncx(y, object, ell)?;
    let inner_fc = ctx.fncx(y, x, top(k) + ell)?;
    let outer_fc = ctx.fncx(k, inner_fc.carrier(), ell)?;

    let mut assign = Vec::new();
    for s in dom_fc.carrier().all_nondeg() {
        let n = dom_fc.carrier().dim_of(s);
        let m_hat = dom_fc.map_for_ref(ctx, &dom_fc.carrier().canonical(s))?;
        // K × (Y × Δ[n]) -> X
        let flat = uncurry(ctx, fc_kx, &m_hat)?;
        // shuffle Y × (K × Δ[n]) -> K × (Y × Δ[n]) through the product isos
        let dn = ctx.delta(n);
        let p_y_dn = ctx.product(y, &dn)?;
        let p_k_dn = ctx.product(k, &dn)?;
        let p_yk = ctx.product(y, k)?;
        let p_ky = ctx.product(k, y)?;
        let p_y_kdn = ctx.product(y, &p_k_dn.sset)?;
        let p_k_ydn = ctx.product(k, &p_y_dn.sset)?;
        let p_yk_dn = ctx.product(&p_yk.sset, &dn)?;
        let p_ky_dn = ctx.product(&p_ky.sset, &dn)?;
        let step1 = assoc_iso(&p_yk, &p_yk_dn, &p_k_dn, &p_y_kdn)?.inverse;
        let step2 = p_yk_dn.product_map(
            &p_ky_dn,
            &swap_iso(&p_yk, &p_ky)?.forward,
            &SimplicialMap::identity(&dn),
        )?;
        let step3 = assoc_iso(&p_ky, &p_ky_dn, &p_y_dn, &p_k_ydn)?.forward;
        let shuffle =
            SimplicialMap::compose(&step3, &SimplicialMap::compose(&step2, &step1)?)?;
        let reparam = SimplicialMap::compose(&flat, &shuffle)?;
        let curried = curry(ctx, &inner_fc, &p_k_dn.sset, &reparam)?;
        assign.push(outer_fc.simplex_for_map(&curried, n)?);
    }
    let iso = SimplicialMap::new(
        dom_fc.carrier().clone(),
        outer_fc.carrier().clone(),
        assign,
    )?;
    Ok(ProbeIso { probe: y.clone(), level: ell, iso, dom_fc, inner_fc, outer_fc })
}

/// Defining-diagram and bijectivity checks, per probe and per level.
pub fn check_cylinder_def(ctx: &Ctx, s: &CylinderStructure) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("cylinder");
    if s.transposes.is_empty() {
        report.push(Check::pass(
            "cylinder.probes",
            format!("X={} K={} (empty probe set, vacuous)", s.x.name(), s.k.name()),
        ));
        return Ok(report);
    }
    for probe in &s.transposes {
        check_transpose_bijective(&mut report, "cylinder.transpose.iso", s.x.name(), s.k.name(), probe)?;
        for n in 0..=probe.level {
            let k_level = s.k.level(n)?;
            let dom_level = probe.dom_fc.carrier().level(n)?;
            let mut bad = None;
            let mut count = 0usize;
            for kk in &k_level.refs {
                let alpha_kk = s.coeval.apply(kk);
                for cell in &dom_level.refs {
                    // composition route of the defining diagram
                    let lhs = enriched_compose(
                        ctx,
                        &s.coeval_fc,
                        &probe.dom_fc,
                        &probe.inner_fc,
                        &alpha_kk,
                        cell,
                    )?;
                    // evaluation route through the transpose
                    let transposed = probe.iso.apply(cell);
                    let u_hat = probe.outer_fc.map_for_ref(ctx, &transposed)?;
                    let p_k_dn = ctx.product(&s.k, &ctx.delta(n))?;
                    let dn = ctx.delta(n);
                    let top_n = dn.canonical(dn.nondeg(n)[0]);
                    let rhs = u_hat.apply(&p_k_dn.pair_ref(kk, &top_n)?);
                    count += 1;
                    if lhs != rhs && bad.is_none() {
                        bad = Some(format!(
                            "k={} cell={}",
                            s.k.display_ref(kk),
                            probe.dom_fc.carrier().display_ref(cell)
                        ));
                    }
                }
            }
            report.push(Check::of(
                "cylinder.diagram",
                format!(
                    "X={} K={} Y={} n={} ({count} pairs)",
                    s.x.name(),
                    s.k.name(),
                    probe.probe.name(),
                    n
                ),
                bad.is_none(),
                || bad.unwrap(),
            ));
        }
    }
    Ok(report)
}

pub fn check_path_def(ctx: &Ctx, s: &PathStructure) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("path");
    if s.transposes.is_empty() {
        report.push(Check::pass(
            "path.probes",
            format!("X={} K={} (empty probe set, vacuous)", s.x.name(), s.k.name()),
        ));
        return Ok(report);
    }
    for probe in &s.transposes {
        check_transpose_bijective(&mut report, "path.transpose.iso", s.x.name(), s.k.name(), probe)?;
        for n in 0..=probe.level {
            let k_level = s.k.level(n)?;
            let dom_level = probe.dom_fc.carrier().level(n)?;
            let mut bad = None;
            let mut count = 0usize;
            for kk in &k_level.refs {
                let beta_kk = s.eval.apply(kk);
                for cell in &dom_level.refs {
                    let lhs = enriched_compose(
                        ctx,
                        &probe.dom_fc,
                        &s.eval_fc,
                        &probe.inner_fc,
                        cell,
                        &beta_kk,
                    )?;
                    let transposed = probe.iso.apply(cell);
                    let u_hat = probe.outer_fc.map_for_ref(ctx, &transposed)?;
                    let p_k_dn = ctx.product(&s.k, &ctx.delta(n))?;
                    let dn = ctx.delta(n);
                    let top_n = dn.canonical(dn.nondeg(n)[0]);
                    let rhs = u_hat.apply(&p_k_dn.pair_ref(kk, &top_n)?);
                    count += 1;
                    if lhs != rhs && bad.is_none() {
                        bad = Some(format!(
                            "k={} cell={}",
                            s.k.display_ref(kk),
                            probe.dom_fc.carrier().display_ref(cell)
                        ));
                    }
                }
            }
            report.push(Check::of(
                "path.diagram",
                format!(
                    "X={} K={} Y={} n={} ({count} pairs)",
                    s.x.name(),
                    s.k.name(),
                    probe.probe.name(),
                    n
                ),
                bad.is_none(),
                || bad.unwrap(),
            ));
        }
    }
    Ok(report)
}

fn check_transpose_bijective(
    report: &mut VerificationReport,
    anchor: &str,
    x_name: &str,
    k_name: &str,
    probe: &ProbeIso,
) -> Result<()> {
    for n in 0..=probe.level {
        let dom = probe.dom_fc.carrier().level(n)?;
        let cod = probe.outer_fc.carrier().level(n)?;
        let mut images: Vec<usize> = dom
            .refs
            .iter()
            .map(|r| cod.index[&probe.iso.apply(r)])
            .collect();
        images.sort_unstable();
        images.dedup();
        let ok = images.len() == dom.refs.len() && images.len() == cod.refs.len();
        report.push(Check::of(
            anchor,
            format!("X={} K={} Y={} n={}", x_name, k_name, probe.probe.name(), n),
            ok,
            || format!("{} cells onto {} of {}", dom.refs.len(), images.len(), cod.refs.len()),
        ));
    }
    Ok(())
}

/// Invert a transpose at level 0 and read the answer back as a plain map.
fn invert_transpose_at_zero(
    ctx: &Ctx,
    probe: &ProbeIso,
    target: &SimplexRef,
) -> Result<SimplicialMap> {
    let dom0 = probe.dom_fc.carrier().level(0)?;
    let mut hits = dom0.refs.iter().filter(|r| &probe.iso.apply(r) == target);
    let found = hits
        .next()
        .ok_or_else(|| Error::Internal("transpose misses the required zero cell".into()))?;
    if hits.next().is_some() {
        return Err(Error::Internal("transpose is not injective at level 0".into()));
    }
    zero_cell_map(ctx, &probe.dom_fc, &EnrichedZeroSimplex(found.clone()))
}

/// Common solver: given the right-hand structure map `K -> hom(A, B)`
/// (already based in `probe.inner_fc`), produce the unique morphism whose
/// transpose matches its zero cell.
fn solve_through_transpose(
    ctx: &Ctx,
    probe: &ProbeIso,
    rhs: &SimplicialMap,
) -> Result<SimplicialMap> {
    let z = zero_cell(ctx, &probe.outer_fc, rhs)?;
    invert_transpose_at_zero(ctx, probe, &z.0)
}

/// `X ⊗ u` for `u: K -> L`: the unique `f: X⊗K -> X⊗L` with
/// `hom(X, f) ∘ coeval_K = coeval_L ∘ u`, solved through the transpose at
/// probe `X⊗L` and certified by exhaustive filtering.
pub fn derived_tensor_on_sset(
    ctx: &Ctx,
    c_k: &CylinderStructure,
    c_l: &CylinderStructure,
    u: &SimplicialMap,
) -> Result<(SimplicialMap, VerificationReport)> {
    if c_k.x.id() != c_l.x.id() {
        return Err(Error::DomainMismatch("cylinders are over different objects".into()));
    }
    if u.dom.id() != c_k.k.id() || u.cod.id() != c_l.k.id() {
        return Err(Error::DomainMismatch("parameter map does not match the cylinders".into()));
    }
    let probe = c_k.transpose_for(c_l.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: c_l.object.name().to_string(),
        structure: format!("cylinder({},{})", c_k.x.name(), c_k.k.name()),
    })?;
    // right side: coeval_L ∘ u, rebased into the probe's inner complex
    let composed = SimplicialMap::compose(&c_l.coeval, u)?;
    let rhs = rebase_structure_map(ctx, &c_l.coeval_fc, &probe.inner_fc, &composed)?;
    let f = solve_through_transpose(ctx, probe, &rhs)?;

    let square = |g: &SimplicialMap| -> Result<bool> {
        cylinder_square_holds(ctx, c_k, probe, &rhs, g)
    };
    let report = certify_unique(
        ctx,
        "tensor.sset",
        &format!("X={} u:{}->{}", c_k.x.name(), c_k.k.name(), c_l.k.name()),
        &c_k.object,
        &c_l.object,
        &f,
        square,
        Some((probe, &rhs)),
    )?;
    Ok((f, report))
}

/// `f ⊗ K` for `f: X -> Y`: the unique `g: X⊗K -> Y⊗K` with
/// `hom(X, g) ∘ coeval_{K,X} = hom(f, Y⊗K) ∘ coeval_{K,Y}`.
pub fn derived_tensor_on_object(
    ctx: &Ctx,
    c_x: &CylinderStructure,
    c_y: &CylinderStructure,
    f: &SimplicialMap,
) -> Result<(SimplicialMap, VerificationReport)> {
    if c_x.k.id() != c_y.k.id() {
        return Err(Error::DomainMismatch("cylinders are over different parameters".into()));
    }
    if f.dom.id() != c_x.x.id() || f.cod.id() != c_y.x.id() {
        return Err(Error::DomainMismatch("object map does not match the cylinders".into()));
    }
    let probe = c_x.transpose_for(c_y.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: c_y.object.name().to_string(),
        structure: format!("cylinder({},{})", c_x.x.name(), c_x.k.name()),
    })?;
    // right side: hom(f, Y⊗K) ∘ coeval_{K,Y}, computed pointwise
    let k = &c_x.k;
    let mut assign = Vec::new();
    for s in k.all_nondeg() {
        let n = k.dim_of(s);
        let m = c_y.coeval_fc.map_for_ref(ctx, c_y.coeval.assignment(s))?;
        let p_x_dn = ctx.product(&c_x.x, &ctx.delta(n))?;
        let p_y_dn = ctx.product(&c_y.x, &ctx.delta(n))?;
        let widened = p_x_dn.product_map(&p_y_dn, f, &SimplicialMap::identity(&ctx.delta(n)))?;
        assign.push(probe.inner_fc.simplex_for_map(&SimplicialMap::compose(&m, &widened)?, n)?);
    }
    let rhs = SimplicialMap::new(k.clone(), probe.inner_fc.carrier().clone(), assign)?;
    let g = solve_through_transpose(ctx, probe, &rhs)?;

    let square = |cand: &SimplicialMap| -> Result<bool> {
        cylinder_square_holds(ctx, c_x, probe, &rhs, cand)
    };
    let mut report = certify_unique(
        ctx,
        "tensor.object",
        &format!("K={} f:{}->{}", c_x.k.name(), c_x.x.name(), c_y.x.name()),
        &c_x.object,
        &c_y.object,
        &g,
        square,
        Some((probe, &rhs)),
    )?;

    // levelwise square: composing with the constant cell of g after the
    // structure map matches composing the structure map after f's cell
    let d = c_x.level;
    let fc_xy = ctx.fncx(&c_x.x, &c_y.x, d)?;
    let fc_objs = ctx.fncx(&c_x.object, &c_y.object, d)?;
    let fc_x_objy = ctx.fncx(&c_x.x, &c_y.object, d.max(top(k)))?;
    let fc_y_objy = &c_y.coeval_fc;
    let mut bad = None;
    let mut count = 0usize;
    for n in 0..=d {
        let cg = constant_cell(ctx, &fc_objs, &g, n)?;
        let cf = constant_cell(ctx, &fc_xy, f, n)?;
        for kk in &k.level(n)?.refs {
            let lhs = enriched_compose(
                ctx,
                &c_x.coeval_fc,
                &fc_objs,
                &fc_x_objy,
                &c_x.coeval.apply(kk),
                &cg,
            )?;
            let alpha_y = c_y.coeval.apply(kk);
            let rhs_cell = enriched_compose(ctx, &fc_xy, fc_y_objy, &fc_x_objy, &cf, &alpha_y)?;
            count += 1;
            if lhs != rhs_cell && bad.is_none() {
                bad = Some(format!("n={n} k={}", k.display_ref(kk)));
            }
        }
    }
    report.push(Check::of(
        "tensor.object.level_square",
        format!(
            "K={} f:{}->{} ({count} instances)",
            k.name(),
            c_x.x.name(),
            c_y.x.name()
        ),
        bad.is_none(),
        || bad.unwrap(),
    ));
    Ok((g, report))
}

/// `X^u` for `u: K -> L`: the unique `f: X^L -> X^K` with
/// `hom(f, X) ∘ eval_K = eval_L ∘ u` (contravariant in the parameter).
pub fn derived_cotensor_on_sset(
    ctx: &Ctx,
    p_k: &PathStructure,
    p_l: &PathStructure,
    u: &SimplicialMap,
) -> Result<(SimplicialMap, VerificationReport)> {
    if p_k.x.id() != p_l.x.id() {
        return Err(Error::DomainMismatch("paths are over different objects".into()));
    }
    if u.dom.id() != p_k.k.id() || u.cod.id() != p_l.k.id() {
        return Err(Error::DomainMismatch("parameter map does not match the paths".into()));
    }
    let probe = p_k.transpose_for(p_l.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: p_l.object.name().to_string(),
        structure: format!("path({},{})", p_k.x.name(), p_k.k.name()),
    })?;
    let composed = SimplicialMap::compose(&p_l.eval, u)?;
    let rhs = rebase_structure_map(ctx, &p_l.eval_fc, &probe.inner_fc, &composed)?;
    let f = solve_through_transpose(ctx, probe, &rhs)?;

    let square = |g: &SimplicialMap| -> Result<bool> {
        path_square_holds(ctx, p_k, probe, &rhs, g)
    };
    let report = certify_unique(
        ctx,
        "cotensor.sset",
        &format!("X={} u:{}->{}", p_k.x.name(), p_k.k.name(), p_l.k.name()),
        &p_l.object,
        &p_k.object,
        &f,
        square,
        Some((probe, &rhs)),
    )?;
    Ok((f, report))
}

/// `u^K` for `u: Y -> X`: the unique `f: Y^K -> X^K` with
/// `hom(f, X) ∘ eval_{K,X} = hom(Y^K, u) ∘ eval_{K,Y}`.
pub fn derived_cotensor_on_object(
    ctx: &Ctx,
    p_y: &PathStructure,
    p_x: &PathStructure,
    u: &SimplicialMap,
) -> Result<(SimplicialMap, VerificationReport)> {
    if p_y.k.id() != p_x.k.id() {
        return Err(Error::DomainMismatch("paths are over different parameters".into()));
    }
    if u.dom.id() != p_y.x.id() || u.cod.id() != p_x.x.id() {
        return Err(Error::DomainMismatch("object map does not match the paths".into()));
    }
    let probe = p_x.transpose_for(p_y.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: p_y.object.name().to_string(),
        structure: format!("path({},{})", p_x.x.name(), p_x.k.name()),
    })?;
    let k = &p_x.k;
    // right side: hom(Y^K, u) ∘ eval_{K,Y}, pointwise postcomposition
    let mut assign = Vec::new();
    for s in k.all_nondeg() {
        let n = k.dim_of(s);
        let m = p_y.eval_fc.map_for_ref(ctx, p_y.eval.assignment(s))?;
        assign.push(probe.inner_fc.simplex_for_map(&SimplicialMap::compose(u, &m)?, n)?);
    }
    let rhs = SimplicialMap::new(k.clone(), probe.inner_fc.carrier().clone(), assign)?;
    let f = solve_through_transpose(ctx, probe, &rhs)?;

    let square = |cand: &SimplicialMap| -> Result<bool> {
        path_square_holds(ctx, p_x, probe, &rhs, cand)
    };
    let mut report = certify_unique(
        ctx,
        "cotensor.object",
        &format!("K={} u:{}->{}", k.name(), p_y.x.name(), p_x.x.name()),
        &p_y.object,
        &p_x.object,
        &f,
        square,
        Some((probe, &rhs)),
    )?;

    // levelwise square with the constant cells of u and u^K
    let d = p_x.level;
    let fc_yx = ctx.fncx(&p_y.x, &p_x.x, d)?;
    let fc_objs = ctx.fncx(&p_y.object, &p_x.object, d)?;
    let fc_objy_x = ctx.fncx(&p_y.object, &p_x.x, d.max(top(k)))?;
    let mut bad = None;
    let mut count = 0usize;
    for n in 0..=d {
        let cu = constant_cell(ctx, &fc_yx, u, n)?;
        let cf = constant_cell(ctx, &fc_objs, &f, n)?;
        for kk in &k.level(n)?.refs {
            let lhs = enriched_compose(
                ctx,
                &p_y.eval_fc,
                &fc_yx,
                &fc_objy_x,
                &p_y.eval.apply(kk),
                &cu,
            )?;
            let rhs_cell = enriched_compose(
                ctx,
                &fc_objs,
                &p_x.eval_fc,
                &fc_objy_x,
                &cf,
                &p_x.eval.apply(kk),
            )?;
            count += 1;
            if lhs != rhs_cell && bad.is_none() {
                bad = Some(format!("n={n} k={}", k.display_ref(kk)));
            }
        }
    }
    report.push(Check::of(
        "cotensor.object.level_square",
        format!("K={} u:{}->{} ({count} instances)", k.name(), p_y.x.name(), p_x.x.name()),
        bad.is_none(),
        || bad.unwrap(),
    ));
    Ok((f, report))
}

/// Does `hom(X, g) ∘ coeval = rhs` hold, checked pointwise on the parameter?
fn cylinder_square_holds(
    ctx: &Ctx,
    c: &CylinderStructure,
    probe: &ProbeIso,
    rhs: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<bool> {
    for s in c.k.all_nondeg() {
        let n = c.k.dim_of(s);
        let m = c.coeval_fc.map_for_ref(ctx, c.coeval.assignment(s))?;
        let lhs = probe.inner_fc.simplex_for_map(&SimplicialMap::compose(g, &m)?, n)?;
        if &lhs != rhs.assignment(s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does `hom(g, X) ∘ eval = rhs` hold, checked pointwise on the parameter?
fn path_square_holds(
    ctx: &Ctx,
    p: &PathStructure,
    probe: &ProbeIso,
    rhs: &SimplicialMap,
    g: &SimplicialMap,
) -> Result<bool> {
    for s in p.k.all_nondeg() {
        let n = p.k.dim_of(s);
        let m = p.eval_fc.map_for_ref(ctx, p.eval.assignment(s))?;
        let dn = ctx.delta(n);
        let p_dom = ctx.product(&g.dom, &dn)?;
        let p_cod = ctx.product(&g.cod, &dn)?;
        let widened = p_dom.product_map(&p_cod, g, &SimplicialMap::identity(&dn))?;
        let lhs = probe.inner_fc.simplex_for_map(&SimplicialMap::compose(&m, &widened)?, n)?;
        if &lhs != rhs.assignment(s) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rebase a structure map `K -> carrier(from)` into another materialization.
fn rebase_structure_map(
    ctx: &Ctx,
    from: &FunctionComplex,
    to: &FunctionComplex,
    f: &SimplicialMap,
) -> Result<SimplicialMap> {
    if f.cod.id() == to.carrier().id() {
        return Ok(f.clone());
    }
    let assign = f
        .assignments()
        .iter()
        .map(|r| transport_ref(ctx, from, to, r))
        .collect::<Result<Vec<_>>>()?;
    SimplicialMap::new(f.dom.clone(), to.carrier().clone(), assign)
}

/// Certify that `f` satisfies its defining condition, that the exhaustive
/// filter over all morphisms finds exactly it, and that the transpose-based
/// condition agrees with the square on every candidate.
#[allow(clippy::too_many_arguments)]
fn certify_unique(
    ctx: &Ctx,
    anchor: &str,
    instance: &str,
    dom: &SSet,
    cod: &SSet,
    f: &SimplicialMap,
    square: impl Fn(&SimplicialMap) -> Result<bool>,
    bridge: Option<(&ProbeIso, &SimplicialMap)>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(anchor.to_string());
    let holds = square(f)?;
    report.push(Check::of(
        format!("{anchor}.defined"),
        instance.to_string(),
        holds,
        || "constructed morphism violates its defining square".to_string(),
    ));
    let candidates = enumerate_maps(dom, cod, top(dom))?;
    let target_cell = match bridge {
        Some((probe, rhs)) => Some(zero_cell(ctx, &probe.outer_fc, rhs)?),
        None => None,
    };
    let mut solutions = Vec::new();
    let mut bridge_bad = None;
    for (i, cand) in candidates.iter().enumerate() {
        let sq = square(cand)?;
        if sq {
            solutions.push(i);
        }
        if let (Some((probe, _)), Some(z)) = (bridge, &target_cell) {
            // the transpose condition must agree with the square per candidate
            let cz = zero_cell(ctx, &probe.dom_fc, cand)?;
            let via_transpose = probe.iso.apply(&cz.0) == z.0;
            if via_transpose != sq && bridge_bad.is_none() {
                bridge_bad = Some(format!("candidate#{i}: transpose {via_transpose} vs square {sq}"));
            }
        }
    }
    if bridge.is_some() {
        report.push(Check::of(
            format!("{anchor}.bridge"),
            format!("{instance} ({} candidates)", candidates.len()),
            bridge_bad.is_none(),
            || bridge_bad.unwrap(),
        ));
    }
    let unique = solutions.len() == 1 && candidates[solutions[0]] == *f;
    report.push(Check::of(
        format!("{anchor}.unique"),
        format!("{instance} ({} candidates)", candidates.len()),
        unique,
        || format!("{} solutions among {} candidates", solutions.len(), candidates.len()),
    ));
    Ok(report)
}

/// Theorem-level uniqueness for two cylinder structures on the same `(X, K)`:
/// the unique isomorphism `f` with `coeval' = hom(X, f) ∘ coeval`.
pub fn uniqueness_solve_cylinder(
    ctx: &Ctx,
    s1: &CylinderStructure,
    s2: &CylinderStructure,
) -> Result<(SimplicialMap, VerificationReport)> {
    if s1.x.id() != s2.x.id() || s1.k.id() != s2.k.id() {
        return Err(Error::DomainMismatch("structures are not over the same (X, K)".into()));
    }
    let probe = s1.transpose_for(s2.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: s2.object.name().to_string(),
        structure: format!("cylinder({},{})", s1.x.name(), s1.k.name()),
    })?;
    let rhs = rebase_structure_map(ctx, &s2.coeval_fc, &probe.inner_fc, &s2.coeval)?;
    let f = solve_through_transpose(ctx, probe, &rhs)?;
    let square =
        |g: &SimplicialMap| -> Result<bool> { cylinder_square_holds(ctx, s1, probe, &rhs, g) };
    let mut report = certify_unique(
        ctx,
        "unique.cylinder",
        &format!("X={} K={}", s1.x.name(), s1.k.name()),
        &s1.object,
        &s2.object,
        &f,
        square,
        None,
    )?;
    report.push(Check::of(
        "unique.cylinder.iso",
        format!("X={} K={}", s1.x.name(), s1.k.name()),
        f.is_iso(),
        || "solution is not an isomorphism".to_string(),
    ));
    Ok((f, report))
}

/// Theorem-level uniqueness for two path structures on the same `(X, K)`:
/// the unique isomorphism `f: obj1 -> obj2` with `eval1 = hom(f, X) ∘ eval2`.
pub fn uniqueness_solve_path(
    ctx: &Ctx,
    s1: &PathStructure,
    s2: &PathStructure,
) -> Result<(SimplicialMap, VerificationReport)> {
    if s1.x.id() != s2.x.id() || s1.k.id() != s2.k.id() {
        return Err(Error::DomainMismatch("structures are not over the same (X, K)".into()));
    }
    let probe = s2.transpose_for(s1.object.id()).ok_or_else(|| Error::ProbeMissing {
        probe: s1.object.name().to_string(),
        structure: format!("path({},{})", s2.x.name(), s2.k.name()),
    })?;
    let rhs = rebase_structure_map(ctx, &s1.eval_fc, &probe.inner_fc, &s1.eval)?;
    let f = solve_through_transpose(ctx, probe, &rhs)?;
    let square =
        |g: &SimplicialMap| -> Result<bool> { path_square_holds(ctx, s2, probe, &rhs, g) };
    let mut report = certify_unique(
        ctx,
        "unique.path",
        &format!("X={} K={}", s1.x.name(), s1.k.name()),
        &s1.object,
        &s2.object,
        &f,
        square,
        None,
    )?;
    report.push(Check::of(
        "unique.path.iso",
        format!("X={} K={}", s1.x.name(), s1.k.name()),
        f.is_iso(),
        || "solution is not an isomorphism".to_string(),
    ));
    Ok((f, report))
}

/// Transport a cylinder structure along an isomorphism out of its object.
pub fn shuffle_cylinder(
    ctx: &Ctx,
    s: &CylinderStructure,
    rho: &Isomorphism,
) -> Result<CylinderStructure> {
    check_iso(rho, &s.object)?;
    let object = rho.forward.cod.clone();
    let coeval_fc = ctx.fncx(&s.x, &object, s.level.max(top(&s.k)))?;
    let mut assign = Vec::new();
    for sk in s.k.all_nondeg() {
        let n = s.k.dim_of(sk);
        let m = s.coeval_fc.map_for_ref(ctx, s.coeval.assignment(sk))?;
        assign.push(coeval_fc.simplex_for_map(&SimplicialMap::compose(&rho.forward, &m)?, n)?);
    }
    let coeval = SimplicialMap::new(s.k.clone(), coeval_fc.carrier().clone(), assign)?;

    let mut transposes = Vec::new();
    for probe in &s.transposes {
        let dom_fc = ctx.fncx(&object, &probe.probe, probe.level)?;
        let mut assign = Vec::new();
        for c in dom_fc.carrier().all_nondeg() {
            let n = dom_fc.carrier().dim_of(c);
            let m = dom_fc.map_for_ref(ctx, &dom_fc.carrier().canonical(c))?;
            let dn = ctx.delta(n);
            let p_old = ctx.product(&s.object, &dn)?;
            let p_new = ctx.product(&object, &dn)?;
            let widened = p_old.product_map(&p_new, &rho.forward, &SimplicialMap::identity(&dn))?;
            let pulled = probe
                .dom_fc
                .simplex_for_map(&SimplicialMap::compose(&m, &widened)?, n)?;
            assign.push(probe.iso.apply(&pulled));
        }
        let iso = SimplicialMap::new(
            dom_fc.carrier().clone(),
            probe.outer_fc.carrier().clone(),
            assign,
        )?;
        transposes.push(ProbeIso {
            probe: probe.probe.clone(),
            level: probe.level,
            iso,
            dom_fc,
            inner_fc: probe.inner_fc.clone(),
            outer_fc: probe.outer_fc.clone(),
        });
    }
    Ok(CylinderStructure {
        x: s.x.clone(),
        k: s.k.clone(),
        object,
        coeval,
        coeval_fc,
        transposes,
        level: s.level,
    })
}

/// Transport a path structure along an isomorphism out of its object.
pub fn shuffle_path(ctx: &Ctx, s: &PathStructure, rho: &Isomorphism) -> Result<PathStructure> {
    check_iso(rho, &s.object)?;
    let object = rho.forward.cod.clone();
    let eval_fc = ctx.fncx(&object, &s.x, s.level.max(top(&s.k)))?;
    let mut assign = Vec::new();
    for sk in s.k.all_nondeg() {
        let n = s.k.dim_of(sk);
        let m = s.eval_fc.map_for_ref(ctx, s.eval.assignment(sk))?;
        let dn = ctx.delta(n);
        let p_new = ctx.product(&object, &dn)?;
        let p_old = ctx.product(&s.object, &dn)?;
        let widened = p_new.product_map(&p_old, &rho.inverse, &SimplicialMap::identity(&dn))?;
        assign.push(eval_fc.simplex_for_map(&SimplicialMap::compose(&m, &widened)?, n)?);
    }
    let eval = SimplicialMap::new(s.k.clone(), eval_fc.carrier().clone(), assign)?;

    let mut transposes = Vec::new();
    for probe in &s.transposes {
        let dom_fc = ctx.fncx(&probe.probe, &object, probe.level)?;
        let mut assign = Vec::new();
        for c in dom_fc.carrier().all_nondeg() {
            let n = dom_fc.carrier().dim_of(c);
            let m = dom_fc.map_for_ref(ctx, &dom_fc.carrier().canonical(c))?;
            let pulled = probe
                .dom_fc
                .simplex_for_map(&SimplicialMap::compose(&rho.inverse, &m)?, n)?;
            assign.push(probe.iso.apply(&pulled));
        }
        let iso = SimplicialMap::new(
            dom_fc.carrier().clone(),
            probe.outer_fc.carrier().clone(),
            assign,
        )?;
        transposes.push(ProbeIso {
            probe: probe.probe.clone(),
            level: probe.level,
            iso,
            dom_fc,
            inner_fc: probe.inner_fc.clone(),
            outer_fc: probe.outer_fc.clone(),
        });
    }
    Ok(PathStructure {
        x: s.x.clone(),
        k: s.k.clone(),
        object,
        eval,
        eval_fc,
        transposes,
        level: s.level,
    })
}

fn check_iso(rho: &Isomorphism, expected_dom: &SSet) -> Result<()> {
    if rho.forward.dom.id() != expected_dom.id() {
        return Err(Error::DomainMismatch(
            "isomorphism does not start at the structure object".into(),
        ));
    }
    let back = SimplicialMap::compose(&rho.inverse, &rho.forward)?;
    let forth = SimplicialMap::compose(&rho.forward, &rho.inverse)?;
    if back != SimplicialMap::identity(&rho.forward.dom)
        || forth != SimplicialMap::identity(&rho.forward.cod)
    {
        return Err(Error::NotIso("stored inverse is not two-sided".into()));
    }
    Ok(())
}
