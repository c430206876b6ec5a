//! Theorem-level verification suites over a finite fixture category:
//! uniqueness of structures, functoriality of the derived actions,
//! naturality of the transposes (checked both through the currying
//! bijection and as direct squares, with agreeing verdicts), the three
//! adjunctions, and the connecting lemma squares.

use std::collections::HashMap;

use crate::ctx::Ctx;
use crate::cylinder::{
    canonical_cylinder, canonical_path, check_cylinder_def, check_path_def,
    derived_cotensor_on_object, derived_cotensor_on_sset, derived_tensor_on_object,
    derived_tensor_on_sset, shuffle_cylinder, shuffle_path, uniqueness_solve_cylinder,
    uniqueness_solve_path, CylinderStructure, PathStructure, ProbeIso, ProbeSpec,
};
use crate::enrich::{
    constant_cell, enriched_compose, hom_action_post, hom_action_pre, uncurry, zero_cell,
    zero_cell_map, EnrichedZeroSimplex,
};
use crate::error::{Error, Result};
use crate::product::{swap_iso, Isomorphism};
use crate::report::{Check, VerificationReport};
use crate::smap::{enumerate_maps, SimplicialMap};
use crate::sset::{ObjectId, SSet};

/// The finite stage on which the theorem suites run: a pool of objects for
/// the enriched-category slots and a pool of parameter objects for the
/// simplicial-set slots, with a global level bound and a materialization
/// budget guarding the truncation audit.
#[derive(Clone)]
pub struct FixtureCategory {
    pub objects: Vec<SSet>,
    pub params: Vec<SSet>,
    pub level: usize,
    pub max_level: usize,
}

impl FixtureCategory {
    pub fn new(objects: Vec<SSet>, params: Vec<SSet>, level: usize) -> Self {
        Self { objects, params, level, max_level: 12 }
    }
}

fn top(x: &SSet) -> usize {
    x.top_dim().unwrap_or(0)
}

fn map_label(maps: &[SimplicialMap], idx: usize) -> String {
    format!("{}>{}#{}", maps[idx].dom.name(), maps[idx].cod.name(), idx)
}

/// Everything the suites share: canonical structures with full probe
/// families, the fixture hom-sets, and memoized derived morphisms.
pub struct Prepared {
    pub category: FixtureCategory,
    pub cylinders: Vec<Vec<CylinderStructure>>,
    pub paths: Vec<Vec<PathStructure>>,
    /// morphisms between objects, `homs_obj[a][b]`
    pub homs_obj: Vec<Vec<Vec<SimplicialMap>>>,
    /// morphisms between parameters, `homs_par[a][b]`
    pub homs_par: Vec<Vec<Vec<SimplicialMap>>>,
    tensor_par: HashMap<(usize, usize, usize, usize), SimplicialMap>,
    tensor_obj: HashMap<(usize, usize, usize, usize), SimplicialMap>,
    cotensor_par: HashMap<(usize, usize, usize, usize), SimplicialMap>,
    cotensor_obj: HashMap<(usize, usize, usize, usize), SimplicialMap>,
    /// certification output of every derived-morphism solve
    pub derived_reports: VerificationReport,
}

impl Prepared {
    /// `X_i ⊗ u` for `u = homs_par[j][l][ui]`.
    pub fn tensor_of_param(&self, i: usize, j: usize, l: usize, ui: usize) -> &SimplicialMap {
        &self.tensor_par[&(i, j, l, ui)]
    }

    /// `f ⊗ K_j` for `f = homs_obj[i][y][fi]`.
    pub fn tensor_of_object(&self, i: usize, y: usize, j: usize, fi: usize) -> &SimplicialMap {
        &self.tensor_obj[&(i, y, j, fi)]
    }

    /// `X_i ^ u` for `u = homs_par[j][l][ui]` (contravariant).
    pub fn cotensor_of_param(&self, i: usize, j: usize, l: usize, ui: usize) -> &SimplicialMap {
        &self.cotensor_par[&(i, j, l, ui)]
    }

    /// `u ^ K_j` for `u = homs_obj[y][x][ui]`.
    pub fn cotensor_of_object(&self, y: usize, x: usize, j: usize, ui: usize) -> &SimplicialMap {
        &self.cotensor_obj[&(y, x, j, ui)]
    }
}

/// Audit the truncation requirements of the whole suite family against the
/// budget, then materialize every function complex at its maximal level and
/// build the canonical structures and derived morphisms.
pub fn prepare(ctx: &Ctx, f: &FixtureCategory) -> Result<Prepared> {
    let d = f.level;
    let n_obj = f.objects.len();
    let n_par = f.params.len();
    let par_top = f.params.iter().map(top).max().unwrap_or(0);

    // audit: the global inner level is the deepest function complex any
    // suite needs between plain objects
    let inner_level = par_top + d;
    if inner_level > f.max_level {
        return Err(Error::Truncation {
            what: "fixture audit: function complexes between objects".into(),
            needed: inner_level,
            available: Some(f.max_level),
        });
    }

    // shared inner complexes
    for x in &f.objects {
        for y in &f.objects {
            ctx.fncx(x, y, inner_level)?;
        }
    }

    // cylinder structures with their full probe families
    let mut tensor_objects: Vec<Vec<SSet>> = Vec::new();
    for x in &f.objects {
        let mut row = Vec::new();
        for k in &f.params {
            row.push(ctx.product(x, k)?.sset.clone());
        }
        tensor_objects.push(row);
    }
    let mut cylinders: Vec<Vec<CylinderStructure>> = Vec::new();
    for (i, x) in f.objects.iter().enumerate() {
        let mut row = Vec::new();
        for (j, k) in f.params.iter().enumerate() {
            let mut probes: Vec<ProbeSpec> =
                f.objects.iter().map(|y| ProbeSpec::new(y, d)).collect();
            for l in 0..n_par {
                probes.push(ProbeSpec::new(&tensor_objects[i][l], 0));
            }
            for y in 0..n_obj {
                probes.push(ProbeSpec::new(&tensor_objects[y][j], 0));
            }
            row.push(canonical_cylinder(ctx, x, k, &probes, d)?);
        }
        cylinders.push(row);
    }

    // path structures: the object of each depends on the probe levels, so
    // first estimate the materialization level per pair, iterate until the
    // stored tops stabilize, audit the budget, then build
    let mut d_obj = vec![vec![0usize; n_par]; n_obj];
    let mut tops = vec![vec![0usize; n_par]; n_obj];
    for round in 0..5 {
        let mut changed = false;
        for (i, x) in f.objects.iter().enumerate() {
            for (j, k) in f.params.iter().enumerate() {
                let mut need = d.max(top(k));
                for y in &f.objects {
                    need = need.max(top(y) + d);
                }
                for y in 0..n_obj {
                    need = need.max(tops[y][j] + d);
                }
                for l in 0..n_par {
                    need = need.max(tops[i][l]);
                }
                if need > f.max_level {
                    return Err(Error::Truncation {
                        what: format!("fixture audit: path object over ({}, {})", x.name(), k.name()),
                        needed: need,
                        available: Some(f.max_level),
                    });
                }
                if need != d_obj[i][j] {
                    changed = true;
                    d_obj[i][j] = need;
                }
            }
        }
        for (i, x) in f.objects.iter().enumerate() {
            for (j, k) in f.params.iter().enumerate() {
                let fc = ctx.fncx(k, x, d_obj[i][j])?;
                let t = fc.carrier().top_dim().unwrap_or(0);
                if t != tops[i][j] {
                    changed = true;
                    tops[i][j] = t;
                }
            }
        }
        if !changed {
            break;
        }
        if round == 4 {
            return Err(Error::Internal("path materialization failed to stabilize".into()));
        }
    }
    let mut path_objects: Vec<Vec<SSet>> = Vec::new();
    for (i, x) in f.objects.iter().enumerate() {
        let mut row = Vec::new();
        for (j, k) in f.params.iter().enumerate() {
            row.push(ctx.fncx(k, x, d_obj[i][j])?.carrier().clone());
        }
        path_objects.push(row);
    }
    let mut paths: Vec<Vec<PathStructure>> = Vec::new();
    for (i, x) in f.objects.iter().enumerate() {
        let mut row = Vec::new();
        for (j, k) in f.params.iter().enumerate() {
            let mut probes: Vec<ProbeSpec> =
                f.objects.iter().map(|y| ProbeSpec::new(y, d)).collect();
            for l in 0..n_par {
                probes.push(ProbeSpec::new(&path_objects[i][l], 0));
            }
            for y in 0..n_obj {
                probes.push(ProbeSpec::new(&path_objects[y][j], d));
            }
            let s = canonical_path(ctx, x, k, &probes, d)?;
            if s.object.id() != path_objects[i][j].id() {
                return Err(Error::Internal("path object moved during preparation".into()));
            }
            row.push(s);
        }
        paths.push(row);
    }

    // fixture hom-sets
    let homs_obj: Vec<Vec<Vec<SimplicialMap>>> = f
        .objects
        .iter()
        .map(|a| {
            f.objects
                .iter()
                .map(|b| enumerate_maps(a, b, top(a)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let homs_par: Vec<Vec<Vec<SimplicialMap>>> = f
        .params
        .iter()
        .map(|a| {
            f.params
                .iter()
                .map(|b| enumerate_maps(a, b, top(a)))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    // derived morphisms, certification collected as checks
    let mut derived_reports = VerificationReport::new("derived");
    let mut tensor_par = HashMap::new();
    let mut cotensor_par = HashMap::new();
    for i in 0..n_obj {
        for j in 0..n_par {
            for l in 0..n_par {
                for (ui, u) in homs_par[j][l].iter().enumerate() {
                    let (m, rep) =
                        derived_tensor_on_sset(ctx, &cylinders[i][j], &cylinders[i][l], u)?;
                    derived_reports.merge(rep);
                    tensor_par.insert((i, j, l, ui), m);
                    let (m, rep) =
                        derived_cotensor_on_sset(ctx, &paths[i][j], &paths[i][l], u)?;
                    derived_reports.merge(rep);
                    cotensor_par.insert((i, j, l, ui), m);
                }
            }
        }
    }
    let mut tensor_obj = HashMap::new();
    let mut cotensor_obj = HashMap::new();
    for j in 0..n_par {
        for a in 0..n_obj {
            for b in 0..n_obj {
                for (fi, fm) in homs_obj[a][b].iter().enumerate() {
                    let (m, rep) =
                        derived_tensor_on_object(ctx, &cylinders[a][j], &cylinders[b][j], fm)?;
                    derived_reports.merge(rep);
                    tensor_obj.insert((a, b, j, fi), m);
                    let (m, rep) =
                        derived_cotensor_on_object(ctx, &paths[a][j], &paths[b][j], fm)?;
                    derived_reports.merge(rep);
                    cotensor_obj.insert((a, b, j, fi), m);
                }
            }
        }
    }

    Ok(Prepared {
        category: f.clone(),
        cylinders,
        paths,
        homs_obj,
        homs_par,
        tensor_par,
        tensor_obj,
        cotensor_par,
        cotensor_obj,
        derived_reports,
    })
}

/// Definition checks for the canonical structures over `objects × params`,
/// with the object pool as probes.
pub fn verify_definitions(ctx: &Ctx, f: &FixtureCategory) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("definitions");
    let probes: Vec<ProbeSpec> = f.objects.iter().map(|y| ProbeSpec::new(y, f.level)).collect();
    for x in &f.objects {
        for k in &f.params {
            let c = canonical_cylinder(ctx, x, k, &probes, f.level)?;
            report.merge(check_cylinder_def(ctx, &c)?);
            let p = canonical_path(ctx, x, k, &probes, f.level)?;
            report.merge(check_path_def(ctx, &p)?);
        }
    }
    Ok(report)
}

/// Theorem-level uniqueness: build the canonical structure, transport it
/// along an isomorphism, solve, and demand the exact transport back.
pub fn verify_uniqueness(ctx: &Ctx, f: &FixtureCategory) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("uniqueness");
    for x in &f.objects {
        for k in &f.params {
            // cylinders: shuffle along the swap X × K -> K × X
            let p_xk = ctx.product(x, k)?;
            let p_kx = ctx.product(k, x)?;
            let rho = swap_iso(&p_xk, &p_kx)?;
            let probes = vec![ProbeSpec::new(&p_xk.sset, 0), ProbeSpec::new(&p_kx.sset, 0)];
            let s1 = canonical_cylinder(ctx, x, k, &probes, f.level)?;
            let s2 = shuffle_cylinder(ctx, &s1, &rho)?;
            report.merge(check_cylinder_def(ctx, &s2)?);
            let (recovered, rep) = uniqueness_solve_cylinder(ctx, &s1, &s2)?;
            report.merge(rep);
            report.push(Check::of(
                "unique.cylinder.recover",
                format!("X={} K={}", x.name(), k.name()),
                recovered == rho.forward,
                || "solver did not return the transport isomorphism".to_string(),
            ));
            // identity shuffle resolves to the identity
            let (idmap, rep) = uniqueness_solve_cylinder(ctx, &s1, &s1)?;
            report.merge(rep);
            report.push(Check::of(
                "unique.cylinder.identity",
                format!("X={} K={}", x.name(), k.name()),
                idmap == SimplicialMap::identity(&s1.object),
                || "self-comparison did not solve to the identity".to_string(),
            ));

            // paths: shuffle along an automorphism of the path object
            let bare = canonical_path(ctx, x, k, &[], f.level)?;
            let probes = vec![ProbeSpec::new(&bare.object, 0)];
            let s1 = canonical_path(ctx, x, k, &probes, f.level)?;
            let auto = enumerate_maps(&s1.object, &s1.object, top(&s1.object))?
                .into_iter()
                .filter(|m| m.is_iso())
                .find(|m| *m != SimplicialMap::identity(&s1.object));
            let rho = match auto {
                Some(m) => Isomorphism { inverse: m.inverse().expect("iso"), forward: m },
                None => Isomorphism {
                    forward: SimplicialMap::identity(&s1.object),
                    inverse: SimplicialMap::identity(&s1.object),
                },
            };
            let s2 = shuffle_path(ctx, &s1, &rho)?;
            report.merge(check_path_def(ctx, &s2)?);
            let (recovered, rep) = uniqueness_solve_path(ctx, &s1, &s2)?;
            report.merge(rep);
            report.push(Check::of(
                "unique.path.recover",
                format!("X={} K={}", x.name(), k.name()),
                recovered == rho.forward,
                || "solver did not return the transport isomorphism".to_string(),
            ));
        }
    }
    Ok(report)
}

/// Functor laws for the derived actions in both slots, the interchange
/// identities, and agreement with the direct product/hom-action oracles.
pub fn verify_functoriality(ctx: &Ctx, prepared: &Prepared) -> Result<VerificationReport> {
    let f = &prepared.category;
    let mut report = VerificationReport::new("functoriality");
    report.merge(prepared.derived_reports.clone());
    let n_obj = f.objects.len();
    let n_par = f.params.len();

    let id_par: Vec<usize> = (0..n_par)
        .map(|j| {
            let id = SimplicialMap::identity(&f.params[j]);
            prepared.homs_par[j][j].iter().position(|m| *m == id).expect("identity present")
        })
        .collect();
    let id_obj: Vec<usize> = (0..n_obj)
        .map(|i| {
            let id = SimplicialMap::identity(&f.objects[i]);
            prepared.homs_obj[i][i].iter().position(|m| *m == id).expect("identity present")
        })
        .collect();

    // identity laws in all four actions
    for i in 0..n_obj {
        for j in 0..n_par {
            let inst = format!("X={} K={}", f.objects[i].name(), f.params[j].name());
            let t = prepared.tensor_of_param(i, j, j, id_par[j]);
            report.push(Check::of(
                "fun.tensor.id_param",
                inst.clone(),
                *t == SimplicialMap::identity(&prepared.cylinders[i][j].object),
                || "tensor of the identity parameter map is not the identity".into(),
            ));
            let t = prepared.tensor_of_object(i, i, j, id_obj[i]);
            report.push(Check::of(
                "fun.tensor.id_object",
                inst.clone(),
                *t == SimplicialMap::identity(&prepared.cylinders[i][j].object),
                || "tensor of the identity object map is not the identity".into(),
            ));
            let c = prepared.cotensor_of_param(i, j, j, id_par[j]);
            report.push(Check::of(
                "fun.path.id_param",
                inst.clone(),
                *c == SimplicialMap::identity(&prepared.paths[i][j].object),
                || "cotensor of the identity parameter map is not the identity".into(),
            ));
            let c = prepared.cotensor_of_object(i, i, j, id_obj[i]);
            report.push(Check::of(
                "fun.path.id_object",
                inst,
                *c == SimplicialMap::identity(&prepared.paths[i][j].object),
                || "cotensor of the identity object map is not the identity".into(),
            ));
        }
    }

    // composition in the parameter slot
    for i in 0..n_obj {
        for j in 0..n_par {
            for l in 0..n_par {
                for m in 0..n_par {
                    let mut bad = None;
                    let mut count = 0usize;
                    for (ui, u) in prepared.homs_par[j][l].iter().enumerate() {
                        for (vi, v) in prepared.homs_par[l][m].iter().enumerate() {
                            let vu = SimplicialMap::compose(v, u)?;
                            let vu_idx = prepared.homs_par[j][m]
                                .iter()
                                .position(|w| *w == vu)
                                .expect("hom-set closed under composition");
                            let lhs = prepared.tensor_of_param(i, j, m, vu_idx);
                            let rhs = SimplicialMap::compose(
                                prepared.tensor_of_param(i, l, m, vi),
                                prepared.tensor_of_param(i, j, l, ui),
                            )?;
                            count += 1;
                            if *lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "u={} v={}",
                                    map_label(&prepared.homs_par[j][l], ui),
                                    map_label(&prepared.homs_par[l][m], vi)
                                ));
                            }
                            // contravariant slot of the path functor
                            let lhs = prepared.cotensor_of_param(i, j, m, vu_idx);
                            let rhs = SimplicialMap::compose(
                                prepared.cotensor_of_param(i, j, l, ui),
                                prepared.cotensor_of_param(i, l, m, vi),
                            )?;
                            if *lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "cotensor u={} v={}",
                                    map_label(&prepared.homs_par[j][l], ui),
                                    map_label(&prepared.homs_par[l][m], vi)
                                ));
                            }
                        }
                    }
                    if count == 0 {
                        continue;
                    }
                    report.push(Check::of(
                        "fun.compose.param",
                        format!(
                            "X={} K={} L={} M={} ({count} pairs)",
                            f.objects[i].name(),
                            f.params[j].name(),
                            f.params[l].name(),
                            f.params[m].name()
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
    }

    // composition in the object slot
    for j in 0..n_par {
        for a in 0..n_obj {
            for b in 0..n_obj {
                for c in 0..n_obj {
                    let mut bad = None;
                    let mut count = 0usize;
                    for (fi, fm) in prepared.homs_obj[a][b].iter().enumerate() {
                        for (gi, gm) in prepared.homs_obj[b][c].iter().enumerate() {
                            let gf = SimplicialMap::compose(gm, fm)?;
                            let gf_idx = prepared.homs_obj[a][c]
                                .iter()
                                .position(|w| *w == gf)
                                .expect("hom-set closed under composition");
                            let lhs = prepared.tensor_of_object(a, c, j, gf_idx);
                            let rhs = SimplicialMap::compose(
                                prepared.tensor_of_object(b, c, j, gi),
                                prepared.tensor_of_object(a, b, j, fi),
                            )?;
                            count += 1;
                            if *lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "f={} g={}",
                                    map_label(&prepared.homs_obj[a][b], fi),
                                    map_label(&prepared.homs_obj[b][c], gi)
                                ));
                            }
                            let lhs = prepared.cotensor_of_object(a, c, j, gf_idx);
                            let rhs = SimplicialMap::compose(
                                prepared.cotensor_of_object(b, c, j, gi),
                                prepared.cotensor_of_object(a, b, j, fi),
                            )?;
                            if *lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "cotensor f={} g={}",
                                    map_label(&prepared.homs_obj[a][b], fi),
                                    map_label(&prepared.homs_obj[b][c], gi)
                                ));
                            }
                        }
                    }
                    if count == 0 {
                        continue;
                    }
                    report.push(Check::of(
                        "fun.compose.object",
                        format!(
                            "K={} X={} Y={} Z={} ({count} pairs)",
                            f.params[j].name(),
                            f.objects[a].name(),
                            f.objects[b].name(),
                            f.objects[c].name()
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
    }

    // interchange in both functors
    for a in 0..n_obj {
        for b in 0..n_obj {
            for j in 0..n_par {
                for l in 0..n_par {
                    let mut bad = None;
                    let mut count = 0usize;
                    for (fi, _) in prepared.homs_obj[a][b].iter().enumerate() {
                        for (ui, _) in prepared.homs_par[j][l].iter().enumerate() {
                            // (Y ⊗ u) ∘ (f ⊗ K) = (f ⊗ L) ∘ (X ⊗ u)
                            let lhs = SimplicialMap::compose(
                                prepared.tensor_of_param(b, j, l, ui),
                                prepared.tensor_of_object(a, b, j, fi),
                            )?;
                            let rhs = SimplicialMap::compose(
                                prepared.tensor_of_object(a, b, l, fi),
                                prepared.tensor_of_param(a, j, l, ui),
                            )?;
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "tensor f={} u={}",
                                    map_label(&prepared.homs_obj[a][b], fi),
                                    map_label(&prepared.homs_par[j][l], ui)
                                ));
                            }
                            // (f^K) ∘ (Y^u) = (X^u) ∘ (f^L)
                            let lhs = SimplicialMap::compose(
                                prepared.cotensor_of_object(a, b, j, fi),
                                prepared.cotensor_of_param(a, j, l, ui),
                            )?;
                            let rhs = SimplicialMap::compose(
                                prepared.cotensor_of_param(b, j, l, ui),
                                prepared.cotensor_of_object(a, b, l, fi),
                            )?;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "cotensor f={} u={}",
                                    map_label(&prepared.homs_obj[a][b], fi),
                                    map_label(&prepared.homs_par[j][l], ui)
                                ));
                            }
                        }
                    }
                    if count == 0 {
                        continue;
                    }
                    report.push(Check::of(
                        "fun.interchange",
                        format!(
                            "X={} Y={} K={} L={} ({count} pairs)",
                            f.objects[a].name(),
                            f.objects[b].name(),
                            f.params[j].name(),
                            f.params[l].name()
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
    }

    // direct oracles on the canonical structures
    for i in 0..n_obj {
        for j in 0..n_par {
            for l in 0..n_par {
                for (ui, u) in prepared.homs_par[j][l].iter().enumerate() {
                    let p_k = ctx.product(&f.objects[i], &f.params[j])?;
                    let p_l = ctx.product(&f.objects[i], &f.params[l])?;
                    let oracle =
                        p_k.product_map(&p_l, &SimplicialMap::identity(&f.objects[i]), u)?;
                    report.push(Check::of(
                        "fun.tensor.oracle_param",
                        format!(
                            "X={} u={}",
                            f.objects[i].name(),
                            map_label(&prepared.homs_par[j][l], ui)
                        ),
                        *prepared.tensor_of_param(i, j, l, ui) == oracle,
                        || "derived tensor differs from id × u".into(),
                    ));
                    let oracle = hom_action_pre(ctx, u, &f.objects[i], f.level)?;
                    report.push(Check::of(
                        "fun.path.oracle_param",
                        format!(
                            "X={} u={}",
                            f.objects[i].name(),
                            map_label(&prepared.homs_par[j][l], ui)
                        ),
                        *prepared.cotensor_of_param(i, j, l, ui) == oracle,
                        || "derived cotensor differs from precomposition".into(),
                    ));
                }
            }
        }
    }
    for j in 0..n_par {
        for a in 0..n_obj {
            for b in 0..n_obj {
                for (fi, fm) in prepared.homs_obj[a][b].iter().enumerate() {
                    let p_a = ctx.product(&f.objects[a], &f.params[j])?;
                    let p_b = ctx.product(&f.objects[b], &f.params[j])?;
                    let oracle =
                        p_a.product_map(&p_b, fm, &SimplicialMap::identity(&f.params[j]))?;
                    report.push(Check::of(
                        "fun.tensor.oracle_object",
                        format!(
                            "K={} f={}",
                            f.params[j].name(),
                            map_label(&prepared.homs_obj[a][b], fi)
                        ),
                        *prepared.tensor_of_object(a, b, j, fi) == oracle,
                        || "derived tensor differs from f × id".into(),
                    ));
                    let oracle = hom_action_post(ctx, &f.params[j], fm, f.level)?;
                    report.push(Check::of(
                        "fun.path.oracle_object",
                        format!(
                            "K={} f={}",
                            f.params[j].name(),
                            map_label(&prepared.homs_obj[a][b], fi)
                        ),
                        *prepared.cotensor_of_object(a, b, j, fi) == oracle,
                        || "derived cotensor differs from postcomposition".into(),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// One naturality equation, checked both ways.
///
/// `lhs`/`rhs` are the two composite maps of the direct square; the
/// transported form uncurries both into the shared inner complex. The two
/// verdicts must agree, and both must hold.
#[allow(clippy::too_many_arguments)]
fn check_both_routes(
    ctx: &Ctx,
    report: &mut VerificationReport,
    anchor: &str,
    instance: String,
    outer: &crate::enrich::FunctionComplex,
    lhs: &SimplicialMap,
    rhs: &SimplicialMap,
) -> Result<()> {
    let direct = lhs == rhs;
    let sharp_lhs = uncurry(ctx, outer, lhs)?;
    let sharp_rhs = uncurry(ctx, outer, rhs)?;
    let transported = sharp_lhs == sharp_rhs;
    report.push(Check::of(
        format!("{anchor}.square"),
        instance.clone(),
        direct,
        || "direct square does not commute".into(),
    ));
    report.push(Check::of(
        format!("{anchor}.sharp"),
        instance.clone(),
        transported,
        || "transported equation does not hold".into(),
    ));
    report.push(Check::of(
        format!("{anchor}.agree"),
        instance,
        direct == transported,
        || format!("direct verdict {direct} vs transported {transported}"),
    ));
    Ok(())
}

fn probe_for<'a>(
    s: &'a [ProbeIso],
    object: ObjectId,
    what: &str,
) -> Result<&'a ProbeIso> {
    s.iter().find(|p| p.probe.id() == object).ok_or_else(|| Error::ProbeMissing {
        probe: format!("{object:?}"),
        structure: what.to_string(),
    })
}

/// Naturality of the transposes in all three slots, verified both in
/// transported form and as direct squares; plus one mixed two-slot instance.
pub fn verify_naturality(ctx: &Ctx, prepared: &Prepared) -> Result<VerificationReport> {
    let f = &prepared.category;
    let mut report = VerificationReport::new("naturality");
    let d = f.level;
    let n_obj = f.objects.len();
    let n_par = f.params.len();

    // cylinder transpose, parameter slot
    for i in 0..n_obj {
        for y in 0..n_obj {
            for j in 0..n_par {
                for l in 0..n_par {
                    for (ui, u) in prepared.homs_par[j][l].iter().enumerate() {
                        let c_k = &prepared.cylinders[i][j];
                        let c_l = &prepared.cylinders[i][l];
                        let phi_k = probe_for(&c_k.transposes, f.objects[y].id(), "cylinder")?;
                        let phi_l = probe_for(&c_l.transposes, f.objects[y].id(), "cylinder")?;
                        let tensor_u = prepared.tensor_of_param(i, j, l, ui);
                        let act_tensor = hom_action_pre(ctx, tensor_u, &f.objects[y], d)?;
                        let act_param =
                            hom_action_pre(ctx, u, phi_l.inner_fc.carrier(), d)?;
                        let lhs = SimplicialMap::compose(&phi_k.iso, &act_tensor)?;
                        let rhs = SimplicialMap::compose(&act_param, &phi_l.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.cyl.param",
                            format!(
                                "X={} Y={} u={}",
                                f.objects[i].name(),
                                f.objects[y].name(),
                                map_label(&prepared.homs_par[j][l], ui)
                            ),
                            &phi_k.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // cylinder transpose, object slot
    for j in 0..n_par {
        for y in 0..n_obj {
            for a in 0..n_obj {
                for b in 0..n_obj {
                    for (ui, u) in prepared.homs_obj[a][b].iter().enumerate() {
                        let c_w = &prepared.cylinders[a][j];
                        let c_x = &prepared.cylinders[b][j];
                        let phi_w = probe_for(&c_w.transposes, f.objects[y].id(), "cylinder")?;
                        let phi_x = probe_for(&c_x.transposes, f.objects[y].id(), "cylinder")?;
                        let tensor_u = prepared.tensor_of_object(a, b, j, ui);
                        let act_tensor = hom_action_pre(ctx, tensor_u, &f.objects[y], d)?;
                        let inner_action = hom_action_pre(ctx, u, &f.objects[y], top(&f.params[j]) + d)?;
                        let act_inner =
                            hom_action_post(ctx, &f.params[j], &inner_action, d)?;
                        let lhs = SimplicialMap::compose(&phi_w.iso, &act_tensor)?;
                        let rhs = SimplicialMap::compose(&act_inner, &phi_x.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.cyl.object",
                            format!(
                                "K={} Y={} u={}",
                                f.params[j].name(),
                                f.objects[y].name(),
                                map_label(&prepared.homs_obj[a][b], ui)
                            ),
                            &phi_w.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // cylinder transpose, probe slot
    for i in 0..n_obj {
        for j in 0..n_par {
            for a in 0..n_obj {
                for b in 0..n_obj {
                    for (ui, u) in prepared.homs_obj[a][b].iter().enumerate() {
                        let c = &prepared.cylinders[i][j];
                        let phi_y = probe_for(&c.transposes, f.objects[a].id(), "cylinder")?;
                        let phi_z = probe_for(&c.transposes, f.objects[b].id(), "cylinder")?;
                        let act_post = hom_action_post(ctx, &c.object, u, d)?;
                        let inner_action = hom_action_post(ctx, &f.objects[i], u, top(&f.params[j]) + d)?;
                        let act_inner =
                            hom_action_post(ctx, &f.params[j], &inner_action, d)?;
                        let lhs = SimplicialMap::compose(&phi_z.iso, &act_post)?;
                        let rhs = SimplicialMap::compose(&act_inner, &phi_y.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.cyl.probe",
                            format!(
                                "X={} K={} u={}",
                                f.objects[i].name(),
                                f.params[j].name(),
                                map_label(&prepared.homs_obj[a][b], ui)
                            ),
                            &phi_z.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // path transpose, parameter slot
    for i in 0..n_obj {
        for y in 0..n_obj {
            for j in 0..n_par {
                for l in 0..n_par {
                    for (ui, u) in prepared.homs_par[j][l].iter().enumerate() {
                        let p_k = &prepared.paths[i][j];
                        let p_l = &prepared.paths[i][l];
                        let psi_k = probe_for(&p_k.transposes, f.objects[y].id(), "path")?;
                        let psi_l = probe_for(&p_l.transposes, f.objects[y].id(), "path")?;
                        let cot_u = prepared.cotensor_of_param(i, j, l, ui);
                        let act_cot = hom_action_post(ctx, &f.objects[y], cot_u, d)?;
                        let act_param =
                            hom_action_pre(ctx, u, psi_l.inner_fc.carrier(), d)?;
                        let lhs = SimplicialMap::compose(&psi_k.iso, &act_cot)?;
                        let rhs = SimplicialMap::compose(&act_param, &psi_l.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.path.param",
                            format!(
                                "X={} Y={} u={}",
                                f.objects[i].name(),
                                f.objects[y].name(),
                                map_label(&prepared.homs_par[j][l], ui)
                            ),
                            &psi_k.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // path transpose, probe slot
    for i in 0..n_obj {
        for j in 0..n_par {
            for a in 0..n_obj {
                for b in 0..n_obj {
                    for (ui, u) in prepared.homs_obj[a][b].iter().enumerate() {
                        let p = &prepared.paths[i][j];
                        let psi_y = probe_for(&p.transposes, f.objects[a].id(), "path")?;
                        let psi_z = probe_for(&p.transposes, f.objects[b].id(), "path")?;
                        let act_pre = hom_action_pre(ctx, u, &p.object, d)?;
                        let inner_action = hom_action_pre(ctx, u, &f.objects[i], top(&f.params[j]) + d)?;
                        let act_inner =
                            hom_action_post(ctx, &f.params[j], &inner_action, d)?;
                        let lhs = SimplicialMap::compose(&psi_y.iso, &act_pre)?;
                        let rhs = SimplicialMap::compose(&act_inner, &psi_z.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.path.probe",
                            format!(
                                "X={} K={} u={}",
                                f.objects[i].name(),
                                f.params[j].name(),
                                map_label(&prepared.homs_obj[a][b], ui)
                            ),
                            &psi_y.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // path transpose, object slot
    for y in 0..n_obj {
        for j in 0..n_par {
            for a in 0..n_obj {
                for b in 0..n_obj {
                    for (ui, u) in prepared.homs_obj[a][b].iter().enumerate() {
                        let p_w = &prepared.paths[a][j];
                        let p_x = &prepared.paths[b][j];
                        let psi_w = probe_for(&p_w.transposes, f.objects[y].id(), "path")?;
                        let psi_x = probe_for(&p_x.transposes, f.objects[y].id(), "path")?;
                        let cot_u = prepared.cotensor_of_object(a, b, j, ui);
                        let act_cot = hom_action_post(ctx, &f.objects[y], cot_u, d)?;
                        let inner_action = hom_action_post(ctx, &f.objects[y], u, top(&f.params[j]) + d)?;
                        let act_inner =
                            hom_action_post(ctx, &f.params[j], &inner_action, d)?;
                        let lhs = SimplicialMap::compose(&psi_x.iso, &act_cot)?;
                        let rhs = SimplicialMap::compose(&act_inner, &psi_w.iso)?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.path.object",
                            format!(
                                "Y={} K={} u={}",
                                f.objects[y].name(),
                                f.params[j].name(),
                                map_label(&prepared.homs_obj[a][b], ui)
                            ),
                            &psi_x.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                    }
                }
            }
        }
    }

    // one mixed instance: naturality in the parameter and probe slots at once
    'mixed: for i in 0..n_obj {
        for j in 0..n_par {
            for l in 0..n_par {
                if prepared.homs_par[j][l].is_empty() {
                    continue;
                }
                for a in 0..n_obj {
                    for b in 0..n_obj {
                        if prepared.homs_obj[a][b].is_empty() {
                            continue;
                        }
                        let u = &prepared.homs_par[j][l][0];
                        let v = &prepared.homs_obj[a][b][0];
                        let c_k = &prepared.cylinders[i][j];
                        let c_l = &prepared.cylinders[i][l];
                        let phi_k = probe_for(&c_k.transposes, f.objects[b].id(), "cylinder")?;
                        let phi_l = probe_for(&c_l.transposes, f.objects[a].id(), "cylinder")?;
                        let tensor_u = prepared.tensor_of_param(i, j, l, 0);
                        // route 1: act on both slots then transpose at (K, Z)
                        let act_tensor = hom_action_pre(ctx, tensor_u, &f.objects[a], d)?;
                        let act_post = hom_action_post(ctx, &c_k.object, v, d)?;
                        let phi_kb = probe_for(&c_k.transposes, f.objects[b].id(), "cylinder")?;
                        let lhs = SimplicialMap::compose(
                            &phi_kb.iso,
                            &SimplicialMap::compose(&act_post, &act_tensor)?,
                        )?;
                        // route 2: transpose at (L, Y) then act inside
                        let inner_post = hom_action_post(ctx, &f.objects[i], v, top(&f.params[j]).max(top(&f.params[l])) + d)?;
                        let act_inner = hom_action_post(ctx, &f.params[j], &inner_post, d)?;
                        let act_param = hom_action_pre(ctx, u, phi_l.inner_fc.carrier(), d)?;
                        let rhs = SimplicialMap::compose(
                            &act_inner,
                            &SimplicialMap::compose(&act_param, &phi_l.iso)?,
                        )?;
                        check_both_routes(
                            ctx,
                            &mut report,
                            "nat.cyl.mixed",
                            format!(
                                "X={} u={} v={}",
                                f.objects[i].name(),
                                map_label(&prepared.homs_par[j][l], 0),
                                map_label(&prepared.homs_obj[a][b], 0)
                            ),
                            &phi_k.outer_fc,
                            &lhs,
                            &rhs,
                        )?;
                        break 'mixed;
                    }
                }
            }
        }
    }

    Ok(report)
}

/// The three adjunction bijections, certified by counting, round-trips and
/// naturality squares over the fixture morphisms.
pub fn verify_adjunctions(ctx: &Ctx, prepared: &Prepared) -> Result<VerificationReport> {
    let f = &prepared.category;
    let mut report = VerificationReport::new("adjunctions");
    let n_obj = f.objects.len();
    let n_par = f.params.len();

    // transpose a map X⊗K -> Y through the cylinder structure at level 0
    let adj_tensor = |i: usize, j: usize, y: usize, m: &SimplicialMap| -> Result<SimplicialMap> {
        let c = &prepared.cylinders[i][j];
        let phi = probe_for(&c.transposes, f.objects[y].id(), "cylinder")?;
        let z = zero_cell(ctx, &phi.dom_fc, m)?;
        let cell = phi.iso.apply(&z.0);
        zero_cell_map(ctx, &phi.outer_fc, &EnrichedZeroSimplex(cell))
    };
    // transpose a map Y -> X^K through the path structure at level 0
    let adj_path = |i: usize, j: usize, y: usize, m: &SimplicialMap| -> Result<SimplicialMap> {
        let p = &prepared.paths[i][j];
        let psi = probe_for(&p.transposes, f.objects[y].id(), "path")?;
        let z = zero_cell(ctx, &psi.dom_fc, m)?;
        let cell = psi.iso.apply(&z.0);
        zero_cell_map(ctx, &psi.outer_fc, &EnrichedZeroSimplex(cell))
    };
    // inverse direction through the level-0 inverse of the transpose
    let adj_tensor_inv = |i: usize, j: usize, y: usize, m: &SimplicialMap| -> Result<SimplicialMap> {
        let c = &prepared.cylinders[i][j];
        let phi = probe_for(&c.transposes, f.objects[y].id(), "cylinder")?;
        let z = zero_cell(ctx, &phi.outer_fc, m)?;
        let dom0 = phi.dom_fc.carrier().level(0)?;
        let found = dom0
            .refs
            .iter()
            .find(|r| phi.iso.apply(r) == z.0)
            .ok_or_else(|| Error::Internal("transpose not onto at level 0".into()))?;
        zero_cell_map(ctx, &phi.dom_fc, &EnrichedZeroSimplex(found.clone()))
    };
    let adj_path_inv = |i: usize, j: usize, y: usize, m: &SimplicialMap| -> Result<SimplicialMap> {
        let p = &prepared.paths[i][j];
        let psi = probe_for(&p.transposes, f.objects[y].id(), "path")?;
        let z = zero_cell(ctx, &psi.outer_fc, m)?;
        let dom0 = psi.dom_fc.carrier().level(0)?;
        let found = dom0
            .refs
            .iter()
            .find(|r| psi.iso.apply(r) == z.0)
            .ok_or_else(|| Error::Internal("transpose not onto at level 0".into()))?;
        zero_cell_map(ctx, &psi.dom_fc, &EnrichedZeroSimplex(found.clone()))
    };

    for i in 0..n_obj {
        for j in 0..n_par {
            for y in 0..n_obj {
                let c = &prepared.cylinders[i][j];
                let p_yk = &prepared.paths[y][j];
                let phi = probe_for(&c.transposes, f.objects[y].id(), "cylinder")?;
                let inst = format!(
                    "X={} K={} Y={}",
                    f.objects[i].name(),
                    f.params[j].name(),
                    f.objects[y].name()
                );

                // tensor-hom: S(X⊗K, Y) ≅ sSet(K, hom(X,Y))
                let from = enumerate_maps(&c.object, &f.objects[y], top(&c.object))?;
                let to = enumerate_maps(&f.params[j], phi.inner_fc.carrier(), top(&f.params[j]))?;
                let mut images = Vec::new();
                let mut round_trip_ok = true;
                for m in &from {
                    let t = adj_tensor(i, j, y, m)?;
                    let back = adj_tensor_inv(i, j, y, &t)?;
                    round_trip_ok &= back == *m && to.contains(&t);
                    images.push(t);
                }
                images.sort_by(|a, b| a.assignments().cmp(b.assignments()));
                images.dedup();
                report.push(Check::of(
                    "adj.tensor.bijection",
                    format!("{inst} ({} maps)", from.len()),
                    images.len() == from.len() && from.len() == to.len() && round_trip_ok,
                    || {
                        format!(
                            "|S(X⊗K,Y)|={} |sSet(K,hom(X,Y))|={} distinct images={}",
                            from.len(),
                            to.len(),
                            images.len()
                        )
                    },
                ));

                // cotensor-hom: S(Y, X^K) ≅ sSet(K, hom(Y,X))
                let p = &prepared.paths[i][j];
                let psi = probe_for(&p.transposes, f.objects[y].id(), "path")?;
                let from = enumerate_maps(&f.objects[y], &p.object, top(&f.objects[y]))?;
                let to = enumerate_maps(&f.params[j], psi.inner_fc.carrier(), top(&f.params[j]))?;
                let mut images = Vec::new();
                let mut round_trip_ok = true;
                for m in &from {
                    let t = adj_path(i, j, y, m)?;
                    let back = adj_path_inv(i, j, y, &t)?;
                    round_trip_ok &= back == *m && to.contains(&t);
                    images.push(t);
                }
                images.sort_by(|a, b| a.assignments().cmp(b.assignments()));
                images.dedup();
                report.push(Check::of(
                    "adj.path.bijection",
                    format!("{inst} ({} maps)", from.len()),
                    images.len() == from.len() && from.len() == to.len() && round_trip_ok,
                    || {
                        format!(
                            "|S(Y,X^K)|={} |sSet(K,hom(Y,X))|={} distinct images={}",
                            from.len(),
                            to.len(),
                            images.len()
                        )
                    },
                ));

                // the third adjunction: S(X⊗K, Y) ≅ S(X, Y^K) via the
                // composite of the first transpose with the inverse of the
                // second (path structure of Y over K, probed at X)
                let from = enumerate_maps(&c.object, &f.objects[y], top(&c.object))?;
                let to = enumerate_maps(&f.objects[i], &p_yk.object, top(&f.objects[i]))?;
                let mut images = Vec::new();
                let mut round_trip_ok = true;
                for m in &from {
                    let curried = adj_tensor(i, j, y, m)?;
                    let through = adj_path_inv(y, j, i, &curried)?;
                    let back_curried = adj_path(y, j, i, &through)?;
                    let back = adj_tensor_inv(i, j, y, &back_curried)?;
                    round_trip_ok &= back == *m && to.contains(&through);
                    images.push(through);
                }
                images.sort_by(|a, b| a.assignments().cmp(b.assignments()));
                images.dedup();
                report.push(Check::of(
                    "adj.third.bijection",
                    format!("{inst} ({} maps)", from.len()),
                    images.len() == from.len() && from.len() == to.len() && round_trip_ok,
                    || {
                        format!(
                            "|S(X⊗K,Y)|={} |S(X,Y^K)|={} distinct images={}",
                            from.len(),
                            to.len(),
                            images.len()
                        )
                    },
                ));
            }
        }
    }

    // naturality of the tensor-hom bijection in all three variables
    for i in 0..n_obj {
        for j in 0..n_par {
            for y in 0..n_obj {
                let c = &prepared.cylinders[i][j];
                let from = enumerate_maps(&c.object, &f.objects[y], top(&c.object))?;
                // in Y along v: Y -> Z
                for z in 0..n_obj {
                    let mut bad = None;
                    let mut count = 0usize;
                    for (vi, v) in prepared.homs_obj[y][z].iter().enumerate() {
                        let act = hom_action_post(ctx, &f.objects[i], v, top(&f.params[j]) + f.level)?;
                        for m in &from {
                            let lhs = adj_tensor(i, j, z, &SimplicialMap::compose(v, m)?)?;
                            let rhs = SimplicialMap::compose(&act, &adj_tensor(i, j, y, m)?)?;
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "v={} map#{count}",
                                    map_label(&prepared.homs_obj[y][z], vi)
                                ));
                            }
                        }
                    }
                    if count == 0 {
                        continue;
                    }
                    report.push(Check::of(
                        "adj.tensor.natural_target",
                        format!(
                            "X={} K={} Y={} Z={} ({count} instances)",
                            f.objects[i].name(),
                            f.params[j].name(),
                            f.objects[y].name(),
                            f.objects[z].name()
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
                // in K along u: K' -> K
                for l in 0..n_par {
                    let mut bad = None;
                    let mut count = 0usize;
                    for (ui, u) in prepared.homs_par[l][j].iter().enumerate() {
                        let tensor_u = prepared.tensor_of_param(i, l, j, ui);
                        for m in &from {
                            let lhs =
                                adj_tensor(i, l, y, &SimplicialMap::compose(m, tensor_u)?)?;
                            let rhs = SimplicialMap::compose(&adj_tensor(i, j, y, m)?, u)?;
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!(
                                    "u={} map#{count}",
                                    map_label(&prepared.homs_par[l][j], ui)
                                ));
                            }
                        }
                    }
                    if count == 0 {
                        continue;
                    }
                    report.push(Check::of(
                        "adj.tensor.natural_param",
                        format!(
                            "X={} K={} K'={} Y={} ({count} instances)",
                            f.objects[i].name(),
                            f.params[j].name(),
                            f.params[l].name(),
                            f.objects[y].name()
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// The connecting lemmas: the level-0 transpose of a morphism's zero cell is
/// the zero cell of the induced structure-map composite, and the levelwise
/// squares tying the derived actions to constant cells.
pub fn verify_lemma_squares(ctx: &Ctx, prepared: &Prepared) -> Result<VerificationReport> {
    let f = &prepared.category;
    let mut report = VerificationReport::new("lemmas");
    let d = f.level;
    let n_obj = f.objects.len();
    let n_par = f.params.len();

    // cylinder bridge: φ₀(zero cell of m) = zero cell of hom(X, m) ∘ coeval
    for i in 0..n_obj {
        for j in 0..n_par {
            let c = &prepared.cylinders[i][j];
            for y in 0..n_obj {
                let phi = probe_for(&c.transposes, f.objects[y].id(), "cylinder")?;
                let mut bad = None;
                let mut count = 0usize;
                for m in enumerate_maps(&c.object, &f.objects[y], top(&c.object))? {
                    let z = zero_cell(ctx, &phi.dom_fc, &m)?;
                    let lhs = phi.iso.apply(&z.0);
                    // hom(X, m) ∘ coeval, pointwise on the parameter
                    let mut assign = Vec::new();
                    for s in c.k.all_nondeg() {
                        let n = c.k.dim_of(s);
                        let cell = c.coeval_fc.map_for_ref(ctx, c.coeval.assignment(s))?;
                        assign.push(
                            phi.inner_fc
                                .simplex_for_map(&SimplicialMap::compose(&m, &cell)?, n)?,
                        );
                    }
                    let composite =
                        SimplicialMap::new(c.k.clone(), phi.inner_fc.carrier().clone(), assign)?;
                    let rhs = zero_cell(ctx, &phi.outer_fc, &composite)?;
                    count += 1;
                    if lhs != rhs.0 && bad.is_none() {
                        bad = Some(format!("map#{}", count - 1));
                    }
                }
                report.push(Check::of(
                    "lemma.bridge.cylinder",
                    format!(
                        "X={} K={} Y={} ({count} maps)",
                        f.objects[i].name(),
                        f.params[j].name(),
                        f.objects[y].name()
                    ),
                    bad.is_none(),
                    || bad.unwrap(),
                ));
            }
        }
    }

    // path bridge: ψ₀(zero cell of m) = zero cell of hom(m, X) ∘ eval
    for i in 0..n_obj {
        for j in 0..n_par {
            let p = &prepared.paths[i][j];
            for y in 0..n_obj {
                let psi = probe_for(&p.transposes, f.objects[y].id(), "path")?;
                let mut bad = None;
                let mut count = 0usize;
                for m in enumerate_maps(&f.objects[y], &p.object, top(&f.objects[y]))? {
                    let z = zero_cell(ctx, &psi.dom_fc, &m)?;
                    let lhs = psi.iso.apply(&z.0);
                    let mut assign = Vec::new();
                    for s in p.k.all_nondeg() {
                        let n = p.k.dim_of(s);
                        let cell = p.eval_fc.map_for_ref(ctx, p.eval.assignment(s))?;
                        let dn = ctx.delta(n);
                        let p_dom = ctx.product(&f.objects[y], &dn)?;
                        let p_cod = ctx.product(&p.object, &dn)?;
                        let widened =
                            p_dom.product_map(&p_cod, &m, &SimplicialMap::identity(&dn))?;
                        assign.push(
                            psi.inner_fc
                                .simplex_for_map(&SimplicialMap::compose(&cell, &widened)?, n)?,
                        );
                    }
                    let composite =
                        SimplicialMap::new(p.k.clone(), psi.inner_fc.carrier().clone(), assign)?;
                    let rhs = zero_cell(ctx, &psi.outer_fc, &composite)?;
                    count += 1;
                    if lhs != rhs.0 && bad.is_none() {
                        bad = Some(format!("map#{}", count - 1));
                    }
                }
                report.push(Check::of(
                    "lemma.bridge.path",
                    format!(
                        "X={} K={} Y={} ({count} maps)",
                        f.objects[i].name(),
                        f.params[j].name(),
                        f.objects[y].name()
                    ),
                    bad.is_none(),
                    || bad.unwrap(),
                ));
            }
        }
    }

    // levelwise squares for the object-slot actions
    for j in 0..n_par {
        let k = &f.params[j];
        for a in 0..n_obj {
            for b in 0..n_obj {
                for (ui, u) in prepared.homs_obj[a][b].iter().enumerate() {
                    // tensor: const(u ⊗ K) ∘ coeval_a = coeval_b ∘ const(u)
                    let c_a = &prepared.cylinders[a][j];
                    let c_b = &prepared.cylinders[b][j];
                    let g = prepared.tensor_of_object(a, b, j, ui);
                    let fc_ab = ctx.fncx(&f.objects[a], &f.objects[b], top(k) + d)?;
                    let fc_objs = ctx.fncx(&c_a.object, &c_b.object, d)?;
                    let fc_mixed = ctx.fncx(&f.objects[a], &c_b.object, d.max(top(k)))?;
                    let mut bad = None;
                    let mut count = 0usize;
                    for n in 0..=d {
                        let cg = constant_cell(ctx, &fc_objs, g, n)?;
                        let cu = constant_cell(ctx, &fc_ab, u, n)?;
                        for kk in &k.level(n)?.refs {
                            let lhs = enriched_compose(
                                ctx,
                                &c_a.coeval_fc,
                                &fc_objs,
                                &fc_mixed,
                                &c_a.coeval.apply(kk),
                                &cg,
                            )?;
                            let rhs = enriched_compose(
                                ctx,
                                &fc_ab,
                                &c_b.coeval_fc,
                                &fc_mixed,
                                &cu,
                                &c_b.coeval.apply(kk),
                            )?;
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!("n={n} k={}", k.display_ref(kk)));
                            }
                        }
                    }
                    report.push(Check::of(
                        "lemma.level.tensor",
                        format!(
                            "K={} u={} ({count} instances)",
                            k.name(),
                            map_label(&prepared.homs_obj[a][b], ui)
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));

                    // cotensor: const(u) ∘ eval_a = eval_b ∘ const(u^K)
                    let p_a = &prepared.paths[a][j];
                    let p_b = &prepared.paths[b][j];
                    let g = prepared.cotensor_of_object(a, b, j, ui);
                    let fc_objs = ctx.fncx(&p_a.object, &p_b.object, d)?;
                    let fc_mixed = ctx.fncx(&p_a.object, &f.objects[b], d.max(top(k)))?;
                    let mut bad = None;
                    let mut count = 0usize;
                    for n in 0..=d {
                        let cg = constant_cell(ctx, &fc_objs, g, n)?;
                        let cu = constant_cell(ctx, &fc_ab, u, n)?;
                        for kk in &k.level(n)?.refs {
                            let lhs = enriched_compose(
                                ctx,
                                &p_a.eval_fc,
                                &fc_ab,
                                &fc_mixed,
                                &p_a.eval.apply(kk),
                                &cu,
                            )?;
                            let rhs = enriched_compose(
                                ctx,
                                &fc_objs,
                                &p_b.eval_fc,
                                &fc_mixed,
                                &cg,
                                &p_b.eval.apply(kk),
                            )?;
                            count += 1;
                            if lhs != rhs && bad.is_none() {
                                bad = Some(format!("n={n} k={}", k.display_ref(kk)));
                            }
                        }
                    }
                    report.push(Check::of(
                        "lemma.level.cotensor",
                        format!(
                            "K={} u={} ({count} instances)",
                            k.name(),
                            map_label(&prepared.homs_obj[a][b], ui)
                        ),
                        bad.is_none(),
                        || bad.unwrap(),
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Which suites to run, in dependency order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Cylinder,
    Path,
    Uniqueness,
    Lemmas,
    Functoriality,
    Naturality,
}

pub struct RunConfig {
    pub axiom_fixtures: Vec<SSet>,
    pub category: FixtureCategory,
    pub suites: Vec<Suite>,
}

/// Run the requested suites in dependency order and aggregate the reports.
pub fn run_suite(ctx: &Ctx, cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("all");
    if cfg.category.objects.is_empty() && cfg.category.params.is_empty() && cfg.axiom_fixtures.is_empty() {
        report.push(Check::pass("suite.config", "empty fixture list (vacuous, warning)"));
        return Ok(report);
    }
    let needs_prepared = cfg.suites.iter().any(|s| {
        matches!(s, Suite::Lemmas | Suite::Functoriality | Suite::Naturality)
    });
    let prepared = if needs_prepared { Some(prepare(ctx, &cfg.category)?) } else { None };
    for suite in &cfg.suites {
        match suite {
            Suite::Axioms => report.merge(crate::axioms::check_enrichment_axioms(
                ctx,
                &cfg.axiom_fixtures,
                cfg.category.level,
            )?),
            Suite::Cylinder | Suite::Path => {
                let defs = verify_definitions(ctx, &cfg.category)?;
                let keep = |anchor: &str| match suite {
                    Suite::Cylinder => anchor.starts_with("cylinder"),
                    _ => anchor.starts_with("path"),
                };
                let mut filtered = VerificationReport::new(defs.suite.clone());
                for c in defs.checks {
                    if keep(&c.anchor) {
                        filtered.push(c);
                    }
                }
                report.merge(filtered);
            }
            Suite::Uniqueness => report.merge(verify_uniqueness(ctx, &cfg.category)?),
            Suite::Lemmas => {
                report.merge(verify_lemma_squares(ctx, prepared.as_ref().expect("prepared"))?)
            }
            Suite::Functoriality => {
                report.merge(verify_functoriality(ctx, prepared.as_ref().expect("prepared"))?)
            }
            Suite::Naturality => {
                let p = prepared.as_ref().expect("prepared");
                report.merge(verify_naturality(ctx, p)?);
                report.merge(verify_adjunctions(ctx, p)?);
            }
        }
    }
    Ok(report)
}
