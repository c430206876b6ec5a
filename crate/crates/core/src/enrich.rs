//! The simplicial enrichment of finite simplicial sets.
//!
//! The function complex of `(X, Y)` has the maps `X × Δ[n] -> Y` as its
//! n-simplices; the operator action is precomposition with `id × Δ[θ]`.
//! On top of it live the zero-cell correspondence with plain maps, the
//! contravariant/covariant hom actions, the enriched composition of
//! cells (a single composite with an explicitly recorded re-bracketing),
//! the evaluation map and the currying bijection.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::ord::{MonotoneMap, Surjection};
use crate::product::{assoc_iso, unit_r_iso};
use crate::smap::{enumerate_maps, yoneda, SimplicialMap};
use crate::sset::{SSet, SSetBuilder, SimplexRef};

/// The map `Δ[n] -> Δ[m]` induced by a monotone `θ: [n] -> [m]`.
pub fn simplex_operator_map(ctx: &Ctx, theta: &MonotoneMap) -> Result<SimplicialMap> {
    let dn = ctx.delta(theta.source_dim());
    let dm = ctx.delta(theta.target_dim());
    let top = dm.canonical(dm.nondeg(theta.target_dim())[0]);
    let image = dm.act(&top, theta)?;
    yoneda(&dn, &dm, &image)
}

/// A map `X -> Y` collapsing everything onto the vertex `v` of `Y`.
pub fn constant_map(x: &SSet, y: &SSet, v: crate::sset::SimplexId) -> Result<SimplicialMap> {
    let assign = x
        .all_nondeg()
        .map(|s| SimplexRef { base: v, deg: Surjection::terminal(x.dim_of(s)) })
        .collect();
    SimplicialMap::new(x.clone(), y.clone(), assign)
}

/// A truncated function complex: the carrier simplicial set whose
/// nondegenerate n-simplices each own an underlying map `X × Δ[n] -> Y`,
/// with lookup tables in both directions for every level up to the
/// materialization bound.
pub struct FunctionComplex {
    source: SSet,
    target: SSet,
    level: usize,
    carrier: SSet,
    /// underlying map of each nondegenerate carrier simplex
    underlying: Vec<SimplicialMap>,
    /// per level n: map assignments -> canonical carrier form
    tables: Vec<FxHashMap<Vec<SimplexRef>, SimplexRef>>,
}

impl FunctionComplex {
    /// Materialize `hom(x, y)` up to level `d`. The target must be faithful
    /// up to `top(x) + d`, the top dimension touched by the enumerations.
    pub fn build(ctx: &Ctx, x: &SSet, y: &SSet, d: usize) -> Result<Arc<FunctionComplex>> {
        if let Some(xt) = x.top_dim() {
            if !y.supports(xt + d) {
                return Err(Error::Truncation {
                    what: format!("hom({},{}) at level {d}", x.name(), y.name()),
                    needed: xt + d,
                    available: y.trunc(),
                });
            }
        }
        let mut b = SSetBuilder::annotated(format!("hom({},{})", x.name(), y.name()), Some(d));
        let mut underlying: Vec<SimplicialMap> = Vec::new();
        let mut nondeg_dims: Vec<usize> = Vec::new();
        let mut tables: Vec<FxHashMap<Vec<SimplexRef>, SimplexRef>> = Vec::new();

        for n in 0..=d {
            let dom = ctx.product(x, &ctx.delta(n))?;
            let dom_top = dom.sset.top_dim().unwrap_or(0);
            let maps = enumerate_maps(&dom.sset, y, dom_top)?;
            let mut table: FxHashMap<Vec<SimplexRef>, SimplexRef> = FxHashMap::default();

            // all degenerate n-simplices: lower nondegenerate cells acted on
            // by a proper degeneracy, realized as precomposition
            for (id, dim) in nondeg_dims.iter().enumerate() {
                let m = *dim;
                if m >= n {
                    continue;
                }
                for eta in MonotoneMap::surjections(n, m) {
                    let op = simplex_operator_map(ctx, eta.as_monotone())?;
                    let dom_m = ctx.product(x, &ctx.delta(m))?;
                    let pre = dom.product_map(&dom_m, &SimplicialMap::identity(x), &op)?;
                    let image = SimplicialMap::compose(&underlying[id], &pre)?;
                    let r = SimplexRef { base: crate::sset::SimplexId(id), deg: eta };
                    table.insert(image.assignments().to_vec(), r);
                }
            }
            // the rest are nondegenerate; enumeration order names them
            let mut fresh = Vec::new();
            for map in maps {
                if table.contains_key(map.assignments()) {
                    continue;
                }
                let id = b.add_simplex(format!("f{}_{}", n, fresh.len()), n);
                debug_assert_eq!(id.0, underlying.len());
                table.insert(map.assignments().to_vec(), SimplexRef::nondegenerate(id, n));
                underlying.push(map);
                nondeg_dims.push(n);
                fresh.push(id);
            }
            // faces of the new cells: precomposition with id × Δ[coface]
            if n > 0 {
                for id in fresh {
                    let mut faces = Vec::with_capacity(n + 1);
                    for i in 0..=n {
                        let op = simplex_operator_map(ctx, &MonotoneMap::coface(n, i))?;
                        let dom_m = ctx.product(x, &ctx.delta(n - 1))?;
                        let pre = dom_m.product_map(&dom, &SimplicialMap::identity(x), &op)?;
                        let image = SimplicialMap::compose(&underlying[id.0], &pre)?;
                        faces.push(
                            tables[n - 1]
                                .get(image.assignments())
                                .cloned()
                                .ok_or_else(|| {
                                    Error::Internal(format!(
                                        "face of hom-cell missing at level {}",
                                        n - 1
                                    ))
                                })?,
                        );
                    }
                    b.set_faces(id, faces);
                }
            }
            tables.push(table);
        }
        let carrier = b.finish()?;
        Ok(Arc::new(FunctionComplex {
            source: x.clone(),
            target: y.clone(),
            level: d,
            carrier,
            underlying,
            tables,
        }))
    }

    pub fn source(&self) -> &SSet {
        &self.source
    }

    pub fn target(&self) -> &SSet {
        &self.target
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn carrier(&self) -> &SSet {
        &self.carrier
    }

    /// Level-n cell with the given underlying assignment vector, if any.
    pub fn lookup_assignments(&self, n: usize, assignments: &[SimplexRef]) -> Option<&SimplexRef> {
        self.tables.get(n)?.get(assignments)
    }

    /// The canonical carrier simplex of a map `X × Δ[n] -> Y`.
    pub fn simplex_for_map(&self, m: &SimplicialMap, n: usize) -> Result<SimplexRef> {
        if n > self.level {
            return Err(Error::Truncation {
                what: format!("cell lookup in {}", self.carrier.name()),
                needed: n,
                available: Some(self.level),
            });
        }
        self.tables[n].get(m.assignments()).cloned().ok_or_else(|| {
            Error::Internal(format!(
                "map into {} is not a level-{n} cell of {}",
                self.target.name(),
                self.carrier.name()
            ))
        })
    }

    /// The underlying map `X × Δ[n] -> Y` of an arbitrary carrier simplex:
    /// the base's map precomposed with `id × Δ[degeneracy]`.
    pub fn map_for_ref(&self, ctx: &Ctx, r: &SimplexRef) -> Result<SimplicialMap> {
        let base = &self.underlying[r.base.0];
        if r.deg.is_identity() {
            return Ok(base.clone());
        }
        let n = r.dim();
        let m = r.deg.target_dim();
        let dom_n = ctx.product(&self.source, &ctx.delta(n))?;
        let dom_m = ctx.product(&self.source, &ctx.delta(m))?;
        let op = simplex_operator_map(ctx, r.deg.as_monotone())?;
        let pre = dom_n.product_map(&dom_m, &SimplicialMap::identity(&self.source), &op)?;
        SimplicialMap::compose(base, &pre)
    }
}

/// A zero cell of a function complex; wraps the canonical form of a plain map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedZeroSimplex(pub SimplexRef);

/// The zero cell of a plain map `f: X -> Y`: its underlying map is
/// `f ∘ r_X` for the right unit `r_X: X × Δ[0] -> X`.
pub fn zero_cell(ctx: &Ctx, fc: &FunctionComplex, f: &SimplicialMap) -> Result<EnrichedZeroSimplex> {
    if f.dom.id() != fc.source().id() || f.cod.id() != fc.target().id() {
        return Err(Error::DomainMismatch(format!(
            "zero cell of {} -> {} in {}",
            f.dom.name(),
            f.cod.name(),
            fc.carrier().name()
        )));
    }
    let p = ctx.product(fc.source(), &ctx.delta(0))?;
    let unit = unit_r_iso(&p)?;
    let m = SimplicialMap::compose(f, &unit.forward)?;
    Ok(EnrichedZeroSimplex(fc.simplex_for_map(&m, 0)?))
}

/// The plain map of a zero cell; inverse of [`zero_cell`].
pub fn zero_cell_map(ctx: &Ctx, fc: &FunctionComplex, z: &EnrichedZeroSimplex) -> Result<SimplicialMap> {
    let p = ctx.product(fc.source(), &ctx.delta(0))?;
    let unit = unit_r_iso(&p)?;
    let m = fc.map_for_ref(ctx, &z.0)?;
    SimplicialMap::compose(&m, &unit.inverse)
}

/// The n-fold degenerate cell on the zero cell of `f` — the collapse
/// operator `[n] ->> [0]` acting on `zero_cell(f)`.
pub fn constant_cell(ctx: &Ctx, fc: &FunctionComplex, f: &SimplicialMap, n: usize) -> Result<SimplexRef> {
    let z = zero_cell(ctx, fc, f)?;
    Ok(SimplexRef { base: z.0.base, deg: Surjection::terminal(n) })
}

/// Contravariant hom action: precomposition with `u: Z -> X`, as a map of
/// carriers `hom(X,Y) -> hom(Z,Y)` materialized at level `d`.
pub fn hom_action_pre(ctx: &Ctx, u: &SimplicialMap, y: &SSet, d: usize) -> Result<SimplicialMap> {
    let fc_xy = ctx.fncx(&u.cod, y, d)?;
    let fc_zy = ctx.fncx(&u.dom, y, d)?;
    let mut assign = Vec::new();
    for s in fc_xy.carrier().all_nondeg() {
        let n = fc_xy.carrier().dim_of(s);
        let dom_z = ctx.product(&u.dom, &ctx.delta(n))?;
        let dom_x = ctx.product(&u.cod, &ctx.delta(n))?;
        let pre = dom_z.product_map(&dom_x, u, &SimplicialMap::identity(&ctx.delta(n)))?;
        let image = SimplicialMap::compose(&fc_xy.map_for_ref(ctx, &fc_xy.carrier().canonical(s))?, &pre)?;
        assign.push(fc_zy.simplex_for_map(&image, n)?);
    }
    SimplicialMap::new(fc_xy.carrier().clone(), fc_zy.carrier().clone(), assign)
}

/// Covariant hom action: postcomposition with `v: Y -> Z`, as a map of
/// carriers `hom(X,Y) -> hom(X,Z)` materialized at level `d`.
pub fn hom_action_post(ctx: &Ctx, x: &SSet, v: &SimplicialMap, d: usize) -> Result<SimplicialMap> {
    let fc_xy = ctx.fncx(x, &v.dom, d)?;
    let fc_xz = ctx.fncx(x, &v.cod, d)?;
    let mut assign = Vec::new();
    for s in fc_xy.carrier().all_nondeg() {
        let n = fc_xy.carrier().dim_of(s);
        let cell = fc_xy.map_for_ref(ctx, &fc_xy.carrier().canonical(s))?;
        let image = SimplicialMap::compose(v, &cell)?;
        assign.push(fc_xz.simplex_for_map(&image, n)?);
    }
    SimplicialMap::new(fc_xy.carrier().clone(), fc_xz.carrier().clone(), assign)
}

/// Which composite the enriched composition uses; the mutated variant exists
/// for fault-injection in the harness sensitivity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ComposeVariant {
    #[default]
    Canonical,
    /// replaces the diagonal of Δ[n] with `(id, collapse to vertex 0)`
    SkipDiagonal,
}

/// Enriched composition of an n-cell `f` of `hom(X,Y)` with an n-cell `g` of
/// `hom(Y,Z)` ("g after f"): the literal composite
/// `g ∘ (f × id) ∘ assoc⁻¹ ∘ (id × diagonal)`, with the bracketing
/// `X × (Δ[n] × Δ[n])  ≅  (X × Δ[n]) × Δ[n]` fixed by the canonical
/// associativity isomorphism.
pub fn enriched_compose(
    ctx: &Ctx,
    fc_xy: &FunctionComplex,
    fc_yz: &FunctionComplex,
    fc_xz: &FunctionComplex,
    f: &SimplexRef,
    g: &SimplexRef,
) -> Result<SimplexRef> {
    enriched_compose_with(ctx, fc_xy, fc_yz, fc_xz, f, g, ComposeVariant::Canonical)
}

pub fn enriched_compose_with(
    ctx: &Ctx,
    fc_xy: &FunctionComplex,
    fc_yz: &FunctionComplex,
    fc_xz: &FunctionComplex,
    f: &SimplexRef,
    g: &SimplexRef,
    variant: ComposeVariant,
) -> Result<SimplexRef> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "enriched composition of cells in dimensions {} and {}",
            f.dim(),
            g.dim()
        )));
    }
    if fc_xy.target().id() != fc_yz.source().id()
        || fc_xy.source().id() != fc_xz.source().id()
        || fc_yz.target().id() != fc_xz.target().id()
    {
        return Err(Error::DomainMismatch(
            "function complexes do not form a composable triple".to_string(),
        ));
    }
    let n = f.dim();
    let x = fc_xy.source();
    let y = fc_xy.target();
    let dn = ctx.delta(n);

    let p_x_dn = ctx.product(x, &dn)?;
    let p_dn_dn = ctx.product(&dn, &dn)?;
    let p_x_dndn = ctx.product(x, &p_dn_dn.sset)?;
    let p_xdn_dn = ctx.product(&p_x_dn.sset, &dn)?;
    let p_y_dn = ctx.product(y, &dn)?;

    let second = match variant {
        ComposeVariant::Canonical => p_dn_dn.diagonal()?,
        ComposeVariant::SkipDiagonal => {
            let collapse = constant_map(&dn, &dn, dn.nondeg(0)[0])?;
            p_dn_dn.pair_map(&SimplicialMap::identity(&dn), &collapse)?
        }
    };
    let widen = p_x_dn.product_map(&p_x_dndn, &SimplicialMap::identity(x), &second)?;
    let rebracket = assoc_iso(&p_x_dn, &p_xdn_dn, &p_dn_dn, &p_x_dndn)?.inverse;
    let f_hat = fc_xy.map_for_ref(ctx, f)?;
    let f_wide = p_xdn_dn.product_map(&p_y_dn, &f_hat, &SimplicialMap::identity(&dn))?;
    let g_hat = fc_yz.map_for_ref(ctx, g)?;

    let total = SimplicialMap::compose(
        &g_hat,
        &SimplicialMap::compose(&f_wide, &SimplicialMap::compose(&rebracket, &widen)?)?,
    )?;
    fc_xz.simplex_for_map(&total, n)
}

/// The evaluation map `X × hom(X,Y) -> Y`: an n-simplex `(x, F)` goes to the
/// value of `F`'s underlying map on `(x, id_[n])`.
pub fn evaluation_map(ctx: &Ctx, fc: &FunctionComplex) -> Result<SimplicialMap> {
    let x = fc.source();
    let dom = ctx.product(x, fc.carrier())?;
    let mut assign = Vec::new();
    for s in dom.sset.all_nondeg() {
        let (a, cell) = dom.components(s).clone();
        let n = a.dim();
        let f_hat = fc.map_for_ref(ctx, &cell)?;
        let p_x_dn = ctx.product(x, &ctx.delta(n))?;
        let dn = ctx.delta(n);
        let top = dn.canonical(dn.nondeg(n)[0]);
        assign.push(f_hat.apply(&p_x_dn.pair_ref(&a, &top)?));
    }
    SimplicialMap::new(dom.sset.clone(), fc.target().clone(), assign)
}

/// Uncurry `u: K -> hom(X,Y)` into `X × K -> Y` as `ev ∘ (id × u)`, and
/// cross-check against the pointwise law
/// `(x_n, k_n) -> (u(k_n))(x_n, id_n)`.
pub fn uncurry(ctx: &Ctx, fc: &FunctionComplex, u: &SimplicialMap) -> Result<SimplicialMap> {
    if u.cod.id() != fc.carrier().id() {
        return Err(Error::DomainMismatch(format!(
            "uncurry target {} is not the carrier {}",
            u.cod.name(),
            fc.carrier().name()
        )));
    }
    let x = fc.source();
    let k = &u.dom;
    let p_xk = ctx.product(x, k)?;
    let p_x_carrier = ctx.product(x, fc.carrier())?;
    let widened = p_xk.product_map(&p_x_carrier, &SimplicialMap::identity(x), u)?;
    let ev = evaluation_map(ctx, fc)?;
    let composite = SimplicialMap::compose(&ev, &widened)?;

    // pointwise cross-check on every nondegenerate pair
    for s in p_xk.sset.all_nondeg() {
        let (a, kk) = p_xk.components(s).clone();
        let n = a.dim();
        let cell = u.apply(&kk);
        let f_hat = fc.map_for_ref(ctx, &cell)?;
        let dn = ctx.delta(n);
        let top = dn.canonical(dn.nondeg(n)[0]);
        let expected = f_hat.apply(&ctx.product(x, &dn)?.pair_ref(&a, &top)?);
        if &expected != composite.assignment(s) {
            return Err(Error::Internal(
                "uncurry composite disagrees with the pointwise law".to_string(),
            ));
        }
    }
    Ok(composite)
}

/// Curry `g: X × K -> Y` into `K -> hom(X,Y)`: the cell over `k_n` is
/// `g ∘ (id × classifying map of k_n)`.
pub fn curry(ctx: &Ctx, fc: &FunctionComplex, k: &SSet, g: &SimplicialMap) -> Result<SimplicialMap> {
    let x = fc.source();
    let p_xk = ctx.product(x, k)?;
    if g.dom.id() != p_xk.sset.id() || g.cod.id() != fc.target().id() {
        return Err(Error::DomainMismatch(format!(
            "curry expects a map ({} x {}) -> {}",
            x.name(),
            k.name(),
            fc.target().name()
        )));
    }
    if let Some(kt) = k.top_dim() {
        if kt > fc.level() {
            return Err(Error::Truncation {
                what: format!("curry into {}", fc.carrier().name()),
                needed: kt,
                available: Some(fc.level()),
            });
        }
    }
    let mut assign = Vec::new();
    for s in k.all_nondeg() {
        let n = k.dim_of(s);
        let yo = yoneda(&ctx.delta(n), k, &k.canonical(s))?;
        let p_x_dn = ctx.product(x, &ctx.delta(n))?;
        let widened = p_x_dn.product_map(&p_xk, &SimplicialMap::identity(x), &yo)?;
        let m = SimplicialMap::compose(g, &widened)?;
        assign.push(fc.simplex_for_map(&m, n)?);
    }
    SimplicialMap::new(k.clone(), fc.carrier().clone(), assign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary, standard_simplex};

    fn counts(fc: &FunctionComplex, up_to: usize) -> Vec<usize> {
        (0..=up_to).map(|n| fc.carrier().level_size(n).unwrap()).collect()
    }

    #[test]
    fn interval_hom_complex_matches_delta2() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();
        assert_eq!(counts(&fc, 2), vec![3, 6, 10]);
        let nondeg: Vec<usize> = (0..3).map(|n| fc.carrier().nondeg(n).len()).collect();
        assert_eq!(nondeg, vec![3, 3, 1]);
        assert!(fc.carrier().validate().is_pass());
        // levelwise the sizes of Δ[2]
        let d2 = ctx.delta(2);
        for n in 0..3 {
            assert_eq!(fc.carrier().level_size(n).unwrap(), d2.level_size(n).unwrap());
        }
    }

    #[test]
    fn hom_from_point_is_the_target() {
        let ctx = Ctx::new();
        let d0 = ctx.delta(0);
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d0, &d1, 2).unwrap();
        for n in 0..3 {
            assert_eq!(
                fc.carrier().level_size(n).unwrap(),
                d1.level_size(n).unwrap()
            );
        }
    }

    #[test]
    fn hom_into_point_is_a_point() {
        let ctx = Ctx::new();
        let bd2 = boundary(2);
        let fc = ctx.fncx(&bd2, &ctx.delta(0), 2).unwrap();
        for n in 0..3 {
            assert_eq!(fc.carrier().level_size(n).unwrap(), 1);
        }
    }

    #[test]
    fn operator_action_is_precomposition() {
        // acting on a carrier simplex by θ matches precomposing its map
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();
        for n in 0..=2usize {
            let lvl = fc.carrier().level(n).unwrap();
            for r in &lvl.refs {
                for m in 0..=2usize {
                    for theta in MonotoneMap::all(m, n) {
                        let acted = fc.carrier().act(r, &theta).unwrap();
                        let via_maps = {
                            let op = simplex_operator_map(&ctx, &theta).unwrap();
                            let dom_m = ctx.product(&d1, &ctx.delta(m)).unwrap();
                            let dom_n = ctx.product(&d1, &ctx.delta(n)).unwrap();
                            let pre = dom_m
                                .product_map(&dom_n, &SimplicialMap::identity(&d1), &op)
                                .unwrap();
                            let map =
                                SimplicialMap::compose(&fc.map_for_ref(&ctx, r).unwrap(), &pre)
                                    .unwrap();
                            fc.simplex_for_map(&map, m).unwrap()
                        };
                        assert_eq!(acted, via_maps);
                    }
                }
            }
        }
    }

    #[test]
    fn zero_cells_biject_with_plain_maps() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 1).unwrap();
        let maps = enumerate_maps(&d1, &d1, 1).unwrap();
        let mut seen = Vec::new();
        for f in &maps {
            let z = zero_cell(&ctx, &fc, f).unwrap();
            assert!(z.0.is_nondegenerate());
            assert!(!seen.contains(&z));
            let back = zero_cell_map(&ctx, &fc, &z).unwrap();
            assert_eq!(&back, f);
            seen.push(z);
        }
        assert_eq!(seen.len(), fc.carrier().level_size(0).unwrap());
    }

    #[test]
    fn zero_cell_of_identity_is_the_unit() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 0).unwrap();
        let z = zero_cell(&ctx, &fc, &SimplicialMap::identity(&d1)).unwrap();
        let p = ctx.product(&d1, &ctx.delta(0)).unwrap();
        let unit = unit_r_iso(&p).unwrap();
        assert_eq!(fc.map_for_ref(&ctx, &z.0).unwrap(), unit.forward);
    }

    #[test]
    fn hom_actions_are_functorial() {
        let ctx = Ctx::new();
        let d0 = ctx.delta(0);
        let d1 = ctx.delta(1);
        // identity action is the identity
        let id_action = hom_action_pre(&ctx, &SimplicialMap::identity(&d1), &d1, 2).unwrap();
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();
        assert_eq!(id_action, SimplicialMap::identity(fc.carrier()));

        // contravariance: pre(u ∘ w) = pre(w) ∘ pre(u)
        for u in enumerate_maps(&d0, &d1, 1).unwrap() {
            for w in enumerate_maps(&d1, &d0, 1).unwrap() {
                let uw = SimplicialMap::compose(&u, &w).unwrap();
                let lhs = hom_action_pre(&ctx, &uw, &d1, 2).unwrap();
                let rhs = SimplicialMap::compose(
                    &hom_action_pre(&ctx, &w, &d1, 2).unwrap(),
                    &hom_action_pre(&ctx, &u, &d1, 2).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }

        // covariance: post(v ∘ u) = post(v) ∘ post(u)
        for u in enumerate_maps(&d1, &d0, 1).unwrap() {
            for v in enumerate_maps(&d0, &d1, 1).unwrap() {
                let vu = SimplicialMap::compose(&v, &u).unwrap();
                let lhs = hom_action_post(&ctx, &d1, &vu, 2).unwrap();
                let rhs = SimplicialMap::compose(
                    &hom_action_post(&ctx, &d1, &v, 2).unwrap(),
                    &hom_action_post(&ctx, &d1, &u, 2).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }

        // post-composing with the collapse to a point leaves one cell per level
        let collapse = enumerate_maps(&d1, &d0, 1).unwrap().remove(0);
        let action = hom_action_post(&ctx, &d1, &collapse, 2).unwrap();
        let target = ctx.fncx(&d1, &d0, 2).unwrap();
        assert_eq!(action.cod.id(), target.carrier().id());
        for n in 0..3 {
            assert_eq!(target.carrier().level_size(n).unwrap(), 1);
        }
    }

    #[test]
    fn enriched_composition_unit_and_associativity() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 1).unwrap();
        let id_map = SimplicialMap::identity(&d1);

        // unit law at every level ≤ 1
        for n in 0..=1usize {
            let idn = constant_cell(&ctx, &fc, &id_map, n).unwrap();
            for f in &fc.carrier().level(n).unwrap().refs {
                let left = enriched_compose(&ctx, &fc, &fc, &fc, f, &idn).unwrap();
                assert_eq!(&left, f);
                let right = enriched_compose(&ctx, &fc, &fc, &fc, &idn, f).unwrap();
                assert_eq!(&right, f);
            }
        }

        // associativity over all triples of 1-cells
        let cells = fc.carrier().level(1).unwrap().refs.clone();
        for f in &cells {
            for g in &cells {
                for h in &cells {
                    let gf = enriched_compose(&ctx, &fc, &fc, &fc, f, g).unwrap();
                    let hg = enriched_compose(&ctx, &fc, &fc, &fc, g, h).unwrap();
                    let lhs = enriched_compose(&ctx, &fc, &fc, &fc, &gf, h).unwrap();
                    let rhs = enriched_compose(&ctx, &fc, &fc, &fc, f, &hg).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn zero_cell_composition_square() {
        // composing zero cells matches composing plain maps
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let d0 = ctx.delta(0);
        let fc_10 = ctx.fncx(&d1, &d0, 0).unwrap();
        let fc_01 = ctx.fncx(&d0, &d1, 0).unwrap();
        let fc_11 = ctx.fncx(&d1, &d1, 0).unwrap();
        for f in enumerate_maps(&d1, &d0, 1).unwrap() {
            for g in enumerate_maps(&d0, &d1, 1).unwrap() {
                let zf = zero_cell(&ctx, &fc_10, &f).unwrap();
                let zg = zero_cell(&ctx, &fc_01, &g).unwrap();
                let composed = enriched_compose(&ctx, &fc_10, &fc_01, &fc_11, &zf.0, &zg.0).unwrap();
                let plain = SimplicialMap::compose(&g, &f).unwrap();
                assert_eq!(composed, zero_cell(&ctx, &fc_11, &plain).unwrap().0);
            }
        }
    }

    #[test]
    fn evaluation_is_simplicial_and_reduces_on_a_point() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();
        let ev = evaluation_map(&ctx, &fc).unwrap();
        assert!(ev.validate().is_pass());

        // over X = Δ[0], evaluation is the unit composite with hom(pt, Y) ≅ Y
        let d0 = ctx.delta(0);
        let fc0 = ctx.fncx(&d0, &d1, 2).unwrap();
        let ev0 = evaluation_map(&ctx, &fc0).unwrap();
        assert!(ev0.validate().is_pass());
        for s in ev0.dom.all_nondeg() {
            let p = ctx.product(&d0, fc0.carrier()).unwrap();
            let (_, cell) = p.components(s).clone();
            let m = fc0.map_for_ref(&ctx, &cell).unwrap();
            // the cell's map evaluated anywhere equals the ev assignment
            let n = cell.dim();
            let dn = ctx.delta(n);
            let top = dn.canonical(dn.nondeg(n)[0]);
            let pt = ctx.product(&d0, &dn).unwrap();
            let v = d0.canonical(d0.nondeg(0)[0]);
            let vtop = d0.act(&v, &MonotoneMap::terminal(n)).unwrap();
            let arg = pt.pair_ref(&vtop, &top).unwrap();
            assert_eq!(ev0.assignment(s), &m.apply(&arg));
        }
    }

    #[test]
    fn evaluation_naturality_squares() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let d0 = ctx.delta(0);

        // postcomposition: f ∘ ev_{X,Y} = ev_{X,Z} ∘ (id × hom(X,f))
        let f = enumerate_maps(&d1, &d0, 1).unwrap().remove(0); // Δ[1] -> Δ[0]
        let fc_11 = ctx.fncx(&d1, &d1, 2).unwrap();
        let fc_10 = ctx.fncx(&d1, &d0, 2).unwrap();
        let lhs = SimplicialMap::compose(&f, &evaluation_map(&ctx, &fc_11).unwrap()).unwrap();
        let action = hom_action_post(&ctx, &d1, &f, 2).unwrap();
        let p_before = ctx.product(&d1, fc_11.carrier()).unwrap();
        let p_after = ctx.product(&d1, fc_10.carrier()).unwrap();
        let widened = p_before
            .product_map(&p_after, &SimplicialMap::identity(&d1), &action)
            .unwrap();
        let rhs = SimplicialMap::compose(&evaluation_map(&ctx, &fc_10).unwrap(), &widened).unwrap();
        assert_eq!(lhs, rhs);

        // precomposition: ev_{Y,Z} ∘ (f × id) = ev_{X,Z} ∘ (id × hom(f,Z))
        let g = enumerate_maps(&d0, &d1, 1).unwrap().remove(0); // Δ[0] -> Δ[1]
        let fc_0 = ctx.fncx(&d0, &d1, 2).unwrap();
        let p_x_h = ctx.product(&d0, fc_11.carrier()).unwrap();
        let p_y_h = ctx.product(&d1, fc_11.carrier()).unwrap();
        let widen_left = p_x_h
            .product_map(&p_y_h, &g, &SimplicialMap::identity(fc_11.carrier()))
            .unwrap();
        let lhs2 =
            SimplicialMap::compose(&evaluation_map(&ctx, &fc_11).unwrap(), &widen_left).unwrap();
        let action2 = hom_action_pre(&ctx, &g, &d1, 2).unwrap();
        let p_x_h0 = ctx.product(&d0, fc_0.carrier()).unwrap();
        let widen_right = p_x_h
            .product_map(&p_x_h0, &SimplicialMap::identity(&d0), &action2)
            .unwrap();
        let rhs2 =
            SimplicialMap::compose(&evaluation_map(&ctx, &fc_0).unwrap(), &widen_right).unwrap();
        assert_eq!(lhs2, rhs2);
    }

    #[test]
    fn currying_is_a_bijection() {
        let ctx = Ctx::new();
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();
        let p = ctx.product(&d1, &d1).unwrap();

        // |sSet(X × K, Y)| = 6, and uncurry ∘ curry = id on all of them
        let maps = enumerate_maps(&p.sset, &d1, 2).unwrap();
        assert_eq!(maps.len(), 6);
        let mut images = Vec::new();
        for g in &maps {
            let curried = curry(&ctx, &fc, &d1, g).unwrap();
            assert!(curried.validate().is_pass());
            let back = uncurry(&ctx, &fc, &curried).unwrap();
            assert_eq!(&back, g);
            assert!(!images.contains(&curried));
            images.push(curried);
        }
        // counting: |sSet(K, hom(X,Y))| matches
        assert_eq!(images.len(), enumerate_maps(&d1, fc.carrier(), 1).unwrap().len());

        // curry ∘ uncurry = id on sSet(K, hom(X,Y))
        for u in enumerate_maps(&d1, fc.carrier(), 1).unwrap() {
            let flat = uncurry(&ctx, &fc, &u).unwrap();
            assert_eq!(curry(&ctx, &fc, &d1, &flat).unwrap(), u);
        }
    }

    #[test]
    fn currying_naturality() {
        let ctx = Ctx::new();
        let d0 = ctx.delta(0);
        let d1 = ctx.delta(1);
        let fc = ctx.fncx(&d1, &d1, 2).unwrap();

        // in K: curry(g)∘u = curry(g ∘ (id × u)) for u: Δ[0] -> Δ[1]
        let p_x_k = ctx.product(&d1, &d1).unwrap();
        let p_x_k0 = ctx.product(&d1, &d0).unwrap();
        for u in enumerate_maps(&d0, &d1, 0).unwrap() {
            for g in enumerate_maps(&p_x_k.sset, &d1, 2).unwrap() {
                let lhs = SimplicialMap::compose(&curry(&ctx, &fc, &d1, &g).unwrap(), &u).unwrap();
                let widened = p_x_k0
                    .product_map(&p_x_k, &SimplicialMap::identity(&d1), &u)
                    .unwrap();
                let rhs =
                    curry(&ctx, &fc, &d0, &SimplicialMap::compose(&g, &widened).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }

        // in Y: hom(X,v) ∘ curry(g) = curry(v ∘ g) for v: Δ[1] -> Δ[0]
        let fc_10 = ctx.fncx(&d1, &d0, 2).unwrap();
        let _ = &fc_10;
        for v in enumerate_maps(&d1, &d0, 1).unwrap() {
            let action = hom_action_post(&ctx, &d1, &v, 2).unwrap();
            for g in enumerate_maps(&p_x_k.sset, &d1, 2).unwrap() {
                let lhs =
                    SimplicialMap::compose(&action, &curry(&ctx, &fc, &d1, &g).unwrap()).unwrap();
                let fc_target = ctx.fncx(&d1, &d0, 2).unwrap();
                let rhs = curry(
                    &ctx,
                    &fc_target,
                    &d1,
                    &SimplicialMap::compose(&v, &g).unwrap(),
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
