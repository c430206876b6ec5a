//! Binary products of finite simplicial sets with their projections, pairing
//! combinators and the canonical associativity / symmetry / unit isomorphisms.
//!
//! A product simplex in dimension n is a pair of canonical forms whose
//! degeneracy surjections are jointly injective; an arbitrary pair collapses
//! onto such a core along the run surjection of the zipped value lists.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ord::{MonotoneMap, Surjection};
use crate::smap::SimplicialMap;
use crate::sset::{SSet, SSetBuilder, SimplexId, SimplexRef};

/// A built product `left × right` together with the pairing data needed to
/// move between pairs of component simplices and product simplices.
pub struct Product {
    pub sset: SSet,
    pub left: SSet,
    pub right: SSet,
    pub pr1: SimplicialMap,
    pub pr2: SimplicialMap,
    /// component pair of each nondegenerate product simplex
    pairs: Vec<(SimplexRef, SimplexRef)>,
    index: FxHashMap<(SimplexRef, SimplexRef), SimplexId>,
}

impl Product {
    pub fn build(left: &SSet, right: &SSet) -> Result<Arc<Product>> {
        let trunc = match (left.trunc(), right.trunc()) {
            (None, t) | (t, None) => t,
            (Some(a), Some(b)) => Some(a.min(b)),
        };
        let name = format!("({} x {})", left.name(), right.name());
        let mut b = SSetBuilder::annotated(name, trunc);
        let mut pairs: Vec<(SimplexRef, SimplexRef)> = Vec::new();
        let mut index: FxHashMap<(SimplexRef, SimplexRef), SimplexId> = FxHashMap::default();

        let top = match (left.top_dim(), right.top_dim()) {
            (Some(a), Some(c)) => a + c,
            _ => {
                // one factor empty: the product is empty
                let sset = b.finish()?;
                let pr1 = SimplicialMap::new(sset.clone(), left.clone(), Vec::new())?;
                let pr2 = SimplicialMap::new(sset.clone(), right.clone(), Vec::new())?;
                return Ok(Arc::new(Product {
                    sset,
                    left: left.clone(),
                    right: right.clone(),
                    pr1,
                    pr2,
                    pairs,
                    index,
                }));
            }
        };

        // enumerate jointly injective pairs dimension by dimension
        for n in 0..=top {
            let ls = left.level(n)?;
            let rs = right.level(n)?;
            for a in &ls.refs {
                for c in &rs.refs {
                    if jointly_injective(&a.deg, &c.deg) {
                        let name = format!(
                            "({},{})",
                            left.display_ref(a),
                            right.display_ref(c)
                        );
                        let id = b.add_simplex(name, n);
                        pairs.push((a.clone(), c.clone()));
                        index.insert((a.clone(), c.clone()), id);
                    }
                }
            }
        }
        // faces: componentwise action, then collapse onto the canonical core
        for (k, (a, c)) in pairs.iter().enumerate() {
            let n = a.dim();
            if n == 0 {
                continue;
            }
            let faces = (0..=n)
                .map(|i| {
                    let op = MonotoneMap::coface(n, i);
                    let fa = left.act(a, &op)?;
                    let fc = right.act(c, &op)?;
                    normalize_pair(&index, &fa, &fc)
                })
                .collect::<Result<Vec<_>>>()?;
            b.set_faces(SimplexId(k), faces);
        }
        let sset = b.finish()?;
        let pr1 = SimplicialMap::new(
            sset.clone(),
            left.clone(),
            pairs.iter().map(|(a, _)| a.clone()).collect(),
        )?;
        let pr2 = SimplicialMap::new(
            sset.clone(),
            right.clone(),
            pairs.iter().map(|(_, c)| c.clone()).collect(),
        )?;
        Ok(Arc::new(Product { sset, left: left.clone(), right: right.clone(), pr1, pr2, pairs, index }))
    }

    /// The canonical form in the product of an arbitrary component pair of
    /// equal dimension.
    pub fn pair_ref(&self, a: &SimplexRef, c: &SimplexRef) -> Result<SimplexRef> {
        if a.dim() != c.dim() {
            return Err(Error::DimensionMismatch(format!(
                "pairing simplices of dimensions {} and {}",
                a.dim(),
                c.dim()
            )));
        }
        normalize_pair(&self.index, a, c)
    }

    /// Components of a nondegenerate product simplex.
    pub fn components(&self, id: SimplexId) -> &(SimplexRef, SimplexRef) {
        &self.pairs[id.0]
    }

    /// The pairing `(f, g): T -> X × Y` of `f: T -> X` and `g: T -> Y`.
    pub fn pair_map(&self, f: &SimplicialMap, g: &SimplicialMap) -> Result<SimplicialMap> {
        if f.dom.id() != g.dom.id() {
            return Err(Error::DomainMismatch(
                "pairing requires a common domain".to_string(),
            ));
        }
        if f.cod.id() != self.left.id() || g.cod.id() != self.right.id() {
            return Err(Error::DomainMismatch(
                "pairing codomains do not match the product factors".to_string(),
            ));
        }
        let assign = f
            .assignments()
            .iter()
            .zip(g.assignments())
            .map(|(a, c)| self.pair_ref(a, c))
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(f.dom.clone(), self.sset.clone(), assign)
    }

    /// `f × g : X × Y -> X' × Y'` out of this product into `target`.
    pub fn product_map(
        &self,
        target: &Product,
        f: &SimplicialMap,
        g: &SimplicialMap,
    ) -> Result<SimplicialMap> {
        let f_pr1 = SimplicialMap::compose(f, &self.pr1)?;
        let g_pr2 = SimplicialMap::compose(g, &self.pr2)?;
        target.pair_map(&f_pr1, &g_pr2)
    }

    /// The diagonal `X -> X × X`; requires both factors to be the same object.
    pub fn diagonal(&self) -> Result<SimplicialMap> {
        if self.left.id() != self.right.id() {
            return Err(Error::ShapeMismatch(
                "diagonal needs a product of an object with itself".to_string(),
            ));
        }
        let id = SimplicialMap::identity(&self.left);
        self.pair_map(&id, &id)
    }
}

fn jointly_injective(a: &Surjection, c: &Surjection) -> bool {
    let (va, vc) = (a.values(), c.values());
    (1..va.len()).all(|i| va[i] != va[i - 1] || vc[i] != vc[i - 1])
}

/// Collapse a component pair onto its jointly injective core: within a run of
/// equal zipped values both degeneracies are constant, so restricting to run
/// starts keeps both surjective and the run surjection is the new degeneracy.
fn normalize_pair(
    index: &FxHashMap<(SimplexRef, SimplexRef), SimplexId>,
    a: &SimplexRef,
    c: &SimplexRef,
) -> Result<SimplexRef> {
    let n = a.dim();
    let (va, vc) = (a.deg.values(), c.deg.values());
    let mut run = Vec::with_capacity(n + 1);
    let mut starts = Vec::new();
    let mut current = 0usize;
    for i in 0..=n {
        if i == 0 || va[i] != va[i - 1] || vc[i] != vc[i - 1] {
            if i > 0 {
                current += 1;
            }
            starts.push(i);
        }
        run.push(current);
    }
    let k = starts.len() - 1;
    let eta = Surjection::new(MonotoneMap::new(n, k, run)?)?;
    let core_a = SimplexRef {
        base: a.base,
        deg: Surjection::new(MonotoneMap::new(
            k,
            a.deg.target_dim(),
            starts.iter().map(|&i| va[i]).collect(),
        )?)?,
    };
    let core_c = SimplexRef {
        base: c.base,
        deg: Surjection::new(MonotoneMap::new(
            k,
            c.deg.target_dim(),
            starts.iter().map(|&i| vc[i]).collect(),
        )?)?,
    };
    let id = index.get(&(core_a.clone(), core_c.clone())).ok_or_else(|| {
        Error::Internal("jointly injective core missing from product index".to_string())
    })?;
    Ok(SimplexRef { base: *id, deg: eta })
}

/// The isomorphism kinds exposed as canonical re-bracketing data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoKind {
    /// `(X × Y) × Z  ≅  X × (Y × Z)`
    Assoc,
    /// `X × Y  ≅  Y × X`
    Swap,
    /// `X × Δ[0]  ≅  X`
    UnitR,
}

/// A simplicial isomorphism with its stored inverse.
#[derive(Clone, Debug)]
pub struct Isomorphism {
    pub forward: SimplicialMap,
    pub inverse: SimplicialMap,
}

impl Isomorphism {
    pub fn flip(&self) -> Isomorphism {
        Isomorphism { forward: self.inverse.clone(), inverse: self.forward.clone() }
    }
}

/// `(X × Y) × Z ≅ X × (Y × Z)` built from pairings of projections.
pub fn assoc_iso(
    xy: &Product,
    xy_z: &Product,
    yz: &Product,
    x_yz: &Product,
) -> Result<Isomorphism> {
    if xy_z.left.id() != xy.sset.id()
        || x_yz.right.id() != yz.sset.id()
        || xy.left.id() != x_yz.left.id()
        || xy.right.id() != yz.left.id()
        || xy_z.right.id() != yz.right.id()
    {
        return Err(Error::ShapeMismatch(
            "assoc operands do not assemble into ((X x Y) x Z, X x (Y x Z))".to_string(),
        ));
    }
    let p_x = SimplicialMap::compose(&xy.pr1, &xy_z.pr1)?;
    let p_y = SimplicialMap::compose(&xy.pr2, &xy_z.pr1)?;
    let p_z = xy_z.pr2.clone();
    let forward = x_yz.pair_map(&p_x, &yz.pair_map(&p_y, &p_z)?)?;

    let q_y = SimplicialMap::compose(&yz.pr1, &x_yz.pr2)?;
    let q_z = SimplicialMap::compose(&yz.pr2, &x_yz.pr2)?;
    let q_x = x_yz.pr1.clone();
    let inverse = xy_z.pair_map(&xy.pair_map(&q_x, &q_y)?, &q_z)?;
    Ok(Isomorphism { forward, inverse })
}

/// `X × Y ≅ Y × X`.
pub fn swap_iso(xy: &Product, yx: &Product) -> Result<Isomorphism> {
    if xy.left.id() != yx.right.id() || xy.right.id() != yx.left.id() {
        return Err(Error::ShapeMismatch("swap operands are not mirror products".to_string()));
    }
    let forward = yx.pair_map(&xy.pr2, &xy.pr1)?;
    let inverse = xy.pair_map(&yx.pr2, &yx.pr1)?;
    Ok(Isomorphism { forward, inverse })
}

/// `X × Δ[0] ≅ X`; the right unit of the product.
pub fn unit_r_iso(x_pt: &Product) -> Result<Isomorphism> {
    if x_pt.right.top_dim() != Some(0) || x_pt.right.nondeg(0).len() != 1 {
        return Err(Error::ShapeMismatch("unit_r needs a terminal right factor".to_string()));
    }
    let forward = x_pt.pr1.clone();
    let x = &x_pt.left;
    let pt = &x_pt.right;
    let vertex = pt.canonical(pt.nondeg(0)[0]);
    let assign = x
        .all_nondeg()
        .map(|s| {
            let n = x.dim_of(s);
            let collapsed = SimplexRef {
                base: vertex.base,
                deg: Surjection::terminal(n),
            };
            x_pt.pair_ref(&x.canonical(s), &collapsed)
        })
        .collect::<Result<Vec<_>>>()?;
    let inverse = SimplicialMap::new(x.clone(), x_pt.sset.clone(), assign)?;
    Ok(Isomorphism { forward, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smap::enumerate_maps;
    use crate::sset::{boundary, standard_simplex};

    fn product(a: &SSet, b: &SSet) -> Arc<Product> {
        Product::build(a, b).unwrap()
    }

    #[test]
    fn square_of_interval_counts() {
        let d1 = standard_simplex(1);
        let p = product(&d1, &d1);
        let counts: Vec<usize> = (0..3).map(|m| p.sset.nondeg(m).len()).collect();
        assert_eq!(counts, vec![4, 5, 2]);
        assert_eq!(p.sset.level_size(1).unwrap(), 9);
        assert!(p.sset.validate().is_pass());
        assert!(p.pr1.validate().is_pass());
        assert!(p.pr2.validate().is_pass());
    }

    #[test]
    fn unit_law_levelwise() {
        let d1 = standard_simplex(1);
        let d0 = standard_simplex(0);
        let p = product(&d1, &d0);
        for n in 0..4 {
            assert_eq!(p.sset.level_size(n).unwrap(), d1.level_size(n).unwrap());
        }
        let iso = unit_r_iso(&p).unwrap();
        assert_eq!(
            SimplicialMap::compose(&iso.forward, &iso.inverse).unwrap(),
            SimplicialMap::identity(&d1)
        );
        assert_eq!(
            SimplicialMap::compose(&iso.inverse, &iso.forward).unwrap(),
            SimplicialMap::identity(&p.sset)
        );
    }

    #[test]
    fn projections_and_diagonal() {
        let d2 = standard_simplex(2);
        let p = product(&d2, &d2);
        let diag = p.diagonal().unwrap();
        assert!(diag.validate().is_pass());
        assert_eq!(
            SimplicialMap::compose(&p.pr1, &diag).unwrap(),
            SimplicialMap::identity(&d2)
        );
        assert_eq!(
            SimplicialMap::compose(&p.pr2, &diag).unwrap(),
            SimplicialMap::identity(&d2)
        );
    }

    #[test]
    fn diagonal_of_top_edge_is_the_diagonal_edge() {
        let d1 = standard_simplex(1);
        let p = product(&d1, &d1);
        let diag = p.diagonal().unwrap();
        let edge = d1.all_nondeg().find(|&s| d1.dim_of(s) == 1).unwrap();
        let img = diag.assignment(edge);
        assert!(img.is_nondegenerate());
        let (a, c) = p.components(img.base);
        assert!(a.is_nondegenerate() && c.is_nondegenerate());
        assert_eq!(d1.dim_of(a.base), 1);
        assert_eq!(d1.dim_of(c.base), 1);
    }

    #[test]
    fn swap_is_an_involution() {
        let d1 = standard_simplex(1);
        let d2 = standard_simplex(2);
        let p12 = product(&d1, &d2);
        let p21 = product(&d2, &d1);
        let iso = swap_iso(&p12, &p21).unwrap();
        let both = SimplicialMap::compose(&iso.inverse, &iso.forward).unwrap();
        assert_eq!(both, SimplicialMap::identity(&p12.sset));
        // swap on X × X is a self-map squaring to the identity
        let pxx = product(&d1, &d1);
        let sw = swap_iso(&pxx, &pxx).unwrap();
        assert_eq!(
            SimplicialMap::compose(&sw.forward, &sw.forward).unwrap(),
            SimplicialMap::identity(&pxx.sset)
        );
        assert!(sw.forward != SimplicialMap::identity(&pxx.sset));
    }

    #[test]
    fn assoc_round_trip_and_pentagon() {
        let a = standard_simplex(1);
        let b = standard_simplex(1);
        let c = standard_simplex(0);
        let d = standard_simplex(1);

        let ab = product(&a, &b);
        let bc = product(&b, &c);
        let cd = product(&c, &d);
        let ab_c = product(&ab.sset, &c);
        let a_bc = product(&a, &bc.sset);
        let bc_d = product(&bc.sset, &d);
        let b_cd = product(&b, &cd.sset);

        let assoc = assoc_iso(&ab, &ab_c, &bc, &a_bc).unwrap();
        assert_eq!(
            SimplicialMap::compose(&assoc.inverse, &assoc.forward).unwrap(),
            SimplicialMap::identity(&ab_c.sset)
        );
        assert_eq!(
            SimplicialMap::compose(&assoc.forward, &assoc.inverse).unwrap(),
            SimplicialMap::identity(&a_bc.sset)
        );

        // pentagon: both re-bracketing routes ((AB)C)D -> A(B(CD)) agree
        let abc_d = product(&ab_c.sset, &d);
        let a_bc_d = product(&a_bc.sset, &d);
        let ab_cd = product(&ab.sset, &cd.sset);
        let a_bcd = product(&a, &bc_d.sset);
        let a_b_cd = product(&a, &b_cd.sset);

        // route 1: ((AB)C)D -> (A(BC))D -> A((BC)D) -> A(B(CD))
        let r1a_inner = assoc_iso(&ab, &ab_c, &bc, &a_bc).unwrap().forward;
        let r1a = abc_d
            .product_map(&a_bc_d, &r1a_inner, &SimplicialMap::identity(&d))
            .unwrap();
        let r1b = assoc_iso(&a_bc, &a_bc_d, &bc_d, &a_bcd).unwrap().forward;
        let r1c_inner = assoc_iso(&bc, &bc_d, &cd, &b_cd).unwrap().forward;
        let r1c = a_bcd
            .product_map(&a_b_cd, &SimplicialMap::identity(&a), &r1c_inner)
            .unwrap();
        let route1 =
            SimplicialMap::compose(&r1c, &SimplicialMap::compose(&r1b, &r1a).unwrap()).unwrap();

        // route 2: ((AB)C)D -> (AB)(CD) -> A(B(CD))
        let r2a = assoc_iso(&ab_c, &abc_d, &cd, &ab_cd);
        // operands: X = AB, Y = C, Z = D
        let r2a = match r2a {
            Ok(i) => i.forward,
            Err(e) => panic!("assoc operands rejected: {e}"),
        };
        let r2b = assoc_iso(&ab, &ab_cd, &b_cd, &a_b_cd).unwrap().forward;
        let route2 = SimplicialMap::compose(&r2b, &r2a).unwrap();

        assert_eq!(route1, route2);
    }

    #[test]
    fn products_with_empty_are_empty() {
        let e = crate::sset::empty("void");
        let d1 = standard_simplex(1);
        let p = product(&e, &d1);
        assert_eq!(p.sset.simplex_count(), 0);
    }

    #[test]
    fn universal_property_counts() {
        // |sSet(T, X × Y)| = |sSet(T, X)| · |sSet(T, Y)|
        let d1 = standard_simplex(1);
        let bd1 = boundary(1);
        let fixtures = [standard_simplex(0), d1.clone(), bd1];
        for x in &fixtures {
            for y in &fixtures {
                let p = product(x, y);
                for t in &fixtures {
                    let up_to = t.top_dim().unwrap_or(0);
                    let through = enumerate_maps(t, &p.sset, up_to).unwrap().len();
                    let left = enumerate_maps(t, x, up_to).unwrap().len();
                    let right = enumerate_maps(t, y, up_to).unwrap().len();
                    assert_eq!(through, left * right, "T={} X={} Y={}", t.name(), x.name(), y.name());
                }
            }
        }
    }

    #[test]
    fn pairing_round_trips() {
        let d1 = standard_simplex(1);
        let bd1 = boundary(1);
        let p = product(&d1, &bd1);
        for f in enumerate_maps(&bd1, &d1, 1).unwrap() {
            for g in enumerate_maps(&bd1, &bd1, 1).unwrap() {
                let paired = p.pair_map(&f, &g).unwrap();
                assert!(paired.validate().is_pass());
                assert_eq!(SimplicialMap::compose(&p.pr1, &paired).unwrap(), f);
                assert_eq!(SimplicialMap::compose(&p.pr2, &paired).unwrap(), g);
            }
        }
    }
}
