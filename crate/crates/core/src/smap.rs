//! Maps of finite simplicial sets: dimensionwise assignments on nondegenerate
//! simplices, composition, validation, isomorphism testing, Yoneda classifying
//! maps and exhaustive enumeration of hom-sets.

use crate::error::{Error, Result};
use crate::ord::MonotoneMap;
use crate::report::{Check, VerificationReport};
use crate::sset::{SSet, SimplexId, SimplexRef};

/// A simplicial map, stored as one codomain canonical form per nondegenerate
/// domain simplex. Degenerate simplices are covered by the canonical-form
/// extension `f(x · η) = f(x) · η`.
#[derive(Clone)]
pub struct SimplicialMap {
    pub dom: SSet,
    pub cod: SSet,
    /// indexed by the domain [`SimplexId`]
    assign: Vec<SimplexRef>,
}

impl std::fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SimplicialMap({} -> {})", self.dom.name(), self.cod.name())
    }
}

impl PartialEq for SimplicialMap {
    /// Assignment equality on nondegenerate simplices — the only notion of
    /// map equality used anywhere in the library.
    fn eq(&self, other: &Self) -> bool {
        self.dom.id() == other.dom.id()
            && self.cod.id() == other.cod.id()
            && self.assign == other.assign
    }
}

impl Eq for SimplicialMap {}

impl SimplicialMap {
    /// Wrap an assignment after shape checks (dimensions and target validity).
    /// Face compatibility is the business of [`SimplicialMap::validate`].
    pub fn new(dom: SSet, cod: SSet, assign: Vec<SimplexRef>) -> Result<Self> {
        if assign.len() != dom.simplex_count() {
            return Err(Error::ShapeMismatch(format!(
                "assignment covers {} simplices, domain {} has {}",
                assign.len(),
                dom.name(),
                dom.simplex_count()
            )));
        }
        for (k, r) in assign.iter().enumerate() {
            let id = SimplexId(k);
            if r.base.0 >= cod.simplex_count()
                || r.deg.target_dim() != cod.dim_of(r.base)
                || r.dim() != dom.dim_of(id)
            {
                return Err(Error::ShapeMismatch(format!(
                    "assignment for {} is not a {}-simplex of {}",
                    dom.name_of(id),
                    dom.dim_of(id),
                    cod.name()
                )));
            }
        }
        Ok(Self { dom, cod, assign })
    }

    pub fn identity(x: &SSet) -> Self {
        let assign = x.all_nondeg().map(|s| x.canonical(s)).collect();
        Self { dom: x.clone(), cod: x.clone(), assign }
    }

    pub fn assignment(&self, id: SimplexId) -> &SimplexRef {
        &self.assign[id.0]
    }

    pub fn assignments(&self) -> &[SimplexRef] {
        &self.assign
    }

    /// Image of an arbitrary simplex in canonical form:
    /// `f(base · η) = f(base) · η`.
    pub fn apply(&self, r: &SimplexRef) -> SimplexRef {
        let target = &self.assign[r.base.0];
        SimplexRef {
            base: target.base,
            deg: target.deg.compose(&r.deg).expect("degeneracy composite"),
        }
    }

    /// `g ∘ f`; requires `cod(f) = dom(g)` as constructed objects.
    pub fn compose(g: &SimplicialMap, f: &SimplicialMap) -> Result<SimplicialMap> {
        if f.cod.id() != g.dom.id() {
            return Err(Error::DomainMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                g.dom.name(),
                g.cod.name(),
                f.dom.name(),
                f.cod.name()
            )));
        }
        let assign = f.assign.iter().map(|r| g.apply(r)).collect();
        Ok(SimplicialMap { dom: f.dom.clone(), cod: g.cod.clone(), assign })
    }

    /// Face compatibility: `f(d_i x) = d_i f(x)` for every nondegenerate `x`.
    pub fn validate(&self) -> VerificationReport {
        let mut report =
            VerificationReport::new(format!("validate {} -> {}", self.dom.name(), self.cod.name()));
        let mut all_ok = true;
        for s in self.dom.all_nondeg() {
            let m = self.dom.dim_of(s);
            if m == 0 {
                continue;
            }
            for i in 0..=m {
                let lhs = self.apply(&self.dom.faces_of(s)[i]);
                let rhs = self
                    .cod
                    .act(&self.assign[s.0], &MonotoneMap::coface(m, i))
                    .expect("dimension bookkeeping");
                if lhs != rhs {
                    all_ok = false;
                    report.push(Check::fail(
                        "smap.face",
                        format!("{}:{} d_{}", self.dom.name(), self.dom.name_of(s), i),
                        format!(
                            "f(d_{i} x) = {} but d_{i} f(x) = {}",
                            self.cod.display_ref(&lhs),
                            self.cod.display_ref(&rhs)
                        ),
                    ));
                }
            }
        }
        if all_ok {
            report.push(Check::pass(
                "smap.face",
                format!("{} -> {}", self.dom.name(), self.cod.name()),
            ));
        }
        report
    }

    /// A two-sided inverse, when each level function is bijective.
    pub fn inverse(&self) -> Option<SimplicialMap> {
        // invert on nondegenerate codomain simplices via level lookups
        let mut assign: Vec<Option<SimplexRef>> = vec![None; self.cod.simplex_count()];
        let top = self.cod.top_dim();
        let Some(top) = top else {
            // empty codomain: inverse exists iff domain empty too
            return if self.dom.simplex_count() == 0 {
                Some(SimplicialMap {
                    dom: self.cod.clone(),
                    cod: self.dom.clone(),
                    assign: Vec::new(),
                })
            } else {
                None
            };
        };
        for n in 0..=top {
            if self.dom.level(n).is_err() || self.cod.level(n).is_err() {
                return None;
            }
            let dom_level = self.dom.level(n).unwrap();
            for &y in self.cod.nondeg(n) {
                let target = self.cod.canonical(y);
                let mut preimages = dom_level
                    .refs
                    .iter()
                    .filter(|r| self.apply(r) == target);
                let first = preimages.next()?.clone();
                if preimages.next().is_some() {
                    return None;
                }
                assign[y.0] = Some(first);
            }
        }
        let inverse = SimplicialMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            assign: assign.into_iter().collect::<Option<Vec<_>>>()?,
        };
        // confirm both composites are identities
        let fwd_then_inv = SimplicialMap::compose(&inverse, self).ok()?;
        let inv_then_fwd = SimplicialMap::compose(self, &inverse).ok()?;
        if fwd_then_inv == SimplicialMap::identity(&self.dom)
            && inv_then_fwd == SimplicialMap::identity(&self.cod)
        {
            Some(inverse)
        } else {
            None
        }
    }

    pub fn is_iso(&self) -> bool {
        self.inverse().is_some()
    }
}

/// The unique map `Δ[n] -> K` classifying the simplex `k`: the image of a
/// nondegenerate face of Δ[n] (an injection `[m] -> [n]`) is `k` acted on by
/// that injection.
///
/// `delta_n` must be a standard simplex as produced by
/// [`crate::sset::standard_simplex`], whose nondegenerate simplices are listed
/// in the order of [`MonotoneMap::injections`].
pub fn yoneda(delta_n: &SSet, k_owner: &SSet, k: &SimplexRef) -> Result<SimplicialMap> {
    let n = k.dim();
    k_owner.require_level(n, "yoneda classifying map")?;
    if delta_n.simplex_count() != (1usize << (n + 1)) - 1 {
        return Err(Error::ShapeMismatch(format!(
            "{} is not the standard {}-simplex",
            delta_n.name(),
            n
        )));
    }
    let mut assign = Vec::with_capacity(delta_n.simplex_count());
    let mut injections: Vec<_> = (0..=n)
        .map(|m| MonotoneMap::injections(m, n).into_iter())
        .collect();
    for s in delta_n.all_nondeg() {
        let inj = injections[delta_n.dim_of(s)]
            .next()
            .ok_or_else(|| Error::Internal("standard simplex enumeration drift".into()))?;
        assign.push(k_owner.act(k, inj.as_monotone())?);
    }
    SimplicialMap::new(delta_n.clone(), k_owner.clone(), assign)
}

/// Complete, duplicate-free enumeration of `sSet(X, Y)` by backtracking over
/// the nondegenerate simplices of `X` in ascending dimension; candidates for a
/// simplex are exactly the codomain simplices whose face vector matches the
/// already-assigned boundary, and are tried in level order
/// (base id, degeneracy values), so the result order is deterministic.
pub fn enumerate_maps(x: &SSet, y: &SSet, up_to: usize) -> Result<Vec<SimplicialMap>> {
    if let Some(top) = x.top_dim() {
        if top > up_to {
            return Err(Error::Truncation {
                what: format!("enumeration domain {}", x.name()),
                needed: top,
                available: Some(up_to),
            });
        }
    }
    y.require_level(up_to, "enumeration codomain")?;

    let order: Vec<SimplexId> = x.all_nondeg().collect();
    if order.is_empty() {
        return Ok(vec![SimplicialMap { dom: x.clone(), cod: y.clone(), assign: Vec::new() }]);
    }
    let top = x.top_dim().unwrap();
    let levels: Vec<_> = (0..=top).map(|n| y.level(n)).collect::<Result<_>>()?;

    let mut maps = Vec::new();
    // chosen[k] = position in levels[dim] of the image of order[k]
    let mut chosen: Vec<usize> = Vec::with_capacity(order.len());
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(order.len());
    // current assignment, indexed by SimplexId
    let mut assign: Vec<Option<SimplexRef>> = vec![None; x.simplex_count()];

    let candidates_for = |assign: &[Option<SimplexRef>], s: SimplexId| -> Vec<usize> {
        let m = x.dim_of(s);
        if m == 0 {
            return (0..levels[0].refs.len()).collect();
        }
        let mut fv = Vec::with_capacity(m + 1);
        for face in x.faces_of(s) {
            let img = {
                let t = assign[face.base.0].as_ref().expect("lower dims assigned first");
                SimplexRef { base: t.base, deg: t.deg.compose(&face.deg).expect("deg composite") }
            };
            fv.push(levels[m - 1].index[&img]);
        }
        levels[m].by_faces.get(&fv).cloned().unwrap_or_default()
    };

    let mut k = 0usize;
    candidates.push(candidates_for(&assign, order[0]));
    chosen.push(0);
    loop {
        if chosen[k] < candidates[k].len() {
            let s = order[k];
            let pos = candidates[k][chosen[k]];
            assign[s.0] = Some(levels[x.dim_of(s)].refs[pos].clone());
            if k + 1 == order.len() {
                maps.push(SimplicialMap {
                    dom: x.clone(),
                    cod: y.clone(),
                    assign: assign.iter().map(|a| a.clone().unwrap()).collect(),
                });
                chosen[k] += 1;
            } else {
                k += 1;
                candidates.push(candidates_for(&assign, order[k]));
                chosen.push(0);
            }
        } else {
            candidates.pop();
            chosen.pop();
            if k == 0 {
                break;
            }
            k -= 1;
            chosen[k] += 1;
        }
    }
    Ok(maps)
}
