//! Finite (possibly truncated) simplicial sets in canonical form.
//!
//! An object stores only its nondegenerate simplices together with face data;
//! every simplex in every dimension is recovered uniquely as a pair
//! `(nondegenerate base, monotone surjection)` — the canonical form used
//! throughout the library. The contravariant operator action [`FiniteSimplicialSet::act`]
//! normalizes back into canonical form after factoring the operator.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ord::{Injection, MonotoneMap, Surjection};
use crate::report::{Check, VerificationReport};

static NEXT_OBJECT_ID: AtomicU64 = AtomicU64::new(0);

/// Identity token for a constructed simplicial set. Two objects are "the same"
/// for map composition purposes iff their ids agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectId(u64);

fn fresh_object_id() -> ObjectId {
    ObjectId(NEXT_OBJECT_ID.fetch_add(1, Ordering::Relaxed))
}

/// Index of a nondegenerate simplex within its simplicial set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId(pub usize);

impl std::fmt::Display for SimplexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Canonical form of a simplex: a nondegenerate base of dimension `m` and a
/// degeneracy surjection `[n] ->> [m]`; the simplex lives in dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub base: SimplexId,
    pub deg: Surjection,
}

impl SimplexRef {
    pub fn nondegenerate(base: SimplexId, dim: usize) -> Self {
        Self { base, deg: Surjection::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.deg.source_dim()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.deg.is_identity()
    }
}

#[derive(Clone, Debug)]
struct SimplexData {
    name: String,
    dim: usize,
    /// `faces[i]` is the canonical form of the i-th face; empty for dimension 0.
    faces: Vec<SimplexRef>,
}

/// Per-dimension table of all simplices (canonical forms), their positions and
/// face maps; built lazily and cached.
pub struct LevelData {
    pub refs: Vec<SimplexRef>,
    pub index: FxHashMap<SimplexRef, usize>,
    /// `faces[k][i]` = position in level `n-1` of the i-th face of `refs[k]`.
    pub faces: Vec<Vec<usize>>,
    /// positions of the nondegenerate entries of `refs`
    pub nondeg: Vec<usize>,
    /// face-vector lookup: all faces of a ref, as level `n-1` positions -> candidates
    pub by_faces: FxHashMap<Vec<usize>, Vec<usize>>,
}

/// A finite simplicial set given by nondegenerate simplices plus face data.
///
/// `trunc` records up to which level the stored data faithfully represents the
/// intended object: `None` means every level is faithful (the object is the
/// whole finite simplicial set), `Some(d)` marks a d-skeleton of something
/// larger, e.g. a function complex materialized up to level `d`.
pub struct FiniteSimplicialSet {
    id: ObjectId,
    name: String,
    trunc: Option<usize>,
    simplices: Vec<SimplexData>,
    by_dim: Vec<Vec<SimplexId>>,
    levels: Mutex<HashMap<usize, Arc<LevelData>>>,
}

pub type SSet = Arc<FiniteSimplicialSet>;

impl std::fmt::Debug for FiniteSimplicialSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteSimplicialSet")
            .field("name", &self.name)
            .field("trunc", &self.trunc)
            .field("simplices", &self.simplices.len())
            .finish()
    }
}

impl FiniteSimplicialSet {
    pub fn id(&self) -> ObjectId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn trunc(&self) -> Option<usize> {
        self.trunc
    }

    /// Does the stored data faithfully describe level `n`?
    pub fn supports(&self, n: usize) -> bool {
        self.trunc.map_or(true, |d| n <= d)
    }

    pub fn require_level(&self, n: usize, what: &str) -> Result<()> {
        if self.supports(n) {
            Ok(())
        } else {
            Err(Error::Truncation { what: format!("{what} on {}", self.name), needed: n, available: self.trunc })
        }
    }

    /// Dimension of the top nondegenerate simplex; `None` when empty.
    pub fn top_dim(&self) -> Option<usize> {
        (0..self.by_dim.len())
            .rev()
            .find(|&d| !self.by_dim[d].is_empty())
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn dim_of(&self, id: SimplexId) -> usize {
        self.simplices[id.0].dim
    }

    pub fn name_of(&self, id: SimplexId) -> &str {
        &self.simplices[id.0].name
    }

    pub fn faces_of(&self, id: SimplexId) -> &[SimplexRef] {
        &self.simplices[id.0].faces
    }

    pub fn nondeg(&self, dim: usize) -> &[SimplexId] {
        self.by_dim.get(dim).map_or(&[], |v| v.as_slice())
    }

    /// All nondegenerate simplices, dimension-ascending then insertion order.
    pub fn all_nondeg(&self) -> impl Iterator<Item = SimplexId> + '_ {
        self.by_dim.iter().flatten().copied()
    }

    pub fn canonical(&self, id: SimplexId) -> SimplexRef {
        SimplexRef::nondegenerate(id, self.simplices[id.0].dim)
    }

    /// Number of simplices in dimension `n`, degenerate ones included.
    pub fn level_size(&self, n: usize) -> Result<usize> {
        Ok(self.level(n)?.refs.len())
    }

    /// Human-readable display of a canonical form, e.g. `012` or `01~001`.
    pub fn display_ref(&self, r: &SimplexRef) -> String {
        let base = &self.simplices[r.base.0].name;
        if r.deg.is_identity() {
            base.clone()
        } else {
            let digits: Vec<String> = r.deg.values().iter().map(|v| v.to_string()).collect();
            format!("{}~{}", base, digits.join(""))
        }
    }

    /// The contravariant action `s · op` of a monotone operator
    /// `op: [n'] -> [n]` on a simplex `s` of dimension `n`, returned in
    /// canonical form: factor `deg ∘ op`, push the injective part through the
    /// stored face data, and keep the surjective part as the new degeneracy.
    pub fn act(&self, s: &SimplexRef, op: &MonotoneMap) -> Result<SimplexRef> {
        if op.target_dim() != s.dim() {
            return Err(Error::DimensionMismatch(format!(
                "operator {op} does not target dimension {}",
                s.dim()
            )));
        }
        let composite = s.deg.as_monotone().compose(op)?;
        let (eta, iota) = composite.factor();
        let core = self.act_injection(s.base, &iota);
        Ok(SimplexRef { base: core.base, deg: core.deg.compose(&eta).expect("surjection composite") })
    }

    /// Action of an injection on a nondegenerate simplex, by repeated face
    /// application from the top missing vertex down.
    fn act_injection(&self, base: SimplexId, iota: &Injection) -> SimplexRef {
        if iota.is_identity() {
            return self.canonical(base);
        }
        // find the largest value of the target not hit by iota
        let m = iota.target_dim();
        let hit: Vec<bool> = {
            let mut h = vec![false; m + 1];
            for &v in iota.values() {
                h[v] = true;
            }
            h
        };
        let j = (0..=m).rev().find(|&v| !hit[v]).expect("non-identity injection misses a value");
        // iota = coface_j ∘ iota2
        let iota2 = MonotoneMap::new(
            iota.source_dim(),
            m - 1,
            iota.values().iter().map(|&v| if v < j { v } else { v - 1 }).collect(),
        )
        .expect("restricted injection");
        let face = &self.simplices[base.0].faces[j];
        self.act(face, &iota2).expect("dimensions agree by construction")
    }

    /// The table of all `n`-simplices in canonical form, cached.
    ///
    /// This always describes the *stored* object; whether a level also
    /// describes the ideal object the data approximates is what
    /// [`FiniteSimplicialSet::supports`] answers, and operations that
    /// interpret an object as its ideal consult it via `require_level`.
    pub fn level(&self, n: usize) -> Result<Arc<LevelData>> {
        if let Some(hit) = self.levels.lock().unwrap().get(&n) {
            return Ok(hit.clone());
        }
        let data = Arc::new(self.build_level(n)?);
        self.levels.lock().unwrap().insert(n, data.clone());
        Ok(data)
    }

    fn build_level(&self, n: usize) -> Result<LevelData> {
        let mut refs = Vec::new();
        let mut nondeg = Vec::new();
        for m in 0..=n.min(self.by_dim.len().saturating_sub(1)) {
            for &b in &self.by_dim[m] {
                for deg in MonotoneMap::surjections(n, m) {
                    if m == n {
                        nondeg.push(refs.len());
                    }
                    refs.push(SimplexRef { base: b, deg });
                }
            }
        }
        let index: FxHashMap<SimplexRef, usize> =
            refs.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let mut faces = Vec::new();
        let mut by_faces: FxHashMap<Vec<usize>, Vec<usize>> = FxHashMap::default();
        if n > 0 {
            let below = self.level(n - 1)?;
            for (k, r) in refs.iter().enumerate() {
                let mut fv = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    let face = self.act(r, &MonotoneMap::coface(n, i))?;
                    fv.push(*below.index.get(&face).ok_or_else(|| {
                        Error::Internal(format!(
                            "face {} of {} missing from level {}",
                            self.display_ref(&face),
                            self.display_ref(r),
                            n - 1
                        ))
                    })?);
                }
                by_faces.entry(fv.clone()).or_default().push(k);
                faces.push(fv);
            }
        }
        Ok(LevelData { refs, index, faces, nondeg, by_faces })
    }

    /// Field invariants plus the simplicial identities
    /// `d_i d_j = d_{j-1} d_i` (i < j) for every stored simplex.
    pub fn validate(&self) -> VerificationReport {
        let mut report = VerificationReport::new(format!("validate {}", self.name));
        for (k, s) in self.simplices.iter().enumerate() {
            let expected = if s.dim == 0 { 0 } else { s.dim + 1 };
            if s.faces.len() != expected {
                report.push(Check::fail(
                    "sset.faces.count",
                    format!("{}:{}", self.name, s.name),
                    format!("has {} faces, expected {}", s.faces.len(), expected),
                ));
                continue;
            }
            let mut ok = true;
            for (i, f) in s.faces.iter().enumerate() {
                if f.base.0 >= self.simplices.len() {
                    report.push(Check::fail(
                        "sset.faces.target",
                        format!("{}:{} d_{}", self.name, s.name, i),
                        "dangling face target".to_string(),
                    ));
                    ok = false;
                } else if s.dim == 0 || f.dim() != s.dim - 1 {
                    report.push(Check::fail(
                        "sset.faces.dim",
                        format!("{}:{} d_{}", self.name, s.name, i),
                        format!("face has dimension {}, expected {}", f.dim(), s.dim.saturating_sub(1)),
                    ));
                    ok = false;
                }
            }
            if !ok {
                continue;
            }
            report.push(Check::pass("sset.faces", format!("{}:{}", self.name, s.name)));
            if s.dim >= 2 {
                let r = self.canonical(SimplexId(k));
                let n = s.dim;
                let mut all_ok = true;
                let mut witness = String::new();
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self
                            .act(&s.faces[j], &MonotoneMap::coface(n - 1, i))
                            .expect("face dims");
                        let rhs = self
                            .act(&s.faces[i], &MonotoneMap::coface(n - 1, j - 1))
                            .expect("face dims");
                        if lhs != rhs {
                            all_ok = false;
                            witness = format!(
                                "d_{i} d_{j} {} = {} but d_{} d_{i} {} = {}",
                                self.display_ref(&r),
                                self.display_ref(&lhs),
                                j - 1,
                                self.display_ref(&r),
                                self.display_ref(&rhs)
                            );
                        }
                    }
                }
                let instance = format!("{}:{}", self.name, s.name);
                if all_ok {
                    report.push(Check::pass("sset.identity", instance));
                } else {
                    report.push(Check::fail("sset.identity", instance, witness));
                }
            }
        }
        if self.simplices.is_empty() {
            report.push(Check::pass("sset.empty", format!("{} (vacuous)", self.name)));
        }
        report
    }
}

/// Incremental constructor for [`FiniteSimplicialSet`].
pub struct SSetBuilder {
    name: String,
    trunc: Option<usize>,
    enforce_trunc: bool,
    simplices: Vec<SimplexData>,
    by_dim: Vec<Vec<SimplexId>>,
}

impl SSetBuilder {
    pub fn new(name: impl Into<String>, trunc: Option<usize>) -> Self {
        Self {
            name: name.into(),
            trunc,
            enforce_trunc: true,
            simplices: Vec::new(),
            by_dim: Vec::new(),
        }
    }

    /// Like [`SSetBuilder::new`], but `trunc` is a faithfulness annotation
    /// only: stored simplices may exceed it. Used for products involving
    /// truncated factors, where the stored data is complete for the factors
    /// as given while levels above `trunc` no longer match the ideal object.
    pub fn annotated(name: impl Into<String>, trunc: Option<usize>) -> Self {
        let mut b = Self::new(name, trunc);
        b.enforce_trunc = false;
        b
    }

    pub fn add_simplex(&mut self, name: impl Into<String>, dim: usize) -> SimplexId {
        let id = SimplexId(self.simplices.len());
        self.simplices.push(SimplexData { name: name.into(), dim, faces: Vec::new() });
        if self.by_dim.len() <= dim {
            self.by_dim.resize(dim + 1, Vec::new());
        }
        self.by_dim[dim].push(id);
        id
    }

    pub fn set_faces(&mut self, id: SimplexId, faces: Vec<SimplexRef>) {
        self.simplices[id.0].faces = faces;
    }

    /// Structural well-formedness only; the simplicial identities are the
    /// business of [`FiniteSimplicialSet::validate`].
    pub fn finish(self) -> Result<SSet> {
        for s in &self.simplices {
            let expected = if s.dim == 0 { 0 } else { s.dim + 1 };
            if s.faces.len() != expected {
                return Err(Error::ShapeMismatch(format!(
                    "simplex {} of dimension {} has {} faces",
                    s.name,
                    s.dim,
                    s.faces.len()
                )));
            }
            for f in &s.faces {
                if f.base.0 >= self.simplices.len() {
                    return Err(Error::ShapeMismatch(format!(
                        "simplex {} has a dangling face target",
                        s.name
                    )));
                }
                let base_dim = self.simplices[f.base.0].dim;
                if f.deg.target_dim() != base_dim || f.dim() + 1 != s.dim {
                    return Err(Error::ShapeMismatch(format!(
                        "face of {} has inconsistent dimensions",
                        s.name
                    )));
                }
            }
        }
        if self.enforce_trunc {
            if let Some(d) = self.trunc {
                if self.by_dim.len() > d + 1 {
                    return Err(Error::Truncation {
                        what: format!("builder for {}", self.name),
                        needed: self.by_dim.len() - 1,
                        available: Some(d),
                    });
                }
            }
        }
        Ok(Arc::new(FiniteSimplicialSet {
            id: fresh_object_id(),
            name: self.name,
            trunc: self.trunc,
            simplices: self.simplices,
            by_dim: self.by_dim,
            levels: Mutex::new(HashMap::new()),
        }))
    }
}

fn vertex_list_name(vs: &[usize]) -> String {
    if vs.iter().all(|&v| v < 10) {
        vs.iter().map(|v| v.to_string()).collect()
    } else {
        let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
        parts.join("_")
    }
}

/// The standard simplex Δ[n]: nondegenerate m-simplices are the strictly
/// increasing maps `[m] -> [n]`, faces act by composition with cofaces.
pub fn standard_simplex(n: usize) -> SSet {
    let mut b = SSetBuilder::new(format!("delta{n}"), None);
    let mut ids: HashMap<Vec<usize>, SimplexId> = HashMap::new();
    for m in 0..=n {
        for inj in MonotoneMap::injections(m, n) {
            let vs = inj.values().to_vec();
            let id = b.add_simplex(vertex_list_name(&vs), m);
            ids.insert(vs, id);
        }
    }
    for m in 1..=n {
        for inj in MonotoneMap::injections(m, n) {
            let id = ids[inj.values()];
            let faces = (0..=m)
                .map(|i| {
                    let face: Vec<usize> = inj
                        .values()
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != i)
                        .map(|(_, &v)| v)
                        .collect();
                    SimplexRef::nondegenerate(ids[&face], m - 1)
                })
                .collect();
            b.set_faces(id, faces);
        }
    }
    b.finish().expect("standard simplex is well formed")
}

/// The boundary ∂Δ[n]: Δ[n] without its top cell.
pub fn boundary(n: usize) -> SSet {
    sub_simplex(format!("bd{n}"), n, |vs| vs.len() < n + 1)
}

/// The horn Λ^k[n]: ∂Δ[n] without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize) -> SSet {
    assert!(k <= n);
    sub_simplex(format!("horn{n}_{k}"), n, move |vs| {
        vs.len() < n + 1 && !(vs.len() == n && !vs.contains(&k))
    })
}

fn sub_simplex(name: String, n: usize, keep: impl Fn(&[usize]) -> bool) -> SSet {
    let mut b = SSetBuilder::new(name, None);
    let mut ids: HashMap<Vec<usize>, SimplexId> = HashMap::new();
    for m in 0..=n {
        for inj in MonotoneMap::injections(m, n) {
            let vs = inj.values().to_vec();
            if keep(&vs) {
                let id = b.add_simplex(vertex_list_name(&vs), m);
                ids.insert(vs, id);
            }
        }
    }
    let keys: Vec<Vec<usize>> = ids.keys().cloned().collect();
    for vs in keys {
        let m = vs.len() - 1;
        if m == 0 {
            continue;
        }
        let id = ids[&vs];
        let faces = (0..=m)
            .map(|i| {
                let face: Vec<usize> = vs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i)
                    .map(|(_, &v)| v)
                    .collect();
                SimplexRef::nondegenerate(ids[&face], m - 1)
            })
            .collect();
        b.set_faces(id, faces);
    }
    b.finish().expect("simplex subobject is well formed")
}

/// The empty simplicial set.
pub fn empty(name: impl Into<String>) -> SSet {
    SSetBuilder::new(name, None).finish().expect("empty object")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_object_has_one_simplex_per_level() {
        let d0 = standard_simplex(0);
        for n in 0..5 {
            assert_eq!(d0.level_size(n).unwrap(), 1);
        }
    }

    #[test]
    fn delta1_level_sizes() {
        // oracle: |Δ[n]_m| = #monotone maps [m] -> [n]
        let d1 = standard_simplex(1);
        for m in 0..3 {
            assert_eq!(d1.level_size(m).unwrap(), MonotoneMap::all(m, 1).len());
        }
        assert_eq!(
            (0..3).map(|m| d1.level_size(m).unwrap()).collect::<Vec<_>>(),
            vec![2, 3, 4]
        );
    }

    #[test]
    fn delta2_nondegenerate_counts() {
        let d2 = standard_simplex(2);
        let counts: Vec<usize> = (0..4).map(|m| d2.nondeg(m).len()).collect();
        assert_eq!(counts, vec![3, 3, 1, 0]);
    }

    #[test]
    fn act_identity_is_identity() {
        let d2 = standard_simplex(2);
        for n in 0..3 {
            for r in &d2.level(n).unwrap().refs {
                assert_eq!(&d2.act(r, &MonotoneMap::identity(n)).unwrap(), r);
            }
        }
    }

    #[test]
    fn act_face_of_top_edge() {
        let d1 = standard_simplex(1);
        let edge = d1
            .all_nondeg()
            .find(|&s| d1.dim_of(s) == 1)
            .map(|s| d1.canonical(s))
            .unwrap();
        let v1 = d1.act(&edge, &MonotoneMap::coface(1, 0)).unwrap();
        assert_eq!(d1.name_of(v1.base), "1");
        assert!(v1.is_nondegenerate());
        let v0 = d1.act(&edge, &MonotoneMap::coface(1, 1)).unwrap();
        assert_eq!(d1.name_of(v0.base), "0");
    }

    #[test]
    fn act_respects_composition() {
        // oracle: acting by a composite equals acting stepwise, exhaustively
        // over Δ[2] up to dimension 2 and all operator pairs
        let d2 = standard_simplex(2);
        for n in 0..=2usize {
            for r in &d2.level(n).unwrap().refs {
                for mid in 0..=3usize {
                    for theta in MonotoneMap::all(mid, n) {
                        for lower in 0..=3usize {
                            for theta2 in MonotoneMap::all(lower, mid) {
                                let once = d2.act(r, &theta.compose(&theta2).unwrap()).unwrap();
                                let twice =
                                    d2.act(&d2.act(r, &theta).unwrap(), &theta2).unwrap();
                                assert_eq!(once, twice);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn eilenberg_zilber_counting() {
        // |X_n| = Σ_m |nondeg_m| · C(n, m)
        let binom = |n: usize, k: usize| -> usize {
            if k > n {
                return 0;
            }
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        };
        for x in [standard_simplex(2), boundary(2), horn(2, 1)] {
            for n in 0..4 {
                let expected: usize =
                    (0..=n).map(|m| x.nondeg(m).len() * binom(n, m)).sum();
                assert_eq!(x.level_size(n).unwrap(), expected, "{} at level {n}", x.name());
            }
        }
    }

    #[test]
    fn level_refs_are_distinct() {
        let x = boundary(2);
        for n in 0..4 {
            let lvl = x.level(n).unwrap();
            assert_eq!(lvl.index.len(), lvl.refs.len());
        }
    }

    #[test]
    fn validates_standard_fixtures() {
        for x in [
            standard_simplex(0),
            standard_simplex(3),
            boundary(1),
            boundary(2),
            horn(2, 1),
            empty("void"),
        ] {
            let report = x.validate();
            assert!(report.is_pass(), "{} failed validation:\n{}", x.name(), report.render_text());
        }
    }

    #[test]
    fn boundary_and_horn_shapes() {
        let bd1 = boundary(1);
        assert_eq!(bd1.nondeg(0).len(), 2);
        assert_eq!(bd1.nondeg(1).len(), 0);
        let bd2 = boundary(2);
        assert_eq!((bd2.nondeg(0).len(), bd2.nondeg(1).len(), bd2.nondeg(2).len()), (3, 3, 0));
        let h = horn(2, 1);
        assert_eq!((h.nondeg(0).len(), h.nondeg(1).len()), (3, 2));
        let edge_names: Vec<&str> =
            h.nondeg(1).iter().map(|&s| h.name_of(s)).collect();
        assert_eq!(edge_names, vec!["01", "12"]);
    }

    #[test]
    fn truncated_builder_rejects_excess_dims() {
        let mut b = SSetBuilder::new("bad", Some(0));
        let v = b.add_simplex("v", 0);
        let w = b.add_simplex("w", 1);
        b.set_faces(
            w,
            vec![SimplexRef::nondegenerate(v, 0), SimplexRef::nondegenerate(v, 0)],
        );
        assert!(b.finish().is_err());
    }

    #[test]
    fn truncation_gates_ideal_interpretation_not_storage() {
        let mut b = SSetBuilder::new("sk0", Some(0));
        b.add_simplex("v", 0);
        let x = b.finish().unwrap();
        // stored levels are always available ...
        assert_eq!(x.level(1).unwrap().refs.len(), 1);
        // ... but interpreting the object beyond its faithful range errors
        assert!(x.require_level(0, "test").is_ok());
        assert!(matches!(x.require_level(1, "test"), Err(Error::Truncation { .. })));
    }
}
