//! Weakly increasing maps between finite ordinals `[n] = {0, …, n}` and the
//! operator algebra built from them: cofaces, codegeneracies, the collapse to
//! a point, epi-mono factorization and exhaustive enumeration.
//!
//! Everything downstream (face/degeneracy actions, canonical forms, the
//! contravariant operator action on function complexes) reduces to compositions
//! and factorizations of these maps, so this module is deliberately small and
//! fully checked.

use crate::error::{Error, Result};

/// A weakly increasing map `[source_dim] -> [target_dim]`, stored by its full
/// value list (the graph), never as a word in generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneMap {
    source_dim: usize,
    target_dim: usize,
    values: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source_dim: usize, target_dim: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != source_dim + 1 {
            return Err(Error::InvalidMonotone(format!(
                "expected {} values for [{}], got {}",
                source_dim + 1,
                source_dim,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v > target_dim) {
            return Err(Error::InvalidMonotone(format!(
                "value {v} exceeds target dimension {target_dim}"
            )));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidMonotone(format!(
                "values {values:?} are not weakly increasing"
            )));
        }
        Ok(Self { source_dim, target_dim, values })
    }

    pub fn identity(n: usize) -> Self {
        Self { source_dim: n, target_dim: n, values: (0..=n).collect() }
    }

    /// The coface `[n-1] -> [n]` whose image misses `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n, "coface index out of range");
        let values = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
        Self { source_dim: n - 1, target_dim: n, values }
    }

    /// The codegeneracy `[n+1] -> [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n, "codegeneracy index out of range");
        let values = (0..=n + 1).map(|i| if i <= j { i } else { i - 1 }).collect();
        Self { source_dim: n + 1, target_dim: n, values }
    }

    /// The unique map `[n] -> [0]`.
    pub fn terminal(n: usize) -> Self {
        Self { source_dim: n, target_dim: 0, values: vec![0; n + 1] }
    }

    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Injective iff strictly increasing.
    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    /// Surjective iff every target value is attained.
    pub fn is_surjective(&self) -> bool {
        let mut next = 0;
        for &v in &self.values {
            if v == next {
                next += 1;
            }
        }
        next == self.target_dim + 1
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonotoneMap) -> Result<MonotoneMap> {
        if inner.target_dim != self.source_dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose [{}]->[{}] after [{}]->[{}]",
                self.source_dim, self.target_dim, inner.source_dim, inner.target_dim
            )));
        }
        Ok(MonotoneMap {
            source_dim: inner.source_dim,
            target_dim: self.target_dim,
            values: inner.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    /// Unique epi-mono factorization `self = injection ∘ surjection`.
    pub fn factor(&self) -> (Surjection, Injection) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let surj = MonotoneMap {
            source_dim: self.source_dim,
            target_dim: image.len().saturating_sub(1),
            values: self
                .values
                .iter()
                .map(|v| image.binary_search(v).expect("value in image"))
                .collect(),
        };
        let inj = MonotoneMap {
            source_dim: image.len().saturating_sub(1),
            target_dim: self.target_dim,
            values: image,
        };
        (Surjection(surj), Injection(inj))
    }

    /// All monotone maps `[n] -> [m]`, in lexicographic order of value lists.
    pub fn all(n: usize, m: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut current = vec![0usize; n + 1];
        loop {
            out.push(MonotoneMap { source_dim: n, target_dim: m, values: current.clone() });
            // advance to the next weakly increasing sequence
            let mut i = n + 1;
            while i > 0 {
                i -= 1;
                if current[i] < m {
                    let v = current[i] + 1;
                    for slot in current.iter_mut().skip(i) {
                        *slot = v;
                    }
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
        }
    }

    /// All monotone surjections `[n] ->> [m]`, lexicographic. Empty when `m > n`.
    pub fn surjections(n: usize, m: usize) -> Vec<Surjection> {
        MonotoneMap::all(n, m)
            .into_iter()
            .filter(|f| f.is_surjective())
            .map(Surjection)
            .collect()
    }

    /// All monotone injections `[m] -> [n]`, lexicographic. Empty when `m > n`.
    pub fn injections(m: usize, n: usize) -> Vec<Injection> {
        MonotoneMap::all(m, n)
            .into_iter()
            .filter(|f| f.is_injective())
            .map(Injection)
            .collect()
    }
}

impl std::fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vs.join(" "))
    }
}

/// A surjective [`MonotoneMap`]; checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection(MonotoneMap);

impl Surjection {
    pub fn new(map: MonotoneMap) -> Result<Self> {
        if !map.is_surjective() {
            return Err(Error::InvalidMonotone(format!("{map} is not surjective")));
        }
        Ok(Self(map))
    }

    pub fn identity(n: usize) -> Self {
        Self(MonotoneMap::identity(n))
    }

    /// The collapse `[n] ->> [0]`.
    pub fn terminal(n: usize) -> Self {
        Self(MonotoneMap::terminal(n))
    }

    pub fn as_monotone(&self) -> &MonotoneMap {
        &self.0
    }

    pub fn source_dim(&self) -> usize {
        self.0.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.0.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.0.values
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// `self ∘ inner`; a composite of surjections is surjective.
    pub fn compose(&self, inner: &Surjection) -> Result<Surjection> {
        Ok(Surjection(self.0.compose(&inner.0)?))
    }
}

impl std::fmt::Display for Surjection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// An injective (strictly increasing) [`MonotoneMap`]; checked at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection(MonotoneMap);

impl Injection {
    pub fn new(map: MonotoneMap) -> Result<Self> {
        if !map.is_injective() {
            return Err(Error::InvalidMonotone(format!("{map} is not injective")));
        }
        Ok(Self(map))
    }

    pub fn identity(n: usize) -> Self {
        Self(MonotoneMap::identity(n))
    }

    pub fn as_monotone(&self) -> &MonotoneMap {
        &self.0
    }

    pub fn source_dim(&self) -> usize {
        self.0.source_dim
    }

    pub fn target_dim(&self) -> usize {
        self.0.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.0.values
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}

impl std::fmt::Display for Injection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Unique epi-mono factorization: `f = injection ∘ surjection`.
pub fn factor_monotone(f: &MonotoneMap) -> (Surjection, Injection) {
    f.factor()
}
