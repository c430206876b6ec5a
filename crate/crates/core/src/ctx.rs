//! Shared construction context.
//!
//! Standard simplices, products and function complexes are memoized by object
//! identity so that repeated requests return the *same* constructed object;
//! map composition compatibility is identity-based, so every consumer of, say,
//! `X × Δ[2]` must see one object, not structurally equal twins.
//!
//! Function complexes are cached per (source, target): a request at a level
//! not exceeding the cached one returns the cached complex, a deeper request
//! rebuilds and replaces it. Suites therefore audit their level requirements
//! up front and materialize the deepest complex first.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::enrich::FunctionComplex;
use crate::error::Result;
use crate::product::Product;
use crate::sset::{standard_simplex, ObjectId, SSet};

#[derive(Default)]
pub struct Ctx {
    deltas: Mutex<HashMap<usize, SSet>>,
    products: Mutex<HashMap<(ObjectId, ObjectId), Arc<Product>>>,
    complexes: Mutex<HashMap<(ObjectId, ObjectId), Arc<FunctionComplex>>>,
}

impl Ctx {
    pub fn new() -> Self {
        Self::default()
    }

    /// The standard simplex Δ[n], one object per context.
    pub fn delta(&self, n: usize) -> SSet {
        self.deltas
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| standard_simplex(n))
            .clone()
    }

    /// The product `x × y`, memoized by the identities of the factors.
    pub fn product(&self, x: &SSet, y: &SSet) -> Result<Arc<Product>> {
        let key = (x.id(), y.id());
        if let Some(hit) = self.products.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let built = Product::build(x, y)?;
        let mut guard = self.products.lock().unwrap();
        Ok(guard.entry(key).or_insert(built).clone())
    }

    /// The function complex of maps `x × Δ[n] -> y`, materialized at least up
    /// to level `d`.
    pub fn fncx(&self, x: &SSet, y: &SSet, d: usize) -> Result<Arc<FunctionComplex>> {
        let key = (x.id(), y.id());
        if let Some(hit) = self.complexes.lock().unwrap().get(&key) {
            if hit.level() >= d {
                return Ok(hit.clone());
            }
        }
        let built = FunctionComplex::build(self, x, y, d)?;
        self.complexes.lock().unwrap().insert(key, built.clone());
        Ok(built)
    }

    /// A cached function complex whose carrier is the given object, if any.
    pub fn fncx_by_carrier(&self, carrier: ObjectId) -> Option<Arc<FunctionComplex>> {
        self.complexes
            .lock()
            .unwrap()
            .values()
            .find(|fc| fc.carrier().id() == carrier)
            .cloned()
    }
}
