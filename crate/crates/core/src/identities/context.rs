use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::multipoly::MPoly;
use crate::symfun::{classical, Classical, GenTable};

/// `e_k`, `h_k` for `k <= kmax` in `n` variables.
#[derive(Debug)]
pub struct ClassicalTable {
    n: usize,
    e: Vec<MPoly<BigInt>>,
    h: Vec<MPoly<BigInt>>,
}

impl ClassicalTable {
    fn new(n: usize, kmax: usize) -> Self {
        let build = |kind| (0..=kmax as u32).map(|k| classical(kind, k, n)).collect();
        ClassicalTable { n, e: build(Classical::Elementary), h: build(Classical::Complete) }
    }

    fn kmax(&self) -> usize {
        self.e.len() - 1
    }

    pub fn e(&self, k: i64) -> MPoly<BigInt> {
        if k < 0 {
            MPoly::zero(self.n)
        } else {
            self.e[k as usize].clone()
        }
    }

    pub fn h(&self, k: i64) -> MPoly<BigInt> {
        if k < 0 {
            MPoly::zero(self.n)
        } else {
            self.h[k as usize].clone()
        }
    }

    pub fn e_ref(&self, k: usize) -> &MPoly<BigInt> {
        &self.e[k]
    }

    pub fn h_ref(&self, k: usize) -> &MPoly<BigInt> {
        &self.h[k]
    }
}

/// Memo of symmetric-function tables shared by the checks of one run.
///
/// Lookups return an existing table when it reaches far enough and
/// otherwise build one of exactly the requested size. Two threads may race
/// to build the same table; both results are identical, so whichever lands
/// last simply replaces the other.
#[derive(Default)]
pub struct Tables {
    generalized: Mutex<HashMap<(usize, u32), Arc<GenTable>>>,
    classical: Mutex<HashMap<usize, Arc<ClassicalTable>>>,
}

impl Tables {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generalized(&self, n: usize, s: u32, kmax: usize) -> Arc<GenTable> {
        if let Some(t) = self.generalized.lock().unwrap().get(&(n, s)) {
            if t.kmax() >= kmax {
                return Arc::clone(t);
            }
        }
        let t = Arc::new(GenTable::new(n, s, kmax));
        let mut map = self.generalized.lock().unwrap();
        let slot = map.entry((n, s)).or_insert_with(|| Arc::clone(&t));
        if slot.kmax() < kmax {
            *slot = Arc::clone(&t);
        }
        t
    }

    pub fn classical(&self, n: usize, kmax: usize) -> Arc<ClassicalTable> {
        if let Some(t) = self.classical.lock().unwrap().get(&n) {
            if t.kmax() >= kmax {
                return Arc::clone(t);
            }
        }
        let t = Arc::new(ClassicalTable::new(n, kmax));
        let mut map = self.classical.lock().unwrap();
        let slot = map.entry(n).or_insert_with(|| Arc::clone(&t));
        if slot.kmax() < kmax {
            *slot = Arc::clone(&t);
        }
        t
    }
}
