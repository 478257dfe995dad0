//! Irreducible characters of `S_d` by the Murnaghan–Nakayama rule.
//!
//! Border strips are located through beta-sets: a strip of size `k` is a
//! bead moved from position `b` to an empty position `b - k`, and its height
//! is the number of beads strictly between the two positions.

mod cache;

use std::cell::RefCell;
use std::collections::HashMap;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, Partition};

pub use cache::{cache_file_name, read_cache, write_cache};

type MemoKey = (Vec<u32>, Vec<u32>);

/// Memoized Murnaghan–Nakayama evaluator.
///
/// The memo is keyed on (remaining shape, remaining cycle multiset), both as
/// descending part lists. Parts of the cycle type are always consumed largest
/// first.
#[derive(Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<MemoKey, BigInt>,
}

impl MurnaghanNakayama {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn character(&mut self, rho: &Partition, mu: &Partition) -> Result<BigInt> {
        if rho.size() != mu.size() {
            return Err(Error::InvalidPair {
                rho: rho.size(),
                mu: mu.size(),
            });
        }
        Ok(self.eval(&rho.parts(), &mu.parts()))
    }

    /// Evaluates with `cycles` consumed in the given order, bypassing the
    /// memo. Used to check order independence.
    pub fn character_in_order(shape: &[u32], cycles: &[u32]) -> BigInt {
        match cycles.split_first() {
            None => {
                if shape.is_empty() {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Some((&k, rest)) => {
                let mut total = BigInt::zero();
                for (smaller, height) in remove_border_strips(shape, k) {
                    let term = Self::character_in_order(&smaller, rest);
                    if height % 2 == 0 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
                total
            }
        }
    }

    fn eval(&mut self, shape: &[u32], cycles: &[u32]) -> BigInt {
        let Some((&k, rest)) = cycles.split_first() else {
            return if shape.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        // A single remaining cycle: nonzero only for hooks.
        if rest.is_empty() {
            return hook_sign(shape, k);
        }
        let key = (shape.to_vec(), cycles.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for (smaller, height) in remove_border_strips(shape, k) {
            let term = self.eval(&smaller, rest);
            if height % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn hook_sign(shape: &[u32], k: u32) -> BigInt {
    let size: u32 = shape.iter().sum();
    if size != k {
        return BigInt::zero();
    }
    // A hook has at most one row longer than 1.
    if shape.iter().skip(1).any(|&r| r > 1) {
        return BigInt::zero();
    }
    let leg = shape.len() - 1;
    if leg.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// All ways to remove a border strip of size `k` from `shape`, as
/// (remaining shape, strip height). Strips are produced in ascending order of
/// the bead they move.
pub fn remove_border_strips(shape: &[u32], k: u32) -> Vec<(Vec<u32>, u32)> {
    let n = shape.len() as u32;
    // beta_i = shape_i + (n - 1 - i): strictly decreasing
    let beta: Vec<u32> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (n - 1 - i as u32))
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate().rev() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count() as u32;
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let len = moved.len() as u32;
        let smaller: Vec<u32> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u32))
            .filter(|&p| p > 0)
            .collect();
        out.push((smaller, height));
    }
    out
}

thread_local! {
    static THREAD_MEMO: RefCell<MurnaghanNakayama> = RefCell::new(MurnaghanNakayama::new());
}

/// `χ_ρ(μ)`, memoized per thread.
pub fn character(rho: &Partition, mu: &Partition) -> Result<BigInt> {
    THREAD_MEMO.with(|m| m.borrow_mut().character(rho, mu))
}

/// `dim ρ = χ_ρ(1^d)`.
pub fn dimension(rho: &Partition) -> BigUint {
    let ones = Partition::ones(rho.size()).expect("partitions are nonempty");
    character(rho, &ones)
        .expect("same size")
        .to_biguint()
        .expect("dimensions are positive")
}

/// `d! / ∏ hook lengths`, computed without any character recursion.
pub fn hook_length_dimension(rho: &Partition) -> BigUint {
    let rows = rho.parts();
    let mut hooks = BigUint::one();
    for (i, &row) in rows.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = rows[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= BigUint::from(arm + leg + 1);
        }
    }
    factorial(rho.size()) / hooks
}

/// The full character table of `S_d`, immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    degree: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // row-major: entries[rho * n + mu]
    entries: Vec<BigInt>,
}

impl CharacterTable {
    pub fn compute(degree: u32) -> Result<Self> {
        let partitions = partitions_of(degree)?;
        let mut mn = MurnaghanNakayama::new();
        let mut entries = Vec::with_capacity(partitions.len() * partitions.len());
        for rho in &partitions {
            for mu in &partitions {
                entries.push(mn.character(rho, mu)?);
            }
        }
        Ok(Self::from_parts(degree, partitions, entries))
    }

    fn from_parts(degree: u32, partitions: Vec<Partition>, entries: Vec<BigInt>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            degree,
            partitions,
            index,
            entries,
        }
    }

    /// Loads the table from `cache_dir` when a valid cache file exists,
    /// otherwise computes it and (re)writes the cache. Cache problems never
    /// surface as errors.
    pub fn load_or_compute(degree: u32, cache_dir: Option<&Path>) -> Result<Self> {
        if let Some(dir) = cache_dir {
            let path = dir.join(cache_file_name(degree));
            if let Some(table) = read_cache(&path, degree) {
                return Ok(table);
            }
            let table = Self::compute(degree)?;
            let _ = std::fs::create_dir_all(dir).and_then(|_| write_cache(&path, &table));
            return Ok(table);
        }
        Self::compute(degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, rho: &Partition, mu: &Partition) -> Result<&BigInt> {
        let n = self.partitions.len();
        match (self.index.get(rho), self.index.get(mu)) {
            (Some(&r), Some(&m)) => Ok(&self.entries[r * n + m]),
            _ => Err(Error::InvalidPair {
                rho: rho.size(),
                mu: mu.size(),
            }),
        }
    }

    pub fn dimension(&self, rho: &Partition) -> Result<BigUint> {
        let ones = Partition::ones(self.degree)?;
        Ok(self
            .get(rho, &ones)?
            .to_biguint()
            .expect("dimensions are positive"))
    }

    /// Iterates `(ρ, μ, χ_ρ(μ))` in table order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigInt)> {
        let n = self.partitions.len();
        self.entries.iter().enumerate().map(move |(i, v)| {
            (&self.partitions[i / n], &self.partitions[i % n], v)
        })
    }

    /// Structural sanity: every row has positive dimension.
    pub(crate) fn dimensions_positive(&self) -> bool {
        let ones = match Partition::ones(self.degree) {
            Ok(p) => p,
            Err(_) => return false,
        };
        self.partitions
            .iter()
            .all(|rho| self.get(rho, &ones).map(|v| v > &BigInt::zero()).unwrap_or(false))
    }
}
