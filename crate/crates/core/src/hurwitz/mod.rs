//! Branched-cover counts of a genus-`g` curve with prescribed ramification,
//! computed two independent ways: by exhaustive enumeration of monodromy
//! tuples and by the Frobenius character formula.
//!
//! Counts are of possibly disconnected covers, each weighted by the inverse
//! of its automorphism group.

pub mod perm;

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::error::{Error, Result};
use crate::partitions::{class_size, factorial, Partition, Profile};
use perm::{symmetric_group, Perm, MAX_DEGREE};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverCountQuery {
    pub genus: u32,
    pub profile: Profile,
    /// Count covers with the preimages of each marked point ordered.
    pub ordered_contacts: bool,
}

impl CoverCountQuery {
    pub fn new(genus: u32, profile: Profile) -> Self {
        CoverCountQuery {
            genus,
            profile,
            ordered_contacts: false,
        }
    }

    pub fn ordered(mut self) -> Self {
        self.ordered_contacts = true;
        self
    }

    pub fn degree(&self) -> u32 {
        self.profile.degree()
    }

    /// Domain Euler characteristic forced by Riemann–Hurwitz:
    /// `d(2 − 2g) − δ(μ)`.
    pub fn chi_forced(&self) -> i64 {
        i64::from(self.degree()) * (2 - 2 * i64::from(self.genus)) - self.profile.delta() as i64
    }

    fn ordering_factor(&self) -> BigRational {
        if self.ordered_contacts {
            BigRational::from_integer(BigInt::from(self.profile.aut_order()))
        } else {
            BigRational::one()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[serde(rename = "enum")]
    Enumeration,
    #[serde(rename = "char")]
    Characters,
    Both,
}

/// Result of counting covers of one half of a doublet target.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubletCount {
    pub value: BigRational,
    /// Euler characteristic of the full real domain, twice that of one half.
    pub chi_real: i64,
    /// Ramification over the positive point of each conjugate pair.
    pub profile: Profile,
}

/// Shared state for cover counting: the enumeration budget and a per-degree
/// registry of character tables.
pub struct Oracle {
    budget: u64,
    cache_dir: Option<PathBuf>,
    tables: Mutex<HashMap<u32, Arc<CharacterTable>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_BUDGET, None)
    }
}

impl Oracle {
    pub fn new(budget: u64, cache_dir: Option<PathBuf>) -> Self {
        Oracle {
            budget: budget.max(1),
            cache_dir,
            tables: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn table(&self, degree: u32) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.lock().unwrap().get(&degree) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(CharacterTable::load_or_compute(
            degree,
            self.cache_dir.as_deref(),
        )?);
        self.tables
            .lock()
            .unwrap()
            .entry(degree)
            .or_insert_with(|| Arc::clone(&table));
        Ok(table)
    }

    /// Number of elementary steps an enumeration of `q` would take.
    pub fn enumeration_cost(q: &CoverCountQuery) -> u128 {
        let d = q.degree();
        let group = factorial(d).to_u128().unwrap_or(u128::MAX);
        let mut cost = group;
        let mut inner: u128 = 1;
        for _ in 0..2 * q.genus {
            inner = inner.saturating_mul(group);
        }
        let parts = q.profile.parts();
        if let Some((_, free)) = parts.split_last() {
            for mu in free {
                inner = inner.saturating_mul(class_size(mu).to_u128().unwrap_or(u128::MAX));
            }
        }
        cost = cost.saturating_add(inner);
        cost
    }

    /// Counts monodromy tuples `(a_1, b_1, …, a_g, b_g, σ_1, …, σ_r)` with
    /// `∏[a_i, b_i] · σ_1 ⋯ σ_r = 1` and `σ_j` of cycle type `μ^j`, divided
    /// by `d!`. The last `σ_r` is solved from the product relation.
    pub fn count_by_enumeration(&self, q: &CoverCountQuery) -> Result<BigRational> {
        let d = q.degree() as usize;
        let estimate = Self::enumeration_cost(q);
        if d > MAX_DEGREE || estimate > u128::from(self.budget) {
            return Err(Error::EnumerationTooLarge {
                estimate,
                budget: self.budget,
            });
        }
        let group = symmetric_group(d);
        let parts = q.profile.parts();
        let (last, free) = match parts.split_last() {
            Some((last, free)) => (Some(last), free),
            None => (None, &[][..]),
        };
        let classes: Vec<Vec<Perm>> = free
            .iter()
            .map(|mu| group.iter().copied().filter(|p| p.has_cycle_type(mu)).collect())
            .collect();
        let ctx = Enumeration {
            group: &group,
            classes: &classes,
            last: last.map(Partition::parts),
            genus: q.genus as usize,
        };
        let tuples: u64 = if ctx.genus > 0 {
            group
                .par_iter()
                .map(|a| {
                    group
                        .iter()
                        .map(|b| ctx.extend(1, 0, Perm::commutator(a, b)))
                        .sum::<u64>()
                })
                .sum()
        } else if let Some(first) = classes.first() {
            first.par_iter().map(|s| ctx.extend(0, 1, *s)).sum()
        } else {
            ctx.extend(0, 0, Perm::identity(d))
        };
        let value = BigRational::new(BigInt::from(tuples), BigInt::from(factorial(q.degree())));
        Ok(value * q.ordering_factor())
    }

    /// Frobenius formula:
    /// `Σ_ρ (d!/dim ρ)^{2g−2} ∏_j |C_{μ^j}| χ_ρ(μ^j) / dim ρ`.
    pub fn count_by_characters(&self, q: &CoverCountQuery) -> Result<BigRational> {
        let d = q.degree();
        let table = self.table(d)?;
        let order = BigInt::from(factorial(d));
        let euler = 2 * i64::from(q.genus) - 2;
        let mut total = BigRational::zero();
        for rho in table.partitions() {
            let dim = BigInt::from(table.dimension(rho)?);
            let base = BigRational::new(order.clone(), dim.clone());
            let mut term = rational_pow(&base, euler);
            for mu in q.profile.parts() {
                let chi = table.get(rho, mu)?;
                if chi.is_zero() {
                    term = BigRational::zero();
                    break;
                }
                term *= BigRational::new(BigInt::from(class_size(mu)) * chi, dim.clone());
            }
            total += term;
        }
        Ok(total * q.ordering_factor())
    }

    /// Runs the requested method(s). With [`Method::Both`] a disagreement
    /// is reported as an inconsistency.
    pub fn count(&self, q: &CoverCountQuery, method: Method) -> Result<BigRational> {
        match method {
            Method::Enumeration => self.count_by_enumeration(q),
            Method::Characters => self.count_by_characters(q),
            Method::Both => {
                let by_chars = self.count_by_characters(q)?;
                let by_enum = self.count_by_enumeration(q)?;
                if by_chars != by_enum {
                    return Err(Error::InconsistentTable(format!(
                        "enumeration gives {by_enum}, characters give {by_chars}"
                    )));
                }
                Ok(by_chars)
            }
        }
    }

    /// Real covers of a doublet target, read off one half.
    ///
    /// A real map to two conjugate copies of a curve is determined by its
    /// restriction to the positive copy, so the count is the complex count for
    /// that half and the real domain has twice its Euler characteristic. This
    /// is the level-0 instantiation used throughout the crate.
    pub fn doublet_real_count(&self, half: &CoverCountQuery) -> Result<DoubletCount> {
        Ok(DoubletCount {
            value: self.count_by_characters(half)?,
            chi_real: 2 * half.chi_forced(),
            profile: half.profile.clone(),
        })
    }
}

struct Enumeration<'a> {
    group: &'a [Perm],
    classes: &'a [Vec<Perm>],
    last: Option<Vec<u32>>,
    genus: usize,
}

impl Enumeration<'_> {
    fn extend(&self, pairs: usize, sigmas: usize, acc: Perm) -> u64 {
        if pairs < self.genus {
            let mut n = 0;
            for a in self.group {
                for b in self.group {
                    n += self.extend(pairs + 1, sigmas, acc.compose(&Perm::commutator(a, b)));
                }
            }
            return n;
        }
        if sigmas < self.classes.len() {
            return self.classes[sigmas]
                .iter()
                .map(|s| self.extend(pairs, sigmas + 1, acc.compose(s)))
                .sum();
        }
        match &self.last {
            // σ_r = acc⁻¹ has the same cycle type as acc
            Some(mu) => u64::from(acc.cycle_type() == *mu),
            None => u64::from(acc.is_identity()),
        }
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let p = num_traits::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// `∏_i |Aut μ^i|` as a rational, the degree of the contact-ordering cover.
pub fn ordering_degree(profile: &Profile) -> BigRational {
    BigRational::from_integer(BigInt::from(profile.aut_order()))
}
