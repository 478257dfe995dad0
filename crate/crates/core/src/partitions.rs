//! Integer partitions in multiplicity form, and the two coefficients built
//! from multiplicities: the automorphism order `∏ m_k!` and the splitting
//! coefficient `ζ(λ) = ∏ m_k! k^{m_k}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition stored as part size → multiplicity.
///
/// Keys and multiplicities are strictly positive. The part-list view is
/// derived on demand and is always sorted in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    mult: BTreeMap<u32, u32>,
    size: u32,
    length: u32,
}

impl Partition {
    /// Builds a partition from parts given in any order.
    pub fn from_parts(parts: &[u32]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("a partition needs at least one part".into()));
        }
        let mut mult = BTreeMap::new();
        for &p in parts {
            if p == 0 {
                return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
            }
            *mult.entry(p).or_insert(0) += 1;
        }
        Self::from_multiplicities(mult)
    }

    pub fn from_multiplicities(mult: BTreeMap<u32, u32>) -> Result<Self> {
        if mult.is_empty() {
            return Err(Error::InvalidPartition("a partition needs at least one part".into()));
        }
        let mut size: u64 = 0;
        let mut length: u64 = 0;
        for (&k, &m) in &mult {
            if k == 0 || m == 0 {
                return Err(Error::InvalidPartition(format!(
                    "part {k} with multiplicity {m} is not allowed"
                )));
            }
            size += u64::from(k) * u64::from(m);
            length += u64::from(m);
        }
        let size = u32::try_from(size)
            .map_err(|_| Error::InvalidPartition("partition size overflows u32".into()))?;
        Ok(Partition {
            mult,
            size,
            length: length as u32,
        })
    }

    /// The one-part partition `(d)`.
    pub fn single(d: u32) -> Result<Self> {
        Self::from_parts(&[d])
    }

    /// The identity cycle type `(1^d)`.
    pub fn ones(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        Self::from_multiplicities(BTreeMap::from([(1, d)]))
    }

    /// `|λ|`
    pub fn size(&self) -> u32 {
        self.size
    }

    /// `ℓ(λ)`
    pub fn length(&self) -> u32 {
        self.length
    }

    /// `m_k`, zero when `k` is not a part.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.mult.get(&k).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.mult
    }

    /// Parts in descending order.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.length as usize);
        for (&k, &m) in self.mult.iter().rev() {
            out.extend(std::iter::repeat_n(k, m as usize));
        }
        out
    }

    pub fn is_identity_type(&self) -> bool {
        self.mult.len() == 1 && self.mult.contains_key(&1)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::from_parts(&parts).map_err(serde::de::Error::custom)
    }
}

/// Ordered ramification data: one partition of `degree` per marked pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Profile {
    degree: u32,
    parts: Vec<Partition>,
}

impl Profile {
    pub fn new(degree: u32, parts: Vec<Partition>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if let Some(bad) = parts.iter().find(|p| p.size() != degree) {
            return Err(Error::InvalidProfile(format!(
                "partition {bad} has size {}, expected {degree}",
                bad.size()
            )));
        }
        Ok(Profile { degree, parts })
    }

    /// The profile with no marked pairs.
    pub fn empty(degree: u32) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    /// Parses a JSON list of part lists, e.g. `[[2],[2]]`.
    pub fn parse(degree: u32, json: &str) -> Result<Self> {
        let raw: Vec<Vec<u32>> = serde_json::from_str(json)?;
        let parts = raw
            .iter()
            .map(|p| Partition::from_parts(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, parts)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `δ(μ) = Σ_i (d − ℓ(μ^i))`
    pub fn delta(&self) -> u64 {
        self.parts
            .iter()
            .map(|p| u64::from(self.degree - p.length()))
            .sum()
    }

    /// The profile `μ, λ, λ` seen on a normalization after resolving a node pair.
    pub fn with_pair(&self, lambda: &Partition) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.push(lambda.clone());
        parts.push(lambda.clone());
        Self::new(self.degree, parts)
    }

    /// Compact JSON form, e.g. `[[2],[1,1]]`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("profiles serialize")
    }

    /// `∏_i |Aut μ^i|`
    pub fn aut_order(&self) -> BigUint {
        self.parts.iter().map(aut_order).product()
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// `|Aut λ| = ∏ m_k!`
pub fn aut_order(lambda: &Partition) -> BigUint {
    lambda.mult.values().map(|&m| factorial(m)).product()
}

/// `ζ(λ) = ∏ m_k! · k^{m_k}`, the order of the centralizer of a permutation
/// of cycle type `λ`.
pub fn zeta(lambda: &Partition) -> BigUint {
    lambda
        .mult
        .iter()
        .map(|(&k, &m)| factorial(m) * BigUint::from(k).pow(m))
        .product()
}

/// `ζ(λ)/|Aut λ| = ∏ k^{m_k}`
pub fn part_product(lambda: &Partition) -> BigUint {
    lambda
        .mult
        .iter()
        .map(|(&k, &m)| BigUint::from(k).pow(m))
        .fold(BigUint::one(), |acc, x| acc * x)
}

/// Number of permutations of cycle type `λ` in `S_{|λ|}`.
pub fn class_size(lambda: &Partition) -> BigUint {
    factorial(lambda.size()) / zeta(lambda)
}

/// All partitions of `d`, largest first in reverse-lexicographic order of
/// their descending part lists.
pub fn partitions_of(d: u32) -> Result<Vec<Partition>> {
    if d < 1 {
        return Err(Error::InvalidDegree(i64::from(d)));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(d, d, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_parts(current).expect("nonempty by construction"));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}
