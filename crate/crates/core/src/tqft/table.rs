use std::collections::BTreeMap;
use std::path::Path;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use super::target::TargetCurve;
use super::virtual_dimension;
use crate::error::{Error, Result};
use crate::json::{int_number, RationalJson};
use crate::partitions::{Partition, Profile};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableKey {
    pub degree: u32,
    pub chi: i64,
    pub profile: Profile,
}

/// Finitely supported invariants `(d, χ, μ) ↦ value` of one target; absent
/// keys read as zero.
///
/// Every stored key has `profile.degree() == d`, one partition per marked
/// pair of the target, and an even virtual dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantTable {
    target: TargetCurve,
    values: BTreeMap<TableKey, BigRational>,
}

impl InvariantTable {
    pub fn new(target: TargetCurve) -> Self {
        InvariantTable {
            target,
            values: BTreeMap::new(),
        }
    }

    pub fn target(&self) -> &TargetCurve {
        &self.target
    }

    pub fn insert(&mut self, degree: u32, chi: i64, profile: Profile, value: BigRational) -> Result<()> {
        if profile.len() != self.target.marked_pairs as usize {
            return Err(Error::InvalidProfile(format!(
                "profile {profile} has {} partitions, target has {} marked pairs",
                profile.len(),
                self.target.marked_pairs
            )));
        }
        let b = virtual_dimension(degree, chi, &self.target, &profile)?;
        if value.is_zero() {
            self.values.remove(&TableKey { degree, chi, profile });
            return Ok(());
        }
        if b % 2 != 0 {
            return Err(Error::InconsistentTable(format!(
                "nonzero value {value} at odd virtual dimension {b} (d={degree}, chi={chi}, profile={profile})"
            )));
        }
        self.values.insert(TableKey { degree, chi, profile }, value);
        Ok(())
    }

    pub fn get(&self, degree: u32, chi: i64, profile: &Profile) -> BigRational {
        // keys own their profile; the clone is cheap for the sizes used here
        self.values
            .get(&TableKey {
                degree,
                chi,
                profile: profile.clone(),
            })
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&TableKey, &BigRational)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_json(&self) -> TableFile {
        TableFile {
            target: self.target,
            entries: self
                .values
                .iter()
                .map(|(k, v)| EntryJson {
                    d: k.degree,
                    chi: k.chi,
                    profile: k.profile.parts().to_vec(),
                    num: int_number(v.numer()),
                    den: int_number(v.denom()),
                })
                .collect(),
        }
    }

    pub fn from_json(file: &TableFile) -> Result<Self> {
        let mut table = InvariantTable::new(file.target);
        for e in &file.entries {
            let profile = Profile::new(e.d, e.profile.clone())?;
            let key = TableKey {
                degree: e.d,
                chi: e.chi,
                profile: profile.clone(),
            };
            if table.values.contains_key(&key) {
                return Err(Error::InconsistentTable(format!(
                    "duplicate entry d={}, chi={}, profile={profile}",
                    e.d, e.chi
                )));
            }
            table.insert(e.d, e.chi, profile, e.value()?)?;
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let file: TableFile = serde_json::from_str(&text)?;
        Self::from_json(&file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_json())?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }
}

/// On-disk form: `{target, entries: [{d, chi, profile, num, den}]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableFile {
    pub target: TargetCurve,
    pub entries: Vec<EntryJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub d: u32,
    pub chi: i64,
    pub profile: Vec<Partition>,
    pub num: Number,
    pub den: Number,
}

impl EntryJson {
    pub fn value(&self) -> Result<BigRational> {
        RationalJson {
            num: self.num.clone(),
            den: self.den.clone(),
        }
        .to_rational()
    }
}
