//! Level-0 invariant tables of doublet targets, filled from branched-cover
//! counts of one half, and the end-to-end check of the splitting rule on
//! them.
//!
//! Real values are modeled as complex counts of one half of the doublet (see
//! [`Oracle::doublet_real_count`]); this instantiation is a modeling choice,
//! not a closed formula for general real targets.

use num_rational::BigRational;

use super::{
    normalization_series, series_assemble, split_series, split_terms, BiSeries, InvariantTable,
    SplitTerm, TargetCurve,
};
use crate::error::{Error, Result};
use crate::hurwitz::{CoverCountQuery, Method, Oracle};
use crate::partitions::{partitions_of, Profile};

/// Fills a table for a smooth doublet target with the half counts of every
/// profile in `profiles`, keyed by the real domain Euler characteristic.
pub fn doublet_table(
    oracle: &Oracle,
    target: &TargetCurve,
    profiles: &[Profile],
    method: Method,
) -> Result<InvariantTable> {
    let half_genus = target
        .half_genus()
        .filter(|_| target.is_smooth())
        .ok_or_else(|| Error::WrongTarget(format!("{target:?} is not a smooth doublet")))?;
    let mut table = InvariantTable::new(*target);
    for profile in profiles {
        let half = CoverCountQuery::new(half_genus, profile.clone());
        let value = oracle.count(&half, method)?;
        table.insert(profile.degree(), 2 * half.chi_forced(), profile.clone(), value)?;
    }
    Ok(table)
}

/// Both sides of the degeneration rule on a doublet of half genus `g`
/// pinched along one conjugate pair of circles.
#[derive(Clone, Debug)]
pub struct SplitCheck {
    pub half_genus: u32,
    pub profile: Profile,
    /// Real domain Euler characteristic of the smoothing's covers.
    pub chi: i64,
    pub method: Method,
    pub smoothing: BigRational,
    pub terms: Vec<SplitTerm>,
    pub split: BigRational,
    pub smoothing_series: BiSeries,
    pub split_series: BiSeries,
}

impl SplitCheck {
    pub fn degree(&self) -> u32 {
        self.profile.degree()
    }

    pub fn invariant_agrees(&self) -> bool {
        self.smoothing == self.split
    }

    pub fn series_agrees(&self) -> bool {
        self.smoothing_series == self.split_series
    }
}

pub fn split_check(
    oracle: &Oracle,
    half_genus: u32,
    profile: &Profile,
    level: i64,
    method: Method,
) -> Result<SplitCheck> {
    let d = profile.degree();
    let smoothing = TargetCurve::doublet(half_genus)
        .with_marked_pairs(profile.len() as u32)
        .with_level(level);
    let normalization = smoothing.split_target()?;

    let smoothing_table = doublet_table(oracle, &smoothing, std::slice::from_ref(profile), method)?;
    let paired = partitions_of(d)?
        .iter()
        .map(|lambda| profile.with_pair(lambda))
        .collect::<Result<Vec<_>>>()?;
    let normalization_table = doublet_table(oracle, &normalization, &paired, method)?;

    let chi = 2 * CoverCountQuery::new(half_genus, profile.clone()).chi_forced();
    let terms = split_terms(&normalization_table, d, chi, profile)?;
    let split = terms.iter().fold(BigRational::from_integer(0.into()), |acc, t| {
        acc + BigRational::from_integer(t.zeta.clone().into()) * &t.value
    });

    Ok(SplitCheck {
        half_genus,
        profile: profile.clone(),
        chi,
        method,
        smoothing: smoothing_table.get(d, chi, profile),
        terms,
        split,
        smoothing_series: series_assemble(&smoothing_table, d, profile)?,
        split_series: split_series(d, &normalization_series(&normalization_table, d, profile)?)?,
    })
}

/// Insertions `∅`, `(2,1^{d−2})` and `(d)`, without duplicates.
pub fn standard_insertions(d: u32) -> Result<Vec<Profile>> {
    let mut out = vec![Profile::empty(d)?];
    let mut candidates = Vec::new();
    if d >= 2 {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, d as usize - 2));
        candidates.push(parts);
    }
    candidates.push(vec![d]);
    for parts in candidates {
        let p = Profile::new(d, vec![crate::partitions::Partition::from_parts(&parts)?])?;
        if !out.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}
