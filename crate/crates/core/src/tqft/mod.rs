//! Formula layer for local invariants of symmetric curves: virtual
//! dimension, the degeneration rule relating a smoothing to the
//! normalization of a curve with one conjugate pair of nodes, generating
//! series, and the rational coefficients relating virtual classes.

pub mod instantiate;
pub mod series;
pub mod table;
pub mod target;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json::RationalJson;
use crate::partitions::{aut_order, partitions_of, zeta, Partition, Profile};

pub use series::BiSeries;
pub use table::{InvariantTable, TableFile};
pub use target::{RealLocus, TargetCurve, TargetKind, EULER_GAIN_PER_NODE_PAIR};

/// `b = d·χ(Σ) − χ − 2δ(μ)`.
pub fn virtual_dimension(d: u32, chi: i64, target: &TargetCurve, profile: &Profile) -> Result<i64> {
    virtual_dimension_for_euler(d, chi, target.euler_char(), profile)
}

/// [`virtual_dimension`] with the target's Euler characteristic given directly.
pub fn virtual_dimension_for_euler(d: u32, chi: i64, target_euler: i64, profile: &Profile) -> Result<i64> {
    if profile.degree() != d {
        return Err(Error::InvalidProfile(format!(
            "profile {profile} has degree {}, expected {d}",
            profile.degree()
        )));
    }
    Ok(i64::from(d) * target_euler - chi - 2 * profile.delta() as i64)
}

fn zeta_q(lambda: &Partition) -> BigRational {
    BigRational::from_integer(BigInt::from(zeta(lambda)))
}

/// Checks that `table` belongs to the normalization of a target with one
/// conjugate pair of nodes, and that `profile` leaves room for the two pairs
/// of marked points that replaced the nodes.
fn check_split_target(table: &InvariantTable, profile: &Profile) -> Result<()> {
    let t = table.target();
    if t.resolved_node_pairs != 1 || t.node_pairs != 0 {
        return Err(Error::WrongTarget(format!(
            "table target {t:?} is not the normalization of a one-node-pair degeneration"
        )));
    }
    if t.marked_pairs as usize != profile.len() + 2 {
        return Err(Error::WrongTarget(format!(
            "profile {profile} has {} partitions but the normalization has {} marked pairs",
            profile.len(),
            t.marked_pairs
        )));
    }
    Ok(())
}

/// One summand `ζ(λ) · value(d, χ + 4ℓ(λ), μ·λ·λ)` of the splitting sum.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitTerm {
    pub lambda: Partition,
    pub zeta: BigUint,
    pub chi: i64,
    pub value: BigRational,
}

/// The summands of [`split_invariant`], in partition enumeration order.
pub fn split_terms(table: &InvariantTable, d: u32, chi: i64, profile: &Profile) -> Result<Vec<SplitTerm>> {
    if profile.degree() != d {
        return Err(Error::InvalidProfile(format!(
            "profile {profile} has degree {}, expected {d}",
            profile.degree()
        )));
    }
    check_split_target(table, profile)?;
    partitions_of(d)?
        .into_iter()
        .map(|lambda| {
            let shifted = chi + EULER_GAIN_PER_NODE_PAIR * i64::from(lambda.length());
            let value = table.get(d, shifted, &profile.with_pair(&lambda)?);
            Ok(SplitTerm {
                zeta: zeta(&lambda),
                chi: shifted,
                value,
                lambda,
            })
        })
        .collect()
}

/// Invariant of the smoothing from invariants of the normalization:
/// `Σ_{λ⊢d} ζ(λ) · value(d, χ + 4ℓ(λ), μ, λ, λ)`.
pub fn split_invariant(table: &InvariantTable, d: u32, chi: i64, profile: &Profile) -> Result<BigRational> {
    Ok(split_terms(table, d, chi, profile)?
        .into_iter()
        .fold(BigRational::zero(), |acc, term| {
            acc + BigRational::from_integer(BigInt::from(term.zeta)) * term.value
        }))
}

/// `Σ_{λ⊢d} ζ(λ) t^{2ℓ(λ)} series(λ)`; every partition of `d` must be present.
pub fn split_series(d: u32, series: &BTreeMap<Partition, BiSeries>) -> Result<BiSeries> {
    let mut out = BiSeries::zero();
    for lambda in partitions_of(d)? {
        let s = series
            .get(&lambda)
            .ok_or_else(|| Error::IncompleteInput(lambda.to_string()))?;
        out += &s.shift(4 * i64::from(lambda.length()), 0).scale(&zeta_q(&lambda));
    }
    Ok(out)
}

/// `Σ_χ value(d, χ, μ) · t^{−χ/2} (u/t)^{b/2 + d·k}` with `k` the target level.
pub fn series_assemble(table: &InvariantTable, d: u32, profile: &Profile) -> Result<BiSeries> {
    let target = table.target();
    let mut out = BiSeries::zero();
    for (key, value) in table.entries() {
        if key.degree != d || &key.profile != profile {
            continue;
        }
        let b = virtual_dimension(d, key.chi, target, profile)?;
        if b % 2 != 0 {
            if value.is_zero() {
                continue;
            }
            return Err(Error::InconsistentTable(format!(
                "nonzero value at odd virtual dimension {b} (chi={})",
                key.chi
            )));
        }
        let u = b / 2 + i64::from(d) * target.level;
        out.add_term(-key.chi - 2 * u, u, value.clone());
    }
    Ok(out)
}

/// The per-partition series fed to [`split_series`]: the normalization's
/// generating series with profile `μ, λ, λ`.
pub fn normalization_series(
    table: &InvariantTable,
    d: u32,
    profile: &Profile,
) -> Result<BTreeMap<Partition, BiSeries>> {
    check_split_target(table, profile)?;
    partitions_of(d)?
        .into_iter()
        .map(|lambda| {
            let s = series_assemble(table, d, &profile.with_pair(&lambda)?)?;
            Ok((lambda, s))
        })
        .collect()
}

/// Rational coefficients relating virtual classes for one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientChain {
    pub lambda: Partition,
    /// Coefficient of the pushed-forward class: `ζ(λ)/|Aut λ|²`.
    pub c_split: BigRational,
    /// Degree of the attaching map: `|Aut λ|`.
    pub deg_phi: BigUint,
    /// Degree of the node-ordering map: `ζ(λ)/|Aut λ|`.
    pub deg_q0: BigUint,
}

impl CoefficientChain {
    /// `c_split · deg_phi == deg_q0`
    pub fn holds(&self) -> bool {
        &self.c_split * BigRational::from_integer(BigInt::from(self.deg_phi.clone()))
            == BigRational::from_integer(BigInt::from(self.deg_q0.clone()))
    }
}

pub fn vfc_coefficient_chain(lambda: &Partition) -> CoefficientChain {
    let z = zeta(lambda);
    let aut = aut_order(lambda);
    let c_split = BigRational::new(BigInt::from(z.clone()), BigInt::from(&aut * &aut));
    CoefficientChain {
        lambda: lambda.clone(),
        c_split,
        deg_q0: z / &aut,
        deg_phi: aut,
    }
}

#[derive(Serialize)]
pub struct CoefficientChainJson {
    pub lambda: Partition,
    pub c_split: RationalJson,
    pub deg_phi: serde_json::Number,
    pub deg_q0: serde_json::Number,
    pub holds: bool,
}

impl From<&CoefficientChain> for CoefficientChainJson {
    fn from(c: &CoefficientChain) -> Self {
        CoefficientChainJson {
            lambda: c.lambda.clone(),
            c_split: (&c.c_split).into(),
            deg_phi: crate::json::int_number(&BigInt::from(c.deg_phi.clone())),
            deg_q0: crate::json::int_number(&BigInt::from(c.deg_q0.clone())),
            holds: c.holds(),
        }
    }
}

/// Unordered invariant from a table of ordered-contact values: divides by
/// `∏_i |Aut μ^i|`.
pub fn pair_invariant(table: &InvariantTable, d: u32, chi: i64, profile: &Profile) -> BigRational {
    let divisor = BigRational::from_integer(BigInt::from(profile.aut_order()));
    table.get(d, chi, profile) / divisor
}

/// Whether the virtual dimension of `(smoothing; d, χ, μ)` equals that of
/// `(normalization; d, χ + 4ℓ(λ), μ·λ·λ)`.
pub fn dimension_invariance_check(
    smoothing: &TargetCurve,
    d: u32,
    chi: i64,
    profile: &Profile,
    lambda: &Partition,
) -> Result<bool> {
    if lambda.size() != d {
        return Err(Error::InvalidProfile(format!("{lambda} is not a partition of {d}")));
    }
    let normalization = smoothing.split_target()?;
    let b = virtual_dimension(d, chi, smoothing, profile)?;
    let b_tilde = virtual_dimension(
        d,
        chi + EULER_GAIN_PER_NODE_PAIR * i64::from(lambda.length()),
        &normalization,
        &profile.with_pair(lambda)?,
    )?;
    Ok(b == b_tilde)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn virtual_dimension_examples() {
        let empty1 = Profile::empty(1).unwrap();
        // degree one onto a genus-0 half: domain χ equals the target's
        let sphere = TargetCurve::doublet(0);
        assert_eq!(virtual_dimension(1, sphere.euler_char(), &sphere, &empty1).unwrap(), 0);
        let prof = Profile::parse(2, "[[2]]").unwrap();
        assert_eq!(virtual_dimension_for_euler(2, -2, 0, &prof).unwrap(), 0);
        let ones = Profile::parse(3, "[[1,1,1],[1,1,1]]").unwrap();
        assert_eq!(virtual_dimension_for_euler(3, 5, 2, &ones).unwrap(), 1);
        assert!(virtual_dimension_for_euler(3, 0, 2, &prof).is_err());
    }

    #[test]
    fn chain_examples() {
        let c = vfc_coefficient_chain(&p(&[5]));
        assert_eq!(c.c_split, q(5, 1));
        assert_eq!((c.deg_phi.clone(), c.deg_q0.clone()), (1u32.into(), 5u32.into()));
        assert!(c.holds());

        let c = vfc_coefficient_chain(&p(&[1, 1]));
        assert_eq!(c.c_split, q(1, 2));
        assert_eq!((c.deg_phi.clone(), c.deg_q0.clone()), (2u32.into(), 1u32.into()));
        assert!(c.holds());

        let c = vfc_coefficient_chain(&p(&[2, 1]));
        assert_eq!(c.c_split, q(2, 1));
        assert_eq!((c.deg_phi.clone(), c.deg_q0.clone()), (1u32.into(), 2u32.into()));
        assert!(c.holds());
    }

    #[test]
    fn dimension_invariance_examples() {
        let smooth = TargetCurve::doublet(1);
        let one = Profile::empty(1).unwrap();
        assert!(dimension_invariance_check(&smooth, 1, 0, &one, &p(&[1])).unwrap());
        let smooth = TargetCurve::doublet(3).with_marked_pairs(1);
        let prof = Profile::parse(5, "[[2,2,1]]").unwrap();
        assert!(dimension_invariance_check(&smooth, 5, -7, &prof, &p(&[5])).unwrap());
        assert!(dimension_invariance_check(&TargetCurve::doublet(0), 1, 0, &one, &p(&[1])).is_err());
    }

    #[test]
    fn split_series_requires_every_partition() {
        let mut m = BTreeMap::new();
        m.insert(p(&[2]), BiSeries::zero());
        assert_eq!(
            split_series(2, &m).unwrap_err(),
            Error::IncompleteInput("(1,1)".into())
        );
        m.insert(p(&[1, 1]), BiSeries::zero());
        assert!(split_series(2, &m).unwrap().is_zero());
    }

    #[test]
    fn split_series_degree_one_is_a_t_squared_shift() {
        let s = BiSeries::monomial(-3, 1, q(7, 2)) + BiSeries::monomial(2, 0, q(1, 1));
        let out = split_series(1, &BTreeMap::from([(p(&[1]), s.clone())])).unwrap();
        assert_eq!(out, s.shift(4, 0));
    }

    #[test]
    fn assemble_single_entry_and_empty() {
        let target = TargetCurve::doublet(0);
        let mut t = InvariantTable::new(target);
        let empty = Profile::empty(1).unwrap();
        assert!(series_assemble(&t, 1, &empty).unwrap().is_zero());
        t.insert(1, 4, empty.clone(), q(3, 1)).unwrap();
        let s = series_assemble(&t, 1, &empty).unwrap();
        assert_eq!(s, BiSeries::monomial(-4, 0, q(3, 1)));
    }

    #[test]
    fn split_invariant_rejects_wrong_targets() {
        let smooth = InvariantTable::new(TargetCurve::doublet(1));
        let empty = Profile::empty(1).unwrap();
        assert_eq!(split_invariant(&smooth, 1, 0, &empty).unwrap_err().kind(), "wrong-target");
        let norm = InvariantTable::new(TargetCurve::doublet(1).split_target().unwrap());
        assert!(split_invariant(&norm, 1, 0, &empty).unwrap().is_zero());
        let one = Profile::parse(1, "[[1]]").unwrap();
        assert_eq!(split_invariant(&norm, 1, 0, &one).unwrap_err().kind(), "wrong-target");
    }

    #[test]
    fn degree_one_split_has_single_term() {
        let norm_target = TargetCurve::doublet(1).split_target().unwrap();
        let mut t = InvariantTable::new(norm_target);
        let paired = Profile::parse(1, "[[1],[1]]").unwrap();
        t.insert(1, 4, paired, q(5, 1)).unwrap();
        let terms = split_terms(&t, 1, 0, &Profile::empty(1).unwrap()).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].chi, 4);
        assert_eq!(terms[0].zeta, 1u32.into());
        assert_eq!(split_invariant(&t, 1, 0, &Profile::empty(1).unwrap()).unwrap(), q(5, 1));
    }

    #[test]
    fn pair_invariant_divides_by_automorphisms() {
        let target = TargetCurve::doublet(0).with_marked_pairs(2);
        let mut t = InvariantTable::new(target);
        let ones = Profile::parse(3, "[[1,1,1],[1,1,1]]").unwrap();
        // b = 3·4 − 12 − 0 = 0
        t.insert(3, 12, ones.clone(), q(36, 1)).unwrap();
        assert_eq!(pair_invariant(&t, 3, 12, &ones), q(1, 1));
        let twos = Profile::parse(2, "[[2],[2]]").unwrap();
        t.insert(2, 4, twos.clone(), q(1, 2)).unwrap();
        assert_eq!(pair_invariant(&t, 2, 4, &twos), q(1, 2));
    }
}
