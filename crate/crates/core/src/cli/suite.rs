//! The acceptance battery behind `rgw suite`. Criteria run in order and the
//! run stops at the first failure; later criteria are reported as skipped.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::characters::CharacterTable;
use crate::hurwitz::{CoverCountQuery, Method, Oracle};
use crate::partitions::{factorial, part_product, partitions_of, zeta, Partition, Profile};
use crate::signs::{compose, main_chain, register_paper_isos, replay_lemma_comsign};
use crate::tqft::instantiate::{split_check, standard_insertions, SplitCheck};
use crate::tqft::{dimension_invariance_check, vfc_coefficient_chain, RealLocus, TargetCurve};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub skipped: bool,
    /// Number of exact comparisons performed.
    pub checks: u64,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn status(&self) -> &'static str {
        match (self.skipped, self.passed) {
            (true, _) => "skipped",
            (false, true) => "pass",
            (false, false) => "fail",
        }
    }
}

type Check = std::result::Result<u64, String>;

pub const CRITERIA: [(u32, &str); 9] = [
    (1, "splitting identity on doublets"),
    (2, "worked instances d=2, d=3"),
    (3, "enumeration equals characters"),
    (4, "coefficient chain"),
    (5, "dimension invariance"),
    (6, "series identity"),
    (7, "sign ledger"),
    (8, "character orthogonality"),
    (9, "ordered vs unordered covers"),
];

pub fn run_all(oracle: &Oracle) -> Vec<CriterionOutcome> {
    let mut out = Vec::new();
    let mut failed = false;
    let mut checks_1: Option<Vec<SplitCheck>> = None;
    for (id, name) in CRITERIA {
        if failed {
            out.push(CriterionOutcome {
                id,
                name,
                passed: false,
                skipped: true,
                checks: 0,
                detail: "skipped after earlier failure".into(),
            });
            continue;
        }
        let result = match id {
            1 => splitting_checks(oracle).and_then(|cs| {
                let n = splitting_identity(&cs);
                checks_1 = Some(cs);
                n
            }),
            2 => worked_instances(oracle),
            3 => oracle_equivalence(oracle),
            4 => coefficient_chain(12),
            5 => dimension_invariance(8),
            6 => match &checks_1 {
                Some(cs) => series_identity(cs),
                None => splitting_checks(oracle).and_then(|cs| series_identity(&cs)),
            },
            7 => sign_ledger(32),
            8 => character_orthogonality(oracle, 8),
            9 => ordered_factor(oracle),
            _ => unreachable!(),
        };
        let (passed, checks, detail) = match result {
            Ok(n) => (true, n, String::new()),
            Err(msg) => (false, 0, msg),
        };
        failed |= !passed;
        out.push(CriterionOutcome {
            id,
            name,
            passed,
            skipped: false,
            checks,
            detail,
        });
    }
    out
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

/// Criterion 1 instances: `d ≤ 4`, half genus 1 (both methods) and 2
/// (characters), every standard insertion.
pub fn splitting_checks(oracle: &Oracle) -> std::result::Result<Vec<SplitCheck>, String> {
    let mut out = Vec::new();
    for half_genus in [1u32, 2] {
        let method = if half_genus == 1 {
            Method::Both
        } else {
            Method::Characters
        };
        for d in 1..=4 {
            for p in standard_insertions(d).map_err(err)? {
                out.push(split_check(oracle, half_genus, &p, 0, method).map_err(err)?);
            }
        }
    }
    Ok(out)
}

pub fn splitting_identity(checks: &[SplitCheck]) -> Check {
    for c in checks {
        if !c.invariant_agrees() {
            return Err(format!(
                "g={} d={} profile={}: smoothing {} != split {}",
                c.half_genus,
                c.degree(),
                c.profile,
                c.smoothing,
                c.split
            ));
        }
    }
    Ok(checks.len() as u64)
}

pub fn series_identity(checks: &[SplitCheck]) -> Check {
    for c in checks {
        if !c.series_agrees() {
            return Err(format!(
                "g={} d={} profile={}: {} != {}",
                c.half_genus,
                c.degree(),
                c.profile,
                c.smoothing_series,
                c.split_series
            ));
        }
    }
    Ok(checks.len() as u64)
}

pub fn worked_instances(oracle: &Oracle) -> Check {
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let cases = [
        (2, 2, vec![(2u32, q(1, 2)), (2, q(1, 2))]),
        (3, 3, vec![(3, q(1, 3)), (2, q(1, 2)), (6, q(1, 6))]),
    ];
    for (d, total, expected) in cases {
        let c = split_check(oracle, 1, &Profile::empty(d).map_err(err)?, 0, Method::Both).map_err(err)?;
        let got: Vec<(u32, BigRational)> = c
            .terms
            .iter()
            .map(|t| (u32::try_from(&t.zeta).unwrap_or(u32::MAX), t.value.clone()))
            .collect();
        if c.smoothing != q(total, 1) || c.split != q(total, 1) || got != expected {
            return Err(format!(
                "d={d}: smoothing {}, split {}, terms {got:?}",
                c.smoothing, c.split
            ));
        }
    }
    Ok(2)
}

/// Every profile sequence of length `≤ max_r` over partitions of `d`.
pub fn all_profiles(d: u32, max_r: usize) -> crate::Result<Vec<Profile>> {
    let parts = partitions_of(d)?;
    let mut layer: Vec<Vec<Partition>> = vec![vec![]];
    let mut out = Vec::new();
    for r in 0..=max_r {
        for seq in &layer {
            out.push(Profile::new(d, seq.clone())?);
        }
        if r == max_r {
            break;
        }
        layer = layer
            .iter()
            .flat_map(|seq| {
                parts.iter().map(move |p| {
                    let mut s = seq.clone();
                    s.push(p.clone());
                    s
                })
            })
            .collect();
    }
    Ok(out)
}

/// The query set of criteria 3 and 9: `d ≤ 4`, `g ≤ 1`, `r ≤ 3`.
pub fn small_queries() -> crate::Result<Vec<CoverCountQuery>> {
    let mut out = Vec::new();
    for d in 1..=4 {
        for genus in 0..=1 {
            for p in all_profiles(d, 3)? {
                out.push(CoverCountQuery::new(genus, p));
            }
        }
    }
    Ok(out)
}

pub fn oracle_equivalence(oracle: &Oracle) -> Check {
    let queries = small_queries().map_err(err)?;
    if queries.len() < 200 {
        return Err(format!("only {} queries", queries.len()));
    }
    for q in &queries {
        let e = oracle.count_by_enumeration(q).map_err(err)?;
        let c = oracle.count_by_characters(q).map_err(err)?;
        if e != c {
            return Err(format!("genus {} profile {}: enumeration {e} != characters {c}", q.genus, q.profile));
        }
    }
    Ok(queries.len() as u64)
}

pub fn coefficient_chain(max_d: u32) -> Check {
    let mut n = 0;
    for d in 1..=max_d {
        for lambda in partitions_of(d).map_err(err)? {
            let c = vfc_coefficient_chain(&lambda);
            let deg_phi = BigRational::from_integer(BigInt::from(c.deg_phi.clone()));
            let lhs = &c.c_split * deg_phi;
            let mid = BigRational::from_integer(BigInt::from(c.deg_q0.clone()));
            let rhs = BigRational::from_integer(BigInt::from(part_product(&lambda)));
            if lhs != mid || mid != rhs {
                return Err(format!("λ={lambda}: {lhs} / {mid} / {rhs}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Exhaustive over `λ ⊢ d ≤ max_d`, single-partition profiles, a band of
/// `χ` values and several smoothing targets.
pub fn dimension_invariance(max_d: u32) -> Check {
    let mut targets = Vec::new();
    for g in 1..=3 {
        targets.push(TargetCurve::doublet(g));
    }
    for g in 2..=4 {
        targets.push(TargetCurve::connected(g, RealLocus::default()));
    }
    let mut n = 0;
    for d in 1..=max_d {
        let lambdas = partitions_of(d).map_err(err)?;
        let mut profiles = vec![Profile::empty(d).map_err(err)?];
        for mu in &lambdas {
            profiles.push(Profile::new(d, vec![mu.clone()]).map_err(err)?);
        }
        for base in &targets {
            for p in &profiles {
                let target = base.with_marked_pairs(p.len() as u32);
                for chi in -12..=12 {
                    for lambda in &lambdas {
                        if !dimension_invariance_check(&target, d, chi, p, lambda).map_err(err)? {
                            return Err(format!("d={d} χ={chi} profile={p} λ={lambda} on {target:?}"));
                        }
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

pub fn sign_ledger(max_ell: u32) -> Check {
    let catalog = register_paper_isos();
    let chain = main_chain(&catalog).map_err(err)?;
    for ell in 0..=max_ell {
        let main = compose(&chain, ell).map_err(err)?.sign;
        if main != 1 {
            return Err(format!("main chain has sign {main} at ℓ={ell}"));
        }
        let expected = if ell % 2 == 0 { 1 } else { -1 };
        let com = replay_lemma_comsign(ell);
        if com != expected {
            return Err(format!("comsign replay gives {com} at ℓ={ell}"));
        }
    }
    Ok(2 * u64::from(max_ell + 1))
}

pub fn character_orthogonality(oracle: &Oracle, max_d: u32) -> Check {
    let mut n = 0;
    for d in 1..=max_d {
        let table: std::sync::Arc<CharacterTable> = oracle.table(d).map_err(err)?;
        let parts = table.partitions();
        for mu in parts {
            for nu in parts {
                let mut sum = BigInt::zero();
                for rho in parts {
                    sum += table.get(rho, mu).map_err(err)? * table.get(rho, nu).map_err(err)?;
                }
                let expected = if mu == nu {
                    BigInt::from(zeta(mu))
                } else {
                    BigInt::zero()
                };
                if sum != expected {
                    return Err(format!("d={d}: Σ χ(μ={mu}) χ(ν={nu}) = {sum}, expected {expected}"));
                }
                n += 1;
            }
        }
        let mut dims = BigUint::zero();
        for rho in parts {
            let dim = table.dimension(rho).map_err(err)?;
            dims += &dim * &dim;
        }
        if dims != factorial(d) {
            return Err(format!("d={d}: Σ dim² = {dims}"));
        }
        n += 1;
    }
    Ok(n)
}

pub fn ordered_factor(oracle: &Oracle) -> Check {
    let queries = small_queries().map_err(err)?;
    for q in &queries {
        let ordered = q.clone().ordered();
        let factor = BigRational::from_integer(BigInt::from(q.profile.aut_order()));
        for method in [Method::Enumeration, Method::Characters] {
            let lhs = oracle.count(&ordered, method).map_err(err)?;
            let rhs = oracle.count(q, method).map_err(err)? * &factor;
            if lhs != rhs {
                return Err(format!("genus {} profile {}: {lhs} != {rhs}", q.genus, q.profile));
            }
        }
    }
    Ok(queries.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn query_set_is_large_enough() {
        assert_eq!(small_queries().unwrap().len(), 430);
    }

    #[test]
    fn fast_criteria_pass() {
        assert!(coefficient_chain(8).is_ok());
        assert!(dimension_invariance(4).is_ok());
        assert!(sign_ledger(8).is_ok());
    }
}
