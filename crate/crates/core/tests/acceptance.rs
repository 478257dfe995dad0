//! Acceptance battery: one line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rgw_split::characters::{hook_length_dimension, CharacterTable};
use rgw_split::hurwitz::{CoverCountQuery, Method, Oracle};
use rgw_split::partitions::{aut_order, factorial, part_product, partitions_of, zeta, Partition, Profile};
use rgw_split::signs::{compose, main_chain, register_paper_isos, replay_lemma_comsign};
use rgw_split::tqft::instantiate::{split_check, SplitCheck};
use rgw_split::tqft::{
    dimension_invariance_check, virtual_dimension, vfc_coefficient_chain, RealLocus, TargetCurve,
};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn(&Oracle) -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: rgw_split::Error) -> String {
    format!("{} ({})", e, e.kind())
}

fn insertions(d: u32) -> Vec<Profile> {
    let mut out = vec![Profile::empty(d).unwrap()];
    if d >= 2 {
        let mut parts = vec![2];
        parts.resize(d as usize - 1, 1);
        out.push(Profile::new(d, vec![Partition::from_parts(&parts).unwrap()]).unwrap());
    }
    let top = Profile::new(d, vec![Partition::single(d).unwrap()]).unwrap();
    if !out.contains(&top) {
        out.push(top);
    }
    out
}

fn raw(p: &Profile) -> Vec<Vec<u32>> {
    p.parts().iter().map(Partition::parts).collect()
}

fn criterion1_checks(oracle: &Oracle) -> Result<Vec<SplitCheck>, String> {
    let mut out = Vec::new();
    for g in [1u32, 2] {
        let method = if g == 1 { Method::Both } else { Method::Characters };
        for d in 1..=4 {
            for p in insertions(d) {
                out.push(split_check(oracle, g, &p, 0, method).map_err(e2s)?);
            }
        }
    }
    Ok(out)
}

fn splitting_identity(oracle: &Oracle) -> Outcome {
    let checks = criterion1_checks(oracle)?;
    let mut naive = 0;
    for c in &checks {
        ensure(c.smoothing == c.split, || {
            format!("g={} d={} {}: {} != {}", c.half_genus, c.degree(), c.profile, c.smoothing, c.split)
        })?;
        if c.half_genus == 1 {
            // both sides again, from brute force
            let d = c.degree() as usize;
            let lhs = common::naive_cover_count(d, 1, &raw(&c.profile));
            ensure(lhs == c.smoothing, || format!("naive smoothing {lhs} != {}", c.smoothing))?;
            let mut rhs = BigRational::zero();
            for t in &c.terms {
                let paired = raw(&c.profile.with_pair(&t.lambda).unwrap());
                let v = common::naive_cover_count(d, 0, &paired);
                ensure(v == t.value, || format!("naive term {} {v} != {}", t.lambda, t.value))?;
                rhs += v * BigRational::from_integer(common::zeta_from_parts(&t.lambda.parts()).into());
            }
            ensure(rhs == lhs, || format!("naive sides differ: {lhs} vs {rhs}"))?;
            naive += 1;
        }
    }
    Ok(format!("{} instances, {naive} also by brute force", checks.len()))
}

fn worked_instance(oracle: &Oracle) -> Outcome {
    let expect = [
        (2u32, q(2, 1), vec![(2u32, q(1, 2)), (2, q(1, 2))]),
        (3, q(3, 1), vec![(3, q(1, 3)), (2, q(1, 2)), (6, q(1, 6))]),
    ];
    for (d, total, terms) in expect {
        let c = split_check(oracle, 1, &Profile::empty(d).unwrap(), 0, Method::Both).map_err(e2s)?;
        ensure(c.smoothing == total && c.split == total, || format!("d={d}: {} / {}", c.smoothing, c.split))?;
        let got: Vec<(u32, BigRational)> = c
            .terms
            .iter()
            .map(|t| (u32::try_from(&t.zeta).unwrap(), t.value.clone()))
            .collect();
        ensure(got == terms, || format!("d={d}: terms {got:?}"))?;
        ensure(common::naive_cover_count(d as usize, 1, &[]) == total, || "brute-force smoothing".into())?;
    }
    Ok("2 = 2·1/2 + 2·1/2; 3 = 3·1/3 + 2·1/2 + 6·1/6".into())
}

fn small_queries() -> Vec<CoverCountQuery> {
    let mut out = Vec::new();
    for d in 1..=4u32 {
        let parts = partitions_of(d).unwrap();
        let mut seqs: Vec<Vec<Partition>> = vec![vec![]];
        let mut all = seqs.clone();
        for _ in 0..3 {
            seqs = seqs
                .iter()
                .flat_map(|s| {
                    parts.iter().map(move |p| {
                        let mut t = s.clone();
                        t.push(p.clone());
                        t
                    })
                })
                .collect();
            all.extend(seqs.iter().cloned());
        }
        for genus in 0..=1 {
            for s in &all {
                out.push(CoverCountQuery::new(genus, Profile::new(d, s.clone()).unwrap()));
            }
        }
    }
    out
}

fn oracle_equivalence(oracle: &Oracle) -> Outcome {
    let queries = small_queries();
    ensure(queries.len() >= 200, || format!("only {} queries", queries.len()))?;
    let mut naive = 0;
    for query in &queries {
        let e = oracle.count_by_enumeration(query).map_err(e2s)?;
        let c = oracle.count_by_characters(query).map_err(e2s)?;
        ensure(e == c, || format!("g={} {}: {e} != {c}", query.genus, query.profile))?;
        if query.degree() <= 3 {
            let n = common::naive_cover_count(query.degree() as usize, query.genus as usize, &raw(&query.profile));
            ensure(n == e, || format!("g={} {}: brute force {n} != {e}", query.genus, query.profile))?;
            naive += 1;
        }
    }
    Ok(format!("{} queries, {naive} also by brute force", queries.len()))
}

fn coefficient_chain(_: &Oracle) -> Outcome {
    let mut n = 0;
    for d in 1..=12 {
        for lambda in partitions_of(d).unwrap() {
            let z = zeta(&lambda);
            let aut = aut_order(&lambda);
            ensure(z == BigUint::from(common::zeta_from_parts(&lambda.parts())), || format!("ζ{lambda}"))?;
            if d <= 6 {
                let c = common::centralizer_by_counting(&lambda.parts());
                ensure(z == BigUint::from(c), || format!("centralizer of {lambda} is {c}"))?;
            }
            let int = |x: &BigUint| BigRational::from_integer(BigInt::from(x.clone()));
            let c_split = int(&z) / int(&(&aut * &aut));
            let step = &c_split * int(&aut);
            let prod: u64 = lambda.parts().iter().map(|&k| u64::from(k)).product();
            ensure(step == int(&z) / int(&aut), || format!("{lambda}: {step}"))?;
            ensure(step == BigRational::from_integer(prod.into()), || format!("{lambda}: {step} != {prod}"))?;
            ensure(part_product(&lambda) == BigUint::from(prod), || format!("{lambda}: ∏k^m"))?;
            let chain = vfc_coefficient_chain(&lambda);
            ensure(
                chain.c_split == c_split && chain.deg_phi == aut && chain.holds(),
                || format!("{lambda}: library chain {chain:?}"),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} partitions, d ≤ 12"))
}

fn dimension_invariance(_: &Oracle) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut n = 0u64;
    for d in 1..=8u32 {
        let lambdas = partitions_of(d).unwrap();
        for _ in 0..60 {
            let r = rng.gen_range(0..=3);
            let mus: Vec<Partition> = (0..r).map(|_| lambdas[rng.gen_range(0..lambdas.len())].clone()).collect();
            let profile = Profile::new(d, mus).unwrap();
            let (smoothing, euler) = if rng.gen_bool(0.5) {
                let g = rng.gen_range(1..=5u32);
                (TargetCurve::doublet(g), 2 * (2 - 2 * i64::from(g)))
            } else {
                let g = rng.gen_range(2..=6u32);
                (TargetCurve::connected(g, RealLocus::default()), 2 - 2 * i64::from(g))
            };
            let smoothing = smoothing.with_marked_pairs(r as u32);
            let chi: i64 = rng.gen_range(-40..=40);
            let delta: i64 = profile.parts().iter().map(|m| i64::from(d - m.length())).sum();
            let b = i64::from(d) * euler - chi - 2 * delta;
            let lib_b = virtual_dimension(d, chi, &smoothing, &profile).map_err(e2s)?;
            ensure(b == lib_b, || format!("b mismatch {b} vs {lib_b}"))?;
            for lambda in &lambdas {
                let l = i64::from(lambda.length());
                let delta_t = delta + 2 * (i64::from(d) - l);
                let b_t = i64::from(d) * (euler + 4) - (chi + 4 * l) - 2 * delta_t;
                ensure(b == b_t, || format!("d={d} χ={chi} λ={lambda}: {b} vs {b_t}"))?;
                let ok = dimension_invariance_check(&smoothing, d, chi, &profile, lambda).map_err(e2s)?;
                ensure(ok, || format!("library check failed at d={d} χ={chi} λ={lambda}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} (target, χ, μ, λ) cases, seed 0x5eed0005"))
}

fn series_identity(oracle: &Oracle) -> Outcome {
    let checks = criterion1_checks(oracle)?;
    for c in &checks {
        ensure(c.smoothing_series == c.split_series, || {
            format!("g={} d={} {}: {} != {}", c.half_genus, c.degree(), c.profile, c.smoothing_series, c.split_series)
        })?;
        // level 0 doublet covers have b = 0, so the invariant sits at t^{−χ/2} u^0
        ensure(c.split_series.coefficient(-c.chi, 0) == c.smoothing, || {
            format!("coefficient at t^({}/2) is not the invariant", -c.chi)
        })?;
    }
    let mut shifted = 0;
    for level in [-2i64, -1, 1, 3] {
        for d in 1..=3 {
            for p in insertions(d) {
                let c = split_check(oracle, 1, &p, level, Method::Characters).map_err(e2s)?;
                ensure(c.series_agrees(), || format!("level {level}, d={d} {p}"))?;
                shifted += 1;
            }
        }
    }
    Ok(format!("{} level-0 instances, {shifted} at nonzero level", checks.len()))
}

fn sign_ledger(_: &Oracle) -> Outcome {
    let catalog = register_paper_isos();
    let chain = main_chain(&catalog).map_err(e2s)?;
    for ell in 0..=32u32 {
        let r = compose(&chain, ell).map_err(e2s)?;
        ensure(r.sign == 1, || format!("main chain sign {} at ℓ={ell}", r.sign))?;
        let parity = if ell % 2 == 0 { 1 } else { -1 };
        ensure(replay_lemma_comsign(ell) == parity, || format!("comsign at ℓ={ell}"))?;
    }
    Ok("main = +1 and comsign = (−1)^ℓ for ℓ = 0..32".into())
}

fn character_orthogonality(_: &Oracle) -> Outcome {
    for d in 1..=8u32 {
        let table = CharacterTable::compute(d).map_err(e2s)?;
        let parts = table.partitions();
        for mu in parts {
            for nu in parts {
                let s: BigInt = parts
                    .iter()
                    .map(|rho| table.get(rho, mu).unwrap() * table.get(rho, nu).unwrap())
                    .sum();
                let expected = if mu == nu {
                    BigInt::from(common::zeta_from_parts(&mu.parts()))
                } else {
                    BigInt::zero()
                };
                ensure(s == expected, || format!("d={d} ({mu},{nu}): {s}"))?;
            }
        }
        let mut total = BigUint::zero();
        for rho in parts {
            let dim = table.dimension(rho).map_err(e2s)?;
            ensure(dim == hook_length_dimension(rho), || format!("dim {rho}"))?;
            total += &dim * &dim;
        }
        ensure(total == factorial(d), || format!("d={d}: Σ dim² = {total}"))?;
    }
    Ok("d ≤ 8".into())
}

fn ordered_factor(oracle: &Oracle) -> Outcome {
    let queries = small_queries();
    for query in &queries {
        let aut: BigUint = query.profile.parts().iter().map(aut_order).product();
        let factor = BigRational::from_integer(BigInt::from(aut));
        let ordered = query.clone().ordered();
        for method in [Method::Enumeration, Method::Characters] {
            let lhs = oracle.count(&ordered, method).map_err(e2s)?;
            let rhs = oracle.count(query, method).map_err(e2s)? * &factor;
            ensure(lhs == rhs, || format!("g={} {}: {lhs} != {rhs}", query.genus, query.profile))?;
        }
    }
    Ok(format!("{} queries, both methods", queries.len()))
}

fn main() {
    let oracle = Oracle::default();
    let criteria: [Criterion; 9] = [
        (1, "splitting identity (doublets, d ≤ 4, g ∈ {1,2})", splitting_identity),
        (2, "worked instances d = 2, 3", worked_instance),
        (3, "enumeration == characters", oracle_equivalence),
        (4, "coefficient chain d ≤ 12", coefficient_chain),
        (5, "dimension invariance d ≤ 8", dimension_invariance),
        (6, "series identity", series_identity),
        (7, "sign ledger ℓ ≤ 32", sign_ledger),
        (8, "character orthogonality d ≤ 8", character_orthogonality),
        (9, "ordered = |Aut| × unordered", ordered_factor),
    ];
    let mut failures = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| f(&oracle)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {id}: PASS  {name} — {detail} [{ms} ms]"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id}: FAIL  {name} — {detail} [{ms} ms]");
            }
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
