//! Brute-force oracles that share no code with the library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

pub type P = Vec<usize>;

pub fn all_perms(d: usize) -> Vec<P> {
    fn go(prefix: &mut P, used: &mut Vec<bool>, out: &mut Vec<P>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// `(a∘b)(i) = a(b(i))`
pub fn mul(a: &P, b: &P) -> P {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inv(a: &P) -> P {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j] = i;
    }
    out
}

pub fn cycle_type(a: &P) -> Vec<u32> {
    let mut seen = vec![false; a.len()];
    let mut out = Vec::new();
    for s in 0..a.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = a[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

fn is_id(a: &P) -> bool {
    a.iter().enumerate().all(|(i, &j)| i == j)
}

/// `#{(a_1,b_1,…,a_g,b_g,σ_1,…,σ_r) : ∏[a_i,b_i]·∏σ_j = 1, σ_j ∈ C_{μ^j}} / d!`,
/// with every slot enumerated independently.
pub fn naive_cover_count(d: usize, genus: usize, profile: &[Vec<u32>]) -> BigRational {
    let group = all_perms(d);
    let classes: Vec<Vec<&P>> = profile
        .iter()
        .map(|mu| group.iter().filter(|p| &cycle_type(p) == mu).collect())
        .collect();
    let id: P = (0..d).collect();
    let mut count: u64 = 0;
    let mut stack: Vec<(usize, P)> = vec![(0, id)];
    let slots = 2 * genus + profile.len();
    while let Some((slot, acc)) = stack.pop() {
        if slot == slots {
            if is_id(&acc) {
                count += 1;
            }
            continue;
        }
        if slot < 2 * genus {
            if slot % 2 == 1 {
                continue;
            }
            for a in &group {
                for b in &group {
                    let comm = mul(&mul(a, b), &mul(&inv(a), &inv(b)));
                    stack.push((slot + 2, mul(&acc, &comm)));
                }
            }
        } else {
            for s in &classes[slot - 2 * genus] {
                stack.push((slot + 1, mul(&acc, s)));
            }
        }
    }
    let fact: u64 = (1..=d as u64).product();
    BigRational::new(BigInt::from(count), BigInt::from(fact))
}

/// Order of the centralizer of a permutation of the given cycle type,
/// by counting commuting elements.
pub fn centralizer_by_counting(parts: &[u32]) -> u64 {
    let d: u32 = parts.iter().sum();
    let mut rep = Vec::new();
    let mut start = 0usize;
    for &k in parts {
        for j in 0..k as usize {
            rep.push(start + (j + 1) % k as usize);
        }
        start += k as usize;
    }
    all_perms(d as usize)
        .iter()
        .filter(|g| mul(g, &rep) == mul(&rep, g))
        .count() as u64
}

/// `∏ m_k! k^{m_k}` straight from a list of parts.
pub fn zeta_from_parts(parts: &[u32]) -> u64 {
    let mut out = 1u64;
    let mut i = 0;
    while i < parts.len() {
        let k = parts[i];
        let m = parts[i..].iter().take_while(|&&p| p == k).count() as u64;
        out *= (1..=m).product::<u64>() * u64::from(k).pow(m as u32);
        i += m as usize;
    }
    out
}
