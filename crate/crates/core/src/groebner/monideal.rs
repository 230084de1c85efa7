//! Combinatorics of monomial ideals: dimension and Hilbert functions.

use crate::monomial::{binomial, Monomial};

use super::minimalize_monomials;

/// Krull dimension of `S/(mons)` in `n` variables: `n` minus the smallest
/// set of variables meeting the support of every generator. `-1` if some
/// generator is 1.
pub(crate) fn monomial_dimension(n: usize, mons: &[Monomial]) -> i64 {
    if mons.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<Vec<usize>> = mons
        .iter()
        .map(|m| {
            m.exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    supports.sort_by_key(|s| s.len());
    supports.dedup();
    // drop supports containing another support
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !minimal.iter().any(|t| t.iter().all(|v| s.contains(v))) {
            minimal.push(s);
        }
    }
    let mut chosen = vec![false; n];
    let mut best = n;
    min_hitting_set(&minimal, &mut chosen, 0, &mut best);
    n as i64 - best as i64
}

fn min_hitting_set(sets: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open = sets.iter().find(|s| !s.iter().any(|&v| chosen[v]));
    let Some(open) = open else {
        *best = size;
        return;
    };
    for &v in open {
        chosen[v] = true;
        min_hitting_set(sets, chosen, size + 1, best);
        chosen[v] = false;
    }
}

/// Numerator `K(t)` of the Hilbert series `K(t)/(1-t)^n` of `S/(mons)`,
/// by pivoting on the smallest power of the most frequent variable.
pub(crate) fn hilbert_numerator(mons: &[Monomial]) -> Vec<i64> {
    let gens = minimalize_monomials(mons.to_vec());
    numerator_rec(gens)
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let n = gens[0].nvars();
    // pairwise coprime generators: product of (1 - t^deg)
    let mut counts = vec![0usize; n];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let (var, &freq) = counts
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| (**c, usize::MAX - i))
        .unwrap();
    if freq <= 1 {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            let neg: Vec<i64> = acc.iter().map(|c| -c).collect();
            poly_add(&mut next, &neg, d);
            acc = next;
        }
        return acc;
    }
    let e = gens
        .iter()
        .map(|g| g.exponents()[var])
        .filter(|&e| e > 0)
        .min()
        .unwrap();
    let mut pe = vec![0u32; n];
    pe[var] = e;
    let pivot = Monomial::from_exponents(&pe).expect("pivot exponent within bounds");

    // K(J) = K(J + (p)) + t^deg(p) K(J : p)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex: Vec<u32> = g.exponents().to_vec();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::from_exponents(&ex).unwrap()
        })
        .collect();
    let mut k = numerator_rec(minimalize_monomials(plus));
    let kc = numerator_rec(minimalize_monomials(colon));
    poly_add(&mut k, &kc, e as usize);
    k
}

/// `dim_k (S/(mons))_d` in `n` variables.
pub(crate) fn standard_monomial_count(n: usize, mons: &[Monomial], d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return u64::from(d == 0 && mons.iter().all(|m| !m.is_one()));
    }
    let k = hilbert_numerator(mons);
    let mut total: i128 = 0;
    for (i, &c) in k.iter().enumerate() {
        let rest = d - i as i64;
        if rest < 0 || c == 0 {
            continue;
        }
        total += c as i128 * binomial(n as u64 - 1 + rest as u64, n as u64 - 1) as i128;
    }
    debug_assert!(total >= 0);
    total as u64
}
