//! Shared test oracles, independent of the library's decision paths.
//!
//! The float DFT evaluates character sums directly with `num_complex`; the
//! brute-force searches scan raw subsets with direct multiplicity counting.
//! None of them touch the cyclotomic kernel, the backtracker, or the clique
//! enumerator they are used to check.

#![allow(dead_code)]

use itertools::Itertools;
use num_complex::Complex64;

use cubespectra::{Element, ExpSum, Group, PointSet};

pub const TOL: f64 = 1e-9;

/// Direct complex evaluation of the transform of the indicator of `e` at `x`.
pub fn naive_dft(e: &PointSet, x: &Element) -> Complex64 {
    let moduli = e.group().moduli();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in e.iter() {
        let mut phase = 0.0;
        for ((&xj, &kj), &m) in x.coords().iter().zip(k.coords()).zip(moduli) {
            phase -= 2.0 * std::f64::consts::PI * (xj as f64) * (kj as f64) / (m as f64);
        }
        sum += Complex64::new(phase.cos(), phase.sin());
    }
    sum
}

/// Numeric value of an exponent-count vector.
pub fn expsum_eval(s: &ExpSum) -> Complex64 {
    let l = s.order() as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for (r, &c) in s.counts().iter().enumerate() {
        let theta = -2.0 * std::f64::consts::PI * (r as f64) / l;
        sum += (c as f64) * Complex64::new(theta.cos(), theta.sin());
    }
    sum
}

/// Subset of a group selected by ranks.
pub fn set_of_ranks(group: &Group, ranks: &[usize]) -> PointSet {
    let elements = ranks.iter().map(|&r| group.element_at(r as u64));
    PointSet::new(group, elements).expect("same group")
}

/// How many translates of `tile` cover `x`.
pub fn cover_multiplicity(tile: &PointSet, translates: &PointSet, x: &Element) -> usize {
    translates
        .iter()
        .filter(|t| tile.contains(&x.sub(t).expect("same group")))
        .count()
}

/// Exhaustive scan for level-1 tiling complements: every subset of the right
/// cardinality, checked by direct multiplicity counting.
pub fn brute_tilings(tile: &PointSet) -> Vec<PointSet> {
    let group = tile.group();
    let order = group.order() as usize;
    if tile.is_empty() || order % tile.len() != 0 {
        return Vec::new();
    }
    let size = order / tile.len();
    let mut out = Vec::new();
    for combo in (0..order).combinations(size) {
        let t = set_of_ranks(group, &combo);
        if group
            .elements()
            .all(|x| cover_multiplicity(tile, &t, &x) == 1)
        {
            out.push(t);
        }
    }
    out.sort();
    out
}

/// Exhaustive scan for spectra: every subset of cardinality `|e|` whose
/// nonzero pairwise differences all annihilate the float transform of `e`.
pub fn brute_spectra(e: &PointSet) -> Vec<PointSet> {
    let group = e.group();
    let order = group.order() as usize;
    let size = e.len();
    let mut out = Vec::new();
    if size > order {
        return out;
    }
    for combo in (0..order).combinations(size) {
        let lam = set_of_ranks(group, &combo);
        let points: Vec<&Element> = lam.iter().collect();
        let orthogonal = points.iter().tuple_combinations().all(|(a, b)| {
            let d = a.sub(b).expect("same group");
            naive_dft(e, &d).norm() < TOL && naive_dft(e, &d.neg()).norm() < TOL
        });
        if orthogonal {
            out.push(lam);
        }
    }
    out.sort();
    out
}

/// Canonical modulus shapes (sorted, factors >= 2, plus the trivial group)
/// with order at most `max_order` and at most `max_factors` factors.
pub fn shapes_up_to(max_order: u64, max_factors: usize) -> Vec<Vec<u64>> {
    let mut shapes = vec![vec![1]];
    let mut stack: Vec<Vec<u64>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        let product: u64 = prefix.iter().product();
        let start = *prefix.last().unwrap_or(&2);
        for m in start..=max_order {
            if product * m > max_order {
                break;
            }
            let mut next = prefix.clone();
            next.push(m);
            if !next.is_empty() {
                shapes.push(next.clone());
            }
            if next.len() < max_factors {
                stack.push(next);
            }
        }
    }
    shapes.sort();
    shapes.dedup();
    shapes
}

/// All nonempty subsets of a small group, as point sets.
pub fn all_nonempty_subsets(group: &Group) -> Vec<PointSet> {
    let n = group.order() as usize;
    assert!(n <= 16, "exhaustive subsets need a small group");
    (1u32..(1 << n))
        .map(|mask| {
            let ranks: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
            set_of_ranks(group, &ranks)
        })
        .collect()
}
