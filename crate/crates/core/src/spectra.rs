//! Spectrum verification and enumeration.
//!
//! Two independent exact decision routes are kept deliberately separate:
//! [`is_spectrum`] works through the difference-set condition (every nonzero
//! difference of spectrum points must kill the transform of the set), while
//! [`speccond_check`] works through the autocorrelation support (the
//! transform of the spectrum must vanish wherever the autocorrelation of the
//! set does not). The two must agree on every input; the test suites hold
//! them to that.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::{autocorrelation, dft_indicator, zero_set};
use crate::group::PointSet;

/// Distinct nonzero pairwise differences of `lambda`, as element ranks.
fn distinct_nonzero_differences(lambda: &PointSet) -> Vec<u64> {
    let group = lambda.group();
    let n = group.factor_count();
    let mut buf = vec![0u64; n];
    let mut seen: BTreeSet<u64> = BTreeSet::new();
    for a in lambda.iter() {
        for b in lambda.iter() {
            if a == b {
                continue;
            }
            for (k, ((&x, &y), &m)) in a
                .coords()
                .iter()
                .zip(b.coords())
                .zip(group.moduli())
                .enumerate()
            {
                buf[k] = (x + m - y) % m;
            }
            seen.insert(group.rank_of_coords(&buf));
        }
    }
    seen.into_iter().collect()
}

/// True iff the characters indexed by `lambda` are pairwise orthogonal on
/// `e`: every nonzero difference of points of `lambda` lies in the zero set
/// of the transform of `e`.
pub fn orthogonal(e: &PointSet, lambda: &PointSet) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group();
    group.ensure_same(lambda.group())?;
    for rank in distinct_nonzero_differences(lambda) {
        let d = group.element_at(rank);
        if !dft_indicator(e, &d)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `lambda` is a spectrum of `e`: an orthogonal family of `|e|`
/// characters is automatically a basis of the functions on `e`, so
/// orthogonality plus the cardinality count decides.
pub fn is_spectrum(e: &PointSet, lambda: &PointSet) -> Result<bool> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(lambda.len() == e.len() && orthogonal(e, lambda)?)
}

/// Independent spectrum decision through the autocorrelation route: `lambda`
/// is a spectrum of `e` iff `|lambda| = |e|` and the transform of `lambda`
/// vanishes at every nonzero point where the autocorrelation of `e` does not.
///
/// This is the exact-arithmetic form of the statement that the squared
/// transform of `e` tiles the group at level `|e|^2` when translated along a
/// spectrum. On an empty `e` the condition is vacuous and only the
/// cardinality count remains.
pub fn speccond_check(e: &PointSet, lambda: &PointSet) -> Result<bool> {
    let group = e.group();
    group.ensure_same(lambda.group())?;
    if e.is_empty() {
        return Ok(lambda.is_empty());
    }
    if lambda.len() != e.len() {
        return Ok(false);
    }
    let corr = autocorrelation(e)?;
    for (rank, &v) in corr.values().iter().enumerate() {
        if rank == 0 || v == 0 {
            continue;
        }
        let xi = group.element_at(rank as u64);
        if !dft_indicator(lambda, &xi)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

struct CliqueSearch {
    target: usize,
    // zero-set membership by rank, plus decoded coordinates for rank
    // subtraction without allocation
    in_zero_set: Vec<bool>,
    coords: Vec<Vec<u64>>,
    moduli: Vec<u64>,
}

impl CliqueSearch {
    fn adjacent(&self, a: usize, b: usize) -> bool {
        let mut fwd = 0u64;
        let mut bwd = 0u64;
        for ((&x, &y), &m) in self.coords[a].iter().zip(&self.coords[b]).zip(&self.moduli) {
            fwd = fwd * m + (x + m - y) % m;
            bwd = bwd * m + (y + m - x) % m;
        }
        self.in_zero_set[fwd as usize] && self.in_zero_set[bwd as usize]
    }

    fn extend(&self, chosen: &mut Vec<usize>, candidates: &[usize], out: &mut Vec<Vec<usize>>) {
        if chosen.len() == self.target {
            out.push(chosen.clone());
            return;
        }
        let needed = self.target - chosen.len();
        if candidates.len() < needed {
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if candidates.len() - i < needed {
                break;
            }
            let narrowed: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&w| self.adjacent(v, w))
                .collect();
            chosen.push(v);
            self.extend(chosen, &narrowed, out);
            chosen.pop();
        }
    }
}

/// Enumerates every spectrum of `e`, in canonical (lexicographic) order.
///
/// Spectra of size `|e|` are exactly the `|e|`-cliques of the graph on the
/// group whose edges are the pairs differing by a transform zero of `e`;
/// vertices are scanned in canonical order with a remaining-count bound.
pub fn enumerate_spectra(e: &PointSet) -> Result<Vec<PointSet>> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group();
    let n = group.order() as usize;
    let target = e.len();
    if target > n {
        return Ok(Vec::new());
    }

    let zeros = zero_set(e)?;
    let mut in_zero_set = vec![false; n];
    for z in zeros.iter() {
        in_zero_set[group.rank_of(z) as usize] = true;
    }
    let search = CliqueSearch {
        target,
        in_zero_set,
        coords: group.elements().map(|x| x.coords().to_vec()).collect(),
        moduli: group.moduli().to_vec(),
    };

    // Parallelize over the first vertex; each worker owns private state.
    let solutions: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            if n - first < target {
                return out;
            }
            let candidates: Vec<usize> = (first + 1..n)
                .filter(|&w| search.adjacent(first, w))
                .collect();
            let mut chosen = vec![first];
            search.extend(&mut chosen, &candidates, &mut out);
            out
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });

    let mut sets: Vec<PointSet> = solutions
        .into_iter()
        .map(|ranks| {
            let elems = ranks.into_iter().map(|r| group.element_at(r as u64));
            PointSet::new(group, elems).expect("same group")
        })
        .collect();
    sets.sort();
    Ok(sets)
}
