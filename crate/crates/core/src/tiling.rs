//! Packing and tiling verification by exact integer convolution, and
//! exhaustive enumeration of level-1 tiling complements by exact-cover
//! backtracking.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fourier::IntFunction;
use crate::group::{Group, PointSet};

/// Accumulates `sum_{t in translates} f(x - t)` for every `x`, by scattering
/// `f(y)` onto the cells `y + t`.
fn cover_sums(f: &IntFunction, translates: &PointSet) -> Result<Vec<i128>> {
    let group = f.group();
    group.ensure_same(translates.group())?;
    let mut sums = vec![0i128; group.order() as usize];
    for (rank, &v) in f.values().iter().enumerate() {
        if v == 0 {
            continue;
        }
        let y = group.element_at(rank as u64);
        for t in translates.iter() {
            let cell = group.rank_of(&y.add(t)?) as usize;
            sums[cell] += v as i128;
        }
    }
    Ok(sums)
}

/// True iff `f + translates` is a packing at the given level: the translate
/// sums never exceed `level` anywhere. Requires `f >= 0`.
pub fn check_packing(f: &IntFunction, translates: &PointSet, level: i64) -> Result<bool> {
    if !f.is_nonnegative() {
        return Err(Error::NegativeWeight);
    }
    if level < 0 {
        return Err(Error::NegativeLevel);
    }
    let sums = cover_sums(f, translates)?;
    Ok(sums.iter().all(|&s| s <= level as i128))
}

/// True iff `f + translates` tiles at the given level: the translate sums
/// equal `level` everywhere. Requires `f >= 0`.
pub fn check_tiling_weighted(f: &IntFunction, translates: &PointSet, level: i64) -> Result<bool> {
    if !f.is_nonnegative() {
        return Err(Error::NegativeWeight);
    }
    if level < 0 {
        return Err(Error::NegativeLevel);
    }
    let sums = cover_sums(f, translates)?;
    Ok(sums.iter().all(|&s| s == level as i128))
}

/// True iff `tile + translates` covers every group element exactly `level`
/// times.
pub fn check_tiling(tile: &PointSet, translates: &PointSet, level: i64) -> Result<bool> {
    let group = tile.group();
    group.ensure_same(translates.group())?;
    if level < 0 {
        return Err(Error::NegativeLevel);
    }
    let mut sums = vec![0i64; group.order() as usize];
    for e in tile.iter() {
        for t in translates.iter() {
            sums[group.rank_of(&e.add(t)?) as usize] += 1;
        }
    }
    Ok(sums.iter().all(|&s| s == level))
}

struct TileSearch {
    order: usize,
    // offsets[e][t] = rank of (element_at(e) + element_at(t)); row per tile point
    tile_ranks: Vec<usize>,
    add_table: AddTable,
}

/// Rank-level modular addition without materializing elements.
struct AddTable {
    moduli: Vec<u64>,
    coords: Vec<Vec<u64>>, // decoded coordinates per rank
}

impl AddTable {
    fn new(group: &Group) -> AddTable {
        let coords = group
            .elements()
            .map(|e| e.coords().to_vec())
            .collect::<Vec<_>>();
        AddTable {
            moduli: group.moduli().to_vec(),
            coords,
        }
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let mut rank = 0u64;
        for ((&x, &y), &m) in self.coords[a]
            .iter()
            .zip(&self.coords[b])
            .zip(&self.moduli)
        {
            rank = rank * m + (x + y) % m;
        }
        rank as usize
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        let mut rank = 0u64;
        for ((&x, &y), &m) in self.coords[a]
            .iter()
            .zip(&self.coords[b])
            .zip(&self.moduli)
        {
            rank = rank * m + (x + m - y) % m;
        }
        rank as usize
    }
}

impl TileSearch {
    /// Places translate `t`; returns false (and undoes nothing) on collision.
    fn try_place(&self, covered: &mut [bool], t: usize) -> bool {
        for (i, &e) in self.tile_ranks.iter().enumerate() {
            let cell = self.add_table.add(e, t);
            if covered[cell] {
                // roll back the cells marked so far
                for &e2 in &self.tile_ranks[..i] {
                    covered[self.add_table.add(e2, t)] = false;
                }
                return false;
            }
            covered[cell] = true;
        }
        true
    }

    fn unplace(&self, covered: &mut [bool], t: usize) {
        for &e in &self.tile_ranks {
            covered[self.add_table.add(e, t)] = false;
        }
    }

    /// Branches on the least uncovered cell; `from` is a lower bound for it.
    fn search(&self, covered: &mut [bool], chosen: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        let x = match covered[from..].iter().position(|&c| !c) {
            Some(i) => from + i,
            None => {
                let mut t = chosen.clone();
                t.sort_unstable();
                out.push(t);
                return;
            }
        };
        // every translate covering x has the form x - e for a tile point e
        let mut candidates: Vec<usize> =
            self.tile_ranks.iter().map(|&e| self.add_table.sub(x, e)).collect();
        candidates.sort_unstable();
        for t in candidates {
            if self.try_place(covered, t) {
                chosen.push(t);
                self.search(covered, chosen, x + 1, out);
                chosen.pop();
                self.unplace(covered, t);
            }
        }
    }
}

/// Enumerates every translate set `T` for which `tile + T` tiles the group at
/// level 1, in canonical (lexicographic) order.
///
/// Backtracking exact cover: repeatedly branch over the translates able to
/// cover the least uncovered element. Each solution contains exactly one such
/// translate per branch point, so solutions are produced exactly once.
pub fn enumerate_tiling_complements(tile: &PointSet) -> Result<Vec<PointSet>> {
    if tile.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = tile.group();
    if group.order() % tile.len() as u64 != 0 {
        return Ok(Vec::new());
    }
    let search = TileSearch {
        order: group.order() as usize,
        tile_ranks: tile.iter().map(|e| group.rank_of(e) as usize).collect(),
        add_table: AddTable::new(group),
    };

    // Split the root branch set (translates covering the identity) across
    // workers; each worker owns a private cover state.
    let mut roots: Vec<usize> = search
        .tile_ranks
        .iter()
        .map(|&e| search.add_table.sub(0, e))
        .collect();
    roots.sort_unstable();

    let solutions: Vec<Vec<usize>> = roots
        .par_iter()
        .map(|&t| {
            let mut covered = vec![false; search.order];
            let mut chosen = Vec::new();
            let mut out = Vec::new();
            if search.try_place(&mut covered, t) {
                chosen.push(t);
                search.search(&mut covered, &mut chosen, 1, &mut out);
            }
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
