//! Cubes `[a_1] x ... x [a_N]` in product groups, their duals, closed-form
//! transform zero sets, the tiling/spectrum duality check, and the reduction
//! of dilated cubes to plain cubes inside the subgroup they generate.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{CoordEmbedding, Element, Group, PointSet};
use crate::spectra::{enumerate_spectra, is_spectrum};
use crate::tiling::{check_tiling, enumerate_tiling_complements};

/// The cube `[a_1] x ... x [a_N]` inside a product group, where
/// `[a] = {0, 1, ..., a-1}` and every edge satisfies `1 <= a_j <= A_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    group: Group,
    edges: Vec<u64>,
}

impl Cube {
    pub fn new(group: &Group, edges: &[u64]) -> Result<Cube> {
        if edges.len() != group.factor_count() {
            return Err(Error::CoordArity {
                expected: group.factor_count(),
                got: edges.len(),
            });
        }
        for (&a, &m) in edges.iter().zip(group.moduli()) {
            if a == 0 || a > m {
                return Err(Error::BadCubeEdge { edge: a, modulus: m });
            }
        }
        Ok(Cube {
            group: group.clone(),
            edges: edges.to_vec(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }

    /// `|Q|`, the product of the edges.
    pub fn size(&self) -> u64 {
        self.edges.iter().product()
    }

    /// The cube as an explicit point set.
    pub fn point_set(&self) -> PointSet {
        let mut members = Vec::with_capacity(self.size() as usize);
        let mut coords = vec![0u64; self.edges.len()];
        loop {
            members.push(self.group.element_from_reduced(coords.clone()));
            // odometer over the edge ranges
            let mut j = self.edges.len();
            loop {
                if j == 0 {
                    let set = PointSet::new(&self.group, members).expect("same group");
                    return set;
                }
                j -= 1;
                coords[j] += 1;
                if coords[j] < self.edges[j] {
                    break;
                }
                coords[j] = 0;
            }
        }
    }

    /// True iff every edge divides its modulus; exactly the condition for the
    /// cube to be a tile and to be spectral.
    pub fn divisibility_check(&self) -> bool {
        self.edges
            .iter()
            .zip(self.group.moduli())
            .all(|(&a, &m)| m % a == 0)
    }

    /// The dual cube, with edges `A_j / a_j`; defined only under divisibility.
    pub fn dual(&self) -> Result<Cube> {
        for (&a, &m) in self.edges.iter().zip(self.group.moduli()) {
            if m % a != 0 {
                return Err(Error::DualUndefined { edge: a, modulus: m });
            }
        }
        let edges: Vec<u64> = self
            .edges
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &m)| m / a)
            .collect();
        Cube::new(&self.group, &edges)
    }

    fn coordinate_divisors(&self) -> Vec<u64> {
        // per-coordinate period A_j / gcd(A_j, a_j) of the transform zeros
        self.edges
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &m)| m / m.gcd(&a))
            .collect()
    }

    /// Closed-form transform zero set of the cube: the points having some
    /// coordinate `x_j` that is nonzero and divisible by `A_j / gcd(A_j, a_j)`.
    /// Matches the exact transform zero set on every input.
    pub fn zero_set(&self) -> PointSet {
        let divisors = self.coordinate_divisors();
        let members = self.group.elements().filter(|x| {
            x.coords()
                .iter()
                .zip(&divisors)
                .any(|(&c, &d)| c != 0 && c % d == 0)
        });
        PointSet::new(&self.group, members).expect("same group")
    }

    /// The looser closed-form variant that only excludes the joint origin
    /// instead of requiring the divisible coordinate itself to be nonzero.
    /// Kept for discrepancy reporting: it overshoots the true zero set
    /// whenever some coordinate may sit at 0 while another divisor is 1.
    pub fn zero_set_origin_excluded_only(&self) -> PointSet {
        let divisors = self.coordinate_divisors();
        let members = self.group.elements().filter(|x| {
            !x.is_identity()
                && x.coords()
                    .iter()
                    .zip(&divisors)
                    .any(|(&c, &d)| c % d == 0)
        });
        PointSet::new(&self.group, members).expect("same group")
    }

    /// Points claimed by the loose formula but absent from the true zero set.
    pub fn zero_set_discrepancy(&self) -> PointSet {
        let strict = self.zero_set();
        let loose = self.zero_set_origin_excluded_only();
        let members: Vec<Element> = loose
            .iter()
            .filter(|x| !strict.contains(x))
            .cloned()
            .collect();
        PointSet::new(&self.group, members).expect("same group")
    }

    /// The lattice spectrum `{x : (A_j / a_j) | x_j for all j}`; it always
    /// passes the spectrum check when divisibility holds.
    pub fn standard_spectrum(&self) -> Result<PointSet> {
        self.dual()?; // surfaces the divisibility error
        let strides: Vec<u64> = self
            .edges
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &m)| m / a)
            .collect();
        let members = self.group.elements().filter(|x| {
            x.coords()
                .iter()
                .zip(&strides)
                .all(|(&c, &s)| c % s == 0)
        });
        PointSet::new(&self.group, members)
    }
}

/// Both verdicts of the duality statement for one candidate set: is it a
/// tiling complement of the cube, and is it a spectrum of the dual cube?
/// The two must always coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremPair {
    pub tiling: bool,
    pub spectrum_of_dual: bool,
}

impl TheoremPair {
    pub fn equivalent(&self) -> bool {
        self.tiling == self.spectrum_of_dual
    }
}

/// Checks one candidate against both sides of the duality. Requires the dual
/// cube to exist.
pub fn verify_theorem_pair(cube: &Cube, candidate: &PointSet) -> Result<TheoremPair> {
    let dual = cube.dual()?;
    cube.group().ensure_same(candidate.group())?;
    Ok(TheoremPair {
        tiling: check_tiling(&cube.point_set(), candidate, 1)?,
        spectrum_of_dual: is_spectrum(&dual.point_set(), candidate)?,
    })
}

/// Outcome of the global duality check for one cube.
///
/// When divisibility holds, `spectra` are the spectra of the dual cube and
/// `agrees` states that they coincide with the tiling complements of the cube
/// as sets of sets. When divisibility fails, `spectra` are the spectra of the
/// cube itself and `agrees` states that both enumerations came back empty.
#[derive(Clone, Debug)]
pub struct TheoremSweep {
    pub divisibility: bool,
    pub tiling_complements: Vec<PointSet>,
    pub spectra: Vec<PointSet>,
    pub agrees: bool,
}

/// Runs both enumerations for `cube` and compares them per the duality
/// statement.
pub fn exhaustive_theorem_check(cube: &Cube) -> Result<TheoremSweep> {
    let tile = cube.point_set();
    let tilings = enumerate_tiling_complements(&tile)?;
    if cube.divisibility_check() {
        let spectra = enumerate_spectra(&cube.dual()?.point_set())?;
        let agrees = tilings == spectra;
        Ok(TheoremSweep {
            divisibility: true,
            tiling_complements: tilings,
            spectra,
            agrees,
        })
    } else {
        let spectra = enumerate_spectra(&tile)?;
        let agrees = tilings.is_empty() && spectra.is_empty();
        Ok(TheoremSweep {
            divisibility: false,
            tiling_complements: tilings,
            spectra,
            agrees,
        })
    }
}

/// A dilated cube `s_1[k_1] x ... x s_N[k_N]`, where `s[k]` is the
/// progression `{0, s, 2s, ..., (k-1)s}` reduced modulo the modulus. All
/// progression points must stay distinct, i.e. `k_j <= A_j / gcd(A_j, s_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilatedCube {
    group: Group,
    steps: Vec<u64>,
    counts: Vec<u64>,
}

impl DilatedCube {
    pub fn new(group: &Group, steps: &[u64], counts: &[u64]) -> Result<DilatedCube> {
        if steps.len() != group.factor_count() {
            return Err(Error::CoordArity {
                expected: group.factor_count(),
                got: steps.len(),
            });
        }
        if counts.len() != group.factor_count() {
            return Err(Error::CoordArity {
                expected: group.factor_count(),
                got: counts.len(),
            });
        }
        for ((&s, &k), &m) in steps.iter().zip(counts).zip(group.moduli()) {
            let reduced = s % m;
            let generated = m / m.gcd(&reduced);
            if k == 0 || k > generated {
                return Err(Error::ProgressionCollision {
                    step: s,
                    count: k,
                    modulus: m,
                });
            }
        }
        Ok(DilatedCube {
            group: group.clone(),
            steps: steps.iter().zip(group.moduli()).map(|(&s, &m)| s % m).collect(),
            counts: counts.to_vec(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// The dilated cube as an explicit point set.
    pub fn point_set(&self) -> PointSet {
        let mut members: Vec<Element> = vec![self.group.zero()];
        for (j, (&s, &k)) in self.steps.iter().zip(&self.counts).enumerate() {
            let mut next = Vec::with_capacity(members.len() * k as usize);
            for base in &members {
                for i in 0..k {
                    let mut coords = base.coords().to_vec();
                    let m = self.group.moduli()[j];
                    coords[j] = ((i as u128 * s as u128) % m as u128) as u64;
                    next.push(self.group.element_from_reduced(coords));
                }
            }
            members = next;
        }
        PointSet::new(&self.group, members).expect("same group")
    }

    /// Rewrites the dilated cube as the plain cube `[k_1] x ... x [k_N]`
    /// inside the subgroup it generates, returning that abstract group, the
    /// cube, and the coordinate embedding (whose character restriction maps
    /// spectra of the original down to the subgroup).
    pub fn reduce(&self) -> Result<(Group, Cube, CoordEmbedding)> {
        let embedding = CoordEmbedding::new(&self.group, &self.steps)?;
        let reduced_group = embedding.domain().clone();
        let cube = Cube::new(&reduced_group, &self.counts)?;
        Ok((reduced_group, cube, embedding))
    }
}

/// Outcome of the dilated-cube reduction check for one candidate spectrum.
#[derive(Clone, Debug)]
pub struct CorollaryCheck {
    /// `k_j | A'_j` for every coordinate: the tiling/spectrality criterion.
    pub criterion: bool,
    /// The dilated set admits some spectrum.
    pub spectral: bool,
    /// The dilated set admits some tiling complement.
    pub tiles: bool,
    /// The candidate is a spectrum of the dilated set.
    pub candidate_is_spectrum: bool,
    /// The restricted candidate tiles with the dual of the reduced cube
    /// (undefined when the criterion fails).
    pub restricted_tiles: Option<bool>,
    /// Distinct spectrum points restrict to distinct characters (only
    /// evaluated when the candidate is a spectrum).
    pub restriction_injective: Option<bool>,
    /// The restriction of the candidate, inside the reduced group.
    pub restricted_candidate: PointSet,
    pub reduced_group: Group,
    pub reduced_cube: Cube,
}

impl CorollaryCheck {
    /// All asserted equivalences hold.
    pub fn equivalent(&self) -> bool {
        self.spectral == self.tiles
            && self.tiles == self.criterion
            && self.candidate_is_spectrum == self.restricted_tiles.unwrap_or(false)
            && self.restriction_injective.unwrap_or(true)
    }
}

/// Verifies the dilated-cube reduction on one candidate: spectrality,
/// tiling, the divisibility criterion, and the transfer of the candidate to
/// a tiling complement of the reduced dual cube.
pub fn corollary_check(dilated: &DilatedCube, candidate: &PointSet) -> Result<CorollaryCheck> {
    dilated.group().ensure_same(candidate.group())?;
    let (reduced_group, reduced_cube, embedding) = dilated.reduce()?;
    let set = dilated.point_set();

    let criterion = reduced_cube.divisibility_check();
    let spectral = !enumerate_spectra(&set)?.is_empty();
    let tiles = !enumerate_tiling_complements(&set)?.is_empty();
    let candidate_is_spectrum = is_spectrum(&set, candidate)?;
    let restricted = embedding.restrict_set(candidate)?;

    let restricted_tiles = if criterion {
        let dual = reduced_cube.dual()?;
        Some(check_tiling(&dual.point_set(), &restricted, 1)?)
    } else {
        None
    };
    let restriction_injective =
        candidate_is_spectrum.then(|| restricted.len() == candidate.len());

    Ok(CorollaryCheck {
        criterion,
        spectral,
        tiles,
        candidate_is_spectrum,
        restricted_tiles,
        restriction_injective,
        restricted_candidate: restricted,
        reduced_group,
        reduced_cube,
    })
}
