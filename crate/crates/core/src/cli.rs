//! Command-line front end: input grammar, size guards, and report emission.
//!
//! Group grammar: moduli separated by `x` or `,` (`4x2` and `4,2` are the
//! same group). Set grammar: `;`-separated tuples of `,`-separated
//! coordinates, e.g. `0,0;1,0`; coordinates may be negative and are reduced.
//!
//! Exit codes: 0 = verified/true, 1 = falsified on valid input, 2 = input
//! error.

use std::collections::BTreeSet;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cube::{corollary_check, exhaustive_theorem_check, verify_theorem_pair, Cube, DilatedCube};
use crate::fourier::zero_set;
use crate::group::{translation_class_representatives, Group, PointSet};
use crate::report::{Report, SweepEntry};
use crate::spectra::{enumerate_spectra, is_spectrum, orthogonal, speccond_check};
use crate::tiling::{check_tiling, enumerate_tiling_complements};

const CHECK_GUARD: u64 = 1_000_000;
const ENUM_GUARD: u64 = 4096;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "cubespectra",
    version,
    about = "Exact tiling-complement and spectrum verification for cube-like sets in finite abelian groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Report format
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Option<Format>,

    /// Reduce witness lists to translation-class representatives containing 0
    #[arg(long, global = true)]
    pub canonical: bool,

    /// Worker threads for enumeration (0 = all cores)
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Lift the desk-scale size guards
    #[arg(long, global = true)]
    pub force: bool,

    /// Include wall-clock timing in the report
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether tile + translates covers the group exactly `level` times
    CheckTiling {
        #[arg(long)]
        group: String,
        /// The tile, in set grammar
        #[arg(long)]
        set: String,
        /// The translate set, in set grammar
        #[arg(long)]
        translates: String,
        #[arg(long, default_value_t = 1)]
        level: i64,
    },
    /// Decide whether a candidate set is a spectrum, through both exact routes
    CheckSpectrum {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
        /// The candidate spectrum, in set grammar
        #[arg(long)]
        spectrum: String,
    },
    /// Enumerate all level-1 tiling complements of a set
    EnumerateTilings {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
    },
    /// Enumerate all spectra of a set
    EnumerateSpectra {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
    },
    /// Compute the dual cube
    Dual {
        #[arg(long)]
        group: String,
        /// Cube edges, e.g. `2x1`
        #[arg(long)]
        cube: String,
    },
    /// Compute the transform zero set of a cube (closed form, cross-checked
    /// exactly) or of an arbitrary set (exact transform)
    ZeroSet {
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "set")]
        cube: Option<String>,
        #[arg(long)]
        set: Option<String>,
    },
    /// Check one candidate against both sides of the cube duality:
    /// tiling complement of the cube vs spectrum of the dual cube
    VerifyTheorem {
        #[arg(long)]
        group: String,
        #[arg(long)]
        cube: String,
        /// The candidate set, in set grammar
        #[arg(long)]
        candidate: String,
    },
    /// Check the dilated-cube reduction on one candidate spectrum
    VerifyCorollary {
        #[arg(long)]
        group: String,
        /// Per-coordinate progression steps, e.g. `2` or `2x1`
        #[arg(long)]
        steps: String,
        /// Per-coordinate progression lengths
        #[arg(long)]
        counts: String,
        #[arg(long)]
        candidate: String,
    },
    /// Enumerate both sides of the duality for every cube of a group, or of
    /// a whole family of groups
    Sweep {
        /// A single group to sweep
        #[arg(long, conflicts_with = "up_to")]
        group: Option<String>,
        /// Sweep all groups with moduli ranging over 1..=M_j, e.g. `6x6`
        #[arg(long)]
        up_to: Option<String>,
    },
}

/// Parses the group grammar: positive moduli separated by `x` or `,`.
pub fn parse_group(text: &str) -> Result<Group, String> {
    let cleaned = text.trim();
    if cleaned.is_empty() {
        return Err("empty group literal".into());
    }
    let mut moduli = Vec::new();
    for tok in cleaned.split(['x', ',']) {
        let tok = tok.trim();
        let m: u64 = tok
            .parse()
            .map_err(|_| format!("invalid modulus token \"{tok}\""))?;
        moduli.push(m);
    }
    Group::new(&moduli).map_err(|e| e.to_string())
}

/// Parses a list of nonnegative integers in the group grammar (for cube
/// edges, steps, and counts).
pub fn parse_edges(text: &str) -> Result<Vec<u64>, String> {
    let cleaned = text.trim();
    if cleaned.is_empty() {
        return Err("empty edge literal".into());
    }
    let mut edges = Vec::new();
    for tok in cleaned.split(['x', ',']) {
        let tok = tok.trim();
        let e: u64 = tok
            .parse()
            .map_err(|_| format!("invalid edge token \"{tok}\""))?;
        edges.push(e);
    }
    Ok(edges)
}

/// Parses the set grammar; duplicate points collapse and are reported as
/// notes. In single-factor groups tuples are bare integers, so commas also
/// separate points there (`0,1` and `0;1` both mean `{0, 1}`).
pub fn parse_set(text: &str, group: &Group) -> Result<(PointSet, Vec<String>), String> {
    let cleaned = text.trim();
    if cleaned.is_empty() {
        return Err("empty set literal".into());
    }
    let single = group.factor_count() == 1;
    let mut notes = Vec::new();
    let mut elements = Vec::new();
    let mut seen = BTreeSet::new();
    let tuples: Vec<&str> = if single {
        cleaned.split([';', ',']).collect()
    } else {
        cleaned.split(';').collect()
    };
    for tuple in tuples {
        let tuple = tuple.trim();
        let mut coords = Vec::new();
        for tok in tuple.split(',') {
            let tok = tok.trim();
            let c: i64 = tok
                .parse()
                .map_err(|_| format!("invalid coordinate token \"{tok}\" in tuple \"{tuple}\""))?;
            coords.push(c);
        }
        let e = group
            .element(&coords)
            .map_err(|err| format!("tuple \"{tuple}\": {err}"))?;
        if seen.insert(e.clone()) {
            elements.push(e);
        } else {
            notes.push(format!("duplicate point collapsed: {e}"));
        }
    }
    let set = PointSet::new(group, elements).map_err(|e| e.to_string())?;
    Ok((set, notes))
}

fn guard(order: u64, limit: u64, what: &str, force: bool) -> Result<(), String> {
    if order > limit && !force {
        Err(format!(
            "group order {order} exceeds the {what} guard of {limit}; pass --force to proceed"
        ))
    } else {
        Ok(())
    }
}

/// Formats witnesses in set grammar and installs canonical representatives
/// when requested.
fn attach_witnesses(report: &mut Report, sets: &[PointSet], canonical: bool) {
    report.count("total_count", sets.len());
    if canonical {
        let (reps, classes) = translation_class_representatives(sets);
        report.count("class_count", classes);
        report.witness_count = Some(reps.len());
        report.witnesses = Some(reps.iter().map(|s| s.to_string()).collect());
    } else {
        report.witness_count = Some(sets.len());
        report.witnesses = Some(sets.iter().map(|s| s.to_string()).collect());
    }
}

fn execute(cli: &Cli) -> Result<Report, String> {
    let canonical = cli.canonical;
    let force = cli.force;
    match &cli.command {
        Command::CheckTiling {
            group,
            set,
            translates,
            level,
        } => {
            let g = parse_group(group)?;
            guard(g.order(), CHECK_GUARD, "check", force)?;
            let (e, mut notes) = parse_set(set, &g)?;
            let (t, more) = parse_set(translates, &g)?;
            notes.extend(more);
            let verdict = check_tiling(&e, &t, *level).map_err(|err| err.to_string())?;
            let mut report = Report::new("check-tiling");
            report
                .input("group", &g)
                .input("set", &e)
                .input("translates", &t)
                .input("level", level);
            report.flag("is_tiling", verdict);
            report.verdict = verdict;
            report.notes = notes;
            Ok(report)
        }
        Command::CheckSpectrum {
            group,
            set,
            spectrum,
        } => {
            let g = parse_group(group)?;
            guard(g.order(), CHECK_GUARD, "check", force)?;
            let (e, mut notes) = parse_set(set, &g)?;
            let (lam, more) = parse_set(spectrum, &g)?;
            notes.extend(more);
            let orth = orthogonal(&e, &lam).map_err(|err| err.to_string())?;
            let cardinality = lam.len() == e.len();
            let spec = is_spectrum(&e, &lam).map_err(|err| err.to_string())?;
            let cond = speccond_check(&e, &lam).map_err(|err| err.to_string())?;
            let mut report = Report::new("check-spectrum");
            report
                .input("group", &g)
                .input("set", &e)
                .input("spectrum", &lam);
            report
                .flag("orthogonal", orth)
                .flag("cardinality_match", cardinality)
                .flag("is_spectrum", spec)
                .flag("speccond_check", cond)
                .flag("routes_agree", spec == cond);
            report.verdict = spec;
            report.notes = notes;
            Ok(report)
        }
        Command::EnumerateTilings { group, set } => {
            let g = parse_group(group)?;
            guard(g.order(), ENUM_GUARD, "enumeration", force)?;
            let (e, notes) = parse_set(set, &g)?;
            let sets = enumerate_tiling_complements(&e).map_err(|err| err.to_string())?;
            let mut report = Report::new("enumerate-tilings");
            report.input("group", &g).input("set", &e);
            report.verdict = !sets.is_empty();
            attach_witnesses(&mut report, &sets, canonical);
            report.notes = notes;
            Ok(report)
        }
        Command::EnumerateSpectra { group, set } => {
            let g = parse_group(group)?;
            guard(g.order(), ENUM_GUARD, "enumeration", force)?;
            let (e, notes) = parse_set(set, &g)?;
            let sets = enumerate_spectra(&e).map_err(|err| err.to_string())?;
            let mut report = Report::new("enumerate-spectra");
            report.input("group", &g).input("set", &e);
            report.verdict = !sets.is_empty();
            attach_witnesses(&mut report, &sets, canonical);
            report.notes = notes;
            Ok(report)
        }
        Command::Dual { group, cube } => {
            let g = parse_group(group)?;
            let q = Cube::new(&g, &parse_edges(cube)?).map_err(|err| err.to_string())?;
            let dual = q.dual().map_err(|err| err.to_string())?;
            let mut report = Report::new("dual");
            report.input("group", &g).input("cube", join_edges(q.edges()));
            report.text("dual", join_edges(dual.edges()));
            report.flag("defined", true);
            report.verdict = true;
            Ok(report)
        }
        Command::ZeroSet { group, cube, set } => {
            let g = parse_group(group)?;
            guard(g.order(), CHECK_GUARD, "check", force)?;
            let mut report = Report::new("zero-set");
            report.input("group", &g);
            match (cube, set) {
                (Some(cube), None) => {
                    let q = Cube::new(&g, &parse_edges(cube)?).map_err(|err| err.to_string())?;
                    report.input("cube", join_edges(q.edges()));
                    let closed = q.zero_set();
                    let exact = zero_set(&q.point_set()).map_err(|err| err.to_string())?;
                    let matches = closed == exact;
                    let discrepancy = q.zero_set_discrepancy();
                    if !discrepancy.is_empty() {
                        report.erratum_flags.push(format!(
                            "origin-only-exclusion zero-set formula overshoots the exact zero set at: {discrepancy}"
                        ));
                    }
                    report.count("zero_count", exact.len());
                    report.flag("closed_form_matches_exact", matches);
                    report.witness_count = Some(exact.len());
                    report.witnesses = Some(exact.iter().map(|x| x.to_string()).collect());
                    report.verdict = matches;
                }
                (None, Some(set)) => {
                    let (e, notes) = parse_set(set, &g)?;
                    report.input("set", &e);
                    let exact = zero_set(&e).map_err(|err| err.to_string())?;
                    report.count("zero_count", exact.len());
                    report.witness_count = Some(exact.len());
                    report.witnesses = Some(exact.iter().map(|x| x.to_string()).collect());
                    report.verdict = true;
                    report.notes = notes;
                }
                _ => return Err("zero-set needs exactly one of --cube or --set".into()),
            }
            Ok(report)
        }
        Command::VerifyTheorem {
            group,
            cube,
            candidate,
        } => {
            let g = parse_group(group)?;
            guard(g.order(), CHECK_GUARD, "check", force)?;
            let q = Cube::new(&g, &parse_edges(cube)?).map_err(|err| err.to_string())?;
            let (lam, notes) = parse_set(candidate, &g)?;
            let pair = verify_theorem_pair(&q, &lam).map_err(|err| err.to_string())?;
            let mut report = Report::new("verify-theorem");
            report
                .input("group", &g)
                .input("cube", join_edges(q.edges()))
                .input("candidate", &lam);
            report
                .flag("tiling", pair.tiling)
                .flag("spectrum_of_dual", pair.spectrum_of_dual)
                .flag("equivalent", pair.equivalent());
            report.verdict = pair.equivalent();
            report.notes = notes;
            Ok(report)
        }
        Command::VerifyCorollary {
            group,
            steps,
            counts,
            candidate,
        } => {
            let g = parse_group(group)?;
            guard(g.order(), ENUM_GUARD, "enumeration", force)?;
            let d = DilatedCube::new(&g, &parse_edges(steps)?, &parse_edges(counts)?)
                .map_err(|err| err.to_string())?;
            let (lam, notes) = parse_set(candidate, &g)?;
            let check = corollary_check(&d, &lam).map_err(|err| err.to_string())?;
            let mut report = Report::new("verify-corollary");
            report
                .input("group", &g)
                .input("steps", join_edges(d.steps()))
                .input("counts", join_edges(d.counts()))
                .input("candidate", &lam);
            report
                .flag("criterion", check.criterion)
                .flag("spectral", check.spectral)
                .flag("tiles", check.tiles)
                .flag("candidate_is_spectrum", check.candidate_is_spectrum)
                .flag("equivalent", check.equivalent());
            match check.restricted_tiles {
                Some(v) => report.flag("restricted_tiles", v),
                None => report.text("restricted_tiles", "undefined"),
            };
            match check.restriction_injective {
                Some(v) => report.flag("restriction_injective", v),
                None => report.text("restriction_injective", "not-evaluated"),
            };
            report
                .text("reduced_group", &check.reduced_group)
                .text("reduced_cube", join_edges(check.reduced_cube.edges()))
                .text("restricted_candidate", &check.restricted_candidate);
            report.verdict = check.equivalent();
            report.notes = notes;
            Ok(report)
        }
        Command::Sweep { group, up_to } => {
            let groups: Vec<Group> = match (group, up_to) {
                (Some(text), None) => vec![parse_group(text)?],
                (None, Some(text)) => {
                    let bounds = parse_edges(text)?;
                    if bounds.iter().any(|&b| b == 0) {
                        return Err("sweep bounds must be positive".into());
                    }
                    family_up_to(&bounds)?
                }
                _ => return Err("sweep needs exactly one of --group or --up-to".into()),
            };
            let max_order = groups.iter().map(Group::order).max().unwrap_or(1);
            guard(max_order, ENUM_GUARD, "enumeration", force)?;

            let cubes: Vec<Cube> = groups
                .iter()
                .flat_map(|g| {
                    all_cubes(g)
                        .into_iter()
                        .map(move |edges| Cube::new(g, &edges).expect("valid edges"))
                })
                .collect();

            use rayon::prelude::*;
            let entries: Vec<SweepEntry> = cubes
                .par_iter()
                .map(|q| {
                    let sweep = exhaustive_theorem_check(q).expect("nonempty cube");
                    SweepEntry {
                        group: q.group().to_string(),
                        cube: join_edges(q.edges()),
                        divisibility: sweep.divisibility,
                        tiling_complements: sweep.tiling_complements.len(),
                        spectra: sweep.spectra.len(),
                        agrees: sweep.agrees,
                    }
                })
                .collect();

            let failures = entries.iter().filter(|e| !e.agrees).count();
            let mut report = Report::new("sweep");
            match (group, up_to) {
                (Some(_), _) => report.input("group", &groups[0]),
                (_, Some(text)) => report.input("up_to", text.trim()),
                _ => unreachable!(),
            };
            report
                .count("groups", groups.len())
                .count("cubes_checked", entries.len())
                .count("failures", failures);
            report.verdict = failures == 0;
            report.entries = Some(entries);
            Ok(report)
        }
    }
}

fn join_edges(edges: &[u64]) -> String {
    edges
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

/// All groups with the same number of factors as `bounds` and each modulus in
/// `1..=bounds[j]`, in lexicographic order.
fn family_up_to(bounds: &[u64]) -> Result<Vec<Group>, String> {
    let mut groups = Vec::new();
    let mut moduli: Vec<u64> = vec![1; bounds.len()];
    loop {
        groups.push(Group::new(&moduli).map_err(|e| e.to_string())?);
        let mut j = bounds.len();
        loop {
            if j == 0 {
                return Ok(groups);
            }
            j -= 1;
            moduli[j] += 1;
            if moduli[j] <= bounds[j] {
                break;
            }
            moduli[j] = 1;
        }
    }
}

/// Every edge vector of a group, in lexicographic order.
fn all_cubes(group: &Group) -> Vec<Vec<u64>> {
    let mut cubes = Vec::new();
    let mut edges: Vec<u64> = vec![1; group.factor_count()];
    loop {
        cubes.push(edges.clone());
        let mut j = edges.len();
        loop {
            if j == 0 {
                return cubes;
            }
            j -= 1;
            edges[j] += 1;
            if edges[j] <= group.moduli()[j] {
                break;
            }
            edges[j] = 1;
        }
    }
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let start = Instant::now();
    let result = pool.install(|| execute(cli));
    match result {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()),
            }
            if report.verdict {
                0
            } else {
                1
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_grammar_accepts_both_separators() {
        assert_eq!(parse_group("4x2").unwrap().moduli(), &[4, 2]);
        assert_eq!(parse_group("4,2").unwrap().moduli(), &[4, 2]);
        assert_eq!(parse_group("6").unwrap().moduli(), &[6]);
    }

    #[test]
    fn group_grammar_names_bad_tokens() {
        let err = parse_group("4xq").unwrap_err();
        assert!(err.contains("\"q\""), "{err}");
        assert!(parse_group("0").unwrap_err().contains("positive"));
    }

    #[test]
    fn set_grammar_parses_tuples() {
        let g = parse_group("4x2").unwrap();
        let (s, notes) = parse_set("0,0;1,0", &g).unwrap();
        assert_eq!(s.len(), 2);
        assert!(notes.is_empty());

        let z6 = parse_group("6").unwrap();
        let (s, _) = parse_set("0;2;4", &z6).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn set_grammar_names_bad_tokens() {
        let z6 = parse_group("6").unwrap();
        let err = parse_set("0;a", &z6).unwrap_err();
        assert!(err.contains("\"a\""), "{err}");
    }

    #[test]
    fn set_grammar_rejects_wrong_arity() {
        let g = parse_group("4x2").unwrap();
        let err = parse_set("0,0;1", &g).unwrap_err();
        assert!(err.contains("expected 2 coordinates"), "{err}");
    }

    #[test]
    fn duplicates_collapse_with_a_note() {
        let z6 = parse_group("6").unwrap();
        let (s, notes) = parse_set("0;6;1", &z6).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(notes, vec!["duplicate point collapsed: 0"]);
    }

    #[test]
    fn set_round_trip_through_display() {
        let g = parse_group("4x2").unwrap();
        let (s, _) = parse_set("3,1;0,0;2,1", &g).unwrap();
        let (back, _) = parse_set(&s.to_string(), &g).unwrap();
        assert_eq!(s, back);
    }

    #[test]
    fn family_enumeration_is_lexicographic() {
        let fam = family_up_to(&[2, 2]).unwrap();
        let moduli: Vec<Vec<u64>> = fam.iter().map(|g| g.moduli().to_vec()).collect();
        assert_eq!(
            moduli,
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }
}
