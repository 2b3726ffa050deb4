//! `birack`: validate, classify, quotient and exhaustively verify
//! finite biracks and set-theoretic Yang-Baxter solutions.
//!
//! Exit codes: 0 success (property true / verification clean), 1 the
//! queried property is false, the input fails validation, or a
//! verification suite found a counterexample, 2 usage or input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use biracks::group::{center, nilpotency_class, orbits};
use biracks::retract::{tower, RetractKind};
use biracks::theorems::{
    survey_nondistributive, verify_full_nilpotency, verify_left_nilpotency, verify_rack_nilpotency,
    Counterexample, TheoremReport, Verdict, DEFAULT_TUPLE_BUDGET,
};
use biracks::{census, construct, CensusEntry, PermGroup, DEFAULT_GROUP_CAP};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

mod format;
mod groupname;

use format::{birack_json, load_input, report_json, rows, LoadError};

#[derive(Parser)]
#[command(
    name = "birack",
    about = "Finite biracks: validation, invariants, retracts and exhaustive verification",
    after_help = "Set BIRACK_GROUP_CAP to override the group-closure element cap (default 20160)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a birack (or solution) file and print its classification.
    Check { file: PathBuf },
    /// Print the full property report of a valid input as JSON.
    Props { file: PathBuf },
    /// Print the retract tower, or the birack after a fixed number of steps.
    Retract {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Emit the birack after this many retract steps instead of the tower.
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Print the multipermutation level (exit 1 if none).
    Mpl { file: PathBuf },
    /// Print orders, nilpotency classes, orbits and centers of the
    /// translation groups.
    Groups { file: PathBuf },
    /// Print the Wada switch of a catalog group as a birack file.
    Wada {
        /// Group name: Z<n>, E<2^k>, D<2m>, Q8, products with `x` (Z4xZ2).
        #[arg(long)]
        group: String,
    },
    /// Enumerate all biracks (n ≤ 3) or all distributive biracks (n ≤ 4).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        distributive: bool,
        /// Write each entry as a birack file into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Collapse entries equal up to relabeling of the carrier.
        #[arg(long)]
        dedup: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest carrier size to cover (suite-specific default and cap).
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Right,
    Full,
}

impl From<KindArg> for RetractKind {
    fn from(k: KindArg) -> RetractKind {
        match k {
            KindArg::Left => RetractKind::Left,
            KindArg::Right => RetractKind::Right,
            KindArg::Full => RetractKind::Full,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Left distributive: tower/reductivity/permutationality/LMlt class.
    LdNilp,
    /// Distributive: full tower and the whole multiplication group.
    Main,
    /// Left racks: reductivity vs LMlt class.
    Rack,
    /// Validation vs braid relation on all candidate table pairs.
    Bridge,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = group_cap();
    let code = match cli.command {
        Command::Check { file } => cmd_check(&file, cap),
        Command::Props { file } => cmd_props(&file, cap),
        Command::Retract { file, kind, steps } => cmd_retract(&file, kind.into(), steps),
        Command::Mpl { file } => cmd_mpl(&file),
        Command::Groups { file } => cmd_groups(&file, cap),
        Command::Wada { group } => cmd_wada(&group),
        Command::Enumerate {
            n,
            distributive,
            out,
            dedup,
        } => cmd_enumerate(n, distributive, out.as_deref(), dedup),
        Command::Verify { suite, n } => cmd_verify(suite, n),
    };
    ExitCode::from(code)
}

fn group_cap() -> usize {
    match std::env::var("BIRACK_GROUP_CAP") {
        Ok(s) => s.parse().unwrap_or_else(|_| {
            eprintln!("ignoring unparsable BIRACK_GROUP_CAP value `{s}`");
            DEFAULT_GROUP_CAP
        }),
        Err(_) => DEFAULT_GROUP_CAP,
    }
}

fn cmd_check(file: &Path, cap: usize) -> u8 {
    let input = match load_input(file) {
        Ok(input) => input,
        Err(LoadError::Io(msg)) => {
            eprintln!("{msg}");
            return 2;
        }
        Err(LoadError::Invalid(msg)) => {
            emit(json!({ "valid": false, "error": msg }));
            return 1;
        }
    };
    match input.birack.classify_capped(cap) {
        Ok(report) => {
            let mut out = json!({ "valid": true, "n": input.birack.n() });
            merge(&mut out, report_json(&report));
            emit(&out);
            0
        }
        Err(e) => {
            eprintln!("classification failed: {e}");
            2
        }
    }
}

fn cmd_props(file: &Path, cap: usize) -> u8 {
    let input = match load_input(file) {
        Ok(input) => input,
        Err(LoadError::Io(msg)) => {
            eprintln!("{msg}");
            return 2;
        }
        Err(LoadError::Invalid(msg)) => {
            emit(json!({ "valid": false, "error": msg }));
            return 1;
        }
    };
    match input.birack.classify_capped(cap) {
        Ok(report) => {
            let mut out = report_json(&report);
            if let Some(solution) = &input.solution {
                merge(
                    &mut out,
                    json!({
                        "all_sigma_identity": solution.all_sigma_identity(),
                        "all_tau_identity": solution.all_tau_identity(),
                        "derived": solution.is_derived(),
                    }),
                );
            }
            emit(&out);
            0
        }
        Err(e) => {
            eprintln!("classification failed: {e}");
            2
        }
    }
}

fn cmd_retract(file: &Path, kind: RetractKind, steps: Option<usize>) -> u8 {
    let input = match load_input(file) {
        Ok(input) => input,
        Err(LoadError::Io(msg)) => {
            eprintln!("{msg}");
            return 2;
        }
        Err(LoadError::Invalid(msg)) => {
            eprintln!("{msg}");
            return 1;
        }
    };
    let tw = match tower(&input.birack, kind) {
        Ok(tw) => tw,
        Err(e) => {
            eprintln!("{e}");
            return 1;
        }
    };
    match steps {
        Some(k) => {
            // Beyond collapse or stabilization the retract repeats.
            let stage = k.min(tw.stages.len() - 1);
            emit(birack_json(&tw.stages[stage]));
        }
        None => {
            let kind = match kind {
                RetractKind::Left => "left",
                RetractKind::Right => "right",
                RetractKind::Full => "full",
            };
            emit(json!({ "kind": kind, "sizes": tw.sizes(), "level": tw.level }));
        }
    }
    0
}

fn cmd_mpl(file: &Path) -> u8 {
    let input = match load_input(file) {
        Ok(input) => input,
        Err(LoadError::Io(msg)) => {
            eprintln!("{msg}");
            return 2;
        }
        Err(LoadError::Invalid(msg)) => {
            eprintln!("{msg}");
            return 1;
        }
    };
    match biracks::retract::multipermutation_level(&input.birack) {
        Ok(Some(level)) => {
            emit(level);
            0
        }
        Ok(None) => {
            emit("none");
            1
        }
        Err(e) => {
            eprintln!("{e}");
            1
        }
    }
}

fn cmd_groups(file: &Path, cap: usize) -> u8 {
    let input = match load_input(file) {
        Ok(input) => input,
        Err(LoadError::Io(msg)) => {
            eprintln!("{msg}");
            return 2;
        }
        Err(LoadError::Invalid(msg)) => {
            eprintln!("{msg}");
            return 1;
        }
    };
    let b = &input.birack;
    let describe = |g: &PermGroup| {
        json!({
            "order": g.order(),
            "abelian": g.is_abelian(),
            "nilpotency_class": nilpotency_class(g),
            "orbits": orbits(g),
            "center_order": center(g).order(),
        })
    };
    let groups = [
        ("lmlt", b.lmlt_capped(cap)),
        ("rmlt", b.rmlt_capped(cap)),
        ("mlt", b.mlt_capped(cap)),
    ];
    let mut out = json!({ "n": b.n() });
    for (name, result) in groups {
        match result {
            Ok(g) => merge(&mut out, json!({ name: describe(&g) })),
            Err(e) => {
                eprintln!("{name}: {e}");
                return 2;
            }
        }
    }
    emit(&out);
    0
}

fn cmd_wada(name: &str) -> u8 {
    match groupname::parse_group(name) {
        Ok(group) => {
            emit(birack_json(&construct::wada(&group)));
            0
        }
        Err(msg) => {
            eprintln!("{msg}");
            2
        }
    }
}

fn cmd_enumerate(n: usize, distributive: bool, out: Option<&Path>, dedup: bool) -> u8 {
    let entries = if distributive {
        census::enumerate_distributive(n)
    } else {
        census::enumerate_biracks(n)
    };
    let mut entries = match entries {
        Ok(entries) => entries,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    if dedup {
        let mut seen = std::collections::BTreeSet::new();
        entries.retain(|e| {
            let canon = e.birack.canonical_form();
            seen.insert((canon.circ_table().to_vec(), canon.bullet_table().to_vec()))
        });
    }
    match out {
        Some(dir) => {
            if let Err(e) = std::fs::create_dir_all(dir) {
                eprintln!("cannot create {}: {e}", dir.display());
                return 2;
            }
            for (i, entry) in entries.iter().enumerate() {
                let path = dir.join(format!("birack_{n}_{i:05}.json"));
                let payload = format!("{}\n", birack_json(&entry.birack));
                if let Err(e) = std::fs::write(&path, payload) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return 2;
                }
            }
            emit(json!({
                "n": n,
                "count": entries.len(),
                "distributive_only": distributive,
                "dedup": dedup,
                "out": dir.display().to_string(),
            }));
        }
        None => {
            for (i, entry) in entries.iter().enumerate() {
                let mut line = json!({ "index": i, "mpl": entry.mpl });
                merge(&mut line, birack_json(&entry.birack));
                merge(&mut line, report_json(&entry.report));
                emit(&line);
            }
        }
    }
    0
}

fn counterexample_json(suite: &str, n: usize, c: &Counterexample) -> serde_json::Value {
    json!({
        "suite": suite,
        "n": n,
        "counterexample": {
            "k": c.k,
            "circ": rows(&c.circ, c.n),
            "bullet": rows(&c.bullet, c.n),
            "retract_collapsed": c.row.retract_collapsed,
            "reductive": c.row.reductive,
            "permutational": c.row.permutational,
            "nilpotent": c.row.nilpotent,
        },
    })
}

// Prints any counterexample and counts it; the suites are expected to
// stay clean, so every hit is surfaced rather than aborting early.
fn tally(suite: &str, n: usize, report: &TheoremReport, bad: &mut usize) {
    if let Verdict::Counterexample(c) = &report.verdict {
        emit(counterexample_json(suite, n, c));
        *bad += 1;
    }
}

fn cmd_verify(suite: SuiteArg, n: Option<usize>) -> u8 {
    match suite {
        SuiteArg::LdNilp => verify_ld_nilp(n.unwrap_or(3)),
        SuiteArg::Main => verify_main(n.unwrap_or(3)),
        SuiteArg::Rack => verify_rack(n.unwrap_or(4)),
        SuiteArg::Bridge => verify_bridge(n.unwrap_or(3)),
    }
}

fn census_up_to(n_max: usize) -> Result<Vec<(usize, Vec<CensusEntry>)>, u8> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        match census::enumerate_biracks(n) {
            Ok(entries) => out.push((n, entries)),
            Err(e) => {
                eprintln!("{e}");
                return Err(2);
            }
        }
    }
    Ok(out)
}

fn verify_ld_nilp(n_max: usize) -> u8 {
    let censuses = match census_up_to(n_max) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let mut bad = 0usize;
    for (n, entries) in censuses {
        let mut instances = 0usize;
        for entry in entries.iter().filter(|e| e.report.left_distributive) {
            let label = format!("census n={n}");
            let report =
                match verify_left_nilpotency(&entry.birack, &label, 6, DEFAULT_TUPLE_BUDGET) {
                    Ok(r) => r,
                    Err(e) => {
                        eprintln!("{e}");
                        return 2;
                    }
                };
            tally("ld-nilp", n, &report, &mut bad);
            instances += 1;
        }
        emit(json!({ "suite": "ld-nilp", "n": n, "instances": instances, "counterexamples": bad }));
    }
    u8::from(bad > 0)
}

fn verify_main(n_max: usize) -> u8 {
    if n_max > census::MAX_DISTRIBUTIVE_CENSUS {
        eprintln!(
            "suite `main` covers n ≤ {}",
            census::MAX_DISTRIBUTIVE_CENSUS
        );
        return 2;
    }
    let censuses = match census_up_to(n_max.min(census::MAX_FULL_CENSUS)) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let mut bad = 0usize;
    let mut pools: Vec<(usize, Vec<CensusEntry>, bool)> = censuses
        .into_iter()
        .map(|(n, entries)| (n, entries, true))
        .collect();
    if n_max >= 4 {
        match census::enumerate_distributive(4) {
            Ok(entries) => pools.push((4, entries, false)),
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        }
    }
    for (n, entries, is_full_census) in &pools {
        let mut instances = 0usize;
        for entry in entries.iter().filter(|e| e.report.distributive) {
            let label = format!("census n={n}");
            let report =
                match verify_full_nilpotency(&entry.birack, &label, 6, DEFAULT_TUPLE_BUDGET) {
                    Ok(r) => r,
                    Err(e) => {
                        eprintln!("{e}");
                        return 2;
                    }
                };
            tally("main", *n, &report, &mut bad);
            instances += 1;
        }
        let mut line = json!({
            "suite": "main", "n": n, "instances": instances, "counterexamples": bad,
        });
        if *is_full_census {
            // What the census shows for non-distributive entries, where
            // the equivalence is not promised.
            let survey = survey_nondistributive(entries, 6);
            merge(
                &mut line,
                json!({
                    "nondistributive_checked": survey.checked,
                    "nondistributive_mismatches": survey.mismatches.len(),
                }),
            );
        }
        emit(&line);
    }
    u8::from(bad > 0)
}

fn verify_rack(n_max: usize) -> u8 {
    let mut bad = 0usize;
    for n in 1..=n_max {
        let racks = match census::enumerate_left_racks(n) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        };
        let count = racks.len();
        for rack in racks {
            let label = format!("rack n={n}");
            let report = match verify_rack_nilpotency(&rack, &label, 5, DEFAULT_TUPLE_BUDGET) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{e}");
                    return 2;
                }
            };
            tally("rack", n, &report, &mut bad);
        }
        emit(json!({ "suite": "rack", "n": n, "instances": count, "counterexamples": bad }));
    }
    u8::from(bad > 0)
}

fn verify_bridge(n_max: usize) -> u8 {
    let mut total_mismatches = 0usize;
    for n in 1..=n_max {
        let mut pairs = 0usize;
        let mut mismatches = 0usize;
        let walked = census::for_each_table_pair(n, |circ, bullet| {
            pairs += 1;
            let valid = biracks::Birack::validate(n, circ.to_vec(), bullet.to_vec()).is_ok();
            let mut tau = vec![0usize; n * n];
            for x in 0..n {
                for y in 0..n {
                    tau[y * n + x] = bullet[x * n + y];
                }
            }
            let s = biracks::Solution::new(n, circ.to_vec(), tau).expect("tables are square");
            let braid = s.is_nondegenerate() && s.braid_check();
            if valid != braid {
                mismatches += 1;
                emit(json!({
                    "suite": "bridge",
                    "n": n,
                    "mismatch": { "circ": rows(circ, n), "bullet": rows(bullet, n) },
                }));
            }
        });
        if let Err(e) = walked {
            eprintln!("{e}");
            return 2;
        }
        emit(json!({ "suite": "bridge", "n": n, "pairs": pairs, "mismatches": mismatches }));
        total_mismatches += mismatches;
    }
    u8::from(total_mismatches > 0)
}

// Shallow-merges `extra`'s top-level keys into `target`.
fn merge(target: &mut serde_json::Value, extra: serde_json::Value) {
    if let (Some(t), serde_json::Value::Object(e)) = (target.as_object_mut(), extra) {
        t.extend(e);
    }
}

// Writes one output line, exiting quietly if the consumer closed the
// pipe (e.g. `birack enumerate --n 3 | head`).
fn emit(line: impl std::fmt::Display) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}
