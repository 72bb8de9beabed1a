//! Command-line front end: mine new inequalities, verify the bundled
//! catalog, and deduplicate record files by canonical form.

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use ghzbell::catalog::{self, CertifyOptions};
use ghzbell::equiv;
use ghzbell::facet::DEFAULT_MAX_DENOMINATOR;
use ghzbell::miner::SearchConfig;
use ghzbell::record::{format_record, read_records, write_records, InequalityRecord};
use ghzbell::search::{run_search, PipelineConfig};
use ghzbell::Scenario;
use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "ghzbell", version, about = "Tight Bell inequalities beating the GHZ visibility threshold 1/2", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine inequalities: random seeds, simplex descent, facet snap, exact
    /// certification. Writes one record per certified facet.
    Search {
        /// Setting counts, e.g. 4x4x4
        #[arg(long)]
        scenario: Scenario,
        /// Number of independent trials
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Master seed; all per-trial randomness derives from it
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// See-saw restarts per certified facet
        #[arg(long, default_value_t = 100)]
        restarts: usize,
        /// Continued-fraction denominator budget for integerization
        #[arg(long, default_value_t = DEFAULT_MAX_DENOMINATOR)]
        max_denominator: i64,
        /// Output record file
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-certify records (default: the bundled catalog) against their
    /// stored bounds and visibilities. Nonzero exit on any failure.
    Verify {
        /// Record file to verify instead of the bundled catalog
        #[arg(long, conflicts_with = "catalog")]
        input: Option<PathBuf>,
        /// Verify the bundled catalog (the default when --input is absent)
        #[arg(long)]
        catalog: bool,
        /// Restrict to one case label, e.g. V_555^S1
        #[arg(long)]
        only: Option<String>,
        /// See-saw restarts
        #[arg(long, default_value_t = 100)]
        restarts: usize,
        /// See-saw seed
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Group records by canonical form; emit one representative per class
    /// annotated with its multiplicity.
    Dedup {
        /// Input record file
        #[arg(long)]
        input: PathBuf,
        /// Output record file (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match Cli::parse().command {
        Command::Search {
            scenario,
            trials,
            seed,
            restarts,
            max_denominator,
            out,
        } => search(scenario, trials, seed, restarts, max_denominator, out),
        Command::Verify {
            input,
            catalog,
            only,
            restarts,
            seed,
        } => verify(input, catalog, only, restarts, seed),
        Command::Dedup { input, out } => dedup(input, out),
    }
}

fn search(
    scenario: Scenario,
    trials: usize,
    seed: u64,
    restarts: usize,
    max_denominator: i64,
    out: PathBuf,
) -> Result<()> {
    let started = Instant::now();
    let mut config = SearchConfig::new(scenario);
    config.trials = trials;
    config.seed = seed;
    let mut cfg = PipelineConfig::new(config);
    cfg.restarts = restarts;
    cfg.max_denominator = max_denominator;

    let outcomes = run_search(&cfg)?;
    let report = catalog::summarize(outcomes);

    let mut records = Vec::new();
    for o in &report.outcomes {
        if let Some(c) = &o.certificate {
            records.push(InequalityRecord {
                tensor: c.tensor.clone(),
                local_bound: c.local_bound,
                quantum_value: c.quantum.value,
                v_crit: c.visibility,
                tight: true,
                canonical_digest: c.digest.clone().unwrap_or_default(),
                provenance: format!("search seed={seed} trial={}", o.trial),
            });
        }
    }
    let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
    write_records(BufWriter::new(file), &records)?;

    let failures = report.outcomes.iter().filter(|o| o.failure.is_some()).count();
    let classes_all = ghzbell::search::class_count(report.outcomes.iter());
    println!("search manifest");
    println!("  scenario:        {scenario}");
    println!("  seed:            {seed}");
    println!("  trials:          {trials}");
    println!("  restarts:        {restarts}");
    println!("  certified:       {}", records.len());
    println!("  trial failures:  {failures}");
    println!(
        "  hits (v < 1/2):  {} ({:.1}%)",
        report.hits,
        100.0 * report.fraction
    );
    match report.best_visibility {
        Some(v) => println!("  best v_crit:     {v:.6}"),
        None => println!("  best v_crit:     n/a"),
    }
    println!("  classes (hits):  {}", report.classes);
    println!("  classes (all):   {classes_all}");
    println!("  output:          {}", out.display());
    println!("  elapsed:         {:.1}s", started.elapsed().as_secs_f64());
    Ok(())
}

fn verify(
    input: Option<PathBuf>,
    _catalog_flag: bool,
    only: Option<String>,
    restarts: usize,
    seed: u64,
) -> Result<()> {
    let opts = CertifyOptions {
        restarts,
        seed,
        ..CertifyOptions::default()
    };
    let mut failures = 0usize;

    match input {
        None => {
            // bundled catalog
            let selected: Vec<_> = catalog::entries()
                .iter()
                .filter(|e| only.as_deref().is_none_or(|l| e.label == l))
                .collect();
            if selected.is_empty() {
                bail!("no catalog entry matches {:?}", only);
            }
            println!(
                "{:<10} {:>8} {:>8} {:>10} {:>10} {:>6} {:>8}",
                "case", "L", "L(pub)", "v", "v(pub)", "tight", "status"
            );
            for e in &selected {
                let r = catalog::certify_entry(e, &opts);
                let status = if r.passed() { "ok" } else { "FAIL" };
                if !r.passed() {
                    failures += 1;
                }
                println!(
                    "{:<10} {:>8} {:>8} {:>10.6} {:>10.6} {:>6} {:>8}",
                    r.label,
                    r.computed_bound,
                    e.local_bound,
                    r.computed_visibility,
                    e.visibility,
                    r.tight_ok,
                    status
                );
                for f in &r.failures {
                    println!("    {f}");
                }
            }
            if only.as_deref() == Some("V_555^S1") {
                match catalog::symmetric_case_study() {
                    Ok(cs) => println!(
                        "case study: max {:.5} at angle {:.5}, visibility {:.6}",
                        cs.best_value, cs.best_angle, cs.visibility
                    ),
                    Err(e) => {
                        failures += 1;
                        println!("case study: FAIL ({e})");
                    }
                }
            }
        }
        Some(path) => {
            let file = File::open(&path).with_context(|| format!("opening {}", path.display()))?;
            let records = read_records(BufReader::new(file))?;
            println!(
                "{:<26} {:>8} {:>8} {:>10} {:>10} {:>8}",
                "provenance", "L", "L(rec)", "v", "v(rec)", "status"
            );
            for (idx, r) in records.iter().enumerate() {
                if let Some(label) = &only {
                    if !r.provenance.contains(label.as_str()) {
                        continue;
                    }
                }
                let entry = catalog::CatalogEntry {
                    label: "record",
                    table: 0,
                    scenario: r.tensor.scenario(),
                    tensor: r.tensor.clone(),
                    local_bound: r.local_bound,
                    visibility: r.v_crit,
                };
                let rep = catalog::certify_entry(&entry, &opts);
                let ok = rep.passed() && rep.computed_bound == r.local_bound;
                if !ok {
                    failures += 1;
                }
                println!(
                    "{:<26} {:>8} {:>8} {:>10.6} {:>10.6} {:>8}",
                    format!("{}#{}", r.provenance.chars().take(20).collect::<String>(), idx + 1),
                    rep.computed_bound,
                    r.local_bound,
                    rep.computed_visibility,
                    r.v_crit,
                    if ok { "ok" } else { "FAIL" }
                );
                for f in &rep.failures {
                    println!("    {f}");
                }
            }
        }
    }

    if failures > 0 {
        bail!("{failures} record(s) failed verification");
    }
    println!("all records verified");
    Ok(())
}

fn dedup(input: PathBuf, out: Option<PathBuf>) -> Result<()> {
    let file = File::open(&input).with_context(|| format!("opening {}", input.display()))?;
    let records = read_records(BufReader::new(file))?;

    // canonical digests recomputed: stored digests may be absent or stale
    let mut classes: BTreeMap<String, (InequalityRecord, usize)> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    for r in records {
        let digest = equiv::canonical_digest(&r.tensor)?;
        match classes.get_mut(&digest) {
            Some((_, count)) => *count += 1,
            None => {
                order.push(digest.clone());
                classes.insert(digest, (r, 1));
            }
        }
    }

    let mut lines = Vec::new();
    for digest in &order {
        let (mut rep, count) = classes.remove(digest).unwrap();
        rep.canonical_digest = digest.clone();
        rep.provenance = format!("{} multiplicity={count}", rep.provenance);
        lines.push(format_record(&rep)?);
    }
    match out {
        Some(path) => {
            let mut f = BufWriter::new(
                File::create(&path).with_context(|| format!("creating {}", path.display()))?,
            );
            for l in &lines {
                writeln!(f, "{l}")?;
            }
            println!("{} classes -> {}", lines.len(), path.display());
        }
        None => {
            for l in &lines {
                println!("{l}");
            }
        }
    }
    Ok(())
}
