//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line. Run with `cargo test -p ghzbell --test acceptance`
//! (add `-- --nocapture` to see the per-criterion lines).

mod common;

use ghzbell::catalog::{self, CertifyOptions};
use ghzbell::equiv::{self, RelabelingElement};
use ghzbell::facet::find_facet;
use ghzbell::miner::{self, SearchConfig};
use ghzbell::polytope::{check_tightness, enumerate_vertices, local_bound_int};
use ghzbell::quantum::{self, random_profile, seesaw_equatorial, seesaw_general};
use ghzbell::search::{run_search, trial_rng, PipelineConfig, HIT_THRESHOLD};
use ghzbell::Scenario;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn s(a: usize, b: usize, c: usize) -> Scenario {
    Scenario::new(a, b, c).unwrap()
}

#[test]
fn criterion_1_catalog_local_bounds_exact() {
    for e in catalog::entries() {
        let (bound, argmax) = local_bound_int(&e.tensor).unwrap();
        assert_eq!(
            bound, e.local_bound,
            "{}: computed {bound}, published {}",
            e.label, e.local_bound
        );
        assert_eq!(argmax.evaluate_int(&e.tensor), bound, "{}", e.label);
    }
    println!(
        "ACCEPTANCE 1 (catalog local bounds, {} entries, exact): PASS",
        catalog::entries().len()
    );
}

#[test]
fn criterion_2_catalog_tightness() {
    catalog::entries().par_iter().for_each(|e| {
        let r = check_tightness(&e.tensor, e.local_bound).unwrap();
        assert!(
            r.tight,
            "{}: saturation rank {} of {}",
            e.label,
            r.saturation_rank,
            e.scenario.dim()
        );
        assert_eq!(r.saturation_rank, e.scenario.dim(), "{}", e.label);
    });
    println!(
        "ACCEPTANCE 2 (catalog tightness, {} facets, exact rank): PASS",
        catalog::entries().len()
    );
}

#[test]
fn criterion_3_catalog_visibilities() {
    // Mermin reaches one half within 1e-9
    let mermin = catalog::mermin_tensor();
    let cert = seesaw_equatorial(&mermin, 100, 11).unwrap();
    let v = quantum::visibility(2.0, cert.value).unwrap();
    assert!((v - 0.5).abs() < 1e-9, "mermin visibility {v}");

    let reports: Vec<(String, f64, f64)> = catalog::entries()
        .par_iter()
        .map(|e| {
            let cert = seesaw_equatorial(&e.tensor, 100, 2024).unwrap();
            let v = quantum::visibility(e.local_bound as f64, cert.value).unwrap();
            (e.label.to_string(), v, e.visibility)
        })
        .collect();
    for (label, v, published) in &reports {
        assert!(
            (v - published).abs() < 1e-4,
            "{label}: computed {v:.6}, published {published:.6}"
        );
    }
    // spot values named by the release checklist
    for (label, expect) in [
        ("V_555^1", 0.496057),
        ("V_343^1", 0.49967),
        ("V_553^U1", 0.496463),
    ] {
        let (_, v, _) = reports.iter().find(|(l, _, _)| l == label).unwrap();
        assert!((v - expect).abs() < 1e-4, "{label}: {v}");
    }
    println!(
        "ACCEPTANCE 3 (visibilities, {} entries within 1e-4, Mermin 1e-9): PASS",
        reports.len()
    );
}

#[test]
fn criterion_4_symmetric_case_study() {
    let report = catalog::symmetric_case_study().unwrap();
    assert!((report.best_value - 24.1699).abs() < 1e-3);
    assert!((report.best_angle - 3.73842).abs() < 1e-3);
    assert!((report.visibility - 0.496485).abs() < 1e-5);
    assert_eq!(report.local_bound, 12);
    println!(
        "ACCEPTANCE 4 (case study: scan max {:.5} at {:.5}, v {:.6}): PASS",
        report.best_value, report.best_angle, report.visibility
    );
}

fn hit_pipeline(scenario: Scenario, trials: usize, seed: u64) -> ghzbell::catalog::HitRateReport {
    let mut search = SearchConfig::new(scenario);
    search.trials = trials;
    search.seed = seed;
    let cfg = PipelineConfig::new(search);
    let outcomes = run_search(&cfg).unwrap();
    catalog::summarize(outcomes)
}

#[test]
fn criterion_5a_pipeline_two_setting_scenario() {
    let report = hit_pipeline(s(2, 2, 2), 100, 7);
    assert_eq!(report.hits, 0, "no sub-1/2 hit exists below four settings");
    let mermin_digest = equiv::canonical_digest(&catalog::mermin_tensor()).unwrap();
    let mermin_found = report.outcomes.iter().any(|o| {
        o.certificate
            .as_ref()
            .is_some_and(|c| c.digest.as_deref() == Some(mermin_digest.as_str()))
    });
    assert!(mermin_found, "no Mermin-equivalent facet in 100 trials");
    let best = report.best_visibility.unwrap();
    assert!((best - 0.5).abs() < 1e-9, "best visibility {best}");
    println!(
        "ACCEPTANCE 5a (2x2x2: 0 hits, Mermin found, best v {:.9}): PASS",
        best
    );
}

#[test]
fn criterion_5b_pipeline_four_settings_hit_rate() {
    let report = hit_pipeline(s(4, 4, 4), 300, 3);
    assert!(
        report.fraction >= 0.10,
        "hit rate {:.3} below the 10% floor",
        report.fraction
    );
    println!(
        "ACCEPTANCE 5b (4x4x4: {}/{} hits = {:.1}%, {} classes, best v {:.6}): PASS",
        report.hits,
        report.trials,
        100.0 * report.fraction,
        report.classes,
        report.best_visibility.unwrap()
    );
}

#[test]
fn criterion_5c_pipeline_five_settings_hit_rate() {
    let report = hit_pipeline(s(5, 5, 5), 100, 5);
    assert!(
        report.fraction >= 0.30,
        "hit rate {:.3} below the 30% floor",
        report.fraction
    );
    println!(
        "ACCEPTANCE 5c (5x5x5: {}/{} hits = {:.1}%, {} classes, best v {:.6}): PASS",
        report.hits,
        report.trials,
        100.0 * report.fraction,
        report.classes,
        report.best_visibility.unwrap()
    );
}

#[test]
fn criterion_6_facet_lp_soundness() {
    for scenario in [s(2, 2, 2), s(3, 3, 3), s(3, 3, 4)] {
        let vertices = enumerate_vertices(scenario).unwrap();
        (0..200u64).into_par_iter().for_each(|i| {
            let mut rng = trial_rng(0xFACE7 ^ i, i as usize);
            let profile = random_profile(scenario, &mut rng);
            let objective = miner::objective(scenario, &profile).unwrap();
            let direction = miner::seed_tensor(scenario, &profile).unwrap();
            let facet = find_facet(&direction, &vertices)
                .unwrap_or_else(|e| panic!("{scenario} direction {i}: {e}"));
            // independent re-certification on top of find_facet's own
            let recheck = check_tightness(&facet.tensor, facet.local_bound).unwrap();
            assert!(recheck.tight, "{scenario} direction {i} not tight");
            assert_eq!(recheck.saturation_rank, scenario.dim());
            // the facet never has worse critical visibility than the seed
            let q = quantum::seesaw_equatorial_warm(
                &facet.tensor,
                std::slice::from_ref(&profile),
                20,
                i,
            )
            .unwrap();
            let v = quantum::visibility(facet.local_bound as f64, q.value).unwrap();
            assert!(
                v <= objective + 1e-6,
                "{scenario} direction {i}: facet v {v:.9} above seed objective {objective:.9}"
            );
        });
    }
    println!("ACCEPTANCE 6 (facet LP soundness, 200 directions x 3 scenarios): PASS");
}

#[test]
fn criterion_7_equivalence_properties() {
    // canonical invariance under random relabelings
    for label in ["mermin", "V_343^1", "V_444^U1"] {
        let tensor = if label == "mermin" {
            catalog::mermin_tensor()
        } else {
            catalog::entry(label).unwrap().tensor.clone()
        };
        let canon = equiv::canonicalize(&tensor).unwrap();
        let digests: Vec<String> = (0..100u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(0xE0 + i);
                let e = RelabelingElement::random(tensor.scenario(), &mut rng);
                let moved = equiv::apply(&e, &tensor).unwrap();
                equiv::canonicalize(&moved).unwrap().digest
            })
            .collect();
        for d in &digests {
            assert_eq!(*d, canon.digest, "{label}: canonical form not invariant");
        }
        // idempotence
        let again = equiv::canonicalize(&canon.tensor).unwrap();
        assert_eq!(again.tensor, canon.tensor, "{label}: not idempotent");
    }

    // the twelve three-and-four-setting table rows are twelve classes
    let table1: Vec<_> = catalog::entries().iter().filter(|e| e.table == 1).collect();
    assert_eq!(table1.len(), 12);
    let mut digests: Vec<String> = table1
        .par_iter()
        .map(|e| equiv::canonicalize(&e.tensor).unwrap().digest)
        .collect();
    digests.sort();
    digests.dedup();
    assert_eq!(digests.len(), 12, "table rows merged under canonicalization");

    // relabeling preserves the local bound exactly and the see-saw value
    let reference = catalog::entry("V_343^1").unwrap();
    let (l0, _) = local_bound_int(&reference.tensor).unwrap();
    let q0 = seesaw_equatorial(&reference.tensor, 60, 77).unwrap().value;
    let mut rng = ChaCha8Rng::seed_from_u64(0x715);
    for _ in 0..5 {
        let e = RelabelingElement::random(reference.scenario, &mut rng);
        let moved = equiv::apply(&e, &reference.tensor).unwrap();
        let (l1, _) = local_bound_int(&moved).unwrap();
        assert_eq!(l1, l0);
        let q1 = seesaw_equatorial(&moved, 60, 78).unwrap().value;
        assert!((q1 - q0).abs() < 1e-9, "Q drifted: {q0} vs {q1}");
    }
    println!("ACCEPTANCE 7 (equivalence: invariance, idempotence, 12 classes, L/Q preserved): PASS");
}

#[test]
fn criterion_8_oracle_cross_checks() {
    // collapsed local bound against full brute force
    for scenario in [s(2, 2, 2), s(2, 2, 3)] {
        let mut rng = ChaCha8Rng::seed_from_u64(1234);
        for _ in 0..100 {
            let t = common::random_tensor(scenario, 9, &mut rng);
            let (fast, _) = local_bound_int(&t).unwrap();
            let brute = common::brute_force_local_bound(&t);
            assert_eq!(fast, brute, "{scenario}: {:?}", t.coeffs());
        }
    }

    // general-state see-saw agrees with the equatorial one on the catalog
    let disagreements: Vec<String> = catalog::entries()
        .par_iter()
        .filter_map(|e| {
            let eq = seesaw_equatorial(&e.tensor, 100, 2024).unwrap().value;
            let gen = seesaw_general(&e.tensor, 4, 2024).unwrap().value;
            ((gen - eq).abs() >= 1e-6).then(|| format!("{}: eq {eq} vs gen {gen}", e.label))
        })
        .collect();
    assert!(disagreements.is_empty(), "{disagreements:?}");
    println!("ACCEPTANCE 8 (bound oracle x200, general see-saw agreement x36): PASS");
}

#[test]
fn certify_all_entries_end_to_end() {
    // the full certification path used by `ghzbell verify --catalog`
    let reports = catalog::certify_all(&CertifyOptions::default());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    assert!(failed.is_empty(), "{failed:?}");
}
