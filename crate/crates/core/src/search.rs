//! End-to-end mining pipeline: random angles, simplex descent, facet
//! snapping, exact certification and see-saw visibility, with reproducible
//! per-trial randomness and trial-level parallelism.

use crate::equiv;
use crate::error::Result;
use crate::facet::{find_facet_with, DEFAULT_MAX_DENOMINATOR};
use crate::miner::{self, SearchConfig};
use crate::polytope::{enumerate_vertices, CorrelationVertex};
use crate::quantum::{self, QuantumCertificate};
use crate::tensor::BellTensor;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Counting threshold for "visibility below one half". The epsilon absorbs
/// see-saw values that saturate an exact bound from above by a few ulps
/// (e.g. a facet with v exactly 1/2 evaluating to 0.5 - 1e-16).
pub const HIT_THRESHOLD: f64 = 0.5 - 1e-9;

/// Pipeline options on top of the miner configuration.
#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub search: SearchConfig,
    /// See-saw restarts for the certified quantum value.
    pub restarts: usize,
    /// Continued-fraction denominator budget for facet integerization.
    pub max_denominator: i64,
    /// Compute canonical digests of certified facets.
    pub canonicalize: bool,
}

impl PipelineConfig {
    pub fn new(search: SearchConfig) -> Self {
        Self {
            search,
            restarts: 100,
            max_denominator: DEFAULT_MAX_DENOMINATOR,
            canonicalize: true,
        }
    }
}

/// A fully certified facet produced by one trial.
#[derive(Clone, Debug)]
pub struct FacetCertificate {
    pub tensor: BellTensor,
    pub local_bound: i64,
    pub quantum: QuantumCertificate,
    pub visibility: f64,
    pub saturation_rank: usize,
    /// Canonical digest; `None` when canonicalization was disabled or hit
    /// its node budget.
    pub digest: Option<String>,
}

/// Outcome of one pipeline trial.
#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub trial: usize,
    /// Miner objective at the random initial profile.
    pub initial_objective: f64,
    /// Miner objective after the simplex descent.
    pub mined_objective: f64,
    pub certificate: Option<FacetCertificate>,
    /// Why the trial produced no certificate, when it did not.
    pub failure: Option<String>,
}

impl TrialOutcome {
    pub fn is_hit(&self) -> bool {
        self.certificate
            .as_ref()
            .is_some_and(|c| c.visibility < HIT_THRESHOLD)
    }
}

/// Derives the per-trial RNG stream; independent of scheduling order.
pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut x = seed ^ (trial as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    // splitmix finalizer decorrelates neighbouring trial indices
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    ChaCha8Rng::seed_from_u64(x ^ (x >> 31))
}

/// Runs one trial against a shared vertex list.
pub fn run_trial(
    cfg: &PipelineConfig,
    vertices: &[CorrelationVertex],
    trial: usize,
) -> TrialOutcome {
    let s = cfg.search.scenario;
    let mut rng = trial_rng(cfg.search.seed, trial);
    let init = quantum::random_profile(s, &mut rng);

    let mut out = TrialOutcome {
        trial,
        initial_objective: f64::NAN,
        mined_objective: f64::NAN,
        certificate: None,
        failure: None,
    };

    let mut step = || -> Result<FacetCertificate> {
        out.initial_objective = miner::objective(s, &init)?;
        let (best_profile, mined) = miner::nelder_mead(s, &cfg.search, &init)?;
        out.mined_objective = mined;

        let direction = miner::seed_tensor(s, &best_profile)?;
        let facet = find_facet_with(&direction, vertices, cfg.max_denominator)?;

        // warm-start the see-saw with the mined angles so the certified Q is
        // at least the value already exhibited along the ray
        let quantum_cert = quantum::seesaw_equatorial_warm(
            &facet.tensor,
            std::slice::from_ref(&best_profile),
            cfg.restarts,
            cfg.search.seed ^ trial as u64,
        )?;
        let visibility = quantum::visibility(facet.local_bound as f64, quantum_cert.value)?;
        let digest = if cfg.canonicalize {
            match equiv::canonical_digest(&facet.tensor) {
                Ok(d) => Some(d),
                Err(e) => {
                    log::warn!("trial {trial}: canonicalization skipped: {e}");
                    None
                }
            }
        } else {
            None
        };
        Ok(FacetCertificate {
            local_bound: facet.local_bound,
            saturation_rank: facet.tightness.saturation_rank,
            tensor: facet.tensor,
            quantum: quantum_cert,
            visibility,
            digest,
        })
    };

    match step() {
        Ok(cert) => out.certificate = Some(cert),
        Err(e) => {
            log::warn!("trial {trial} failed: {e}");
            out.failure = Some(e.to_string());
        }
    }
    out
}

/// Runs all configured trials in parallel; the returned vector is ordered by
/// trial index, so output is independent of worker count.
pub fn run_search(cfg: &PipelineConfig) -> Result<Vec<TrialOutcome>> {
    let vertices = enumerate_vertices(cfg.search.scenario)?;
    Ok((0..cfg.search.trials)
        .into_par_iter()
        .map(|trial| run_trial(cfg, &vertices, trial))
        .collect())
}

/// Number of distinct canonical digests among the given outcomes' facets;
/// facets without a digest each count as their own class.
pub fn class_count<'a>(outcomes: impl Iterator<Item = &'a TrialOutcome>) -> usize {
    let mut digests = std::collections::HashSet::new();
    let mut unresolved = 0usize;
    for o in outcomes {
        if let Some(c) = &o.certificate {
            match &c.digest {
                Some(d) => {
                    digests.insert(d.clone());
                }
                None => unresolved += 1,
            }
        }
    }
    digests.len() + unresolved
}
