//! Relabeling equivalence of Bell expressions: setting permutations,
//! per-setting outcome flips, and exchange of parties with equal setting
//! counts. Canonical forms make equivalence classes countable.
//!
//! The canonical form is the lexicographically smallest flattened tensor
//! over the full relabeling orbit. It is found by depth-first search over
//! (party assignment, then slice order and signs per party) with best-prefix
//! pruning against the incumbent; a node budget turns pathological searches
//! into a reported error instead of a wrong answer.

use crate::error::{Error, Result};
use crate::scenario::Scenario;
use crate::tensor::BellTensor;
use rand::seq::SliceRandom;
use rand::Rng;
use sha2::{Digest, Sha256};

/// Default node budget for the canonical search.
pub const NODE_BUDGET: u64 = 10_000_000;

/// One relabeling: a party permutation (legal only between parties with
/// equal setting counts), a setting permutation per party, and a sign flip
/// per setting per party.
///
/// Acting on a tensor: new entry `(x, y, z)` is
/// `s0[x] s1[y] s2[z] * t[..]` where new party `p` reads old party
/// `party_perm[p]` at old setting `setting_perms[p][..]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelabelingElement {
    party_perm: [usize; 3],
    setting_perms: [Vec<usize>; 3],
    flips: [Vec<bool>; 3],
}

impl RelabelingElement {
    pub fn new(
        scenario: Scenario,
        party_perm: [usize; 3],
        setting_perms: [Vec<usize>; 3],
        flips: [Vec<bool>; 3],
    ) -> Result<Self> {
        let m = scenario.settings();
        let mut seen = [false; 3];
        for &p in &party_perm {
            if p > 2 || seen[p] {
                return Err(Error::BadRelabeling("party permutation not a bijection".into()));
            }
            seen[p] = true;
        }
        for p in 0..3 {
            if m[party_perm[p]] != m[p] {
                return Err(Error::IllegalPartyPermutation);
            }
            let perm = &setting_perms[p];
            if perm.len() != m[p] || flips[p].len() != m[p] {
                return Err(Error::BadRelabeling("setting permutation length".into()));
            }
            let mut seen = vec![false; m[p]];
            for &x in perm {
                if x >= m[p] || seen[x] {
                    return Err(Error::BadRelabeling("setting permutation not a bijection".into()));
                }
                seen[x] = true;
            }
        }
        Ok(Self {
            party_perm,
            setting_perms,
            flips,
        })
    }

    pub fn identity(scenario: Scenario) -> Self {
        let m = scenario.settings();
        Self {
            party_perm: [0, 1, 2],
            setting_perms: std::array::from_fn(|p| (0..m[p]).collect()),
            flips: std::array::from_fn(|p| vec![false; m[p]]),
        }
    }

    /// Uniformly random element; party permutation drawn from the legal ones.
    pub fn random<R: Rng + ?Sized>(scenario: Scenario, rng: &mut R) -> Self {
        let m = scenario.settings();
        let legal: Vec<[usize; 3]> = party_permutations(scenario);
        let party_perm = legal[rng.random_range(0..legal.len())];
        let setting_perms = std::array::from_fn(|p| {
            let mut perm: Vec<usize> = (0..m[p]).collect();
            perm.shuffle(rng);
            perm
        });
        let flips = std::array::from_fn(|p| (0..m[p]).map(|_| rng.random()).collect());
        Self {
            party_perm,
            setting_perms,
            flips,
        }
    }

    /// The element undoing this one.
    pub fn inverse(&self) -> Self {
        let mut party_perm = [0usize; 3];
        for p in 0..3 {
            party_perm[self.party_perm[p]] = p;
        }
        let mut setting_perms: [Vec<usize>; 3] = Default::default();
        let mut flips: [Vec<bool>; 3] = Default::default();
        for q in 0..3 {
            let p = party_perm[q]; // the slot of the forward element feeding q
            let m = self.setting_perms[p].len();
            let mut inv_perm = vec![0usize; m];
            for (x, &src) in self.setting_perms[p].iter().enumerate() {
                inv_perm[src] = x;
            }
            let inv_flips = (0..m).map(|y| self.flips[p][inv_perm[y]]).collect();
            setting_perms[q] = inv_perm;
            flips[q] = inv_flips;
        }
        Self {
            party_perm,
            setting_perms,
            flips,
        }
    }
}

/// Legal party permutations: those preserving the setting-count triple.
fn party_permutations(scenario: Scenario) -> Vec<[usize; 3]> {
    let m = scenario.settings();
    const ALL: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    ALL.iter()
        .filter(|perm| (0..3).all(|p| m[perm[p]] == m[p]))
        .copied()
        .collect()
}

/// Applies a relabeling to a tensor.
pub fn apply(e: &RelabelingElement, t: &BellTensor) -> Result<BellTensor> {
    let s = t.scenario();
    let m = s.settings();
    for p in 0..3 {
        if m[e.party_perm[p]] != m[p] || e.setting_perms[p].len() != m[p] {
            return Err(Error::IllegalPartyPermutation);
        }
    }
    let mut coeffs = vec![0i64; s.dim()];
    let sign = |p: usize, x: usize| if e.flips[p][x] { -1i64 } else { 1 };
    for x in 0..m[0] {
        for y in 0..m[1] {
            for z in 0..m[2] {
                let mut old = [0usize; 3];
                old[e.party_perm[0]] = e.setting_perms[0][x];
                old[e.party_perm[1]] = e.setting_perms[1][y];
                old[e.party_perm[2]] = e.setting_perms[2][z];
                let v = *t.get(old[0], old[1], old[2]);
                coeffs[s.flat_index(x, y, z)] = sign(0, x) * sign(1, y) * sign(2, z) * v;
            }
        }
    }
    BellTensor::new(s, coeffs)
}

/// Canonical form of a tensor under the relabeling group.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// Lexicographically smallest tensor in the orbit.
    pub tensor: BellTensor,
    /// Hex SHA-256 of the canonical tensor; equal exactly for equivalent
    /// tensors of the same scenario.
    pub digest: String,
    /// Setting counts after dropping all-zero slices per party; a droppable
    /// slice marks an inequality that lives in a smaller scenario.
    pub effective_settings: [usize; 3],
    /// Search nodes expanded.
    pub nodes: u64,
}

/// Setting counts remaining after all-zero slices of each party are removed.
pub fn effective_scenario(t: &BellTensor) -> [usize; 3] {
    let s = t.scenario();
    let m = s.settings();
    let mut eff = [0usize; 3];
    for p in 0..3 {
        for x in 0..m[p] {
            let mut nonzero = false;
            for u in 0..m[(p + 1) % 3] {
                for w in 0..m[(p + 2) % 3] {
                    let mut idx = [0usize; 3];
                    idx[p] = x;
                    idx[(p + 1) % 3] = u;
                    idx[(p + 2) % 3] = w;
                    if *t.get(idx[0], idx[1], idx[2]) != 0 {
                        nonzero = true;
                    }
                }
            }
            if nonzero {
                eff[p] += 1;
            }
        }
    }
    eff
}

/// Canonicalizes with the default node budget.
pub fn canonicalize(t: &BellTensor) -> Result<Canonical> {
    canonicalize_with_budget(t, NODE_BUDGET)
}

/// Canonicalizes with an explicit node budget; exceeding it reports
/// [`Error::CanonBudget`] rather than returning a possibly wrong form.
pub fn canonicalize_with_budget(t: &BellTensor, budget: u64) -> Result<Canonical> {
    let s = t.scenario();
    let mut search = CanonSearch {
        scenario: s,
        budget,
        nodes: 0,
        best: None,
    };
    for perm in party_permutations(s) {
        // permuted view: axes reordered so the search only handles
        // per-party orders and signs
        let view = permute_parties(t, perm);
        search.run(&view)?;
    }
    let coeffs = search.best.expect("orbit is nonempty");
    let tensor = BellTensor::new(s, coeffs)?;
    let digest = digest_tensor(&tensor);
    Ok(Canonical {
        effective_settings: effective_scenario(&tensor),
        digest,
        tensor,
        nodes: search.nodes,
    })
}

/// Convenience wrapper returning only the digest.
pub fn canonical_digest(t: &BellTensor) -> Result<String> {
    Ok(canonicalize(t)?.digest)
}

fn digest_tensor(t: &BellTensor) -> String {
    let mut h = Sha256::new();
    h.update(t.scenario().to_string().as_bytes());
    for &c in t.coeffs() {
        h.update(b"|");
        h.update(c.to_le_bytes());
    }
    hex::encode(h.finalize())
}

fn permute_parties(t: &BellTensor, perm: [usize; 3]) -> Vec<i64> {
    let s = t.scenario();
    let m = s.settings();
    let mut out = vec![0i64; s.dim()];
    for x in 0..m[0] {
        for y in 0..m[1] {
            for z in 0..m[2] {
                let mut old = [0usize; 3];
                old[perm[0]] = x;
                old[perm[1]] = y;
                old[perm[2]] = z;
                out[s.flat_index(x, y, z)] = *t.get(old[0], old[1], old[2]);
            }
        }
    }
    out
}

struct CanonSearch {
    scenario: Scenario,
    budget: u64,
    nodes: u64,
    best: Option<Vec<i64>>,
}

/// Per-branch assignment state for one party ordering.
struct Assign<'a> {
    view: &'a [i64],
    m: [usize; 3],
    // chosen (source slice, negate) per new position
    a: Vec<(usize, bool)>,
    b: Vec<(usize, bool)>,
    c: Vec<(usize, bool)>,
    used_a: Vec<bool>,
    used_b: Vec<bool>,
    used_c: Vec<bool>,
    out: Vec<i64>, // candidate flattened tensor, filled as determined
}

impl CanonSearch {
    fn run(&mut self, view: &[i64]) -> Result<()> {
        let m = self.scenario.settings();
        let mut st = Assign {
            view,
            m,
            a: Vec::with_capacity(m[0]),
            b: Vec::with_capacity(m[1]),
            c: Vec::with_capacity(m[2]),
            used_a: vec![false; m[0]],
            used_b: vec![false; m[1]],
            used_c: vec![false; m[2]],
            out: vec![0; self.scenario.dim()],
        };
        self.place_a(&mut st, false)?;
        Ok(())
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::CanonBudget(self.budget))
        } else {
            Ok(())
        }
    }

    /// Compares candidate entries against the incumbent at `pos..`.
    /// Returns `None` to prune (greater), otherwise whether the prefix is
    /// now strictly less.
    fn advance(&self, was_lt: bool, pos: usize, entries: &[i64]) -> Option<bool> {
        if was_lt {
            return Some(true);
        }
        match &self.best {
            None => Some(true),
            Some(best) => {
                for (off, &e) in entries.iter().enumerate() {
                    match e.cmp(&best[pos + off]) {
                        std::cmp::Ordering::Less => return Some(true),
                        std::cmp::Ordering::Greater => return None,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                Some(false)
            }
        }
    }

    fn place_a(&mut self, st: &mut Assign, was_lt: bool) -> Result<bool> {
        self.tick()?;
        let pos_a = st.a.len();
        if pos_a == st.m[0] {
            // complete assignment
            if was_lt {
                self.best = Some(st.out.clone());
                return Ok(true);
            }
            return Ok(false);
        }
        if pos_a == 0 {
            // first Alice slot: its block contents depend on B and C, so
            // descend immediately into the B assignment
            let mut updated = false;
            let mut lt = was_lt;
            for src in 0..st.m[0] {
                for negate in [false, true] {
                    st.a.push((src, negate));
                    st.used_a[src] = true;
                    if self.place_b(st, lt)? {
                        updated = true;
                        lt = false;
                    }
                    st.used_a[src] = false;
                    st.a.pop();
                }
            }
            return Ok(updated);
        }
        // later Alice slots: B and C are fixed, each candidate determines a
        // whole block of mB*mC entries
        let block = st.m[1] * st.m[2];
        let base = pos_a * block;
        let mut cands: Vec<(Vec<i64>, usize, bool)> = Vec::new();
        for src in 0..st.m[0] {
            if st.used_a[src] {
                continue;
            }
            for negate in [false, true] {
                let entries = block_entries(st, src, negate);
                cands.push((entries, src, negate));
            }
        }
        cands.sort_by(|x, y| x.0.cmp(&y.0));
        let mut updated = false;
        let mut lt = was_lt;
        for (entries, src, negate) in cands {
            let Some(now_lt) = self.advance(lt, base, &entries) else {
                continue;
            };
            st.out[base..base + block].copy_from_slice(&entries);
            st.a.push((src, negate));
            st.used_a[src] = true;
            if self.place_a(st, now_lt)? {
                updated = true;
                lt = false;
            }
            st.used_a[src] = false;
            st.a.pop();
        }
        Ok(updated)
    }

    fn place_b(&mut self, st: &mut Assign, was_lt: bool) -> Result<bool> {
        self.tick()?;
        let pos_b = st.b.len();
        if pos_b == st.m[1] {
            // first Alice block complete; continue with remaining A slots
            return self.place_a(st, was_lt);
        }
        if pos_b == 0 {
            // first Bob slot: row contents depend on C, descend into C
            let mut updated = false;
            let mut lt = was_lt;
            for src in 0..st.m[1] {
                for negate in [false, true] {
                    st.b.push((src, negate));
                    st.used_b[src] = true;
                    if self.place_c(st, lt)? {
                        updated = true;
                        lt = false;
                    }
                    st.used_b[src] = false;
                    st.b.pop();
                }
            }
            return Ok(updated);
        }
        // later Bob slots: C fixed, each candidate determines row (0, pos_b, *)
        let base = pos_b * st.m[2];
        let mut cands: Vec<(Vec<i64>, usize, bool)> = Vec::new();
        for src in 0..st.m[1] {
            if st.used_b[src] {
                continue;
            }
            for negate in [false, true] {
                cands.push((row_entries(st, src, negate), src, negate));
            }
        }
        cands.sort_by(|x, y| x.0.cmp(&y.0));
        let mut updated = false;
        let mut lt = was_lt;
        for (entries, src, negate) in cands {
            let Some(now_lt) = self.advance(lt, base, &entries) else {
                continue;
            };
            st.out[base..base + st.m[2]].copy_from_slice(&entries);
            st.b.push((src, negate));
            st.used_b[src] = true;
            if self.place_b(st, now_lt)? {
                updated = true;
                lt = false;
            }
            st.used_b[src] = false;
            st.b.pop();
        }
        Ok(updated)
    }

    fn place_c(&mut self, st: &mut Assign, was_lt: bool) -> Result<bool> {
        self.tick()?;
        let pos_c = st.c.len();
        if pos_c == st.m[2] {
            // row (0,0,*) complete; continue with remaining B slots
            return self.place_b(st, was_lt);
        }
        let (a_src, a_neg) = st.a[0];
        let (b_src, b_neg) = st.b[0];
        let base = pos_c;
        let mut cands: Vec<(i64, usize, bool)> = Vec::new();
        for src in 0..st.m[2] {
            if st.used_c[src] {
                continue;
            }
            let raw = st.view
                [(a_src * st.m[1] + b_src) * st.m[2] + src];
            for negate in [false, true] {
                let v = entry_sign(a_neg, b_neg, negate) * raw;
                cands.push((v, src, negate));
            }
        }
        cands.sort();
        let mut updated = false;
        let mut lt = was_lt;
        for (v, src, negate) in cands {
            let Some(now_lt) = self.advance(lt, base, &[v]) else {
                continue;
            };
            st.out[base] = v;
            st.c.push((src, negate));
            st.used_c[src] = true;
            if self.place_c(st, now_lt)? {
                updated = true;
                lt = false;
            }
            st.used_c[src] = false;
            st.c.pop();
        }
        Ok(updated)
    }
}

fn entry_sign(a: bool, b: bool, c: bool) -> i64 {
    if a ^ b ^ c {
        -1
    } else {
        1
    }
}

/// Entries of Alice block `src` (with sign) under the current B, C orders.
fn block_entries(st: &Assign, src: usize, negate: bool) -> Vec<i64> {
    let mut out = Vec::with_capacity(st.m[1] * st.m[2]);
    for &(b_src, b_neg) in &st.b {
        for &(c_src, c_neg) in &st.c {
            let raw = st.view[(src * st.m[1] + b_src) * st.m[2] + c_src];
            out.push(entry_sign(negate, b_neg, c_neg) * raw);
        }
    }
    out
}

/// Entries of row `(0, src, *)` (with sign) under the current C order.
fn row_entries(st: &Assign, src: usize, negate: bool) -> Vec<i64> {
    let (a_src, a_neg) = st.a[0];
    let mut out = Vec::with_capacity(st.m[2]);
    for &(c_src, c_neg) in &st.c {
        let raw = st.view[(a_src * st.m[1] + src) * st.m[2] + c_src];
        out.push(entry_sign(a_neg, negate, c_neg) * raw);
    }
    out
}

/// Cheap relabeling invariant: per party, the sorted multiset of per-slice
/// absolute-coefficient multisets, hashed. Equal canonical forms imply equal
/// fingerprints, so unequal fingerprints prove inequivalence.
pub fn fingerprint(t: &BellTensor) -> u64 {
    let s = t.scenario();
    let m = s.settings();
    let mut parties: Vec<(usize, Vec<Vec<i64>>)> = Vec::with_capacity(3);
    for p in 0..3 {
        let mut slices: Vec<Vec<i64>> = Vec::with_capacity(m[p]);
        for x in 0..m[p] {
            let mut abs: Vec<i64> = Vec::new();
            for u in 0..m[(p + 1) % 3] {
                for w in 0..m[(p + 2) % 3] {
                    let mut idx = [0usize; 3];
                    idx[p] = x;
                    idx[(p + 1) % 3] = u;
                    idx[(p + 2) % 3] = w;
                    abs.push(t.get(idx[0], idx[1], idx[2]).abs());
                }
            }
            abs.sort_unstable();
            slices.push(abs);
        }
        slices.sort();
        parties.push((m[p], slices));
    }
    parties.sort();
    let mut h = Sha256::new();
    for (mp, slices) in parties {
        h.update((mp as u64).to_le_bytes());
        for slice in slices {
            h.update(b"/");
            for c in slice {
                h.update(c.to_le_bytes());
            }
        }
    }
    let out = h.finalize();
    u64::from_le_bytes(out[..8].try_into().unwrap())
}
