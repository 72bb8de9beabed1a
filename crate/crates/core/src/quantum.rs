//! GHZ-state quantum values: correlation points from equatorial angles,
//! see-saw maximization of Bell expressions, and critical visibilities.
//!
//! For the three-qubit GHZ state measured with equatorial observables the
//! correlator factorizes to `cos(phi_A_i + phi_B_j + phi_C_k)`, so a party's
//! optimal angle update has the closed form `phi = -arg(z)` with `z` a phasor
//! sum over the other two parties. White noise contributes nothing to any
//! full-correlation term under traceless observables, which is why the
//! critical visibility is exactly `L / Q`.

use crate::error::{Error, Result};
use crate::jacobi;
use crate::scenario::Scenario;
use crate::tensor::{AngleProfile, BellTensor, CorrelationPoint};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Per-sweep improvement below which a see-saw run is considered converged.
pub const SEESAW_TOL: f64 = 1e-12;
/// Hard cap on see-saw sweeps per restart.
pub const SEESAW_MAX_SWEEPS: usize = 10_000;

/// Correlation point of the GHZ state under equatorial measurements:
/// entry `(i,j,k) = cos(phi_A_i + phi_B_j + phi_C_k)`.
pub fn ghz_point(s: Scenario, profile: &AngleProfile) -> Result<CorrelationPoint> {
    profile.matches(s)?;
    let [ma, mb, mc] = s.settings();
    let mut values = Vec::with_capacity(s.dim());
    for i in 0..ma {
        for j in 0..mb {
            for k in 0..mc {
                let phi = profile.party(0)[i] + profile.party(1)[j] + profile.party(2)[k];
                values.push(phi.cos());
            }
        }
    }
    CorrelationPoint::new(s, values)
}

/// Bell value of the noisy GHZ state at visibility `v`: the white-noise part
/// has zero correlators, so the value scales linearly as
/// `v * evaluate(t, ghz_point(a))`.
pub fn noisy_value(t: &BellTensor, profile: &AngleProfile, v: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&v) {
        return Err(Error::VisibilityRange(v));
    }
    let p = ghz_point(t.scenario(), profile)?;
    Ok(v * t.evaluate(&p)?)
}

/// Critical visibility `L / Q`.
pub fn visibility(local_bound: f64, quantum: f64) -> Result<f64> {
    if quantum > 0.0 {
        Ok(local_bound / quantum)
    } else {
        Err(Error::NonPositiveQuantum(quantum))
    }
}

/// Best GHZ-equatorial value found for a Bell expression, with the angles
/// attaining it.
#[derive(Clone, Debug)]
pub struct QuantumCertificate {
    pub angles: AngleProfile,
    pub value: f64,
    pub restarts_used: usize,
    pub converged: bool,
}

/// Coordinate-ascent see-saw over equatorial angles from `restarts` random
/// initial profiles. Each party setting updates in closed form; sweeps stop
/// once the Bell value improves by less than [`SEESAW_TOL`]. The returned
/// value is a lower bound on the quantum maximum.
pub fn seesaw_equatorial(t: &BellTensor, restarts: usize, seed: u64) -> Result<QuantumCertificate> {
    seesaw_equatorial_warm(t, &[], restarts, seed)
}

/// Same as [`seesaw_equatorial`] but ascends from the given warm-start
/// profiles before the random restarts.
pub fn seesaw_equatorial_warm(
    t: &BellTensor,
    warm_starts: &[AngleProfile],
    restarts: usize,
    seed: u64,
) -> Result<QuantumCertificate> {
    if restarts == 0 && warm_starts.is_empty() {
        return Err(Error::NoRestarts);
    }
    let s = t.scenario();
    for w in warm_starts {
        w.matches(s)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, AngleProfile, bool)> = None;
    let total = warm_starts.len() + restarts;
    for r in 0..total {
        let init = match warm_starts.get(r) {
            Some(w) => w.clone(),
            None => random_profile(s, &mut rng),
        };
        let (value, angles, converged) = ascend_equatorial(t, init)?;
        if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
            best = Some((value, angles, converged));
        }
    }
    let (_, angles, converged) = best.unwrap();
    // report the value through the public evaluation path
    let value = t.evaluate(&ghz_point(s, &angles)?)?;
    Ok(QuantumCertificate {
        angles,
        value,
        restarts_used: total,
        converged,
    })
}

/// Uniformly random equatorial profile in `[0, 2pi)` per setting.
pub fn random_profile<R: Rng + ?Sized>(s: Scenario, rng: &mut R) -> AngleProfile {
    let [ma, mb, mc] = s.settings();
    let mut draw = |m: usize| (0..m).map(|_| rng.random_range(0.0..TAU)).collect();
    AngleProfile::new(draw(ma), draw(mb), draw(mc)).expect("angles are finite")
}

fn ascend_equatorial(t: &BellTensor, init: AngleProfile) -> Result<(f64, AngleProfile, bool)> {
    let s = t.scenario();
    init.matches(s)?;
    let [ma, mb, mc] = s.settings();
    let coeffs = t.coeffs();
    let mut phi: [Vec<f64>; 3] = [
        init.party(0).to_vec(),
        init.party(1).to_vec(),
        init.party(2).to_vec(),
    ];
    let mut prev = f64::NEG_INFINITY;
    let mut converged = false;
    for _ in 0..SEESAW_MAX_SWEEPS {
        // party update order A, B, C; each setting maximized in closed form
        for party in 0..3 {
            let m = [ma, mb, mc][party];
            for x in 0..m {
                let mut z = Complex64::new(0.0, 0.0);
                for i in 0..ma {
                    if party == 0 && i != x {
                        continue;
                    }
                    for j in 0..mb {
                        if party == 1 && j != x {
                            continue;
                        }
                        for k in 0..mc {
                            if party == 2 && k != x {
                                continue;
                            }
                            let c = coeffs[(i * mb + j) * mc + k];
                            if c == 0 {
                                continue;
                            }
                            let mut angle = 0.0;
                            if party != 0 {
                                angle += phi[0][i];
                            }
                            if party != 1 {
                                angle += phi[1][j];
                            }
                            if party != 2 {
                                angle += phi[2][k];
                            }
                            z += c as f64 * Complex64::from_polar(1.0, angle);
                        }
                    }
                }
                // degenerate phasor: any angle is optimal, keep the old one
                if z.norm() > 1e-15 {
                    phi[party][x] = -z.arg();
                }
            }
        }
        let mut value = 0.0;
        for i in 0..ma {
            for j in 0..mb {
                for k in 0..mc {
                    value += coeffs[(i * mb + j) * mc + k] as f64
                        * (phi[0][i] + phi[1][j] + phi[2][k]).cos();
                }
            }
        }
        if value - prev < SEESAW_TOL {
            prev = prev.max(value);
            converged = true;
            break;
        }
        prev = value;
    }
    let angles = AngleProfile::new(phi[0].clone(), phi[1].clone(), phi[2].clone())?;
    Ok((prev, angles, converged))
}

/// Best value from the general see-saw over an arbitrary pure three-qubit
/// state and arbitrary traceless binary observables.
#[derive(Clone, Debug)]
pub struct GeneralCertificate {
    pub value: f64,
    pub restarts_used: usize,
    pub converged: bool,
}

/// Alternating optimization over a pure three-qubit state and traceless
/// `+/-1`-valued observables (full Bloch vectors, not just equatorial).
///
/// Given the observables, the optimal state is the principal eigenvector of
/// the 8x8 Bell operator; given the state and two parties, each observable
/// update is the sign decomposition of its effective 2x2 operator. The first
/// restart ascends from the GHZ state with the best equatorial angles, the
/// rest start from random states and observables. Serves as the cross-check
/// that GHZ with equatorial measurements already attains the maximum.
pub fn seesaw_general(t: &BellTensor, restarts: usize, seed: u64) -> Result<GeneralCertificate> {
    if restarts == 0 {
        return Err(Error::NoRestarts);
    }
    let s = t.scenario();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut best = f64::NEG_INFINITY;
    let mut any_converged = false;

    if t.is_zero() {
        return Ok(GeneralCertificate {
            value: 0.0,
            restarts_used: restarts,
            converged: true,
        });
    }

    for r in 0..restarts {
        let (mut state, mut bloch) = if r == 0 {
            // warm start: GHZ state with equatorial angles from a short run
            let warm = seesaw_equatorial(t, 8, seed)?;
            let mut state = [Complex64::new(0.0, 0.0); 8];
            state[0] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            state[7] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
            let bloch: [Vec<[f64; 3]>; 3] = std::array::from_fn(|p| {
                warm.angles
                    .party(p)
                    .iter()
                    .map(|&a| [a.cos(), a.sin(), 0.0])
                    .collect()
            });
            (state, bloch)
        } else {
            let mut state = [Complex64::new(0.0, 0.0); 8];
            for x in state.iter_mut() {
                *x = Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            }
            normalize_state(&mut state);
            let bloch: [Vec<[f64; 3]>; 3] = std::array::from_fn(|p| {
                (0..s.settings()[p])
                    .map(|_| random_bloch(&mut rng))
                    .collect()
            });
            (state, bloch)
        };

        let mut prev = f64::NEG_INFINITY;
        let mut converged = false;
        for _ in 0..SEESAW_MAX_SWEEPS {
            for party in 0..3 {
                update_observables(t, &state, &mut bloch, party);
            }
            let op = bell_operator(t, &bloch);
            let (value, ground) = principal_state(&op);
            state = ground;
            if value - prev < SEESAW_TOL {
                prev = prev.max(value);
                converged = true;
                break;
            }
            prev = value;
        }
        any_converged |= converged;
        if prev > best {
            best = prev;
        }
    }
    Ok(GeneralCertificate {
        value: best,
        restarts_used: restarts,
        converged: any_converged,
    })
}

fn random_bloch<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-6 && n <= 1.0 {
            return [v[0] / n, v[1] / n, v[2] / n];
        }
    }
}

fn normalize_state(state: &mut [Complex64; 8]) {
    let n: f64 = state.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if n > 1e-300 {
        for x in state.iter_mut() {
            *x /= n;
        }
    } else {
        state[0] = Complex64::new(1.0, 0.0);
    }
}

/// 2x2 observable `n . sigma` for a unit Bloch vector.
fn obs_matrix(n: &[f64; 3]) -> [Complex64; 4] {
    [
        Complex64::new(n[2], 0.0),
        Complex64::new(n[0], -n[1]),
        Complex64::new(n[0], n[1]),
        Complex64::new(-n[2], 0.0),
    ]
}

/// Dense 8x8 Bell operator `sum_ijk M_ijk A_i (x) B_j (x) C_k`.
fn bell_operator(t: &BellTensor, bloch: &[Vec<[f64; 3]>; 3]) -> Vec<Complex64> {
    let s = t.scenario();
    let [ma, mb, mc] = s.settings();
    let mut op = vec![Complex64::new(0.0, 0.0); 64];
    for i in 0..ma {
        let ai = obs_matrix(&bloch[0][i]);
        for j in 0..mb {
            let bj = obs_matrix(&bloch[1][j]);
            for k in 0..mc {
                let c = t.coeffs()[(i * mb + j) * mc + k];
                if c == 0 {
                    continue;
                }
                let ck = obs_matrix(&bloch[2][k]);
                let w = c as f64;
                for (ra, ca_) in index_pairs() {
                    let fa = ai[ra * 2 + ca_];
                    for (rb, cb) in index_pairs() {
                        let fb = bj[rb * 2 + cb];
                        for (rc, cc) in index_pairs() {
                            let fc = ck[rc * 2 + cc];
                            let row = (ra << 2) | (rb << 1) | rc;
                            let col = (ca_ << 2) | (cb << 1) | cc;
                            op[row * 8 + col] += w * fa * fb * fc;
                        }
                    }
                }
            }
        }
    }
    op
}

fn index_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..2).flat_map(|r| (0..2).map(move |c| (r, c)))
}

/// Principal eigenpair of an 8x8 Hermitian matrix via the 16x16 real
/// symmetric embedding and cyclic Jacobi rotations.
fn principal_state(op: &[Complex64]) -> (f64, [Complex64; 8]) {
    let n = 8;
    let mut emb = vec![0.0; (2 * n) * (2 * n)];
    for r in 0..n {
        for c in 0..n {
            let x = op[r * n + c];
            emb[r * 2 * n + c] = x.re;
            emb[r * 2 * n + (c + n)] = -x.im;
            emb[(r + n) * 2 * n + c] = x.im;
            emb[(r + n) * 2 * n + (c + n)] = x.re;
        }
    }
    let (value, vec) = jacobi::principal_eigenvector(2 * n, &emb);
    let mut state = [Complex64::new(0.0, 0.0); 8];
    for i in 0..n {
        state[i] = Complex64::new(vec[i], vec[i + n]);
    }
    normalize_state(&mut state);
    (value, state)
}

/// Closed-form update of every observable of one party: each becomes the
/// sign decomposition `r . sigma / |r|` of its effective 2x2 operator.
fn update_observables(
    t: &BellTensor,
    state: &[Complex64; 8],
    bloch: &mut [Vec<[f64; 3]>; 3],
    party: usize,
) {
    let s = t.scenario();
    let [ma, mb, mc] = s.settings();
    let m = [ma, mb, mc][party];
    for x in 0..m {
        // effective operator E on the party's qubit:
        // value contribution = Tr(obs . E)
        let mut e = [Complex64::new(0.0, 0.0); 4];
        for i in 0..ma {
            if party == 0 && i != x {
                continue;
            }
            let ai = obs_matrix(&bloch[0][i]);
            for j in 0..mb {
                if party == 1 && j != x {
                    continue;
                }
                let bj = obs_matrix(&bloch[1][j]);
                for k in 0..mc {
                    if party == 2 && k != x {
                        continue;
                    }
                    let c = t.coeffs()[(i * mb + j) * mc + k];
                    if c == 0 {
                        continue;
                    }
                    let ck = obs_matrix(&bloch[2][k]);
                    accumulate_effective(&mut e, state, &ai, &bj, &ck, party, c as f64);
                }
            }
        }
        // traceless part r . sigma of E determines the optimal observable
        let rx = 0.5 * (e[1] + e[2]).re;
        let ry = 0.5 * (e[2] - e[1]).im;
        let rz = 0.5 * (e[0] - e[3]).re;
        let norm = (rx * rx + ry * ry + rz * rz).sqrt();
        if norm > 1e-15 {
            bloch[party][x] = [rx / norm, ry / norm, rz / norm];
        }
    }
}

/// Adds `w * Tr_rest[(A (x) B (x) C) |psi><psi|]` reduced onto `party` into
/// the 2x2 accumulator, with the identity inserted at `party`.
fn accumulate_effective(
    e: &mut [Complex64; 4],
    state: &[Complex64; 8],
    a: &[Complex64; 4],
    b: &[Complex64; 4],
    c: &[Complex64; 4],
    party: usize,
    w: f64,
) {
    let id = [
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
    ];
    let (fa, fb, fc) = match party {
        0 => (&id, b, c),
        1 => (a, &id, c),
        _ => (a, b, &id),
    };
    // chi = (FA (x) FB (x) FC) |psi>
    let mut chi = [Complex64::new(0.0, 0.0); 8];
    for ra in 0..2 {
        for rb in 0..2 {
            for rc in 0..2 {
                let row = (ra << 2) | (rb << 1) | rc;
                let mut acc = Complex64::new(0.0, 0.0);
                for ca_ in 0..2 {
                    for cb in 0..2 {
                        for cc in 0..2 {
                            let col = (ca_ << 2) | (cb << 1) | cc;
                            acc += fa[ra * 2 + ca_] * fb[rb * 2 + cb] * fc[rc * 2 + cc]
                                * state[col];
                        }
                    }
                }
                chi[row] = acc;
            }
        }
    }
    // E[sq, sp] += w * sum_rest psi*[..sp..] chi[..sq..]; the party's qubit
    // sits at bit 2 for Alice, bit 1 for Bob, bit 0 for Cecil
    let place = |s: usize, rest: usize| -> usize {
        let (hi, lo) = (rest >> 1, rest & 1);
        match party {
            0 => (s << 2) | (hi << 1) | lo,
            1 => (hi << 2) | (s << 1) | lo,
            _ => (hi << 2) | (lo << 1) | s,
        }
    };
    for sp in 0..2usize {
        for sq in 0..2usize {
            let mut acc = Complex64::new(0.0, 0.0);
            for rest in 0..4usize {
                acc += state[place(sp, rest)].conj() * chi[place(sq, rest)];
            }
            e[sq * 2 + sp] += w * acc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn s222() -> Scenario {
        Scenario::new(2, 2, 2).unwrap()
    }

    fn mermin_angles() -> AngleProfile {
        AngleProfile::identical(vec![0.0, FRAC_PI_2]).unwrap()
    }

    #[test]
    fn ghz_point_all_zero_angles() {
        let p = ghz_point(s222(), &AngleProfile::identical(vec![0.0, 0.0]).unwrap()).unwrap();
        assert!(p.values().iter().all(|&v| (v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn ghz_point_mermin_angles() {
        let p = ghz_point(s222(), &mermin_angles()).unwrap();
        let want = [1.0, 0.0, 0.0, -1.0, 0.0, -1.0, -1.0, 0.0];
        for (got, want) in p.values().iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
        let t = catalog::mermin_tensor();
        assert!((t.evaluate(&p).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn ghz_point_rejects_length_mismatch() {
        let bad = AngleProfile::identical(vec![0.0, 0.0, 0.0]).unwrap();
        assert!(ghz_point(s222(), &bad).is_err());
    }

    #[test]
    fn seesaw_reaches_mermin_algebraic_maximum() {
        let t = catalog::mermin_tensor();
        let cert = seesaw_equatorial(&t, 4, 17).unwrap();
        assert!((cert.value - 4.0).abs() < 1e-9);
        assert!(cert.converged);
        // certificate self-consistency
        let p = ghz_point(t.scenario(), &cert.angles).unwrap();
        assert!((t.evaluate(&p).unwrap() - cert.value).abs() < 1e-10);
    }

    #[test]
    fn seesaw_requires_a_start() {
        let t = catalog::mermin_tensor();
        assert!(matches!(
            seesaw_equatorial(&t, 0, 0),
            Err(Error::NoRestarts)
        ));
    }

    #[test]
    fn visibility_basics() {
        assert_eq!(visibility(2.0, 4.0).unwrap(), 0.5);
        assert_eq!(visibility(7.0, 7.0).unwrap(), 1.0);
        assert!(visibility(1.0, 0.0).is_err());
        let v = visibility(12.0, 24.1699).unwrap();
        assert!((v - 0.496485).abs() < 1e-5);
    }

    #[test]
    fn noisy_value_scales_linearly() {
        let t = catalog::mermin_tensor();
        let a = mermin_angles();
        assert!((noisy_value(&t, &a, 1.0).unwrap() - 4.0).abs() < 1e-12);
        assert_eq!(noisy_value(&t, &a, 0.0).unwrap(), 0.0);
        // at the threshold visibility the noisy value meets the local bound
        assert!((noisy_value(&t, &a, 0.5).unwrap() - 2.0).abs() < 1e-12);
        assert!(noisy_value(&t, &a, 1.5).is_err());
    }

    #[test]
    fn angle_shift_between_parties_leaves_point_unchanged() {
        let s = Scenario::new(3, 2, 2).unwrap();
        let p1 = AngleProfile::new(vec![0.3, 1.0, 2.2], vec![0.5, 1.5], vec![0.1, 0.9]).unwrap();
        let delta = 0.7;
        let p2 = AngleProfile::new(
            vec![0.3 + delta, 1.0 + delta, 2.2 + delta],
            vec![0.5 - delta, 1.5 - delta],
            vec![0.1, 0.9],
        )
        .unwrap();
        let g1 = ghz_point(s, &p1).unwrap();
        let g2 = ghz_point(s, &p2).unwrap();
        for (x, y) in g1.values().iter().zip(g2.values()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn general_seesaw_matches_mermin() {
        let t = catalog::mermin_tensor();
        let cert = seesaw_general(&t, 3, 5).unwrap();
        assert!((cert.value - 4.0).abs() < 1e-8, "got {}", cert.value);
    }

    #[test]
    fn general_seesaw_zero_tensor() {
        let t = BellTensor::new(s222(), vec![0; 8]).unwrap();
        assert_eq!(seesaw_general(&t, 2, 1).unwrap().value, 0.0);
    }

    #[test]
    fn case_study_value_at_published_angles() {
        // symmetric five-setting inequality at its published optimum
        let t = catalog::entry("V_555^S1").unwrap().tensor.clone();
        let phi2 = 3.73842;
        let phi = vec![5.0 * PI / 8.0, FRAC_PI_2, phi2, 3.0 * PI - phi2, PI / 8.0];
        let profile = AngleProfile::identical(phi).unwrap();
        let p = ghz_point(t.scenario(), &profile).unwrap();
        let value = t.evaluate(&p).unwrap();
        assert!((value - 24.1699).abs() < 1e-3, "got {value}");
    }
}
