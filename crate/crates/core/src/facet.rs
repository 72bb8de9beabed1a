//! Facet snapping: turns a direction in correlation space into an exact,
//! certified tight Bell inequality.
//!
//! The polar LP returns a floating facet normal pinned by `d` tight vertex
//! constraints. Integerization first tries per-entry continued fractions
//! (cheap, covers small facets); if the resulting tensor fails exact
//! re-certification the normal is recomputed exactly by solving the basis
//! system `A_B c = 1` in fraction-free integer arithmetic, which recovers
//! facets with arbitrarily large coefficient scales. Every returned facet is
//! re-verified with exact arithmetic: bound, basis saturation and the
//! `(d-1)`-dimensional saturation rank.

use crate::error::{Error, Result};
use crate::lp::{polar_facet_lp, PolarSolution};
use crate::polytope::{check_tightness, local_bound_int, CorrelationVertex, TightnessReport};
use crate::tensor::{BellTensor, RealTensor, MAX_COEFF_ABS};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default denominator budget for continued-fraction reconstruction.
pub const DEFAULT_MAX_DENOMINATOR: i64 = 10_000;

/// Cap on the cleared common denominator.
const MAX_SCALE: i64 = MAX_COEFF_ABS;

/// A certified facet of the local correlation polytope.
#[derive(Clone, Debug)]
pub struct FacetResult {
    /// Integer facet tensor, coefficient gcd reduced to 1.
    pub tensor: BellTensor,
    /// Exact local bound of `tensor`.
    pub local_bound: i64,
    /// The LP's floating facet normal (scaled so `<normal, v> <= 1`).
    pub lp_normal: Vec<f64>,
    /// LP optimum `<direction, normal>`, the gauge of the direction.
    pub lp_objective: f64,
    /// Common denominator cleared during integerization.
    pub scale_denominator: i64,
    /// Exact verification outcome (always tight for a returned facet).
    pub tightness: TightnessReport,
}

/// Integer vector reconstructed from a real one by clearing denominators.
#[derive(Clone, Debug)]
pub struct Integerized {
    /// Reconstructed integers with gcd reduced to 1.
    pub coeffs: Vec<i64>,
    /// Least common multiple of the per-entry denominators.
    pub lcm: i64,
    /// Gcd divided out of the raw scaled entries.
    pub gcd: i64,
}

impl Integerized {
    /// The integer `lcm / gcd` when it divides evenly: the local bound a
    /// facet normal scaled by this reconstruction must attain.
    pub fn integer_scale(&self) -> Option<i64> {
        (self.lcm % self.gcd == 0).then(|| self.lcm / self.gcd)
    }
}

/// Best rational approximation `p/q` with `q <= max_den`, by continued
/// fractions.
fn rational_approx(x: f64, max_den: i64) -> (i64, i64) {
    let negative = x < 0.0;
    let mut v = x.abs();
    // convergents p/q of the continued fraction of |x|
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, v.floor() as i64, 1i64);
    v -= v.floor();
    for _ in 0..64 {
        if v < 1e-15 {
            break;
        }
        v = 1.0 / v;
        let a = v.floor();
        if a >= 1e18 {
            break;
        }
        let a = a as i64;
        let (p2, q2) = match (
            a.checked_mul(p1).and_then(|x| x.checked_add(p0)),
            a.checked_mul(q1).and_then(|x| x.checked_add(q0)),
        ) {
            (Some(p2), Some(q2)) => (p2, q2),
            _ => break,
        };
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        v -= v.floor();
    }
    (if negative { -p1 } else { p1 }, q1)
}

/// Clears a common denominator from `values`: continued-fraction
/// reconstruction per entry with denominators up to `max_denominator`, lcm
/// scaling, gcd reduction. Each scaled entry must reproduce
/// `value * lcm` to within `1e-6 * lcm`.
pub fn integerize(values: &[f64], max_denominator: i64) -> Result<Integerized> {
    if values.iter().all(|v| v.abs() < 1e-12) {
        return Err(Error::ZeroDirection);
    }
    let fail = || Error::Integerize(max_denominator);
    let mut fracs = Vec::with_capacity(values.len());
    let mut lcm = 1i64;
    for &v in values {
        let (p, q) = rational_approx(v, max_denominator);
        lcm = lcm
            .checked_mul(q / lcm.gcd(&q))
            .filter(|&l| l <= MAX_SCALE)
            .ok_or_else(fail)?;
        fracs.push((p, q));
    }
    let mut raw = Vec::with_capacity(values.len());
    for (&v, &(p, q)) in values.iter().zip(&fracs) {
        let scaled = p.checked_mul(lcm / q).ok_or_else(fail)?;
        if (v * lcm as f64 - scaled as f64).abs() > 1e-6 * lcm as f64 {
            return Err(fail());
        }
        raw.push(scaled);
    }
    let gcd = raw.iter().fold(0i64, |g, &x| g.gcd(&x.abs()));
    if gcd == 0 {
        return Err(fail());
    }
    Ok(Integerized {
        coeffs: raw.iter().map(|&x| x / gcd).collect(),
        lcm,
        gcd,
    })
}

/// Finds and exactly certifies the facet crossed by the ray through
/// `direction`, with the default denominator budget.
pub fn find_facet(direction: &RealTensor, vertices: &[CorrelationVertex]) -> Result<FacetResult> {
    find_facet_with(direction, vertices, DEFAULT_MAX_DENOMINATOR)
}

/// [`find_facet`] with an explicit continued-fraction denominator budget.
pub fn find_facet_with(
    direction: &RealTensor,
    vertices: &[CorrelationVertex],
    max_denominator: i64,
) -> Result<FacetResult> {
    let s = direction.scenario();
    if direction.coeffs().iter().all(|c| c.abs() < 1e-12) {
        return Err(Error::ZeroDirection);
    }
    if vertices.len() != s.vertex_count() {
        return Err(Error::Lp(format!(
            "vertex list has {} entries, scenario {} needs {}",
            vertices.len(),
            s,
            s.vertex_count()
        )));
    }

    let sol = polar_facet_lp(direction.coeffs(), vertices)?;

    // fast path: continued fractions on the floating normal
    if let Ok(z) = integerize(&sol.normal, max_denominator) {
        if let Some(scale) = z.integer_scale() {
            if let Ok(t) = BellTensor::new(s, z.coeffs.clone()) {
                if let Ok(report) = certify_snapped(&t, scale, &sol, vertices) {
                    return Ok(FacetResult {
                        tensor: t,
                        local_bound: scale,
                        lp_normal: sol.normal,
                        lp_objective: sol.objective,
                        scale_denominator: z.lcm,
                        tightness: report,
                    });
                }
            }
        }
    }

    // exact path: solve the basis system A_B c = 1 over the rationals
    let rows: Vec<Vec<i64>> = sol
        .basis
        .iter()
        .map(|&(vi, sign)| {
            vertices[vi]
                .flat()
                .iter()
                .map(|&x| sign as i64 * x as i64)
                .collect()
        })
        .collect();
    let exact = solve_unit_rhs_exact(rows)?;
    let mut lcm = BigInt::one();
    for x in &exact {
        let den = x.denom();
        lcm = &lcm * (den / lcm.gcd(den));
    }
    let lcm_i = lcm
        .to_i64()
        .filter(|&l| l > 0 && l <= MAX_SCALE)
        .ok_or(Error::Integerize(MAX_SCALE))?;
    let raw: Vec<BigInt> = exact.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd_big = raw.iter().fold(BigInt::zero(), |g, x| g.gcd(&x.abs()));
    let gcd_i = gcd_big.to_i64().ok_or(Error::Integerize(MAX_SCALE))?;
    if gcd_i == 0 || lcm_i % gcd_i != 0 {
        return Err(Error::FacetVerification(
            "exact basis solution does not scale to an integer bound".into(),
        ));
    }
    let scale = lcm_i / gcd_i;
    let coeffs: Vec<i64> = raw
        .iter()
        .map(|x| (x / &gcd_big).to_i64().ok_or(Error::Integerize(MAX_SCALE)))
        .collect::<Result<_>>()?;
    let t = BellTensor::new(s, coeffs)?;
    let report = certify_snapped(&t, scale, &sol, vertices)?;
    Ok(FacetResult {
        tensor: t,
        local_bound: scale,
        lp_normal: sol.normal,
        lp_objective: sol.objective,
        scale_denominator: lcm_i,
        tightness: report,
    })
}

/// Exact re-certification of a snapped facet: local bound equals the scale,
/// every basis vertex saturates (with its sign), and the saturating set has
/// full affine rank.
fn certify_snapped(
    t: &BellTensor,
    scale: i64,
    sol: &PolarSolution,
    vertices: &[CorrelationVertex],
) -> Result<TightnessReport> {
    let (bound, _) = local_bound_int(t)?;
    if bound != scale {
        return Err(Error::FacetVerification(format!(
            "exact bound {bound} differs from reconstructed scale {scale}"
        )));
    }
    for &(vi, sign) in &sol.basis {
        let val = vertices[vi].evaluate_int(t);
        if val != sign as i64 * scale {
            return Err(Error::FacetVerification(format!(
                "basis vertex {vi} evaluates to {val}, expected {}",
                sign as i64 * scale
            )));
        }
    }
    let report = check_tightness(t, bound)?;
    if !report.tight {
        return Err(Error::FacetVerification(format!(
            "saturation rank {} below dimension {}",
            report.saturation_rank,
            t.scenario().dim()
        )));
    }
    Ok(report)
}

/// Solves `R x = 1` exactly for a square integer matrix given by rows:
/// fraction-free forward elimination, rational back substitution.
fn solve_unit_rhs_exact(rows: Vec<Vec<i64>>) -> Result<Vec<BigRational>> {
    let d = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| {
            let mut row: Vec<BigInt> = r.into_iter().map(BigInt::from).collect();
            row.push(BigInt::one()); // unit right-hand side
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..d {
        let pivot_row = (k..d)
            .find(|&r| !a[r][k].is_zero())
            .ok_or_else(|| Error::FacetVerification("singular LP basis".into()))?;
        a.swap(k, pivot_row);
        for i in k + 1..d {
            for j in k + 1..=d {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by the fraction-free identity
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![BigRational::zero(); d];
    for i in (0..d).rev() {
        let mut acc = BigRational::from(a[i][d].clone());
        for j in i + 1..d {
            acc -= BigRational::from(a[i][j].clone()) * &x[j];
        }
        x[i] = acc / BigRational::from(a[i][i].clone());
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytope::enumerate_vertices;
    use crate::scenario::Scenario;

    #[test]
    fn integerize_exact_dyadic() {
        let z = integerize(&[0.5, -0.5, 0.25], 10_000).unwrap();
        assert_eq!(z.coeffs, vec![2, -2, 1]);
        assert_eq!(z.lcm, 4);
        assert_eq!(z.gcd, 1);
    }

    #[test]
    fn integerize_absorbs_sub_tolerance_noise() {
        let z = integerize(&[1.0 / 3.0 + 1e-12, 1.0], 10_000).unwrap();
        assert_eq!(z.coeffs, vec![1, 3]);
        assert_eq!(z.lcm, 3);
    }

    #[test]
    fn integerize_rejects_zero_vector() {
        assert!(integerize(&[0.0, 0.0], 100).is_err());
    }

    #[test]
    fn mermin_direction_snaps_to_mermin() {
        let s = Scenario::new(2, 2, 2).unwrap();
        let verts = enumerate_vertices(s).unwrap();
        let mermin = catalog::mermin_tensor();
        let res = find_facet(&mermin.to_real(), &verts).unwrap();
        assert_eq!(res.local_bound, 2);
        assert!(res.tightness.tight);
        // same inequality up to overall sign of the definition
        let same: bool = res.tensor.coeffs() == mermin.coeffs()
            || res
                .tensor
                .coeffs()
                .iter()
                .zip(mermin.coeffs())
                .all(|(a, b)| *a == -b);
        assert!(same, "facet {:?}", res.tensor.coeffs());
    }

    #[test]
    fn vertex_direction_yields_a_containing_facet() {
        let s = Scenario::new(2, 2, 3).unwrap();
        let verts = enumerate_vertices(s).unwrap();
        let g = RealTensor::new(
            s,
            verts[7].flat().iter().map(|&x| x as f64).collect(),
        )
        .unwrap();
        let res = find_facet(&g, &verts).unwrap();
        assert!(res.tightness.tight);
        // the seeding vertex saturates its own facet
        assert_eq!(verts[7].evaluate_int(&res.tensor), res.local_bound);
    }

    #[test]
    fn zero_direction_is_rejected() {
        let s = Scenario::new(2, 2, 2).unwrap();
        let verts = enumerate_vertices(s).unwrap();
        let g = RealTensor::new(s, vec![0.0; 8]).unwrap();
        assert!(matches!(
            find_facet(&g, &verts),
            Err(Error::ZeroDirection)
        ));
    }

    #[test]
    fn exact_solver_inverts_a_sign_matrix() {
        let rows = vec![vec![1, 1, 1], vec![1, -1, 1], vec![1, 1, -1]];
        let x = solve_unit_rhs_exact(rows).unwrap();
        // solution of the 3x3 system is (1, 0, 0)
        assert_eq!(x[0], BigRational::from(BigInt::from(1)));
        assert!(x[1].is_zero());
        assert!(x[2].is_zero());
    }
}
