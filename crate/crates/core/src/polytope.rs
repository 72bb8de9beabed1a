//! Deterministic-strategy vertices of the local full-correlation polytope,
//! exact local bounds and facet (tightness) certification.

use crate::error::{Error, Result};
use crate::scenario::Scenario;
use crate::tensor::{BellTensor, CorrelationPoint, RealTensor};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Enumeration budget: total settings above this make the vertex sweep too
/// large for the exact routines.
pub const MAX_TOTAL_SETTINGS: usize = 18;

/// A deterministic strategy: one outcome sign per setting per party. The
/// induced correlation tensor is rank-1 with entries `a_i * b_j * c_k`.
///
/// The four sign patterns `(a,b,c)`, `(-a,-b,c)`, `(-a,b,-c)`, `(a,-b,-c)`
/// produce the same tensor; the stored representative has `a_0 = b_0 = +1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorrelationVertex {
    a: Vec<i8>,
    b: Vec<i8>,
    c: Vec<i8>,
}

impl CorrelationVertex {
    /// Builds a vertex from arbitrary sign vectors, normalizing to the class
    /// representative.
    pub fn new(mut a: Vec<i8>, mut b: Vec<i8>, mut c: Vec<i8>) -> Self {
        debug_assert!(a.iter().chain(&b).chain(&c).all(|&s| s == 1 || s == -1));
        if a[0] < 0 {
            for s in &mut a {
                *s = -*s;
            }
            if b[0] < 0 {
                for s in &mut b {
                    *s = -*s;
                }
            } else {
                for s in &mut c {
                    *s = -*s;
                }
            }
        }
        if b[0] < 0 {
            for s in &mut b {
                *s = -*s;
            }
            for s in &mut c {
                *s = -*s;
            }
        }
        Self { a, b, c }
    }

    pub fn signs(&self) -> (&[i8], &[i8], &[i8]) {
        (&self.a, &self.b, &self.c)
    }

    /// Flattened rank-1 tensor entries, Alice slowest.
    pub fn flat(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.a.len() * self.b.len() * self.c.len());
        for &ai in &self.a {
            for &bj in &self.b {
                for &ck in &self.c {
                    out.push(ai * bj * ck);
                }
            }
        }
        out
    }

    pub fn to_point(&self, scenario: Scenario) -> Result<CorrelationPoint> {
        CorrelationPoint::new(scenario, self.flat().iter().map(|&s| s as f64).collect())
    }

    /// Exact value of an integer Bell expression at this vertex.
    pub fn evaluate_int(&self, t: &BellTensor) -> i64 {
        let mut total = 0i64;
        let mut idx = 0;
        for &ai in &self.a {
            for &bj in &self.b {
                let ab = (ai * bj) as i64;
                for &ck in &self.c {
                    total += ab * ck as i64 * t.coeffs()[idx];
                    idx += 1;
                }
            }
        }
        total
    }
}

fn sign_vectors(m: usize, fix_first: bool) -> Vec<Vec<i8>> {
    let free = if fix_first { m - 1 } else { m };
    (0..1usize << free)
        .map(|bits| {
            let mut v = Vec::with_capacity(m);
            if fix_first {
                v.push(1);
            }
            for t in 0..free {
                v.push(if bits >> t & 1 == 1 { -1 } else { 1 });
            }
            v
        })
        .collect()
}

fn check_budget(s: Scenario) -> Result<()> {
    if s.total_settings() > MAX_TOTAL_SETTINGS {
        Err(Error::ScenarioTooLarge(s))
    } else {
        Ok(())
    }
}

/// Enumerates all distinct correlation vertices of the scenario, exactly
/// `2^(mA+mB+mC)/4` of them, in a fixed deterministic order.
pub fn enumerate_vertices(s: Scenario) -> Result<Vec<CorrelationVertex>> {
    check_budget(s)?;
    let [ma, mb, mc] = s.settings();
    let avs = sign_vectors(ma, true);
    let bvs = sign_vectors(mb, true);
    let cvs = sign_vectors(mc, false);
    let mut out = Vec::with_capacity(s.vertex_count());
    for a in &avs {
        for b in &bvs {
            for c in &cvs {
                out.push(CorrelationVertex {
                    a: a.clone(),
                    b: b.clone(),
                    c: c.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Exact local bound of an integer Bell expression together with a vertex
/// attaining it.
///
/// Alice's maximization collapses to absolute values:
/// `L = max_{b,c} sum_i |sum_jk M_ijk b_j c_k|`, costing
/// `2^(mB+mC-1)` inner evaluations instead of a full three-party sweep.
pub fn local_bound_int(t: &BellTensor) -> Result<(i64, CorrelationVertex)> {
    let s = t.scenario();
    check_budget(s)?;
    let [ma, mb, mc] = s.settings();
    let coeffs = t.coeffs();
    let bvs = sign_vectors(mb, true);
    let cvs = sign_vectors(mc, false);
    let mut best = i64::MIN;
    let mut best_bc = (0usize, 0usize);
    let mut row = vec![0i64; ma * mc];
    for (bi, b) in bvs.iter().enumerate() {
        // row[i*mc + k] = sum_j M[i][j][k] * b_j
        for x in row.iter_mut() {
            *x = 0;
        }
        for i in 0..ma {
            for (j, &bj) in b.iter().enumerate() {
                let base = (i * mb + j) * mc;
                let bj = bj as i64;
                for k in 0..mc {
                    row[i * mc + k] += bj * coeffs[base + k];
                }
            }
        }
        for (ci, c) in cvs.iter().enumerate() {
            let mut total = 0i64;
            for i in 0..ma {
                let mut inner = 0i64;
                for (k, &ck) in c.iter().enumerate() {
                    inner += ck as i64 * row[i * mc + k];
                }
                total += inner.abs();
            }
            if total > best {
                best = total;
                best_bc = (bi, ci);
            }
        }
    }
    let b = bvs[best_bc.0].clone();
    let c = cvs[best_bc.1].clone();
    let mut a = Vec::with_capacity(ma);
    for i in 0..ma {
        let mut inner = 0i64;
        for j in 0..mb {
            for k in 0..mc {
                inner += b[j] as i64 * c[k] as i64 * coeffs[(i * mb + j) * mc + k];
            }
        }
        a.push(if inner >= 0 { 1 } else { -1 });
    }
    Ok((best, CorrelationVertex::new(a, b, c)))
}

/// Floating-point local bound for real coefficient tensors; same collapse as
/// [`local_bound_int`]. Used inside the mining objective where exactness is
/// deferred to the facet step.
pub fn local_bound_real(t: &RealTensor) -> Result<(f64, CorrelationVertex)> {
    let s = t.scenario();
    check_budget(s)?;
    let [ma, mb, mc] = s.settings();
    let coeffs = t.coeffs();
    let bvs = sign_vectors(mb, true);
    let cvs = sign_vectors(mc, false);
    let mut best = f64::NEG_INFINITY;
    let mut best_bc = (0usize, 0usize);
    let mut row = vec![0f64; ma * mc];
    for (bi, b) in bvs.iter().enumerate() {
        for x in row.iter_mut() {
            *x = 0.0;
        }
        for i in 0..ma {
            for (j, &bj) in b.iter().enumerate() {
                let base = (i * mb + j) * mc;
                let bj = bj as f64;
                for k in 0..mc {
                    row[i * mc + k] += bj * coeffs[base + k];
                }
            }
        }
        for (ci, c) in cvs.iter().enumerate() {
            let mut total = 0f64;
            for i in 0..ma {
                let mut inner = 0f64;
                for (k, &ck) in c.iter().enumerate() {
                    inner += ck as f64 * row[i * mc + k];
                }
                total += inner.abs();
            }
            if total > best {
                best = total;
                best_bc = (bi, ci);
            }
        }
    }
    let b = bvs[best_bc.0].clone();
    let c = cvs[best_bc.1].clone();
    let mut a = Vec::with_capacity(ma);
    for i in 0..ma {
        let mut inner = 0f64;
        for j in 0..mb {
            for k in 0..mc {
                inner += b[j] as f64 * c[k] as f64 * coeffs[(i * mb + j) * mc + k];
            }
        }
        a.push(if inner >= 0.0 { 1 } else { -1 });
    }
    Ok((best, CorrelationVertex::new(a, b, c)))
}

/// Outcome of a facet certification.
#[derive(Clone, Debug)]
pub struct TightnessReport {
    /// True iff the saturating vertices affinely span a `(d-1)`-dimensional
    /// face, i.e. the inequality is a facet of the correlation polytope.
    pub tight: bool,
    /// Affine rank of the saturating set (rank of differences plus one);
    /// equals `d = mA*mB*mC` exactly when tight.
    pub saturation_rank: usize,
    /// Number of vertices attaining the bound.
    pub saturating_vertices: usize,
}

/// Certifies facet-hood of `t` at its local bound.
///
/// `claimed_bound` must equal the exact bound (recomputed here); the rank of
/// the saturating set is computed with exact integer elimination, falling
/// back from `i128` to big integers if entries grow past machine range.
pub fn check_tightness(t: &BellTensor, claimed_bound: i64) -> Result<TightnessReport> {
    let s = t.scenario();
    let (actual, _) = local_bound_int(t)?;
    if actual != claimed_bound {
        return Err(Error::BoundMismatch {
            claimed: claimed_bound,
            actual,
        });
    }
    let d = s.dim();
    let vertices = enumerate_vertices(s)?;
    let mut saturating: Vec<Vec<i8>> = Vec::new();
    for v in &vertices {
        if v.evaluate_int(t) == claimed_bound {
            saturating.push(v.flat());
        }
    }
    let count = saturating.len();
    let rank = match affine_rank_i128(&saturating, d) {
        Some(r) => r,
        None => affine_rank_bigint(&saturating, d),
    };
    Ok(TightnessReport {
        tight: rank == d,
        saturation_rank: rank,
        saturating_vertices: count,
    })
}

/// Affine rank over the integers via incremental fraction-free echelon
/// reduction with per-row gcd normalization. Returns `None` on `i128`
/// overflow.
fn affine_rank_i128(rows: &[Vec<i8>], dim: usize) -> Option<usize> {
    if rows.is_empty() {
        return Some(0);
    }
    let base = &rows[0];
    // basis rows kept in echelon form, each tagged with its pivot column
    let mut basis: Vec<(usize, Vec<i128>)> = Vec::new();
    for row in &rows[1..] {
        // differences of +/-1 tensors are even; halve to keep entries small
        let mut r: Vec<i128> = row
            .iter()
            .zip(base)
            .map(|(&x, &y)| ((x - y) / 2) as i128)
            .collect();
        for (p, b) in &basis {
            if r[*p] != 0 {
                let (rp, bp) = (r[*p], b[*p]);
                for (x, y) in r.iter_mut().zip(b) {
                    *x = x.checked_mul(bp)?.checked_sub(y.checked_mul(rp)?)?;
                }
                normalize_row_i128(&mut r);
            }
        }
        if let Some(p) = r.iter().position(|&x| x != 0) {
            normalize_row_i128(&mut r);
            basis.push((p, r));
            basis.sort_by_key(|(p, _)| *p);
            if basis.len() == dim - 1 {
                return Some(dim);
            }
        }
    }
    Some(basis.len() + 1)
}

fn normalize_row_i128(r: &mut [i128]) {
    let mut g: i128 = 0;
    for &x in r.iter() {
        g = g.gcd(&x.abs());
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for x in r.iter_mut() {
            *x /= g;
        }
    }
}

fn affine_rank_bigint(rows: &[Vec<i8>], dim: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let base = &rows[0];
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for row in &rows[1..] {
        let mut r: Vec<BigInt> = row
            .iter()
            .zip(base)
            .map(|(&x, &y)| BigInt::from((x - y) / 2))
            .collect();
        for (p, b) in &basis {
            if !r[*p].is_zero() {
                let (rp, bp) = (r[*p].clone(), b[*p].clone());
                for (x, y) in r.iter_mut().zip(b) {
                    *x = &*x * &bp - y * &rp;
                }
                normalize_row_big(&mut r);
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            normalize_row_big(&mut r);
            basis.push((p, r));
            basis.sort_by_key(|(p, _)| *p);
            if basis.len() == dim - 1 {
                return dim;
            }
        }
    }
    basis.len() + 1
}

fn normalize_row_big(r: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in r.iter() {
        g = g.gcd(&x.abs());
    }
    if g > BigInt::from(1) {
        for x in r.iter_mut() {
            *x = &*x / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s(a: usize, b: usize, c: usize) -> Scenario {
        Scenario::new(a, b, c).unwrap()
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(enumerate_vertices(s(2, 2, 2)).unwrap().len(), 16);
        assert_eq!(enumerate_vertices(s(3, 3, 4)).unwrap().len(), 256);
        assert_eq!(enumerate_vertices(s(5, 5, 5)).unwrap().len(), 8192);
    }

    #[test]
    fn vertices_are_distinct() {
        let vs = enumerate_vertices(s(2, 2, 3)).unwrap();
        let mut flats: Vec<Vec<i8>> = vs.iter().map(|v| v.flat()).collect();
        flats.sort();
        flats.dedup();
        assert_eq!(flats.len(), vs.len());
    }

    #[test]
    fn vertex_normalization_collapses_sign_classes() {
        let v = CorrelationVertex::new(vec![-1, 1], vec![1, -1], vec![-1, -1]);
        let w = CorrelationVertex::new(vec![1, -1], vec![-1, 1], vec![-1, -1]);
        assert_eq!(v.flat(), w.flat());
        assert_eq!(v, w);
        assert_eq!(v.signs().0[0], 1);
        assert_eq!(v.signs().1[0], 1);
    }

    #[test]
    fn mermin_local_bound_is_two() {
        let t = catalog::mermin_tensor();
        let (l, arg) = local_bound_int(&t).unwrap();
        assert_eq!(l, 2);
        assert_eq!(arg.evaluate_int(&t), 2);
    }

    #[test]
    fn zero_tensor_bound_is_zero() {
        let t = BellTensor::new(s(2, 2, 2), vec![0; 8]).unwrap();
        assert_eq!(local_bound_int(&t).unwrap().0, 0);
    }

    #[test]
    fn real_bound_matches_int_bound_on_integer_data() {
        let t = catalog::mermin_tensor();
        let (l, _) = local_bound_real(&t.to_real()).unwrap();
        assert!((l - 2.0).abs() < 1e-12);
    }

    #[test]
    fn scaling_homogeneity() {
        let t = catalog::mermin_tensor();
        let scaled =
            BellTensor::new(t.scenario(), t.coeffs().iter().map(|&c| 3 * c).collect()).unwrap();
        assert_eq!(local_bound_int(&scaled).unwrap().0, 6);
    }

    #[test]
    fn mermin_is_tight_with_rank_eight() {
        let t = catalog::mermin_tensor();
        let r = check_tightness(&t, 2).unwrap();
        assert!(r.tight);
        assert_eq!(r.saturation_rank, 8);
        assert_eq!(r.saturating_vertices, 8);
    }

    #[test]
    fn single_correlator_bound_is_a_facet() {
        // the saturators of E_000 <= 1 are the eight sign characters, which
        // are linearly independent, so this trivial-looking bound is tight
        let mut coeffs = vec![0i64; 8];
        coeffs[0] = 1;
        let t = BellTensor::new(s(2, 2, 2), coeffs).unwrap();
        let r = check_tightness(&t, 1).unwrap();
        assert!(r.tight);
        assert_eq!(r.saturation_rank, 8);
        assert_eq!(r.saturating_vertices, 8);
    }

    #[test]
    fn all_ones_tensor_is_not_tight() {
        // only the all-plus strategy attains the bound 8
        let t = BellTensor::new(s(2, 2, 2), vec![1; 8]).unwrap();
        let r = check_tightness(&t, 8).unwrap();
        assert!(!r.tight);
        assert_eq!(r.saturation_rank, 1);
        assert_eq!(r.saturating_vertices, 1);
    }

    #[test]
    fn tightness_rejects_wrong_bound() {
        let t = catalog::mermin_tensor();
        assert!(matches!(
            check_tightness(&t, 3),
            Err(Error::BoundMismatch { .. })
        ));
    }

    #[test]
    fn all_vertices_affinely_span_full_space() {
        // full-dimensionality of the correlation polytope
        for sc in [s(2, 2, 2), s(2, 3, 2)] {
            let flats: Vec<Vec<i8>> = enumerate_vertices(sc)
                .unwrap()
                .iter()
                .map(|v| v.flat())
                .collect();
            let rank = affine_rank_i128(&flats, sc.dim()).unwrap();
            assert_eq!(rank, sc.dim());
        }
    }

    #[test]
    fn budget_is_enforced() {
        // 6x6x6 has 18 total settings (allowed); anything larger is not
        // constructible as a Scenario, so exercise the check directly.
        assert!(check_budget(s(6, 6, 6)).is_ok());
    }
}
