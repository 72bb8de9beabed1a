//! Coefficient tensors, correlation points and measurement-angle profiles.
//!
//! A Bell expression over three parties with binary outcomes is a linear
//! functional on the three-party correlators `<A_i B_j C_k>`; its
//! coefficients form a tensor stored flat with Alice slowest and Cecil
//! fastest, matching the row/group/entry layout used by the bundled catalog.

use crate::error::{Error, Result};
use crate::scenario::Scenario;
use num_integer::Integer;

/// Largest coefficient magnitude accepted for integer tensors. Keeps every
/// sum over the at most 216 tensor entries safely inside `i64`.
pub const MAX_COEFF_ABS: i64 = 1 << 40;

/// Coefficient tensor over a scenario, flattened Alice-slowest.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<T> {
    scenario: Scenario,
    coeffs: Vec<T>,
}

/// Integer-valued Bell expression; the currency of catalogs, facets and
/// equivalence tests.
pub type BellTensor = Tensor<i64>;

/// Real-valued Bell expression, as produced by angle seeding.
pub type RealTensor = Tensor<f64>;

impl<T> Tensor<T> {
    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.coeffs[self.scenario.flat_index(i, j, k)]
    }
}

impl BellTensor {
    pub fn new(scenario: Scenario, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != scenario.dim() {
            return Err(Error::CoefficientCount {
                want: scenario.dim(),
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|c| c.unsigned_abs() > MAX_COEFF_ABS as u64) {
            return Err(Error::CoefficientRange(c));
        }
        Ok(Self { scenario, coeffs })
    }

    /// Greatest common divisor of the nonzero coefficient magnitudes
    /// (0 for the zero tensor).
    pub fn gcd(&self) -> i64 {
        self.coeffs.iter().fold(0i64, |g, &c| g.gcd(&c.abs()))
    }

    /// Divides out the coefficient gcd so the nonzero entries are coprime.
    pub fn normalized(mut self) -> Self {
        let g = self.gcd();
        if g > 1 {
            for c in &mut self.coeffs {
                *c /= g;
            }
        }
        self
    }

    pub fn to_real(&self) -> RealTensor {
        RealTensor {
            scenario: self.scenario,
            coeffs: self.coeffs.iter().map(|&c| c as f64).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Value of the expression against a correlation point.
    pub fn evaluate(&self, p: &CorrelationPoint) -> Result<f64> {
        check_scenario(self.scenario, p.scenario)?;
        Ok(dot(self.coeffs.iter().map(|&c| c as f64), &p.values))
    }
}

impl RealTensor {
    pub fn new(scenario: Scenario, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != scenario.dim() {
            return Err(Error::CoefficientCount {
                want: scenario.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Self { scenario, coeffs })
    }

    /// Squared Euclidean norm of the coefficient vector.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn evaluate(&self, p: &CorrelationPoint) -> Result<f64> {
        check_scenario(self.scenario, p.scenario)?;
        Ok(dot(self.coeffs.iter().copied(), &p.values))
    }
}

fn dot(coeffs: impl Iterator<Item = f64>, values: &[f64]) -> f64 {
    coeffs.zip(values).map(|(c, v)| c * v).sum()
}

pub(crate) fn check_scenario(a: Scenario, b: Scenario) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ScenarioMismatch(a, b))
    }
}

/// A point in three-party correlation space; entry `(i,j,k)` is the expected
/// product of the three outcomes for that setting choice.
#[derive(Clone, PartialEq, Debug)]
pub struct CorrelationPoint {
    scenario: Scenario,
    values: Vec<f64>,
}

impl CorrelationPoint {
    /// Builds a point, requiring every correlator to lie in `[-1, 1]`.
    pub fn new(scenario: Scenario, values: Vec<f64>) -> Result<Self> {
        let p = Self::from_raw_values(scenario, values)?;
        if let Some(&v) = p.values.iter().find(|v| !(-1.0..=1.0).contains(*v)) {
            return Err(Error::CorrelatorRange(v));
        }
        Ok(p)
    }

    /// Length-checked constructor without the range check, for intermediate
    /// linear combinations.
    pub fn from_raw_values(scenario: Scenario, values: Vec<f64>) -> Result<Self> {
        if values.len() != scenario.dim() {
            return Err(Error::CoefficientCount {
                want: scenario.dim(),
                got: values.len(),
            });
        }
        Ok(Self { scenario, values })
    }

    pub fn zero(scenario: Scenario) -> Self {
        Self {
            scenario,
            values: vec![0.0; scenario.dim()],
        }
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Componentwise `alpha * self + beta * other`.
    pub fn linear_combination(&self, alpha: f64, other: &Self, beta: f64) -> Result<Self> {
        check_scenario(self.scenario, other.scenario)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        Self::from_raw_values(self.scenario, values)
    }
}

/// One equatorial measurement angle per setting per party.
#[derive(Clone, PartialEq, Debug)]
pub struct AngleProfile {
    phi: [Vec<f64>; 3],
}

impl AngleProfile {
    pub fn new(phi_a: Vec<f64>, phi_b: Vec<f64>, phi_c: Vec<f64>) -> Result<Self> {
        let phi = [phi_a, phi_b, phi_c];
        if phi.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteAngle);
        }
        Ok(Self { phi })
    }

    /// Same angle list for every party.
    pub fn identical(phi: Vec<f64>) -> Result<Self> {
        Self::new(phi.clone(), phi.clone(), phi)
    }

    pub fn party(&self, p: usize) -> &[f64] {
        &self.phi[p]
    }

    pub fn lengths(&self) -> [usize; 3] {
        [self.phi[0].len(), self.phi[1].len(), self.phi[2].len()]
    }

    pub fn matches(&self, scenario: Scenario) -> Result<()> {
        let l = self.lengths();
        if l == scenario.settings() {
            Ok(())
        } else {
            Err(Error::ProfileMismatch(l[0], l[1], l[2], scenario))
        }
    }

    /// Flattened copy, Alice settings first.
    pub fn to_flat(&self) -> Vec<f64> {
        self.phi.iter().flatten().copied().collect()
    }

    pub fn from_flat(scenario: Scenario, flat: &[f64]) -> Result<Self> {
        let [ma, mb, mc] = scenario.settings();
        if flat.len() != ma + mb + mc {
            return Err(Error::ProfileMismatch(flat.len(), 0, 0, scenario));
        }
        Self::new(
            flat[..ma].to_vec(),
            flat[ma..ma + mb].to_vec(),
            flat[ma + mb..].to_vec(),
        )
    }
}

/// A symmetrization term: indices for the three parties plus an integer
/// weight added to every distinct party-permutation image.
pub type SymTerm = (usize, usize, usize, i64);

/// Expands a list of terms into a party-symmetric tensor. Each term
/// contributes its weight once to every distinct permutation image of its
/// index triple: 6 images for three distinct indices, 3 when exactly two
/// coincide, 1 when all coincide.
pub fn sym_expand(scenario: Scenario, terms: &[SymTerm]) -> Result<BellTensor> {
    if !scenario.is_symmetric() {
        return Err(Error::UnequalSettings(scenario));
    }
    let m = scenario.settings()[0];
    let mut coeffs = vec![0i64; scenario.dim()];
    for &(i, j, k, w) in terms {
        if i >= m || j >= m || k >= m {
            return Err(Error::SettingOutOfRange(i, j, k, scenario));
        }
        let perms = [
            (i, j, k),
            (i, k, j),
            (j, i, k),
            (j, k, i),
            (k, i, j),
            (k, j, i),
        ];
        let mut seen: Vec<(usize, usize, usize)> = Vec::with_capacity(6);
        for p in perms {
            if !seen.contains(&p) {
                seen.push(p);
                coeffs[scenario.flat_index(p.0, p.1, p.2)] += w;
            }
        }
    }
    BellTensor::new(scenario, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn s222() -> Scenario {
        Scenario::new(2, 2, 2).unwrap()
    }

    #[test]
    fn evaluate_mermin_against_its_saturating_point() {
        let t = catalog::mermin_tensor();
        let mut values = vec![0.0; 8];
        values[0] = 1.0;
        values[3] = -1.0;
        values[5] = -1.0;
        values[6] = -1.0;
        let p = CorrelationPoint::new(s222(), values).unwrap();
        assert_eq!(t.evaluate(&p).unwrap(), 4.0);
    }

    #[test]
    fn evaluate_zero_point_is_zero() {
        let t = catalog::mermin_tensor();
        assert_eq!(t.evaluate(&CorrelationPoint::zero(s222())).unwrap(), 0.0);
    }

    #[test]
    fn evaluate_rejects_scenario_mismatch() {
        let t = catalog::mermin_tensor();
        let p = CorrelationPoint::zero(Scenario::new(2, 2, 3).unwrap());
        assert!(t.evaluate(&p).is_err());
    }

    #[test]
    fn sym_expand_single_diagonal_term() {
        let s = Scenario::new(5, 5, 5).unwrap();
        let t = sym_expand(s, &[(2, 2, 2, -2)]).unwrap();
        for (idx, &c) in t.coeffs().iter().enumerate() {
            let expect = if idx == s.flat_index(2, 2, 2) { -2 } else { 0 };
            assert_eq!(c, expect);
        }
    }

    #[test]
    fn sym_expand_distinct_indices_has_six_images() {
        let s = Scenario::new(5, 5, 5).unwrap();
        let t = sym_expand(s, &[(0, 2, 4, 1)]).unwrap();
        let expected = [
            (0, 2, 4),
            (0, 4, 2),
            (2, 0, 4),
            (2, 4, 0),
            (4, 0, 2),
            (4, 2, 0),
        ];
        let mut count = 0;
        for i in 0..5 {
            for j in 0..5 {
                for k in 0..5 {
                    let want = i64::from(expected.contains(&(i, j, k)));
                    assert_eq!(*t.get(i, j, k), want);
                    count += want;
                }
            }
        }
        assert_eq!(count, 6);
    }

    #[test]
    fn sym_expand_rejects_asymmetric_scenario() {
        let s = Scenario::new(3, 4, 3).unwrap();
        assert!(matches!(
            sym_expand(s, &[(0, 0, 0, 1)]),
            Err(Error::UnequalSettings(_))
        ));
    }

    #[test]
    fn gcd_normalization() {
        let s = s222();
        let t = BellTensor::new(s, vec![4, 0, -6, 2, 0, 0, 0, 8]).unwrap();
        assert_eq!(t.gcd(), 2);
        let n = t.normalized();
        assert_eq!(n.coeffs(), &[2, 0, -3, 1, 0, 0, 0, 4]);
        assert_eq!(n.gcd(), 1);
    }

    #[test]
    fn correlation_point_rejects_out_of_range() {
        let mut values = vec![0.0; 8];
        values[2] = 1.5;
        assert!(CorrelationPoint::new(s222(), values).is_err());
    }
}
