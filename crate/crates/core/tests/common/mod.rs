//! Shared test oracles, kept independent of the implementation paths they
//! check.

use ghzbell::tensor::BellTensor;
use rand::Rng;

/// Local bound by exhaustive enumeration of ALL `2^(mA+mB+mC)` deterministic
/// strategies, with no collapse or class identification. The independent
/// oracle for `local_bound_int`.
pub fn brute_force_local_bound(t: &BellTensor) -> i64 {
    let [ma, mb, mc] = t.scenario().settings();
    let total = ma + mb + mc;
    let coeffs = t.coeffs();
    let mut best = i64::MIN;
    for bits in 0..1u32 << total {
        let sign = |pos: usize| -> i64 {
            if bits >> pos & 1 == 1 {
                -1
            } else {
                1
            }
        };
        let mut value = 0i64;
        for i in 0..ma {
            for j in 0..mb {
                for k in 0..mc {
                    value += sign(i) * sign(ma + j) * sign(ma + mb + k)
                        * coeffs[(i * mb + j) * mc + k];
                }
            }
        }
        best = best.max(value);
    }
    best
}

/// Random integer tensor with coefficients in `[-range, range]`.
pub fn random_tensor<R: Rng + ?Sized>(
    s: ghzbell::Scenario,
    range: i64,
    rng: &mut R,
) -> BellTensor {
    let coeffs = (0..s.dim())
        .map(|_| rng.random_range(-range..=range))
        .collect();
    BellTensor::new(s, coeffs).unwrap()
}
