//! Dense two-phase revised simplex for the polar-polytope facet search.
//!
//! The primal problem `max <g,c>  s.t.  |<v,c>| <= 1 for every correlation
//! vertex v` is solved through its dual `min 1'y  s.t.  sum_j y_j a_j = g,
//! y >= 0` whose columns are the signed vertices. At optimality the simplex
//! multipliers are the primal solution: a basic optimum pins `c` to `d`
//! linearly independent tight constraints, so `c` is a vertex of the polar
//! polytope and hence a facet normal of the correlation polytope.
//!
//! Pricing uses the steepest reduced cost and falls back to Bland's rule
//! after a run of degenerate pivots, which restores the anti-cycling
//! guarantee.

use crate::error::{Error, Result};
use crate::polytope::CorrelationVertex;

const REDUCED_COST_TOL: f64 = 1e-9;
const PIVOT_TOL: f64 = 1e-9;
const DEGENERATE_STEP: f64 = 1e-12;
const STALL_LIMIT: usize = 40;
const REFACTOR_PERIOD: usize = 500;
const MAX_ITERATIONS: usize = 200_000;

/// A basic optimal solution of the polar LP.
#[derive(Clone, Debug)]
pub struct PolarSolution {
    /// Facet normal `c*`, satisfying `|<c*, v>| <= 1` with equality on the
    /// basis vertices.
    pub normal: Vec<f64>,
    /// Optimal value `<g, c*>`; also the gauge of `g` relative to the
    /// correlation polytope.
    pub objective: f64,
    /// Signed vertex indices forming the optimal basis; the facet is tight
    /// exactly on these strategies.
    pub basis: Vec<(usize, i8)>,
    pub iterations: usize,
}

struct Tableau<'a> {
    dim: usize,
    rows: Vec<Vec<f64>>, // flattened vertices, n_v x d
    g: &'a [f64],
    basis: Vec<usize>, // column ids; 2*n_v.. are artificials
    binv: Vec<f64>,    // d x d row-major
    y: Vec<f64>,
}

impl<'a> Tableau<'a> {
    fn column_into(&self, j: usize, out: &mut [f64]) {
        if j < 2 * self.rows.len() {
            let v = &self.rows[j >> 1];
            let s = if j & 1 == 0 { 1.0 } else { -1.0 };
            for (o, x) in out.iter_mut().zip(v) {
                *o = s * x;
            }
        } else {
            out.fill(0.0);
            out[j - 2 * self.rows.len()] = 1.0;
        }
    }

    fn is_artificial(&self, j: usize) -> bool {
        j >= 2 * self.rows.len()
    }

    /// Simplex multipliers for the given basic costs.
    fn multipliers(&self, cost_b: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let mut pi = vec![0.0; d];
        for (r, &cb) in cost_b.iter().enumerate() {
            if cb != 0.0 {
                for i in 0..d {
                    pi[i] += cb * self.binv[r * d + i];
                }
            }
        }
        pi
    }

    fn ftran(&self, col: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let mut u = vec![0.0; d];
        for r in 0..d {
            let mut acc = 0.0;
            let row = &self.binv[r * d..(r + 1) * d];
            for i in 0..d {
                acc += row[i] * col[i];
            }
            u[r] = acc;
        }
        u
    }

    fn pivot(&mut self, leave_row: usize, enter_col: usize, u: &[f64]) {
        let d = self.dim;
        let ur = u[leave_row];
        let theta = self.y[leave_row] / ur;
        for r in 0..d {
            if r != leave_row {
                self.y[r] -= theta * u[r];
                if self.y[r] < 0.0 && self.y[r] > -1e-11 {
                    self.y[r] = 0.0;
                }
            }
        }
        self.y[leave_row] = theta;
        // row operations mapping u to the unit vector of leave_row
        let pivot_row: Vec<f64> = self.binv[leave_row * d..(leave_row + 1) * d]
            .iter()
            .map(|x| x / ur)
            .collect();
        for r in 0..d {
            if r == leave_row {
                continue;
            }
            let f = u[r];
            if f != 0.0 {
                for i in 0..d {
                    self.binv[r * d + i] -= f * pivot_row[i];
                }
            }
        }
        self.binv[leave_row * d..(leave_row + 1) * d].copy_from_slice(&pivot_row);
        self.basis[leave_row] = enter_col;
    }

    /// Rebuilds the inverse and the basic solution from scratch.
    fn refactor(&mut self) -> Result<()> {
        let d = self.dim;
        let mut m = vec![0.0; d * d]; // B columns = basis columns
        let mut col = vec![0.0; d];
        for (slot, &j) in self.basis.iter().enumerate() {
            self.column_into(j, &mut col);
            for r in 0..d {
                m[r * d + slot] = col[r];
            }
        }
        let mut inv = vec![0.0; d * d];
        for i in 0..d {
            inv[i * d + i] = 1.0;
        }
        // Gauss-Jordan with partial pivoting
        for k in 0..d {
            let mut p = k;
            for r in k + 1..d {
                if m[r * d + k].abs() > m[p * d + k].abs() {
                    p = r;
                }
            }
            if m[p * d + k].abs() < 1e-12 {
                return Err(Error::Lp("singular basis during refactorization".into()));
            }
            if p != k {
                for i in 0..d {
                    m.swap(k * d + i, p * d + i);
                    inv.swap(k * d + i, p * d + i);
                }
            }
            let piv = m[k * d + k];
            for i in 0..d {
                m[k * d + i] /= piv;
                inv[k * d + i] /= piv;
            }
            for r in 0..d {
                if r != k {
                    let f = m[r * d + k];
                    if f != 0.0 {
                        for i in 0..d {
                            m[r * d + i] -= f * m[k * d + i];
                            inv[r * d + i] -= f * inv[k * d + i];
                        }
                    }
                }
            }
        }
        // inv now holds B^-1 in the basis-slot order used by `m`
        self.binv = inv;
        let mut y = self.ftran(self.g);
        for v in y.iter_mut() {
            if *v < 0.0 && *v > -1e-9 {
                *v = 0.0;
            }
        }
        self.y = y;
        Ok(())
    }
}

/// Solves the polar LP for a direction over the given vertex list.
pub fn polar_facet_lp(direction: &[f64], vertices: &[CorrelationVertex]) -> Result<PolarSolution> {
    let d = direction.len();
    if vertices.is_empty() {
        return Err(Error::Lp("empty vertex list".into()));
    }
    let rows: Vec<Vec<f64>> = vertices
        .iter()
        .map(|v| v.flat().iter().map(|&s| s as f64).collect())
        .collect();
    if rows[0].len() != d {
        return Err(Error::Lp("direction length does not match vertices".into()));
    }

    let mut t = Tableau {
        dim: d,
        rows,
        g: direction,
        basis: (0..d).map(|i| 2 * vertices.len() + i).collect(),
        binv: vec![0.0; d * d],
        y: direction.iter().map(|x| x.abs()).collect(),

    };
    // artificial columns carry the sign of g so the start is feasible
    for i in 0..d {
        t.binv[i * d + i] = if direction[i] < 0.0 { -1.0 } else { 1.0 };
    }

    let mut iterations = 0;
    run_phase(&mut t, true, &mut iterations)?;

    // ensure no artificial remains basic: pivot each out through any vertex
    // column with a usable entry in its row
    let infeas: f64 = t
        .basis
        .iter()
        .zip(&t.y)
        .filter(|(j, _)| t.is_artificial(**j))
        .map(|(_, y)| y.abs())
        .sum();
    if infeas > 1e-7 {
        return Err(Error::Lp(format!("phase 1 ended infeasible ({infeas:.2e})")));
    }
    drive_out_artificials(&mut t)?;

    run_phase(&mut t, false, &mut iterations)?;

    // multipliers under unit costs are the polar vertex
    let cost_b = vec![1.0; d];
    let normal = t.multipliers(&cost_b);
    let objective = normal
        .iter()
        .zip(direction)
        .map(|(c, g)| c * g)
        .sum::<f64>();
    let basis = t
        .basis
        .iter()
        .map(|&j| ((j >> 1), if j & 1 == 0 { 1i8 } else { -1i8 }))
        .collect();

    // feasibility audit of the returned normal
    let mut worst: f64 = 0.0;
    for row in &t.rows {
        let s: f64 = row.iter().zip(&normal).map(|(v, c)| v * c).sum();
        worst = worst.max(s.abs());
    }
    if worst > 1.0 + 5e-7 {
        return Err(Error::Lp(format!(
            "returned normal violates the polar by {:.2e}",
            worst - 1.0
        )));
    }

    Ok(PolarSolution {
        normal,
        objective,
        basis,
        iterations,
    })
}

fn run_phase(t: &mut Tableau, phase1: bool, iterations: &mut usize) -> Result<()> {
    let d = t.dim;
    let mut col = vec![0.0; d];
    let mut bland = false;
    let mut stall = 0usize;
    let mut since_refactor = 0usize;

    loop {
        *iterations += 1;
        if *iterations > MAX_ITERATIONS {
            return Err(Error::Lp("iteration limit reached".into()));
        }
        let cost = |j: usize| -> f64 {
            match (phase1, t.is_artificial(j)) {
                (true, true) => 1.0,
                (true, false) => 0.0,
                (false, true) => f64::INFINITY, // excluded
                (false, false) => 1.0,
            }
        };
        let cost_b: Vec<f64> = t.basis.iter().map(|&j| cost(j)).collect();
        let pi = t.multipliers(&cost_b);

        // price the signed vertex columns
        let mut enter: Option<(usize, f64)> = None;
        'pricing: for (vi, row) in t.rows.iter().enumerate() {
            let s: f64 = row.iter().zip(&pi).map(|(v, p)| v * p).sum();
            let base_cost = if phase1 { 0.0 } else { 1.0 };
            for (j, rc) in [(2 * vi, base_cost - s), (2 * vi + 1, base_cost + s)] {
                if rc < -REDUCED_COST_TOL {
                    if bland {
                        enter = Some((j, rc));
                        break 'pricing;
                    }
                    if enter.is_none_or(|(_, best)| rc < best) {
                        enter = Some((j, rc));
                    }
                }
            }
        }
        let Some((enter_col, _)) = enter else {
            return Ok(()); // optimal for this phase
        };

        t.column_into(enter_col, &mut col);
        let u = t.ftran(&col);

        // ratio test; Bland mode breaks ties toward the smallest basis id
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..d {
            if u[r] > PIVOT_TOL {
                let ratio = t.y[r] / u[r];
                let better = match leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < lratio - 1e-12
                            || (ratio < lratio + 1e-12
                                && if bland {
                                    t.basis[r] < t.basis[lr]
                                } else {
                                    u[r] > u[lr]
                                })
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        let Some((leave_row, theta)) = leave else {
            // the dual objective is bounded below by zero, so an unbounded
            // ray means the numerics went wrong
            return Err(Error::Lp("unbounded pivot column".into()));
        };

        if theta < DEGENERATE_STEP {
            stall += 1;
            if stall >= STALL_LIMIT {
                bland = true;
            }
        } else {
            stall = 0;
            bland = false;
        }

        t.pivot(leave_row, enter_col, &u);

        since_refactor += 1;
        if since_refactor >= REFACTOR_PERIOD {
            t.refactor()?;
            since_refactor = 0;
        }
    }
}

fn drive_out_artificials(t: &mut Tableau) -> Result<()> {
    let d = t.dim;
    let mut col = vec![0.0; d];
    for slot in 0..d {
        if !t.is_artificial(t.basis[slot]) {
            continue;
        }
        let n_real = 2 * t.rows.len();
        let mut done = false;
        for j in 0..n_real {
            t.column_into(j, &mut col);
            // only the leaving row's component of B^-1 a_j matters
            let row = &t.binv[slot * d..(slot + 1) * d];
            let ur: f64 = row.iter().zip(&col).map(|(b, c)| b * c).sum();
            if ur.abs() > 1e-7 && !t.basis.contains(&j) {
                let u = t.ftran(&col);
                t.pivot(slot, j, &u);
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::Lp("could not remove artificial from basis".into()));
        }
    }
    Ok(())
}
