//! Derivative-free minimizers used by the refinement stages.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum1d {
    pub x: f64,
    pub f: f64,
}

/// Golden-section search for a minimum of `f` on `[a, b]`.
///
/// The endpoints are evaluated too, so a monotone `f` returns the lower
/// end of the interval rather than an interior point near it.
pub fn golden_section<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, tol: f64) -> Minimum1d {
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let fa = f(lo);
    let fb = f(hi);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = if f1 <= f2 {
        Minimum1d { x: x1, f: f1 }
    } else {
        Minimum1d { x: x2, f: f2 }
    };
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    if fa <= best.f {
        best = Minimum1d { x: a, f: fa };
    }
    if fb < best.f {
        best = Minimum1d { x: b, f: fb };
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatternSearch {
    pub initial_step: f64,
    pub min_step: f64,
    pub max_evals: usize,
}

impl Default for PatternSearch {
    fn default() -> Self {
        Self {
            initial_step: 1e-2,
            min_step: 1e-10,
            max_evals: 20_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum2d {
    pub x: [f64; 2],
    pub f: f64,
    pub evals: usize,
}

impl PatternSearch {
    /// Compass search on the box `[lo, hi]`, trial points clamped to it.
    ///
    /// Only strict improvements are accepted; the poll order is fixed, so
    /// the result is deterministic.
    pub fn minimize<F: FnMut([f64; 2]) -> f64>(&self, mut f: F, x0: [f64; 2], lo: [f64; 2], hi: [f64; 2]) -> Minimum2d {
        let clamp = |x: [f64; 2]| [x[0].clamp(lo[0], hi[0]), x[1].clamp(lo[1], hi[1])];
        let mut x = clamp(x0);
        let mut fx = f(x);
        let mut evals = 1;
        let mut step = self.initial_step;
        const DIRS: [[f64; 2]; 4] = [[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]];
        while step >= self.min_step && evals < self.max_evals {
            let mut improved = false;
            for d in DIRS {
                let y = clamp([x[0] + step * d[0], x[1] + step * d[1]]);
                if y == x {
                    continue;
                }
                let fy = f(y);
                evals += 1;
                if fy < fx {
                    x = y;
                    fx = fy;
                    improved = true;
                    break;
                }
            }
            if !improved {
                step *= 0.5;
            }
        }
        Minimum2d { x, f: fx, evals }
    }
}
