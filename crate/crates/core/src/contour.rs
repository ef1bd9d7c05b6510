//! Zero-level contour extraction by marching squares with bisection
//! polishing of the edge crossings.

use std::collections::BTreeMap;

/// A uniform lattice over `[x_min, x_max] × [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice {
    pub x_min: f64,
    pub x_max: f64,
    pub nx: usize,
    pub y_min: f64,
    pub y_max: f64,
    pub ny: usize,
}

impl Lattice {
    fn x(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    fn y(&self, j: usize) -> f64 {
        self.y_min + (self.y_max - self.y_min) * j as f64 / (self.ny - 1) as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Edge {
    /// (i, j) – (i + 1, j)
    H(usize, usize),
    /// (i, j) – (i, j + 1)
    V(usize, usize),
}

/// Polylines on which `f = 0`. Closed loops repeat their first vertex.
///
/// A lattice node counts as "inside" when `f < 0`. Crossings are refined by
/// bisection on the edge until the bracket is shorter than `tol` times the
/// edge length.
pub fn zero_contours<F: Fn(f64, f64) -> f64>(f: F, lattice: &Lattice, tol: f64) -> Vec<Vec<(f64, f64)>> {
    let (nx, ny) = (lattice.nx, lattice.ny);
    if nx < 2 || ny < 2 {
        return Vec::new();
    }
    let values: Vec<f64> = (0..ny)
        .flat_map(|j| (0..nx).map(move |i| (i, j)))
        .map(|(i, j)| f(lattice.x(i), lattice.y(j)))
        .collect();
    let at = |i: usize, j: usize| values[j * nx + i];
    let inside = |v: f64| v < 0.0;

    let mut segments: Vec<(Edge, Edge)> = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            let corners = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            let case = corners
                .iter()
                .enumerate()
                .fold(0u8, |acc, (b, &v)| acc | (u8::from(inside(v)) << b));
            let bottom = Edge::H(i, j);
            let right = Edge::V(i + 1, j);
            let top = Edge::H(i, j + 1);
            let left = Edge::V(i, j);
            match case {
                0 | 15 => {}
                1 | 14 => segments.push((left, bottom)),
                2 | 13 => segments.push((bottom, right)),
                3 | 12 => segments.push((left, right)),
                4 | 11 => segments.push((right, top)),
                6 | 9 => segments.push((bottom, top)),
                7 | 8 => segments.push((left, top)),
                5 | 10 => {
                    let cx = 0.5 * (lattice.x(i) + lattice.x(i + 1));
                    let cy = 0.5 * (lattice.y(j) + lattice.y(j + 1));
                    let center_inside = inside(f(cx, cy));
                    // corner 0 inside for case 5; pair edges so the center joins its side
                    if (case == 5) == center_inside {
                        segments.push((left, top));
                        segments.push((bottom, right));
                    } else {
                        segments.push((left, bottom));
                        segments.push((right, top));
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    let mut crossings: BTreeMap<Edge, (f64, f64)> = BTreeMap::new();
    let mut crossing = |e: Edge| -> (f64, f64) {
        *crossings.entry(e).or_insert_with(|| {
            let ((i0, j0), (i1, j1)) = match e {
                Edge::H(i, j) => ((i, j), (i + 1, j)),
                Edge::V(i, j) => ((i, j), (i, j + 1)),
            };
            let a = (lattice.x(i0), lattice.y(j0));
            let b = (lattice.x(i1), lattice.y(j1));
            polish(&f, a, b, at(i0, j0), tol)
        })
    };

    let mut by_edge: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (k, (a, b)) in segments.iter().enumerate() {
        by_edge.entry(*a).or_default().push(k);
        by_edge.entry(*b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut lines = Vec::new();

    // open chains start at an edge touched by a single segment
    let starts: Vec<Edge> = by_edge
        .iter()
        .filter(|(_, segs)| segs.len() == 1)
        .map(|(e, _)| *e)
        .collect();
    let walk = |start: Edge, used: &mut Vec<bool>| -> Option<Vec<Edge>> {
        let mut chain = vec![start];
        let mut cur = start;
        loop {
            let next = by_edge[&cur].iter().copied().find(|&k| !used[k]);
            let Some(k) = next else { break };
            used[k] = true;
            let (a, b) = segments[k];
            cur = if a == cur { b } else { a };
            chain.push(cur);
            if cur == start {
                break;
            }
        }
        (chain.len() > 1).then_some(chain)
    };
    for s in starts {
        if let Some(chain) = walk(s, &mut used) {
            lines.push(chain);
        }
    }
    for k in 0..segments.len() {
        if !used[k] {
            if let Some(chain) = walk(segments[k].0, &mut used) {
                lines.push(chain);
            }
        }
    }
    lines
        .into_iter()
        .map(|chain| chain.into_iter().map(&mut crossing).collect())
        .collect()
}

fn polish<F: Fn(f64, f64) -> f64>(f: &F, a: (f64, f64), b: (f64, f64), fa: f64, tol: f64) -> (f64, f64) {
    let lerp = |t: f64| (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t);
    let a_inside = fa < 0.0;
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let (x, y) = lerp(mid);
        let v = f(x, y);
        if v == 0.0 {
            return (x, y);
        }
        if (v < 0.0) == a_inside {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // return the endpoint with the smaller residual
    let (pl, ph) = (lerp(lo), lerp(hi));
    if f(pl.0, pl.1).abs() <= f(ph.0, ph.1).abs() {
        pl
    } else {
        ph
    }
}
