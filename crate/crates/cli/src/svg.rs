//! Self-contained SVG 1.1 output for the two plot kinds.

use std::fmt::Write;

const NUM: usize = 2;

fn n(v: f64) -> String {
    crate::report::fixed(v, NUM)
}

pub fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn header(out: &mut String, width: u32, height: u32, title: &str) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
}

/// Directional diagram of `ν12(θ)`: radius grows with `ν12`, the thin circle
/// is `ν12 = 0`. Input covers θ ∈ [0°, 90°] and is mirrored to the full turn.
pub fn polar_nu12(theta_deg: &[f64], nu: &[f64], title: &str) -> String {
    let (cx, cy, radius) = (260.0, 260.0, 200.0);
    let data_min = nu.iter().copied().fold(f64::INFINITY, f64::min);
    let data_max = nu.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let vmin = data_min.min(0.0);
    let vmax = data_max.max(0.0);
    let span = if vmax > vmin { vmax - vmin } else { 1.0 };
    let lo = vmin - 0.15 * span;
    let hi = vmax;
    let r = |v: f64| radius * (v - lo) / (hi - lo);

    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(4 * theta_deg.len());
    for (&t, &v) in theta_deg.iter().zip(nu) {
        for phi in [t, 180.0 - t, 180.0 + t, 360.0 - t] {
            pts.push((phi.rem_euclid(360.0), v));
        }
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9);

    let mut out = String::new();
    header(&mut out, 520, 540, title);
    let _ = writeln!(
        out,
        r##"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="#bbbbbb"/>"##,
        n(radius)
    );
    for phi in (0..360).step_by(30) {
        let a = f64::from(phi).to_radians();
        let _ = writeln!(
            out,
            r##"<line x1="{cx}" y1="{cy}" x2="{}" y2="{}" stroke="#dddddd"/>"##,
            n(cx + radius * a.cos()),
            n(cy - radius * a.sin())
        );
        let _ = writeln!(
            out,
            r##"<text x="{}" y="{}" text-anchor="middle" fill="#666666">{phi}°</text>"##,
            n(cx + (radius + 18.0) * a.cos()),
            n(cy - (radius + 18.0) * a.sin() + 4.0)
        );
    }
    let _ = writeln!(
        out,
        r##"<circle class="zero" cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="black" stroke-width="0.5"/>"##,
        n(r(0.0))
    );
    let mut d = String::new();
    for (k, &(phi, v)) in pts.iter().enumerate() {
        let a = phi.to_radians();
        let _ = write!(
            d,
            "{}{},{} ",
            if k == 0 { "M" } else { "L" },
            n(cx + r(v) * a.cos()),
            n(cy - r(v) * a.sin())
        );
    }
    d.push('Z');
    let _ = writeln!(
        out,
        r##"<path class="nu12" d="{d}" fill="none" stroke="#c0392b" stroke-width="1.5"/>"##
    );
    let _ = writeln!(
        out,
        r#"<text x="10" y="520">ν12 from {} to {}; thin circle: ν12 = 0</text>"#,
        n(data_min),
        n(data_max)
    );
    out.push_str("</svg>\n");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Marker {
    EtaMin,
    NuMin,
    ZoneMax,
}

impl Marker {
    pub fn from_kind(kind: &str) -> Option<Self> {
        match kind {
            "eta_min" => Some(Self::EtaMin),
            "nu_min" => Some(Self::NuMin),
            "zone_max" => Some(Self::ZoneMax),
            _ => None,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Self::EtaMin => "min η",
            Self::NuMin => "min ν12",
            Self::ZoneMax => "max Δθ",
        }
    }

    fn draw(self, out: &mut String, x: f64, y: f64) {
        let _ = match self {
            Self::EtaMin => writeln!(
                out,
                r#"<circle class="eta-min" cx="{}" cy="{}" r="5" fill="none" stroke="black"/>"#,
                n(x),
                n(y)
            ),
            Self::NuMin => writeln!(
                out,
                r#"<path class="nu-min" d="M{},{} h12 M{},{} v12" stroke="black" stroke-width="1.5"/>"#,
                n(x - 6.0),
                n(y),
                n(x),
                n(y - 6.0)
            ),
            Self::ZoneMax => writeln!(
                out,
                r#"<rect class="zone-max" x="{}" y="{}" width="10" height="10" fill="none" stroke="black"/>"#,
                n(x - 5.0),
                n(y - 5.0)
            ),
        };
    }
}

/// The lamination domain with `Ξ` contours and marked points.
pub fn domain_map(contours: &[Vec<(f64, f64)>], markers: &[(Marker, f64, f64)], title: &str) -> String {
    let (x0, y0, side) = (50.0, 30.0, 400.0);
    let px = |xi3: f64| x0 + (xi3 + 1.0) / 2.0 * side;
    let py = |xi1: f64| y0 + (1.0 - xi1) / 2.0 * side;

    let mut out = String::new();
    header(&mut out, 640, 480, title);
    let _ = writeln!(
        out,
        r##"<rect x="{x0}" y="{y0}" width="{side}" height="{side}" fill="none" stroke="#bbbbbb"/>"##
    );
    let mut d = String::new();
    for k in 0..=200 {
        let xi3 = -1.0 + k as f64 / 100.0;
        let _ = write!(
            d,
            "{}{},{} ",
            if k == 0 { "M" } else { "L" },
            n(px(xi3)),
            n(py(2.0 * xi3 * xi3 - 1.0))
        );
    }
    d.push('Z');
    let _ = writeln!(out, r##"<path class="domain" d="{d}" fill="#f4f4f4" stroke="black"/>"##);
    for line in contours {
        let mut d = String::new();
        for (k, &(xi3, xi1)) in line.iter().enumerate() {
            let _ = write!(d, "{}{},{} ", if k == 0 { "M" } else { "L" }, n(px(xi3)), n(py(xi1)));
        }
        let _ = writeln!(
            out,
            r##"<path class="xi-boundary" d="{}" fill="none" stroke="#2c7fb8" stroke-width="1.5"/>"##,
            d.trim_end()
        );
    }
    for &(m, xi3, xi1) in markers {
        m.draw(&mut out, px(xi3), py(xi1));
    }
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">ξ3</text>"#,
        x0 + side / 2.0,
        y0 + side + 30.0
    );
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle">ξ1</text>"#,
        x0 - 30.0,
        y0 + side / 2.0
    );
    for (v, label) in [(-1.0, "−1"), (0.0, "0"), (1.0, "1")] {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{label}</text>"#,
            n(px(v)),
            y0 + side + 15.0
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{label}</text>"#,
            x0 - 6.0,
            n(py(v) + 4.0)
        );
    }

    // legend
    let (lx, ly) = (470.0, 50.0);
    let _ = writeln!(out, r#"<g class="legend">"#);
    let _ = writeln!(
        out,
        r##"<path d="M{},{} h20" stroke="#2c7fb8" stroke-width="1.5"/><text x="{}" y="{}">Ξ boundary (η = 0)</text>"##,
        lx,
        ly,
        lx + 28.0,
        ly + 4.0
    );
    for (k, m) in [Marker::EtaMin, Marker::NuMin, Marker::ZoneMax].into_iter().enumerate() {
        let y = ly + 22.0 * (k + 1) as f64;
        m.draw(&mut out, lx + 10.0, y);
        let _ = writeln!(out, r#"<text x="{}" y="{}">{}</text>"#, lx + 28.0, y + 4.0, m.label());
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}
