//! Minimal SVG rendering of planar instances and covers.

use std::fmt::Write;

use crate::geometry::{ConvexObject, Point};

/// Draws the objects, the centers, and a circle of `radius` around each
/// center. Non-planar objects are skipped.
pub fn render_svg(objects: &[ConvexObject], centers: &[Point], radius: f64) -> String {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut extend = |p: &Point, pad: f64| {
        if p.dim() == 2 {
            xs.extend([p.0[0] - pad, p.0[0] + pad]);
            ys.extend([p.0[1] - pad, p.0[1] + pad]);
        }
    };
    for o in objects {
        match o {
            ConvexObject::Disk(b) | ConvexObject::Ball(b) => extend(&b.center, b.radius),
            ConvexObject::Segment(s) => {
                extend(&s.p, 0.0);
                extend(&s.q, 0.0);
            }
            ConvexObject::Interval(_) => {}
        }
    }
    for c in centers {
        extend(c, radius);
    }
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let (x0, x1) = (fold(&xs, f64::min, f64::INFINITY), fold(&xs, f64::max, f64::NEG_INFINITY));
    let (y0, y1) = (fold(&ys, f64::min, f64::INFINITY), fold(&ys, f64::max, f64::NEG_INFINITY));
    let (x0, y0, w, h) =
        if xs.is_empty() { (0.0, 0.0, 1.0, 1.0) } else { (x0, y0, (x1 - x0).max(1e-9), (y1 - y0).max(1e-9)) };
    let stroke = w.max(h) / 400.0;
    let mut s = String::new();
    // Flip y so the picture matches the usual orientation.
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {} {w} {h}" width="800" height="{}">"#,
        -(y0 + h),
        (800.0 * h / w).round()
    );
    let _ = writeln!(s, r#"<g transform="scale(1,-1)" stroke-width="{stroke}">"#);
    for o in objects {
        match o {
            ConvexObject::Disk(b) | ConvexObject::Ball(b) if b.dim() == 2 => {
                let _ = writeln!(
                    s,
                    r##"<circle cx="{}" cy="{}" r="{}" fill="#9ab" stroke="#234"/>"##,
                    b.center.0[0], b.center.0[1], b.radius
                );
            }
            ConvexObject::Segment(g) if g.p.dim() == 2 => {
                let _ = writeln!(
                    s,
                    r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#234"/>"##,
                    g.p.0[0], g.p.0[1], g.q.0[0], g.q.0[1]
                );
            }
            _ => {}
        }
    }
    for c in centers.iter().filter(|c| c.dim() == 2) {
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="{radius}" fill="none" stroke="#c33"/>"##, c.0[0], c.0[1]);
        let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="{}" fill="#c33"/>"##, c.0[0], c.0[1], 2.0 * stroke);
    }
    s.push_str("</g>\n</svg>\n");
    s
}
