//! SVG drawing of a family seen on one triangular face.
//!
//! The chosen 2-face is mapped onto a fixed equilateral triangle. A cevian
//! whose foot face lies inside the triangle is drawn as the segments from
//! its foot to its apex vertices in the triangle; one whose foot is the
//! triangle's own interior point is drawn as a dot. Other cevians meet the
//! triangle only in apex vertices and are skipped.

use std::fmt::Write;

use crate::cevian::CevianFamily;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::point::BaryPoint;

const WIDTH: f64 = 480.0;
const HEIGHT: f64 = 440.0;
const CORNERS: [(f64, f64); 3] = [(240.0, 40.0), (40.0, 386.41), (440.0, 386.41)];

fn to_xy(face: &Face, p: &BaryPoint) -> (f64, f64) {
    let mut xy = (0.0, 0.0);
    for (slot, &i) in face.indices().iter().enumerate() {
        let w = p.coord(i).to_f64();
        xy.0 += w * CORNERS[slot].0;
        xy.1 += w * CORNERS[slot].1;
    }
    xy
}

/// Renders `fam` on the 2-face `face`. `witness`, when given, is projected
/// onto the face and marked.
pub fn render(fam: &CevianFamily, face: &Face, witness: Option<&BaryPoint>) -> Result<String> {
    if face.len() != 3 || face.ambient_n() != fam.ambient_n() {
        return Err(Error::BadFace {
            indices: face.indices().to_vec(),
            ambient_n: fam.ambient_n(),
        });
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
    let pts: Vec<String> = CORNERS.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    let _ = writeln!(
        out,
        r##"<polygon points="{}" fill="none" stroke="#000000" stroke-width="1.5"/>"##,
        pts.join(" ")
    );

    for c in fam.members() {
        let base = c.base();
        if !base.is_subface_of(face) {
            continue;
        }
        let (fx, fy) = to_xy(face, c.foot());
        for &u in c.apex().indices().iter().filter(|&&u| face.contains(u)) {
            let (vx, vy) = to_xy(face, &BaryPoint::vertex(u, face.ambient_n()));
            let _ = writeln!(
                out,
                r##"<line x1="{fx:.2}" y1="{fy:.2}" x2="{vx:.2}" y2="{vy:.2}" stroke="#1f5fa8" stroke-width="1"/>"##
            );
        }
        let _ = writeln!(out, r##"<circle cx="{fx:.2}" cy="{fy:.2}" r="3" fill="#1f5fa8"/>"##);
        let label: String = base.indices().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="serif" font-size="12">Q{label}</text>"#,
            fx + 5.0,
            fy + 14.0
        );
    }

    if let Some(x) = witness {
        if let Ok(proj) = x.restrict(face) {
            let (wx, wy) = to_xy(face, &proj);
            let _ = writeln!(
                out,
                r##"<circle cx="{wx:.2}" cy="{wy:.2}" r="4" fill="none" stroke="#b22222" stroke-width="1.5"/>"##
            );
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-family="serif" font-size="12">X</text>"#,
                wx + 6.0,
                wy - 6.0
            );
        }
    }

    for (slot, &i) in face.indices().iter().enumerate() {
        let (x, y) = CORNERS[slot];
        let dy = if slot == 0 { -10.0 } else { 18.0 };
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-family="serif" font-size="14" text-anchor="middle">P{i}</text>"#,
            x,
            y + dy
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
