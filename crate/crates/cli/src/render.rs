//! Text renderings of a patch: SVG and the quad dump read by the original
//! degree counter.

use std::fmt::Write;

use aperiodic::substitution::{AnyPatch, Family, TileKind};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug)]
pub struct SvgStyle {
    pub stroke: f64,
    pub fill_by_kind: bool,
}

fn fill(kind: TileKind) -> &'static str {
    match kind {
        TileKind::Kite | TileKind::FatRhomb | TileKind::Square | TileKind::LargeHex => "#e8b04a",
        TileKind::Dart | TileKind::ThinRhomb | TileKind::Rhomb45 | TileKind::SmallHex => "#4a7fb5",
    }
}

/// One `<polygon>` per tile, y pointing up.
pub fn svg(patch: &AnyPatch, style: SvgStyle) -> String {
    let tiles = patch.embedded_tiles();
    let pts = tiles.iter().flat_map(|t| t.1.iter().copied());
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for (x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad = style.stroke.max(0.0) * 2.0;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        x0 - pad,
        -y1 - pad,
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
    .unwrap();
    for (kind, loop_) in &tiles {
        let points: Vec<String> = loop_
            .iter()
            .map(|(x, y)| format!("{x:.6},{:.6}", -y))
            .collect();
        let fill = if style.fill_by_kind {
            fill(*kind)
        } else {
            "none"
        };
        writeln!(
            out,
            r#"<polygon class="{kind}" points="{}" fill="{fill}" stroke="black" stroke-width="{}"/>"#,
            points.join(" "),
            style.stroke
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

/// `x` with 10 significant digits, in plain decimal notation.
pub fn significant(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (9 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// Four "x y" lines per tile and a closing "0 0". Coordinates are shifted
/// so that every one is at least 1: the reader starts its maximum at 0 and
/// treats the origin as the end of input.
pub fn compat_quad(patch: &AnyPatch) -> Result<String> {
    if patch.family() == Family::A2 {
        return Err(CliError::Data(
            "the quad dump holds 4-vertex tiles only; A2 tiles are hexagons".into(),
        ));
    }
    let tiles = patch.embedded_tiles();
    let min_x = tiles
        .iter()
        .flat_map(|t| t.1.iter().map(|p| p.0))
        .fold(f64::INFINITY, f64::min);
    let min_y = tiles
        .iter()
        .flat_map(|t| t.1.iter().map(|p| p.1))
        .fold(f64::INFINITY, f64::min);
    let mut out = String::new();
    for (_, loop_) in &tiles {
        for &(x, y) in loop_ {
            writeln!(
                out,
                "{} {}",
                significant(x - min_x + 1.0),
                significant(y - min_y + 1.0)
            )
            .unwrap();
        }
    }
    out.push_str("0 0\n");
    Ok(out)
}
