//! Static SVG diagrams of path families.
//!
//! Columns `0..=n+1` run left to right and larger spectral indices are drawn
//! lower.  In root-of-unity mode a row `s` outside `[0, 2 ell)` is labelled
//! `s(r)` with `r = s mod 2 ell`.

use std::fmt::Write;

use crate::lattice::LatticeConfig;
use crate::paths::{corners, Path};

const CELL: i64 = 40;
const LEFT: i64 = 70;
const TOP: i64 = 40;
const PAD: i64 = 30;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"];

/// One family of paths drawn in a single colour.
#[derive(Debug, Clone, Default)]
pub struct PathGroup {
    pub label: String,
    pub paths: Vec<Path>,
}

pub fn row_label(s: i64, cfg: &LatticeConfig) -> String {
    let r = cfg.canonical_index(s);
    if r == s {
        s.to_string()
    } else {
        format!("{s}({r})")
    }
}

pub fn render_svg(groups: &[PathGroup], cfg: &LatticeConfig) -> String {
    let cols = cfg.n + 1;
    let all = groups.iter().flat_map(|g| g.paths.iter());
    let (lo, hi) = all
        .flat_map(|p| p.ys().iter().copied())
        .fold(None, |acc: Option<(i64, i64)>, y| Some(acc.map_or((y, y), |(a, b)| (a.min(y), b.max(y)))))
        .unwrap_or((0, cfg.period() - 1));
    let width = LEFT + cols * CELL + PAD;
    let height = TOP + (hi - lo) * CELL + PAD + 20 * groups.len() as i64;
    let px = |c: i64| LEFT + c * CELL;
    let py = |y: i64| TOP + (y - lo) * CELL;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#cccccc" stroke-width="1">"##);
    for c in 0..=cols {
        let _ = writeln!(s, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, py(lo), py(hi), x = px(c));
    }
    for y in lo..=hi {
        let _ = writeln!(s, r#"<line x1="{}" y1="{yy}" x2="{}" y2="{yy}"/>"#, px(0), px(cols), yy = py(y));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g font-family="monospace" font-size="12" fill="black">"#);
    for c in 0..=cols {
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{c}</text>"#, px(c), TOP - 15);
    }
    for y in lo..=hi {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            LEFT - 10,
            py(y) + 4,
            row_label(y, cfg)
        );
    }
    let _ = writeln!(s, "</g>");
    for (gi, g) in groups.iter().enumerate() {
        let colour = PALETTE[gi % PALETTE.len()];
        let _ = writeln!(s, r#"<g stroke="{colour}" fill="none" stroke-width="2">"#);
        for p in &g.paths {
            let pts: Vec<String> =
                p.ys().iter().enumerate().map(|(c, &y)| format!("{},{}", px(c as i64), py(y))).collect();
            let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g fill="{colour}">"#);
        for p in &g.paths {
            for (c, y) in corners(p).upper {
                let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4"/>"#, px(c), py(y));
            }
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" font-family="monospace" font-size="12" fill="{colour}">{}</text>"#,
            LEFT,
            py(hi) + PAD + 20 * gi as i64,
            escape(&g.label)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
