//! Schematic ASCII and SVG drawings of fronts and ruling resolutions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::front::{EventKind, Front};
use crate::ruling::{check_ruling, RulingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("highlighted switches are not a normal ruling: {0}")]
    InvalidRuling(#[from] RulingError),
}

/// Draws the front. With a highlight, its switches are drawn resolved and
/// strands are grouped by eye.
pub fn render(
    front: &Front,
    highlight: Option<&[usize]>,
    format: RenderFormat,
) -> Result<String, RenderError> {
    let switches = match highlight {
        Some(labels) => Some(check_ruling(front, labels)?.switches),
        None => None,
    };
    Ok(match format {
        RenderFormat::Ascii => ascii(front, switches.as_ref()),
        RenderFormat::Svg => svg(front, switches.as_ref()),
    })
}

const CELL: usize = 3;

fn put(grid: &mut [Vec<char>], row: usize, col: usize, s: &str) {
    for (i, ch) in s.chars().enumerate() {
        grid[row][col + i] = ch;
    }
}

/// Text drawing: strand `j` occupies row `2(j-1)`, with gap rows between.
/// Crossing labels run along the top line.
pub fn ascii(front: &Front, switches: Option<&BTreeSet<usize>>) -> String {
    let rows = 2 * front.max_strands() - 1;
    let width = CELL * front.len();
    let mut header = vec![' '; width];
    let mut grid = vec![vec![' '; width]; rows];
    for (i, e) in front.events().iter().enumerate() {
        let col = CELL * i;
        let k = e.level;
        let (upper, lower) = (2 * (k - 1), 2 * k);
        // Other strands are drawn at their positions on the wider side.
        let shown = match e.kind {
            EventKind::LeftCusp => front.profile()[i + 1],
            _ => front.profile()[i],
        };
        for p in (1..=shown).filter(|&p| p != k && p != k + 1) {
            put(&mut grid, 2 * (p - 1), col, "---");
        }
        match e.kind {
            EventKind::LeftCusp => {
                put(&mut grid, upper, col, " /-");
                put(&mut grid, upper + 1, col, "<  ");
                put(&mut grid, lower, col, " \\-");
            }
            EventKind::RightCusp => {
                put(&mut grid, upper, col, "-\\ ");
                put(&mut grid, upper + 1, col, "  >");
                put(&mut grid, lower, col, "-/ ");
            }
            EventKind::Crossing => {
                let label = front.crossing_label(i).unwrap();
                let text = format!("{label:>3}");
                for (j, ch) in text.chars().skip(text.len() - CELL).enumerate() {
                    header[col + j] = ch;
                }
                if switches.is_some_and(|s| s.contains(&label)) {
                    put(&mut grid, upper, col, "---");
                    put(&mut grid, upper + 1, col, " = ");
                    put(&mut grid, lower, col, "---");
                } else {
                    put(&mut grid, upper, col, "-\\ ");
                    put(&mut grid, upper + 1, col, " X ");
                    put(&mut grid, lower, col, "-/ ");
                }
            }
        }
    }
    let mut out = String::new();
    for line in std::iter::once(&header).chain(grid.iter()) {
        let s: String = line.iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

const DX: i64 = 40;
const DY: i64 = 30;
const MARGIN: i64 = 30;

const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];
const DASHES: [&str; 4] = ["none", "6 3", "2 3", "8 3 2 3"];

fn y(position: usize) -> i64 {
    MARGIN + (position as i64 - 1) * DY
}

fn x(event: usize) -> i64 {
    MARGIN + DX / 2 + event as i64 * DX
}

struct Path {
    group: usize,
    points: Vec<(i64, i64)>,
}

/// Traces every strand as an x-monotone path. Without switches these are the
/// arcs of the front. With switches, labels are kept through resolved
/// crossings, so each path is one branch of an eye.
fn trace(front: &Front, switches: Option<&BTreeSet<usize>>) -> Vec<Path> {
    let mut paths: Vec<Path> = Vec::with_capacity(front.arc_count());
    let components = front.components();
    let mut at: Vec<usize> = Vec::new();
    let mut left_cusps = 0;
    for (i, e) in front.events().iter().enumerate() {
        let k = e.level;
        let idx = k - 1;
        let cusp = (x(i), y(k) + DY / 2);
        match e.kind {
            EventKind::LeftCusp => {
                for branch in 0..2 {
                    let label = 2 * left_cusps + branch;
                    let group = match switches {
                        Some(_) => left_cusps,
                        None => components.arc_component[label],
                    };
                    paths.push(Path {
                        group,
                        points: vec![cusp],
                    });
                }
                at.splice(idx..idx, [2 * left_cusps, 2 * left_cusps + 1]);
                left_cusps += 1;
            }
            EventKind::Crossing => {
                let label = front.crossing_label(i).unwrap();
                if !switches.is_some_and(|s| s.contains(&label)) {
                    at.swap(idx, idx + 1);
                }
            }
            EventKind::RightCusp => {
                for l in at.drain(idx..idx + 2) {
                    paths[l].points.push(cusp);
                }
            }
        }
        for (p, &l) in at.iter().enumerate() {
            paths[l].points.push((x(i) + DX / 2, y(p + 1)));
        }
    }
    paths
}

/// SVG drawing: strands as polylines grouped per component, or per eye when
/// a ruling is highlighted, each group in its own stroke style.
pub fn svg(front: &Front, switches: Option<&BTreeSet<usize>>) -> String {
    let width = 2 * MARGIN + DX * (front.len() as i64 + 1);
    let height = 2 * MARGIN + DY * (front.max_strands() as i64 - 1);
    let paths = trace(front, switches);
    let groups = paths.iter().map(|p| p.group).max().map_or(0, |g| g + 1);
    let kind = if switches.is_some() {
        "eye"
    } else {
        "component"
    };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        s,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    )
    .unwrap();
    for g in 0..groups {
        let color = COLORS[g % COLORS.len()];
        let dash = DASHES[(g / COLORS.len()) % DASHES.len()];
        writeln!(
            s,
            r#"<g class="{kind}" id="{kind}-{}" fill="none" stroke="{color}" stroke-width="2" stroke-dasharray="{dash}">"#,
            g + 1
        )
        .unwrap();
        for p in paths.iter().filter(|p| p.group == g) {
            let pts: Vec<String> = p.points.iter().map(|(a, b)| format!("{a},{b}")).collect();
            writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" ")).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    for (i, e) in front.events().iter().enumerate() {
        let (cx, cy) = (x(i), y(e.level) + DY / 2);
        match e.kind {
            EventKind::LeftCusp | EventKind::RightCusp => {
                let side = if e.kind == EventKind::LeftCusp {
                    "left"
                } else {
                    "right"
                };
                writeln!(
                    s,
                    r#"<circle class="cusp {side}" cx="{cx}" cy="{cy}" r="3" fill="black"/>"#
                )
                .unwrap();
            }
            EventKind::Crossing => {
                let label = front.crossing_label(i).unwrap();
                let class = if switches.is_some_and(|sw| sw.contains(&label)) {
                    "label switch"
                } else {
                    "label"
                };
                writeln!(
                    s,
                    r#"<text class="{class}" x="{cx}" y="{}" font-size="10" text-anchor="middle">{label}</text>"#,
                    cy - DY / 2 - 4
                )
                .unwrap();
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{eye, stacked_unlink};

    fn trefoil() -> Front {
        crate::dsl::parse("L1 L3 X2 X2 X2 R1 R1").unwrap().front
    }

    #[test]
    fn ascii_eye() {
        let text = render(&eye(), None, RenderFormat::Ascii).unwrap();
        assert_eq!(text, "\n /--\\\n<    >\n \\--/\n");
        assert_eq!(text.matches('<').count(), 1);
        assert_eq!(text.matches('>').count(), 1);
    }

    #[test]
    fn ascii_labels_crossings() {
        let text = render(&trefoil(), None, RenderFormat::Ascii).unwrap();
        let header = text.lines().next().unwrap();
        assert_eq!(
            header.split_whitespace().collect::<Vec<_>>(),
            ["1", "2", "3"]
        );
        assert_eq!(text.matches('X').count(), 3);
        let resolved = render(&trefoil(), Some(&[1]), RenderFormat::Ascii).unwrap();
        assert_eq!(resolved.matches('X').count(), 2);
        assert_eq!(resolved.matches('=').count(), 1);
    }

    #[test]
    fn invalid_highlight() {
        assert!(matches!(
            render(&trefoil(), Some(&[2]), RenderFormat::Svg),
            Err(RenderError::InvalidRuling(_))
        ));
    }

    #[test]
    fn svg_groups() {
        let plain = render(&stacked_unlink(2).unwrap(), None, RenderFormat::Svg).unwrap();
        assert_eq!(plain.matches(r#"class="component""#).count(), 2);
        let resolved = render(&trefoil(), Some(&[1]), RenderFormat::Svg).unwrap();
        assert_eq!(resolved.matches(r#"class="eye""#).count(), 2);
        assert_eq!(resolved.matches("<polyline").count(), 4);
        assert_eq!(resolved.matches(r#"class="label switch""#).count(), 1);
        assert_eq!(resolved.matches("<circle").count(), 4);
    }
}
