use std::fmt::Write;

use super::{LatticePath, Model, Step, Tiling};

/// The path drawn on its `k x (n-1)` grid, top row first. Visited points
/// are `o`, the rest `.`.
pub fn path_ascii(path: &LatticePath) -> String {
    let (k, n) = (path.k() as usize, path.n());
    let width = 2 * k + 1;
    // rows[2y] holds points at height y, rows[2y+1] the gap above it
    let mut rows = vec![vec![' '; width]; 2 * n - 1];
    for y in 0..n {
        for x in 0..=k {
            rows[2 * y][2 * x] = '.';
        }
    }
    let (mut x, mut y) = (0usize, 0usize);
    rows[0][0] = 'o';
    for st in path.steps() {
        match st {
            Step::East => {
                rows[2 * y][2 * x + 1] = '-';
                x += 1;
            }
            Step::North => {
                rows[2 * y + 1][2 * x] = '|';
                y += 1;
            }
        }
        rows[2 * y][2 * x] = 'o';
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const CELL: usize = 24;
const MARGIN: usize = 16;
const CAPTION: usize = 18;

fn document(width: usize, height: usize, body: &str) -> String {
    format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"11\">\n{body}</svg>\n"
    )
}

fn caption(out: &mut String, x: usize, y: usize, text: &str) {
    let _ = writeln!(out, "  <text x=\"{x}\" y=\"{y}\">{text}</text>");
}

/// One panel per path, side by side: the grid, the path with each East
/// step labelled by its variable, and the signed weight underneath.
pub fn paths_svg(paths: &[LatticePath], s: u32, model: Model) -> String {
    let Some(first) = paths.first() else {
        return document(2 * MARGIN, 2 * MARGIN, "");
    };
    let (k, n) = (first.k() as usize, first.n());
    let panel_w = (k.max(1)) * CELL + 2 * MARGIN;
    let panel_h = (n - 1) * CELL + 2 * MARGIN + CAPTION;
    let mut body = String::new();
    for (i, path) in paths.iter().enumerate() {
        let ox = i * panel_w + MARGIN;
        let top = MARGIN;
        let base = top + (n - 1) * CELL;
        let _ = writeln!(body, "  <g stroke=\"#bbb\" stroke-width=\"1\">");
        for y in 0..n {
            let _ = writeln!(body, "    <line x1=\"{ox}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\"/>", base - y * CELL, ox + k * CELL);
        }
        for x in 0..=k {
            let _ = writeln!(body, "    <line x1=\"{0}\" y1=\"{top}\" x2=\"{0}\" y2=\"{base}\"/>", ox + x * CELL);
        }
        body.push_str("  </g>\n");
        let (mut x, mut y) = (0usize, 0usize);
        let mut points = format!("{ox},{base}");
        let labels = path.labels();
        let mut east = 0;
        for st in path.steps() {
            match st {
                Step::East => {
                    let _ = writeln!(
                        body,
                        "  <text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\">x{}</text>",
                        ox + x * CELL + CELL / 2,
                        base - y * CELL - 4,
                        labels[east]
                    );
                    east += 1;
                    x += 1;
                }
                Step::North => y += 1,
            }
            let _ = write!(points, " {},{}", ox + x * CELL, base - y * CELL);
        }
        let _ = writeln!(body, "  <polyline points=\"{points}\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>");
        let sign = if model == Model::H && path.sign(s) < 0 { "-" } else { "" };
        caption(&mut body, ox, base + CAPTION + 4, &format!("{sign}{}", path.weight()));
    }
    document(paths.len() * panel_w, panel_h, &body)
}

/// One row of squares per tiling, with its signed weight to the right.
pub fn tilings_svg(tilings: &[Tiling], s: u32, model: Model) -> String {
    let len = tilings.first().map_or(0, |t| t.cells().len());
    let row_h = CELL + 8;
    let width = 2 * MARGIN + len * CELL + 120;
    let height = 2 * MARGIN + tilings.len() * row_h;
    let mut body = String::new();
    for (i, t) in tilings.iter().enumerate() {
        let y = MARGIN + i * row_h;
        for (j, c) in t.cells().iter().enumerate() {
            let fill = match c {
                super::Cell::Red => "#d62728",
                super::Cell::Green => "#2ca02c",
            };
            let _ = writeln!(
                body,
                "  <rect x=\"{}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"#000\"/>",
                MARGIN + j * CELL
            );
        }
        let sign = if model == Model::H && t.sign(s) < 0 { "-" } else { "" };
        caption(&mut body, MARGIN + len * CELL + 10, y + CELL / 2 + 4, &format!("{sign}{}", t.weight()));
    }
    document(width, height, &body)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascii_art() {
        let p: LatticePath = "EENEN".parse().unwrap();
        assert_eq!(path_ascii(&p), ". . . o\n      |\n. . o-o\n    |\no-o-o .\n");
        assert_eq!(path_ascii(&LatticePath::from_runs(&[0])), "o\n");
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let paths = super::super::enum_paths(3, 3, 2, Model::H);
        let svg = paths_svg(&paths, 2, Model::H);
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(svg.contains(">-x1^3<"));
        let tilings: Vec<Tiling> = paths.iter().map(LatticePath::to_tiling).collect();
        let svg = tilings_svg(&tilings, 2, Model::H);
        assert_eq!(svg.matches("<rect").count(), 20);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
