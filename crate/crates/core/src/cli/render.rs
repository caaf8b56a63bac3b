//! Standalone SVG rendering: red and green paths, bounce paths (dashed),
//! labels, and decorations as dots. Every step is its own `<line>` with a
//! class such as `red-n` or `bounce-d`, so output can be inspected by
//! counting elements.

use std::fmt::Write as _;

use serde_json::Value;

use super::{parse_lp, parse_pf, parse_polyomino, parse_reduced, CliResult, ObjType};
use crate::labelled_objects::PartiallyLabelledDyckPath;
use crate::polyomino_core::{Decoration, DecorationKind};

const UNIT: f64 = 30.0;
const MARGIN: f64 = 20.0;

struct Canvas {
    width: u32,
    height: u32,
    body: String,
}

impl Canvas {
    fn new(width: u32, height: u32) -> Self {
        let mut c = Self {
            width,
            height,
            body: String::new(),
        };
        c.body.push_str("<g class=\"grid\">\n");
        for x in 0..=width {
            if height > 0 {
                c.raw_line("grid-line", (x as f64, 0.0), (x as f64, height as f64));
            }
        }
        for y in 0..=height {
            if width > 0 {
                c.raw_line("grid-line", (0.0, y as f64), (width as f64, y as f64));
            }
        }
        c.body.push_str("</g>\n");
        c
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (MARGIN + x * UNIT, MARGIN + (self.height as f64 - y) * UNIT)
    }

    fn raw_line(&mut self, class: &str, a: (f64, f64), b: (f64, f64)) {
        let (x1, y1) = self.px(a);
        let (x2, y2) = self.px(b);
        let _ = writeln!(
            self.body,
            "<line class=\"{class}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\"/>"
        );
    }

    /// One `<line>` per step of a 0/1 path (`1` = north).
    fn path(&mut self, prefix: &str, start: (u32, u32), steps: &[u8]) -> Vec<(u32, u32)> {
        let (mut x, mut y) = start;
        let mut pts = vec![(x, y)];
        for &s in steps {
            let (nx, ny, tag) = if s == 1 {
                (x, y + 1, "n")
            } else {
                (x + 1, y, "e")
            };
            self.raw_line(
                &format!("{prefix}-{tag}"),
                (x as f64, y as f64),
                (nx as f64, ny as f64),
            );
            (x, y) = (nx, ny);
            pts.push((x, y));
        }
        pts
    }

    fn dot(&mut self, at: (f64, f64)) {
        let (cx, cy) = self.px(at);
        let _ = writeln!(
            self.body,
            "<circle class=\"decoration\" cx=\"{cx}\" cy=\"{cy}\" r=\"5\"/>"
        );
    }

    fn label(&mut self, at: (f64, f64), text: &str) {
        let (x, y) = self.px(at);
        let _ = writeln!(
            self.body,
            "<text class=\"label\" x=\"{x}\" y=\"{}\" text-anchor=\"middle\">{text}</text>",
            y + 5.0
        );
    }

    fn finish(self) -> String {
        let w = 2.0 * MARGIN + self.width as f64 * UNIT;
        let h = 2.0 * MARGIN + self.height as f64 * UNIT;
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n\
             <style>\n\
             .grid-line {{ stroke: #ddd; stroke-width: 1; }}\n\
             .red-n, .red-e {{ stroke: #c00; stroke-width: 3; }}\n\
             .green-n, .green-e {{ stroke: #080; stroke-width: 3; }}\n\
             .path-n, .path-e {{ stroke: #000; stroke-width: 3; }}\n\
             .diagonal {{ stroke: #999; stroke-width: 1; }}\n\
             .bounce-n, .bounce-e, .bounce-d {{ stroke: #06c; stroke-width: 2; stroke-dasharray: 5 3; }}\n\
             .decoration {{ fill: #000; }}\n\
             .label {{ font-family: sans-serif; font-size: 14px; }}\n\
             </style>\n{}</svg>\n",
            self.body
        )
    }
}

fn midpoint(a: (u32, u32), b: (u32, u32)) -> (f64, f64) {
    ((a.0 + b.0) as f64 / 2.0, (a.1 + b.1) as f64 / 2.0)
}

/// Midpoint of the step producing area-word letter `letter`: letters come
/// from the ones of the interlacing `(r1, 1-g1, r2, 1-g2, ...)`.
fn letter_step(
    red: &[u8],
    green: &[u8],
    red_pts: &[(u32, u32)],
    green_pts: &[(u32, u32)],
    letter: usize,
) -> Option<(f64, f64)> {
    let mut seen = 0usize;
    for i in 0..red.len() {
        if red[i] == 1 {
            if seen == letter {
                return Some(midpoint(red_pts[i], red_pts[i + 1]));
            }
            seen += 1;
        }
        if green[i] == 0 {
            if seen == letter {
                return Some(midpoint(green_pts[i], green_pts[i + 1]));
            }
            seen += 1;
        }
    }
    None
}

fn decorate(
    c: &mut Canvas,
    decos: &[Decoration],
    red: &[u8],
    green: &[u8],
    red_pts: &[(u32, u32)],
    green_pts: &[(u32, u32)],
    artificial_zero: bool,
) {
    for d in decos {
        let at = match d.kind {
            DecorationKind::Rise => {
                if artificial_zero && d.pos == 0 {
                    Some((0.0, 0.0))
                } else {
                    let j = if artificial_zero { d.pos - 1 } else { d.pos };
                    letter_step(red, green, red_pts, green_pts, j)
                }
            }
            DecorationKind::RedPeak => red_pts.get(d.pos).map(|&(x, y)| (x as f64, y as f64)),
            DecorationKind::GreenPeak => green_pts.get(d.pos).map(|&(x, y)| (x as f64, y as f64)),
        };
        if let Some(at) = at {
            c.dot(at);
        }
    }
}

/// Label each north step of `path`, in the cell to its right. Zero labels
/// are left blank.
fn labels_on(c: &mut Canvas, pts: &[(u32, u32)], path: &[u8], labels: &[u32]) {
    let mut row = 0;
    for (i, &s) in path.iter().enumerate() {
        if s == 1 {
            if labels[row] != 0 {
                let (x, y) = pts[i];
                c.label((x as f64 + 0.5, y as f64 + 0.5), &labels[row].to_string());
            }
            row += 1;
        }
    }
}

pub fn render(t: ObjType, v: &Value) -> CliResult<String> {
    Ok(match t {
        ObjType::Polyomino => {
            let d = parse_polyomino(v)?;
            let p = &d.obj;
            let mut c = Canvas::new(p.m() as u32, p.n() as u32);
            let rp = c.path("red", (0, 0), p.red());
            let gp = c.path("green", (0, 0), p.green());
            c.path("bounce", (0, 0), &p.bounce_word().steps);
            decorate(&mut c, &d.decorations, p.red(), p.green(), &rp, &gp, false);
            c.finish()
        }
        ObjType::Reduced => {
            let d = parse_reduced(v)?;
            let p = &d.obj;
            let mut c = Canvas::new(p.m() as u32, p.n() as u32);
            let rp = c.path("red", (0, 0), p.red());
            let gp = c.path("green", (0, 0), p.green());
            c.path("bounce", (0, 0), &p.bounce_word().steps);
            decorate(&mut c, &d.decorations, p.red(), p.green(), &rp, &gp, true);
            c.finish()
        }
        ObjType::Pf | ObjType::Pdp => {
            let d = parse_pf(v, t == ObjType::Pdp)?;
            let pf = &d.obj;
            let n = pf.size() as u32;
            let mut c = Canvas::new(n, n);
            c.raw_line("diagonal", (0.0, 0.0), (n as f64, n as f64));
            let pts = c.path("path", (0, 0), pf.path());
            labels_on(&mut c, &pts, pf.path(), pf.labels());
            let north: Vec<usize> = (0..pf.path().len())
                .filter(|&i| pf.path()[i] == 1)
                .collect();
            for row in d.positions() {
                let i = north[row];
                c.dot(midpoint(pts[i], pts[i + 1]));
            }
            if t == ObjType::Pdp {
                let pdp = PartiallyLabelledDyckPath::new(pf.path().to_vec(), pf.labels().to_vec())
                    .map_err(super::usage)?;
                let (mut x, mut y) = (0u32, 0u32);
                for s in pdp.bounce_trace().1 {
                    let (nx, ny, class) = match s {
                        b'N' => (x, y + 1, "bounce-n"),
                        b'E' => (x + 1, y, "bounce-e"),
                        _ => (x + 1, y + 1, "bounce-d"),
                    };
                    c.raw_line(class, (x as f64, y as f64), (nx as f64, ny as f64));
                    (x, y) = (nx, ny);
                }
            }
            c.finish()
        }
        ObjType::Lp => {
            let lp = parse_lp(v)?;
            let p = lp.poly();
            let mut c = Canvas::new(p.m() as u32, p.n() as u32);
            let rp = c.path("red", (0, 0), p.red());
            c.path("green", (0, 0), p.green());
            c.path("bounce", (0, 0), &p.bounce_word().steps);
            labels_on(&mut c, &rp, p.red(), lp.labels());
            c.finish()
        }
    })
}
