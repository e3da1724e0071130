//! Grid diagrams: one vertical and one horizontal segment per index on an
//! n by n board, verticals crossing in front of horizontals.
//!
//! The moves here permute and reflect the board without changing the knot:
//! cyclic translation slides the outermost segment around to the far side,
//! reflections mirror the knot, and diagonal transposes exchange the roles
//! of rows and columns. `shape_canonical` searches the whole move orbit for
//! the tidiest representative.

use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::{Error, Result};
use std::fmt;

/// Axis choice for [`Grid::translate_cyclic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateAxis {
    Columns,
    Rows,
}

/// Axis choice for [`Grid::reflect`]: the line the board flips over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReflectAxis {
    Horizontal,
    Vertical,
}

/// Axis choice for [`Grid::transpose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransposeAxis {
    Diagonal,
    Antidiagonal,
}

/// Output format for [`Grid::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RenderFormat {
    Ascii,
    Svg,
    LatexMacros,
    Coords3d,
}

impl RenderFormat {
    pub const ALL: [RenderFormat; 4] = [
        RenderFormat::Ascii,
        RenderFormat::Svg,
        RenderFormat::LatexMacros,
        RenderFormat::Coords3d,
    ];

    /// File name the pipeline writes this format to.
    pub fn file_name(self) -> &'static str {
        match self {
            RenderFormat::Ascii => "grid.txt",
            RenderFormat::Svg => "grid.svg",
            RenderFormat::LatexMacros => "grid.tex",
            RenderFormat::Coords3d => "grid.xyz",
        }
    }
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            "latex" | "latexmacros" => Ok(RenderFormat::LatexMacros),
            "coords3d" => Ok(RenderFormat::Coords3d),
            _ => Err(Error::Usage(format!("unknown render format {s:?}"))),
        }
    }
}

/// The orbit element `shape_canonical` settled on: one of the eight board
/// symmetries followed by cyclic shifts of columns and rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shaping {
    pub symmetry: &'static str,
    pub col_shift: usize,
    pub row_shift: usize,
}

impl fmt::Display for Shaping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, columns +{}, rows +{}",
            self.symmetry, self.col_shift, self.row_shift
        )
    }
}

/// A grid diagram. `cols[i]` is the closed level interval of the vertical
/// segment in column `i` (levels are 1-based). Rows are implied: every
/// level is an endpoint of exactly two columns, and the horizontal segment
/// at that level joins them. `mirror` records whether the drawing stands
/// for the mirror image of the knot the grid was built from; reflections
/// toggle it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grid {
    cols: Vec<(usize, usize)>,
    mirror: bool,
}

impl Grid {
    pub fn new(cols: Vec<(usize, usize)>, mirror: bool) -> Result<Self> {
        let n = cols.len();
        if n < 2 {
            return Err(Error::BadGrid(format!("{n} columns, need at least 2")));
        }
        let mut touch: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (i, &(lo, hi)) in cols.iter().enumerate() {
            if lo < 1 || hi > n || lo >= hi {
                return Err(Error::BadGrid(format!(
                    "column {i} spans {lo}..{hi}, outside the grid"
                )));
            }
            touch[lo].push(i);
            touch[hi].push(i);
        }
        for h in 1..=n {
            if touch[h].len() != 2 {
                return Err(Error::BadGrid(format!(
                    "level {h} is an endpoint of {} columns, need exactly 2",
                    touch[h].len()
                )));
            }
        }
        // The 2n segments must close into a single loop. Walk it: enter a
        // column at one end, leave at the other, follow the row there to
        // its partner column. First return to the start closes the loop.
        let mut col = 0usize;
        let mut entry = cols[0].0;
        let mut visited = 0usize;
        loop {
            visited += 1;
            let (lo, hi) = cols[col];
            let exit = if entry == lo { hi } else { lo };
            let pair = &touch[exit];
            col = if pair[0] == col { pair[1] } else { pair[0] };
            entry = exit;
            if col == 0 && entry == cols[0].0 {
                break;
            }
            if visited > n {
                return Err(Error::BadGrid(
                    "the segments close into more than one loop".into(),
                ));
            }
        }
        if visited != n {
            return Err(Error::BadGrid(
                "the segments close into more than one loop".into(),
            ));
        }
        Ok(Grid { cols, mirror })
    }

    /// Number of columns (and of rows, and of levels).
    pub fn size(&self) -> usize {
        self.cols.len()
    }

    pub fn cols(&self) -> &[(usize, usize)] {
        &self.cols
    }

    pub fn mirror(&self) -> bool {
        self.mirror
    }

    /// For each level `1..=n`, the two columns it bounds, ascending.
    pub fn rows(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut by_level = vec![(usize::MAX, usize::MAX); n + 1];
        for (i, &(lo, hi)) in self.cols.iter().enumerate() {
            for h in [lo, hi] {
                if by_level[h].0 == usize::MAX {
                    by_level[h].0 = i;
                } else {
                    by_level[h].1 = i;
                }
            }
        }
        (1..=n).map(|h| by_level[h]).collect()
    }

    /// Points where a vertical segment crosses a horizontal one.
    pub fn crossing_count(&self) -> usize {
        let rows = self.rows();
        let mut count = 0;
        for (i, &(lo, hi)) in self.cols.iter().enumerate() {
            for h in lo + 1..hi {
                let (c1, c2) = rows[h - 1];
                if c1 < i && i < c2 {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sum of the lengths of all 2n segments; the shaping objective.
    pub fn total_length(&self) -> usize {
        let cols: usize = self.cols.iter().map(|&(lo, hi)| hi - lo).sum();
        let rows: usize = self.rows().iter().map(|&(c1, c2)| c2 - c1).sum();
        cols + rows
    }

    fn rebuilt(&self, cols: Vec<(usize, usize)>, mirror: bool) -> Grid {
        Grid::new(cols, mirror).expect("a shaping move must keep the grid valid")
    }

    /// Cyclically shift the columns (or the levels) by `k` places upward and
    /// rightward; negative `k` goes the other way. The segment pushed off one
    /// edge of the board re-enters from the opposite edge, which slides the
    /// corresponding arc around the back of the knot without changing it.
    pub fn translate_cyclic(&self, axis: TranslateAxis, k: i64) -> Grid {
        let n = self.size();
        let k = k.rem_euclid(n as i64) as usize;
        match axis {
            TranslateAxis::Columns => {
                let mut cols = self.cols.clone();
                cols.rotate_right(k);
                self.rebuilt(cols, self.mirror)
            }
            TranslateAxis::Rows => {
                let mut cols = self.cols.clone();
                for _ in 0..k {
                    // one step up: the column reaching the top re-spans from
                    // the bottom
                    cols = cols
                        .iter()
                        .map(|&(lo, hi)| if hi == n { (1, lo + 1) } else { (lo + 1, hi + 1) })
                        .collect();
                }
                self.rebuilt(cols, self.mirror)
            }
        }
    }

    /// Reflect the board. Verticals stay vertical, so the drawn knot becomes
    /// its mirror image and the parity flag flips.
    pub fn reflect(&self, axis: ReflectAxis) -> Grid {
        let n = self.size();
        let cols = match axis {
            ReflectAxis::Horizontal => self
                .cols
                .iter()
                .map(|&(lo, hi)| (n + 1 - hi, n + 1 - lo))
                .collect(),
            ReflectAxis::Vertical => {
                let mut cols = self.cols.clone();
                cols.reverse();
                cols
            }
        };
        self.rebuilt(cols, !self.mirror)
    }

    /// Reflect the board about a diagonal, exchanging rows and columns. The
    /// in-plane reflection mirrors the knot, but the verticals land on the
    /// horizontals and the fixed vertical-over convention then flips every
    /// crossing, which mirrors it back: the knot and its parity are unchanged.
    pub fn transpose(&self, axis: TransposeAxis) -> Grid {
        let n = self.size();
        // rows become the new columns: the row at level h spans columns
        // c1..c2, so the new column at position h spans levels c1+1..c2+1
        let diag: Vec<(usize, usize)> = self.rows().iter().map(|&(c1, c2)| (c1 + 1, c2 + 1)).collect();
        let cols = match axis {
            TransposeAxis::Diagonal => diag,
            TransposeAxis::Antidiagonal => diag
                .iter()
                .rev()
                .map(|&(lo, hi)| (n + 1 - hi, n + 1 - lo))
                .collect(),
        };
        self.rebuilt(cols, self.mirror)
    }

    /// The tidiest grid in the move orbit: over all eight board symmetries
    /// and all cyclic shifts of columns and rows, the candidate with the
    /// least total segment length, ties broken by the interval sequence.
    /// Scanning a fixed candidate order makes the result deterministic, and
    /// scanning a whole group orbit makes it idempotent.
    pub fn shape_canonical(&self) -> Grid {
        self.shape_canonical_report().0
    }

    /// [`Grid::shape_canonical`] plus which orbit element won.
    pub fn shape_canonical_report(&self) -> (Grid, Shaping) {
        use {ReflectAxis::*, TransposeAxis::*};
        let n = self.size();
        let bases: [(&'static str, Grid); 8] = [
            ("identity", self.clone()),
            ("reflect-horizontal", self.reflect(Horizontal)),
            ("reflect-vertical", self.reflect(Vertical)),
            ("rotate-180", self.reflect(Horizontal).reflect(Vertical)),
            ("transpose-diagonal", self.transpose(Diagonal)),
            ("transpose-antidiagonal", self.transpose(Antidiagonal)),
            ("rotate-90", self.reflect(Horizontal).transpose(Diagonal)),
            ("rotate-270", self.reflect(Vertical).transpose(Diagonal)),
        ];
        let mut best: Option<(usize, Vec<(usize, usize)>, Grid, Shaping)> = None;
        for (name, base) in bases {
            for i in 0..n {
                let shifted = base.translate_cyclic(TranslateAxis::Columns, i as i64);
                for j in 0..n {
                    let cand = shifted.translate_cyclic(TranslateAxis::Rows, j as i64);
                    let key = (cand.total_length(), cand.cols.clone());
                    if best
                        .as_ref()
                        .is_none_or(|(len, cols, ..)| key < (*len, cols.clone()))
                    {
                        let shaping = Shaping {
                            symmetry: name,
                            col_shift: i,
                            row_shift: j,
                        };
                        best = Some((key.0, key.1, cand, shaping));
                    }
                }
            }
        }
        let (_, _, grid, shaping) = best.unwrap();
        (grid, shaping)
    }

    /// The drawn knot as a planar diagram: walk the loop from column 0
    /// upward, numbering the two visits of every crossing, with the vertical
    /// strand on top. The local frame of each crossing follows from the two
    /// travel directions.
    pub fn to_diagram(&self) -> PlanarDiagram {
        if self.crossing_count() == 0 {
            return PlanarDiagram::unknot();
        }
        let rows = self.rows();
        let mut first: std::collections::BTreeMap<(usize, usize), (usize, bool)> =
            std::collections::BTreeMap::new();
        let mut records: Vec<Crossing> = Vec::new();
        let mut passage = 0usize;

        // at each shared crossing the earlier and later passage, plus both
        // travel directions, decide the counterclockwise role order
        let mut meet = |site: (usize, usize), up: bool, right: bool, vertical: bool,
                        first: &mut std::collections::BTreeMap<(usize, usize), (usize, bool)>,
                        records: &mut Vec<Crossing>| {
            passage += 1;
            if let Some((p, other_up)) = first.remove(&site) {
                let (v_up, h_right) = if vertical { (up, other_up) } else { (other_up, right) };
                let (v_pass, h_pass) = if vertical { (passage, p) } else { (p, passage) };
                // counterclockwise role order puts the vertical strand first
                // exactly when the travel directions disagree in handedness
                let vertical_first = v_up != h_right;
                records.push(if vertical_first {
                    Crossing { a: v_pass, b: h_pass, over_first: true }
                } else {
                    Crossing { a: h_pass, b: v_pass, over_first: false }
                });
            } else {
                first.insert(site, (passage, if vertical { up } else { right }));
            }
        };

        let mut col = 0usize;
        let mut entry = self.cols[0].0;
        loop {
            let (lo, hi) = self.cols[col];
            let exit = if entry == lo { hi } else { lo };
            let up = exit > entry;
            let span: Vec<usize> = if up {
                (lo + 1..hi).collect()
            } else {
                (lo + 1..hi).rev().collect()
            };
            for h in span {
                let (c1, c2) = rows[h - 1];
                if c1 < col && col < c2 {
                    meet((col, h), up, false, true, &mut first, &mut records);
                }
            }
            let (c1, c2) = rows[exit - 1];
            let next = if c1 == col { c2 } else { c1 };
            let right = next > col;
            let walk: Vec<usize> = if right {
                (col + 1..next).collect()
            } else {
                (next + 1..col).rev().collect()
            };
            for i in walk {
                let (lo_i, hi_i) = self.cols[i];
                if lo_i < exit && exit < hi_i {
                    meet((i, exit), false, right, false, &mut first, &mut records);
                }
            }
            col = next;
            entry = exit;
            if col == 0 && entry == self.cols[0].0 {
                break;
            }
        }
        debug_assert!(first.is_empty());
        PlanarDiagram::from_records(records)
    }

    /// Draw the grid in the requested format. Every format shows the same
    /// convention: horizontal runs break where a vertical passes over them.
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.render_ascii(),
            RenderFormat::Svg => self.render_svg(),
            RenderFormat::LatexMacros => self.render_latex(),
            RenderFormat::Coords3d => self.render_coords3d(),
        }
    }

    fn render_ascii(&self) -> String {
        let n = self.size();
        let rows = self.rows();
        let mut canvas = vec![vec![' '; 2 * n - 1]; n];
        for (h, &(c1, c2)) in rows.iter().enumerate() {
            let y = n - 1 - h;
            for x in 2 * c1..=2 * c2 {
                canvas[y][x] = '─';
            }
        }
        for (i, &(lo, hi)) in self.cols.iter().enumerate() {
            let x = 2 * i;
            for h in lo + 1..hi {
                canvas[n - h][x] = '│';
            }
            for h in [lo, hi] {
                let (c1, _) = rows[h - 1];
                let left_end = c1 == i;
                canvas[n - h][x] = match (h == hi, left_end) {
                    (true, true) => '┌',
                    (true, false) => '┐',
                    (false, true) => '└',
                    (false, false) => '┘',
                };
            }
        }
        let mut out = String::new();
        for line in canvas {
            out.push_str(String::from_iter(line).trim_end());
            out.push('\n');
        }
        out
    }

    fn render_svg(&self) -> String {
        let n = self.size();
        let rows = self.rows();
        let mut lines = String::new();
        let mut line = |x1: f64, y1: f64, x2: f64, y2: f64| {
            lines.push_str(&format!(
                "  <line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>\n"
            ));
        };
        for (h, &(c1, c2)) in rows.iter().enumerate() {
            let y = (n - 1 - h) as f64;
            // break the run where a vertical passes over it
            let mut x = c1 as f64;
            for i in c1 + 1..c2 {
                let (lo, hi) = self.cols[i];
                if lo < h + 1 && h + 1 < hi {
                    line(x, y, i as f64 - 0.2, y);
                    x = i as f64 + 0.2;
                }
            }
            line(x, y, c2 as f64, y);
        }
        for (i, &(lo, hi)) in self.cols.iter().enumerate() {
            let x = i as f64;
            line(x, (n - hi) as f64, x, (n - lo) as f64);
        }
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 {} {}\">\n\
             <g stroke=\"black\" stroke-width=\"0.08\" stroke-linecap=\"round\">\n{lines}</g>\n</svg>\n",
            n + 1,
            n + 1
        )
    }

    fn render_latex(&self) -> String {
        let mut out = String::new();
        for (h, &(c1, c2)) in self.rows().iter().enumerate() {
            out.push_str(&format!("\\h{{{c1}}}{{{h}}}{{{}}}\n", c2 - c1));
        }
        for (i, &(lo, hi)) in self.cols.iter().enumerate() {
            out.push_str(&format!("\\v{{{i}}}{{{}}}{{{}}}\n", lo - 1, hi - lo));
        }
        out
    }

    fn render_coords3d(&self) -> String {
        let rows = self.rows();
        let mut out = String::new();
        let mut col = 0usize;
        let mut entry = self.cols[0].0;
        loop {
            let (lo, hi) = self.cols[col];
            let exit = if entry == lo { hi } else { lo };
            out.push_str(&format!("{} {} 1\n{} {} 1\n", col, entry - 1, col, exit - 1));
            let (c1, c2) = rows[exit - 1];
            let next = if c1 == col { c2 } else { c1 };
            out.push_str(&format!("{} {} 0\n{} {} 0\n", col, exit - 1, next, exit - 1));
            col = next;
            entry = exit;
            if col == 0 && entry == self.cols[0].0 {
                break;
            }
        }
        out
    }
}
