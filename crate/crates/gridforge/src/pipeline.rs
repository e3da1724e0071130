//! The batch driver behind `gridforge run`: read a knot table, take every
//! code through realization, spanning tree, heights, arc presentation,
//! grid, shaping and rendering, verify the drawn knot against the source
//! diagram, and leave a diffable artifact tree behind.
//!
//! Reports are reproducible. Records keep the input order whatever the
//! worker count, and nothing time-dependent is serialized; per-knot wall
//! times live only in the in-memory records for console display.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::arcbuild::ArcPresentation;
use crate::codec::{parse_table, DtCode};
use crate::diagram::{Dart, PlanarDiagram};
use crate::error::{Error, Result};
use crate::grid::{Grid, RenderFormat};
use crate::invariants::{self, Comparison, Verdict, DEFAULT_JONES_THRESHOLD};
use crate::spantree::SpanningTree;

/// Knobs for a batch run, one field per command-line flag.
#[derive(Clone, Debug)]
pub struct Options {
    /// Artifact directory; `None` runs everything in memory.
    pub out: Option<PathBuf>,
    pub formats: Vec<RenderFormat>,
    /// Spanning-tree root; default is the crossing under the last passage.
    pub root: Option<usize>,
    /// Replay this growth sequence instead of searching. Single-knot tables only.
    pub tree: Option<Vec<Dart>>,
    pub jones_threshold: usize,
    /// Search the move orbit for the tidiest grid before rendering.
    pub shape: bool,
    /// Write into an output directory that already exists.
    pub force: bool,
    /// Worker threads; 0 lets the pool pick, 1 stays on this thread.
    pub jobs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            out: None,
            formats: RenderFormat::ALL.to_vec(),
            root: None,
            tree: None,
            jones_threshold: DEFAULT_JONES_THRESHOLD,
            shape: true,
            force: false,
            jobs: 0,
        }
    }
}

/// One knot's trip through the pipeline.
#[derive(Clone, Debug, Serialize)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: usize,
    /// Grid size; also the number of levels in the arc presentation.
    pub n: usize,
    pub tree: Vec<Dart>,
    pub intervals: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shaping: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub millis: u128,
}

/// Every record from a run plus the tallies the exit status rests on.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub records: Vec<KnotRecord>,
    pub consistent: usize,
    pub consistent_weak: usize,
    pub distinguished: usize,
    pub errors: usize,
}

impl PipelineReport {
    fn tally(records: Vec<KnotRecord>) -> Self {
        let mut report = PipelineReport {
            records,
            consistent: 0,
            consistent_weak: 0,
            distinguished: 0,
            errors: 0,
        };
        for r in &report.records {
            if r.error.is_some() {
                report.errors += 1;
                continue;
            }
            match r.verdict {
                Verdict::Consistent => report.consistent += 1,
                Verdict::ConsistentWeak => report.consistent_weak += 1,
                Verdict::Distinguished => report.distinguished += 1,
                Verdict::Inconclusive => report.errors += 1,
            }
        }
        report
    }

    /// True when nothing was distinguished and no knot errored out.
    pub fn success(&self) -> bool {
        self.distinguished == 0 && self.errors == 0
    }
}

/// Parse a signed dart list like `-25 -22 18` (whitespace or commas).
pub fn parse_dart_sequence(text: &str) -> Result<Vec<Dart>> {
    text.split(|ch: char| ch.is_whitespace() || ch == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Dart>()
                .map_err(|_| Error::Usage(format!("bad dart {t:?} in tree sequence")))
        })
        .collect()
}

/// Run the whole batch. `Err` means the input itself was unusable; trouble
/// with an individual knot lands in its record instead.
pub fn run(table_path: &Path, options: &Options) -> Result<PipelineReport> {
    let text = fs::read_to_string(table_path)?;
    let entries = parse_table(&text)?;
    if options.tree.is_some() && entries.len() > 1 {
        return Err(Error::Usage(format!(
            "--tree replays one growth sequence; the table has {} knots",
            entries.len()
        )));
    }
    let out = match &options.out {
        Some(dir) => {
            if dir.exists() && !options.force {
                return Err(Error::Usage(format!(
                    "output directory {} exists; pass --force to write into it",
                    dir.display()
                )));
            }
            fs::create_dir_all(dir)?;
            Some(dir.as_path())
        }
        None => None,
    };

    let process = |entry: &(String, DtCode)| -> KnotRecord {
        let (name, code) = entry;
        let start = Instant::now();
        let mut record = run_one(name, code, options, out).unwrap_or_else(|e| KnotRecord {
            name: name.clone(),
            crossings: code.crossings(),
            n: 0,
            tree: Vec::new(),
            intervals: Vec::new(),
            shaping: None,
            verdict: Verdict::Inconclusive,
            error: Some(e.to_string()),
            millis: 0,
        });
        record.millis = start.elapsed().as_millis();
        record
    };

    let records: Vec<KnotRecord> = if options.jobs == 1 {
        entries.iter().map(process).collect()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if options.jobs > 0 {
            builder = builder.num_threads(options.jobs);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::Usage(format!("worker pool: {e}")))?;
        pool.install(|| entries.par_iter().map(process).collect())
    };

    let report = PipelineReport::tally(records);
    if let Some(dir) = out {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        fs::write(dir.join("report.json"), text)?;
    }
    Ok(report)
}

fn run_one(
    name: &str,
    code: &DtCode,
    options: &Options,
    out: Option<&Path>,
) -> Result<KnotRecord> {
    if name.contains(['/', '\\']) || name == "." || name == ".." {
        return Err(Error::Usage(format!(
            "knot name {name:?} cannot name an artifact directory"
        )));
    }
    let (diagram, tree_order, intervals, grid) = if code.is_unknot() {
        let grid = Grid::new(vec![(1, 2), (1, 2)], false).expect("2-grid");
        (PlanarDiagram::unknot(), Vec::new(), grid.cols().to_vec(), grid)
    } else {
        crate::diagram::check_reduced_prime(code)?;
        let d = PlanarDiagram::from_dt(code)?;
        let root = options
            .root
            .unwrap_or_else(|| SpanningTree::default_root(&d));
        let tree = match &options.tree {
            Some(seq) => SpanningTree::from_sequence(&d, root, seq)?,
            None => SpanningTree::find(&d, root)?,
        };
        let arcs = ArcPresentation::build(&d, &tree)?;
        let intervals = arcs.intervals();
        let grid = arcs.to_grid();
        (d, tree.order().to_vec(), intervals, grid)
    };
    let (grid, shaping) = if options.shape {
        let (g, s) = grid.shape_canonical_report();
        (g, Some(s.to_string()))
    } else {
        (grid, None)
    };
    let comparison = invariants::compare(&diagram, &grid.to_diagram(), options.jones_threshold);

    if let Some(out) = out {
        let dir = out.join(name);
        fs::create_dir_all(&dir)?;
        fs::write(dir.join("grid.json"), grid_json(name, &grid))?;
        for format in &options.formats {
            fs::write(dir.join(format.file_name()), grid.render(*format))?;
        }
        fs::write(
            dir.join("verify.txt"),
            verify_text(name, &comparison, options.jones_threshold),
        )?;
    }

    Ok(KnotRecord {
        name: name.to_string(),
        crossings: code.crossings(),
        n: grid.size(),
        tree: tree_order,
        intervals,
        shaping,
        verdict: comparison.verdict,
        error: None,
        millis: 0,
    })
}

#[derive(Serialize)]
struct GridJson<'a> {
    name: &'a str,
    n: usize,
    cols: Vec<[usize; 2]>,
    mirror: bool,
}

fn grid_json(name: &str, g: &Grid) -> String {
    let doc = GridJson {
        name,
        n: g.size(),
        cols: g.cols().iter().map(|&(a, b)| [a, b]).collect(),
        mirror: g.mirror(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("grid serializes");
    text.push('\n');
    text
}

fn verify_text(name: &str, c: &Comparison, threshold: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name: {name}");
    let _ = writeln!(s, "verdict: {}", c.verdict);
    let _ = writeln!(s, "alexander (source): {}", c.alexander.0);
    let _ = writeln!(s, "alexander (grid): {}", c.alexander.1);
    for (label, jones) in [("source", &c.jones.0), ("grid", &c.jones.1)] {
        match jones {
            Some(v) => {
                let _ = writeln!(s, "jones ({label}): {v}");
            }
            None => {
                let _ = writeln!(
                    s,
                    "jones ({label}): skipped (state sum capped at {threshold} crossings)"
                );
            }
        }
    }
    if let Some(mirrored) = c.jones_mirrored {
        let relation = if mirrored {
            "mirrored (t <-> 1/t)"
        } else {
            "exact"
        };
        let _ = writeln!(s, "jones match: {relation}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(text: &str) -> tempfile::NamedTempFile {
        use std::io::Write as _;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    #[test]
    fn empty_table_is_an_empty_success() {
        let f = table("# nothing here\n\n");
        let report = run(f.path(), &Options::default()).unwrap();
        assert!(report.records.is_empty());
        assert!(report.success());
    }

    #[test]
    fn tree_replay_needs_a_single_knot() {
        let f = table("3a1 4 6 2\n4a1 4 6 8 2\n");
        let options = Options {
            tree: Some(vec![-5, 2]),
            ..Options::default()
        };
        assert!(matches!(run(f.path(), &options), Err(Error::Usage(_))));
    }

    #[test]
    fn unknots_and_broken_codes_share_a_batch() {
        let f = table("ring\nbad 2 4 6 8 10 14 12\ntref 4 6 2\n");
        let report = run(f.path(), &Options::default()).unwrap();
        assert_eq!(report.records.len(), 3);
        let ring = &report.records[0];
        assert_eq!((ring.n, ring.verdict), (2, Verdict::Consistent));
        assert_eq!(ring.intervals, vec![(1, 2), (1, 2)]);
        let bad = &report.records[1];
        assert!(bad.error.is_some());
        assert_eq!(bad.verdict, Verdict::Inconclusive);
        let tref = &report.records[2];
        assert_eq!((tref.crossings, tref.n), (3, 5));
        assert_eq!(tref.verdict, Verdict::Consistent);
        assert_eq!(report.errors, 1);
        assert!(!report.success());
    }
}
