//! From a spanning tree to an arc presentation.
//!
//! The strand is cut at the non-tree edges into arcs; contracting the tree
//! pulls every arc onto a vertical axis, where each needs its own level.
//! Levels are handed out while replaying the tree growth: the root's two
//! arcs start the ladder, and every new crossing the tree reaches gives its
//! transversal arc the next free level above or below, depending on whether
//! the new arc passes over or under there. The cut edges become hanging
//! arcs around the contracted tree; reading their attachment points off the
//! boundary of a thickened tree and peeling innermost ones first produces
//! the cyclic page order. Each page holds one hanging arc spanning a level
//! interval, which is exactly a grid diagram column.

use crate::diagram::{dart_edge, rev, Dart, PlanarDiagram};
use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::spantree::SpanningTree;

/// One page of the presentation: a hanging arc spanning `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Page {
    /// Boundary slot the page hangs at: the dart of its anchored end.
    pub(crate) slot: Dart,
    pub lo: usize,
    pub hi: usize,
}

/// An arc presentation: `c + 2` levels on the axis and as many pages
/// around it, in cyclic order.
#[derive(Clone, Debug)]
pub struct ArcPresentation {
    levels: usize,
    pages: Vec<Page>,
    star_edge: usize,
    star_level: usize,
    arcs: Vec<Vec<usize>>,
    arc_level: Vec<usize>,
    level_of: Vec<usize>,
}

/// Conventions the construction is pinned to; the rest of the crate is
/// calibrated against this choice of drawing.
#[derive(Clone, Copy)]
struct Conventions {
    /// Offset from the first tree dart on the root's rotation where the
    /// boundary walk starts.
    start_offset: usize,
    /// Rotation step while walking the boundary: 1 is counterclockwise,
    /// 3 clockwise.
    step: usize,
    /// When an arc could be anchored at either end, prefer the end the
    /// scan found first.
    anchor_at_scan: bool,
}

const FROZEN: Conventions = Conventions {
    start_offset: 1,
    step: 3,
    anchor_at_scan: true,
};

impl ArcPresentation {
    pub fn build(d: &PlanarDiagram, t: &SpanningTree) -> Result<Self> {
        Self::build_with(d, t, FROZEN)
    }

    fn build_with(d: &PlanarDiagram, t: &SpanningTree, cv: Conventions) -> Result<Self> {
        let (arcs, arc_of) = cut_arcs(d, t);
        let (arc_level, star_level) = assign_levels(d, t, &arcs, &arc_of)?;
        let star_edge = dart_edge(t.star_edge());
        let walk = boundary_walk(d, t, cv);
        let level_at = |slot: Dart| -> usize {
            let e = dart_edge(slot);
            let p = if slot > 0 { e } else { e % d.edge_count() + 1 };
            arc_level[arc_of[p]]
        };
        let pages = peel_pages(&walk, star_edge, star_level, &level_at, cv)?;
        let level_of = (0..=d.edge_count())
            .map(|p| if p == 0 { 0 } else { arc_level[arc_of[p]] })
            .collect();
        Ok(ArcPresentation {
            levels: d.crossing_count() + 2,
            pages,
            star_edge,
            star_level,
            arcs,
            arc_level,
            level_of,
        })
    }

    /// Number of levels, which equals the number of pages.
    pub fn levels(&self) -> usize {
        self.levels
    }

    /// Level intervals of the pages, in cyclic page order.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        self.pages.iter().map(|p| (p.lo, p.hi)).collect()
    }

    /// Edge label of the arc split across the axis.
    pub fn star_edge(&self) -> usize {
        self.star_edge
    }

    pub fn star_level(&self) -> usize {
        self.star_level
    }

    /// The passages of every axis arc together with its level, by level.
    pub fn arcs_by_level(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> = self
            .arcs
            .iter()
            .enumerate()
            .map(|(i, ps)| (self.arc_level[i], ps.clone()))
            .collect();
        out.sort();
        out
    }

    /// Level of the arc a passage lies on.
    pub fn level_of_passage(&self, p: usize) -> usize {
        self.level_of[p]
    }

    /// Read the pages off as grid columns.
    pub fn to_grid(&self) -> Grid {
        let cols = self.pages.iter().map(|p| (p.lo, p.hi)).collect();
        Grid::new(cols, false).expect("pages form a valid grid")
    }
}

/// Cut the strand at non-tree edges. Returns the arcs in strand order and
/// the arc index of every passage (index 0 unused).
fn cut_arcs(d: &PlanarDiagram, t: &SpanningTree) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = d.edge_count();
    let mut arcs: Vec<Vec<usize>> = Vec::new();
    let mut arc_of = vec![usize::MAX; n + 1];
    for p in 1..=n {
        // Passage p starts a new arc when the edge into it is cut.
        let before = if p == 1 { n } else { p - 1 };
        if arcs.is_empty() || !t.contains_edge(before) {
            arcs.push(Vec::new());
        }
        arc_of[p] = arcs.len() - 1;
        arcs.last_mut().unwrap().push(p);
    }
    // The strand is cyclic: if the wrap edge is in the tree, the first and
    // last runs are one arc.
    if t.contains_edge(n) && arcs.len() > 1 {
        let first = arcs.remove(0);
        for p in &first {
            arc_of[*p] = arcs.len() - 1;
        }
        arcs.last_mut().unwrap().extend(first);
    }
    debug_assert_eq!(arcs.len(), d.crossing_count() + 1);
    (arcs, arc_of)
}

/// Give every arc a level, replaying the tree growth, then squeeze the
/// levels to `1..=c+2` keeping their order.
fn assign_levels(
    d: &PlanarDiagram,
    t: &SpanningTree,
    arcs: &[Vec<usize>],
    arc_of: &[usize],
) -> Result<(Vec<usize>, usize)> {
    let mut raw: Vec<Option<i64>> = vec![None; arcs.len()];
    let root = &d.crossings()[t.root()];
    raw[arc_of[root.over()]] = Some(0);
    raw[arc_of[root.under()]] = Some(-1);
    let mut next_up = 1i64;
    let mut next_down = -2i64;
    let mut last_was_up = false;
    for (j, &dart) in t.order().iter().enumerate() {
        let e = dart_edge(dart);
        let own = if dart > 0 { e % d.edge_count() + 1 } else { e };
        debug_assert!(raw[arc_of[own]].is_some());
        let other = d.crossings()[d.dart_head(dart)].other(own);
        if raw[arc_of[other]].is_some() {
            return Err(Error::HeightAssignment(format!(
                "step {}: both arcs at the crossing of passages {own} and {other} \
                 already have levels",
                j + 1
            )));
        }
        if d.is_over(other) {
            raw[arc_of[other]] = Some(next_up);
            next_up += 1;
            last_was_up = true;
        } else {
            raw[arc_of[other]] = Some(next_down);
            next_down -= 1;
            last_was_up = false;
        }
    }
    // The split arc goes past whichever extreme moved last, so it ends up
    // on top or at the bottom of the whole ladder.
    let star_raw = if last_was_up { next_down } else { next_up };
    let mut all: Vec<i64> = raw.iter().map(|r| r.expect("every arc leveled")).collect();
    all.push(star_raw);
    all.sort_unstable();
    let rank = |v: i64| all.binary_search(&v).expect("level present") + 1;
    let arc_level = raw.iter().map(|r| rank(r.unwrap())).collect();
    Ok((arc_level, rank(star_raw)))
}

/// Walk the boundary of a thickened tree and record the cut darts in the
/// order their stubs are met.
fn boundary_walk(d: &PlanarDiagram, t: &SpanningTree, cv: Conventions) -> Vec<Dart> {
    let c = d.crossing_count();
    let rot0 = d.rotation(t.root());
    let first = t.order()[0];
    let at = rot0
        .iter()
        .position(|&x| x == first)
        .expect("e1 leaves the root");
    let mut k = t.root();
    let mut i = (at + cv.start_offset) % 4;
    let mut slots = Vec::with_capacity(2 * c + 2);
    let mut seen = vec![false; 4 * c];
    for _ in 0..4 * c {
        debug_assert!(!seen[4 * k + i]);
        seen[4 * k + i] = true;
        let dart = d.rotation(k)[i];
        if t.contains_edge(dart_edge(dart)) {
            k = d.dart_head(dart);
            let rot = d.rotation(k);
            i = rot
                .iter()
                .position(|&x| x == rev(dart))
                .expect("reverse dart");
        } else {
            slots.push(dart);
        }
        i = (i + cv.step) % 4;
    }
    debug_assert!(seen.iter().all(|&s| s));
    debug_assert_eq!(slots.len(), 2 * c + 2);
    slots
}

/// Order the hanging arcs into pages. An arc whose two attachment slots
/// are separated only by already-peeled slots can be tilted into a page at
/// one end; the free end then sweeps across the peeled region, which it
/// can only do at a level no page already in that region interrupts. The
/// two halves of the split arc are pages at their own slots whenever the
/// scan reaches them. An arc that cannot sweep yet is passed over; peeling
/// others first kills more slots and can open its other side. Peels the
/// first arc in walk order that works, trying the preferred end before the
/// other, and backtracks out of placements that strand a later arc.
fn peel_pages(
    walk: &[Dart],
    star_edge: usize,
    star_level: usize,
    level_at: &dyn Fn(Dart) -> usize,
    cv: Conventions,
) -> Result<Vec<Page>> {
    let m = walk.len();
    let mut partner = vec![usize::MAX; m];
    for s in 0..m {
        for s2 in 0..m {
            if s2 != s && dart_edge(walk[s2]) == dart_edge(walk[s]) {
                partner[s] = s2;
            }
        }
    }
    let mut p = Peeler {
        walk,
        partner,
        star_edge,
        star_level,
        level_at,
        alive: vec![true; m],
        left: m,
        anchored: Vec::new(),
        prefer_scan_end: cv.anchor_at_scan,
    };
    if !p.search() {
        let first_alive = p.alive.iter().position(|&a| a).unwrap();
        return Err(Error::PageBlocked(dart_edge(walk[first_alive])));
    }
    let mut anchored = p.anchored;
    anchored.sort_by_key(|&(pos, _)| pos);
    Ok(anchored.into_iter().map(|(_, pg)| pg).collect())
}

struct Peeler<'a> {
    walk: &'a [Dart],
    partner: Vec<usize>,
    star_edge: usize,
    star_level: usize,
    level_at: &'a dyn Fn(Dart) -> usize,
    alive: Vec<bool>,
    left: usize,
    anchored: Vec<(usize, Page)>,
    prefer_scan_end: bool,
}

impl Peeler<'_> {
    fn search(&mut self) -> bool {
        if self.left == 0 {
            return true;
        }
        let m = self.walk.len();
        for s in 0..m {
            if !self.alive[s] {
                continue;
            }
            let d = self.walk[s];
            if dart_edge(d) == self.star_edge {
                let end = (self.level_at)(d);
                let pg = Page {
                    slot: d,
                    lo: self.star_level.min(end),
                    hi: self.star_level.max(end),
                };
                self.take_half(s, pg);
                if self.search() {
                    return true;
                }
                self.give_back_half(s);
                continue;
            }
            let s2 = self.partner[s];
            let side_a = self.strictly_between(s, s2);
            let side_b = self.strictly_between(s2, s);
            let a_dead = side_a.iter().all(|&p| !self.alive[p]);
            let b_dead = side_b.iter().all(|&p| !self.alive[p]);
            if !a_dead && !b_dead {
                continue;
            }
            let h_s = (self.level_at)(self.walk[s]);
            let h_s2 = (self.level_at)(self.walk[s2]);
            let (lo, hi) = (h_s.min(h_s2), h_s.max(h_s2));
            // Anchoring at one slot sweeps the other end over a dead side.
            let mut ok_s = false;
            let mut ok_s2 = false;
            if a_dead {
                ok_s |= !self.blocked(&side_a, h_s2);
                ok_s2 |= !self.blocked(&side_a, h_s);
            }
            if b_dead {
                ok_s |= !self.blocked(&side_b, h_s2);
                ok_s2 |= !self.blocked(&side_b, h_s);
            }
            let mut tries = Vec::new();
            if ok_s {
                tries.push(s);
            }
            if ok_s2 {
                tries.push(s2);
            }
            if !self.prefer_scan_end {
                tries.reverse();
            }
            for at in tries {
                let pg = Page {
                    slot: self.walk[at],
                    lo,
                    hi,
                };
                self.take_pair(s, s2, at, pg);
                if self.search() {
                    return true;
                }
                self.give_back_pair(s, s2);
            }
        }
        false
    }

    fn strictly_between(&self, a: usize, b: usize) -> Vec<usize> {
        let m = self.walk.len();
        let mut v = Vec::new();
        let mut p = (a + 1) % m;
        while p != b {
            v.push(p);
            p = (p + 1) % m;
        }
        v
    }

    fn blocked(&self, side: &[usize], h: usize) -> bool {
        self.anchored
            .iter()
            .any(|(pos, pg)| side.contains(pos) && pg.lo < h && h < pg.hi)
    }

    fn take_half(&mut self, s: usize, pg: Page) {
        self.anchored.push((s, pg));
        self.alive[s] = false;
        self.left -= 1;
    }

    fn give_back_half(&mut self, s: usize) {
        self.anchored.pop();
        self.alive[s] = true;
        self.left += 1;
    }

    fn take_pair(&mut self, s: usize, s2: usize, at: usize, pg: Page) {
        self.anchored.push((at, pg));
        self.alive[s] = false;
        self.alive[s2] = false;
        self.left -= 2;
    }

    fn give_back_pair(&mut self, s: usize, s2: usize) {
        self.anchored.pop();
        self.alive[s] = true;
        self.alive[s2] = true;
        self.left += 2;
    }
}
