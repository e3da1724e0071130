//! Spanning trees of the crossing graph, grown one dart at a time.
//!
//! The arc construction needs more than an arbitrary spanning tree: the
//! order the tree is grown in matters, and each new dart has to keep two
//! side promises. The rules for admitting dart `e_j` (with `T_{j-1}` the
//! tree so far and `V` its crossings) are:
//!
//! 1. `e_j` leaves a crossing already in `V` and lands on a new one.
//! 2. After adding it, the crossings still outside `V` stay connected
//!    among themselves in the diagram.
//! 3. Except at the last step, the dart one label further along the strand
//!    (see [`ext`]) must also land on a crossing outside `V`.
//!
//! The dart after the final tree dart plays a special role downstream and
//! is recorded as the star edge; the rules above guarantee it is never a
//! tree edge.

use crate::diagram::{dart_edge, ext, Dart, PlanarDiagram};
use crate::error::{Error, Result};

/// A rooted spanning tree, recorded as the dart sequence that grew it.
#[derive(Clone, Debug)]
pub struct SpanningTree {
    root: usize,
    order: Vec<Dart>,
    in_tree: Vec<bool>,
    star: Dart,
}

impl SpanningTree {
    /// Root crossing used when the caller does not pick one: the crossing
    /// the last passage runs under or over.
    pub fn default_root(d: &PlanarDiagram) -> usize {
        d.crossing_at(d.edge_count())
    }

    /// Search for an admissible growth sequence, trying darts in label
    /// order with the reversed one first, and keep the first that
    /// completes. Deterministic, and backtracks when a prefix dead-ends.
    pub fn find(d: &PlanarDiagram, root: usize) -> Result<Self> {
        Self::check_root(d, root)?;
        let mut g = Grower::new(d, root);
        if !grow(&mut g) {
            return Err(Error::NoSpanningTree(root));
        }
        let order = g.order;
        Ok(Self::assemble(d, root, order))
    }

    /// Replay a caller-supplied growth sequence, validating every step.
    pub fn from_sequence(d: &PlanarDiagram, root: usize, seq: &[Dart]) -> Result<Self> {
        Self::check_root(d, root)?;
        let want = d.crossing_count() - 1;
        if seq.len() != want {
            return Err(Error::BadTreeSequence(format!(
                "expected {} darts, got {}",
                want,
                seq.len()
            )));
        }
        let mut g = Grower::new(d, root);
        for (i, &dart) in seq.iter().enumerate() {
            if dart == 0 || dart.unsigned_abs() as usize > d.edge_count() {
                return Err(Error::BadTreeSequence(format!(
                    "step {}: dart {dart} out of range",
                    i + 1
                )));
            }
            if let Some(why) = g.reject(dart) {
                return Err(Error::BadTreeSequence(format!(
                    "step {}: dart {dart}: {why}",
                    i + 1
                )));
            }
            g.push(dart);
        }
        Ok(Self::assemble(d, root, g.order))
    }

    fn check_root(d: &PlanarDiagram, root: usize) -> Result<()> {
        let c = d.crossing_count();
        if root >= c {
            return Err(Error::RootOutOfRange(root, c));
        }
        if c < 2 {
            // A lone crossing leaves no dart to follow the last tree dart,
            // so the construction has nowhere to hang the star edge.
            return Err(Error::NoSpanningTree(root));
        }
        Ok(())
    }

    fn assemble(d: &PlanarDiagram, root: usize, order: Vec<Dart>) -> Self {
        let n = d.edge_count();
        let mut in_tree = vec![false; n + 1];
        for &t in &order {
            in_tree[dart_edge(t)] = true;
        }
        let star = ext(*order.last().expect("tree is nonempty"), n);
        debug_assert!(!in_tree[dart_edge(star)]);
        SpanningTree {
            root,
            order,
            in_tree,
            star,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Tree darts in the order they were admitted.
    pub fn order(&self) -> &[Dart] {
        &self.order
    }

    /// The dart one label past the last tree dart.
    pub fn star_edge(&self) -> Dart {
        self.star
    }

    pub fn contains_edge(&self, edge: usize) -> bool {
        self.in_tree[edge]
    }

    /// Edge labels not used by the tree, ascending. One more than the
    /// crossing count.
    pub fn non_tree_edges(&self) -> Vec<usize> {
        (1..self.in_tree.len())
            .filter(|&e| !self.in_tree[e])
            .collect()
    }
}

struct Grower<'a> {
    d: &'a PlanarDiagram,
    in_vt: Vec<bool>,
    order: Vec<Dart>,
}

impl<'a> Grower<'a> {
    fn new(d: &'a PlanarDiagram, root: usize) -> Self {
        let mut in_vt = vec![false; d.crossing_count()];
        in_vt[root] = true;
        Grower {
            d,
            in_vt,
            order: Vec::new(),
        }
    }

    /// Why the dart cannot extend the tree right now, or `None` if it can.
    fn reject(&self, dart: Dart) -> Option<&'static str> {
        let tail = self.d.dart_tail(dart);
        let head = self.d.dart_head(dart);
        if !self.in_vt[tail] {
            return Some("its tail is outside the tree");
        }
        if self.in_vt[head] {
            return Some("its head is already in the tree");
        }
        if !self.outside_stays_connected(head) {
            return Some("crossings outside the tree disconnect");
        }
        // Rule 3 binds at every step except the last.
        if self.order.len() + 1 <= self.d.crossing_count() - 2 {
            let next = ext(dart, self.d.edge_count());
            let nh = self.d.dart_head(next);
            if self.in_vt[nh] || nh == head {
                return Some("the dart after it lands inside the tree");
            }
        }
        None
    }

    /// Would the crossings outside the tree stay connected once
    /// `new_head` joins it?
    fn outside_stays_connected(&self, new_head: usize) -> bool {
        let c = self.d.crossing_count();
        let outside = |k: usize| !self.in_vt[k] && k != new_head;
        let Some(start) = (0..c).find(|&k| outside(k)) else {
            return true;
        };
        let total = (0..c).filter(|&k| outside(k)).count();
        let mut seen = vec![false; c];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(k) = stack.pop() {
            for d in self.d.rotation(k) {
                let n = self.d.dart_head(d);
                if outside(n) && !seen[n] {
                    seen[n] = true;
                    reached += 1;
                    stack.push(n);
                }
            }
        }
        reached == total
    }

    fn push(&mut self, dart: Dart) {
        self.in_vt[self.d.dart_head(dart)] = true;
        self.order.push(dart);
    }

    fn pop(&mut self) {
        let dart = self.order.pop().expect("pop matches a push");
        self.in_vt[self.d.dart_head(dart)] = false;
    }
}

fn grow(g: &mut Grower) -> bool {
    if g.order.len() == g.d.crossing_count() - 1 {
        return true;
    }
    for e in 1..=g.d.edge_count() {
        for dart in [-(e as Dart), e as Dart] {
            if g.reject(dart).is_none() {
                g.push(dart);
                if grow(g) {
                    return true;
                }
                g.pop();
            }
        }
    }
    false
}
