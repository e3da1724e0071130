//! Planar diagrams: realization of a DT code as an embedded 4-valent map,
//! faces, primality checks, and Reidemeister simplification.
//!
//! Passages keep the labels `1..=2c` they had in the code; edge `e` joins
//! passage `e` to passage `e+1` (cyclically). The embedding is stored as one
//! binary role choice per crossing, see [`Crossing`].

use crate::codec::DtCode;
use crate::{Error, Result};

/// Crossing limit for realization; the embedding search is exponential.
pub const MAX_CROSSINGS: usize = 20;

/// Signed edge label. Dart `+e` walks edge `e` with the knot's orientation,
/// `-e` against it.
pub type Dart = i32;

/// The opposite walking direction along the same edge.
pub fn rev(d: Dart) -> Dart {
    -d
}

/// The edge an oriented dart walks along.
pub fn dart_edge(d: Dart) -> usize {
    d.unsigned_abs() as usize
}

/// The dart one label step outward from `d`: the forward dart of the next
/// edge, or the backward dart of the previous one (labels wrap at `edges`).
pub fn ext(d: Dart, edges: usize) -> Dart {
    let n = edges as Dart;
    debug_assert!(d != 0 && d.abs() <= n);
    if d == n {
        1
    } else if d == -1 {
        -n
    } else {
        d + 1
    }
}

/// One crossing of a realized diagram.
///
/// Around every crossing the four edge ends sit in a fixed counterclockwise
/// order: incoming edge of `a`, incoming edge of `b`, outgoing edge of `a`,
/// outgoing edge of `b`. Which passage plays `a` is the embedding choice made
/// at realization time; swapping the roles mirrors the crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub a: usize,
    pub b: usize,
    /// the strand through `a` is on top
    pub over_first: bool,
}

impl Crossing {
    pub fn passages(&self) -> [usize; 2] {
        [self.a, self.b]
    }

    pub fn other(&self, p: usize) -> usize {
        debug_assert!(p == self.a || p == self.b);
        if p == self.a {
            self.b
        } else {
            self.a
        }
    }

    /// The passage where the strand is on top.
    pub fn over(&self) -> usize {
        if self.over_first {
            self.a
        } else {
            self.b
        }
    }

    pub fn under(&self) -> usize {
        if self.over_first {
            self.b
        } else {
            self.a
        }
    }

    /// +1 for a right-handed crossing. With the rotation order fixed above,
    /// the strand through `b` heads a quarter turn counterclockwise of the
    /// strand through `a`, so the handedness depends only on which is on top.
    pub fn sign(&self) -> i64 {
        if self.over_first {
            1
        } else {
            -1
        }
    }
}

/// A knot diagram embedded in the sphere.
#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    cross_of: Vec<usize>,
}

/// Direction faces are traced in; `next` steps this far along the rotation.
/// Together with the role order in [`Crossing`] this pins down which of the
/// two mirror embeddings every construction downstream sees.
const FACE_STEP: usize = 3;

impl PlanarDiagram {
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            cross_of: vec![0],
        }
    }

    /// Realize a validated code in the plane. Tries the per-crossing role
    /// choices in a fixed order and keeps the first whose face count matches
    /// Euler's formula, so the embedding is deterministic.
    pub fn from_dt(code: &DtCode) -> Result<Self> {
        let c = code.crossings();
        if c == 0 {
            return Ok(Self::unknot());
        }
        if c > MAX_CROSSINGS {
            return Err(Error::TooManyCrossings(c, MAX_CROSSINGS));
        }
        let partner = code.partner_table();
        let pairs: Vec<(usize, usize)> = (0..c).map(|k| (2 * k + 1, partner[2 * k + 1])).collect();
        let map = Pairing::new(&pairs);
        let Some(bits) = map.realize() else {
            return Err(Error::NotRealizable(map.obstruction()));
        };
        let crossings = (0..c)
            .map(|k| {
                let (p, q) = pairs[k];
                let (a, b) = if bits >> k & 1 == 0 { (p, q) } else { (q, p) };
                Crossing {
                    a,
                    b,
                    over_first: code.is_over(a),
                }
            })
            .collect();
        Ok(Self::from_records(crossings))
    }

    /// Assemble a diagram from crossing records whose passages pair `1..=2c`
    /// exactly; used when reading a diagram back off a grid.
    pub(crate) fn from_records(crossings: Vec<Crossing>) -> Self {
        let c = crossings.len();
        let mut cross_of = vec![usize::MAX; 2 * c + 1];
        for (k, x) in crossings.iter().enumerate() {
            debug_assert!(x.a != x.b && x.a >= 1 && x.a <= 2 * c && x.b >= 1 && x.b <= 2 * c);
            cross_of[x.a] = k;
            cross_of[x.b] = k;
        }
        debug_assert!(cross_of[1..].iter().all(|&k| k != usize::MAX));
        let d = Self { crossings, cross_of };
        debug_assert!(d.crossing_count() == 0 || d.face_count() == d.crossing_count() + 2);
        d
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn crossing(&self, k: usize) -> &Crossing {
        &self.crossings[k]
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Index of the crossing visited at `passage`.
    pub fn crossing_at(&self, passage: usize) -> usize {
        self.cross_of[passage]
    }

    pub fn is_over(&self, passage: usize) -> bool {
        self.crossings[self.cross_of[passage]].over() == passage
    }

    /// Counterclockwise order of the four darts leaving crossing `k`.
    pub fn rotation(&self, k: usize) -> [Dart; 4] {
        let n = self.edge_count() as Dart;
        let x = &self.crossings[k];
        let prev = |p: usize| -> Dart {
            if p == 1 {
                n
            } else {
                p as Dart - 1
            }
        };
        [-prev(x.a), -prev(x.b), x.a as Dart, x.b as Dart]
    }

    /// Crossing a dart points away from.
    pub fn dart_tail(&self, d: Dart) -> usize {
        let e = dart_edge(d);
        if d > 0 {
            self.cross_of[e]
        } else {
            self.cross_of[e % self.edge_count() + 1]
        }
    }

    /// Crossing a dart points at.
    pub fn dart_head(&self, d: Dart) -> usize {
        self.dart_tail(rev(d))
    }

    pub(crate) fn next_in_face(&self, d: Dart) -> Dart {
        let rot = self.rotation(self.dart_head(d));
        let pos = rot.iter().position(|&x| x == rev(d)).unwrap();
        rot[(pos + FACE_STEP) % 4]
    }

    pub(crate) fn face_count(&self) -> usize {
        let c = self.crossing_count();
        let mut seen = vec![false; 4 * c];
        let mut count = 0;
        for i in 0..4 * c {
            if seen[i] {
                continue;
            }
            count += 1;
            let start = dart_from_index(i, c);
            let mut d = start;
            loop {
                seen[dart_index(d, c)] = true;
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
        }
        count
    }

    /// All faces of the embedding. Each face is the cyclic dart sequence of
    /// its boundary walk, rotated to start at the lowest edge label (backward
    /// dart first on a tie); the list is in discovery order along the knot.
    pub fn regions(&self) -> Vec<Vec<Dart>> {
        let c = self.crossing_count();
        let mut seen = vec![false; 4 * c];
        let mut out = Vec::new();
        for i in 0..4 * c {
            if seen[i] {
                continue;
            }
            let start = dart_from_index(i, c);
            let mut face = Vec::new();
            let mut d = start;
            loop {
                seen[dart_index(d, c)] = true;
                face.push(d);
                d = self.next_in_face(d);
                if d == start {
                    break;
                }
            }
            let best = (0..face.len())
                .min_by_key(|&s| (dart_edge(face[s]), face[s] > 0))
                .unwrap();
            face.rotate_left(best);
            out.push(face);
        }
        out
    }

    /// The face whose boundary walks edge 1 forward; a labeling convention
    /// for presenting [`Self::regions`]. `None` for the empty diagram.
    pub fn outer_region(&self) -> Option<usize> {
        if self.crossing_count() == 0 {
            return None;
        }
        self.regions().iter().position(|r| r.contains(&1))
    }

    /// The mirror image: every rotation reversed, over/under kept with the
    /// strands.
    pub fn mirror_image(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing {
                a: x.b,
                b: x.a,
                over_first: !x.over_first,
            })
            .collect();
        Self {
            crossings,
            cross_of: self.cross_of.clone(),
        }
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign()).sum()
    }

    pub fn is_alternating(&self) -> bool {
        let n = self.edge_count();
        (1..=n).all(|p| self.is_over(p) == (p % 2 == 0))
            || (1..=n).all(|p| self.is_over(p) == (p % 2 == 1))
    }

    /// Read the code back off the diagram. Fails when the over/under pattern
    /// cannot be written with entries of one sign, i.e. the diagram is not
    /// alternating.
    pub fn extract_dt(&self) -> Result<DtCode> {
        let c = self.crossing_count();
        let mut entries = Vec::with_capacity(c);
        for k in 1..=c {
            let odd = 2 * k - 1;
            let x = &self.crossings[self.cross_of[odd]];
            let even = x.other(odd);
            // planar closed curves always pair an odd passage with an even one
            debug_assert!(even % 2 == 0);
            entries.push(if self.is_over(even) {
                even as i64
            } else {
                -(even as i64)
            });
        }
        DtCode::new(entries)
    }

    /// Remove kinks and parallel bigons until none remain. Moves splice the
    /// passage sequence and keep every other rotation, so the result is again
    /// planar and describes the same knot.
    pub fn simplified(&self) -> Self {
        let mut cur = self.clone();
        while let Some(next) = cur.reduce_once() {
            cur = next;
        }
        cur
    }

    pub(crate) fn reduce_once(&self) -> Option<Self> {
        let c = self.crossing_count();
        if c == 0 {
            return None;
        }
        let n = 2 * c;
        // kink: a crossing met at consecutive passages; untwisting it is
        // safe no matter what the loop encloses
        for p in 1..=n {
            let q = p % n + 1;
            if self.cross_of[p] == self.cross_of[q] {
                return Some(self.remove_passages(&[p, q]));
            }
        }
        // parallel bigon: consecutive passages i, i+1 at two crossings whose
        // partner passages are also consecutive, same strand on top at both,
        // and the two connecting edges really bound a face
        for i in 1..=n {
            let j = i % n + 1;
            let x = self.cross_of[i];
            let y = self.cross_of[j];
            if x == y {
                continue;
            }
            let q = self.crossings[x].other(i);
            let r = self.crossings[y].other(j);
            let bigon_edge = if q == r % n + 1 {
                r
            } else if r == q % n + 1 {
                q
            } else {
                continue;
            };
            if self.is_over(i) == self.is_over(j) && self.has_bigon_face(i, bigon_edge) {
                return Some(self.remove_passages(&[i, j, q, r]));
            }
        }
        None
    }

    fn has_bigon_face(&self, edge_a: usize, edge_b: usize) -> bool {
        for d in [edge_a as Dart, -(edge_a as Dart)] {
            let nx = self.next_in_face(d);
            if dart_edge(nx) == edge_b && self.next_in_face(nx) == d {
                return true;
            }
        }
        false
    }

    /// Drop the given passages and renumber the survivors in knot order.
    fn remove_passages(&self, gone: &[usize]) -> Self {
        let n = 2 * self.crossing_count();
        let mut rank = vec![0usize; n + 1];
        let mut r = 0;
        for p in 1..=n {
            if !gone.contains(&p) {
                r += 1;
                rank[p] = r;
            }
        }
        let dead: Vec<usize> = gone.iter().map(|&p| self.cross_of[p]).collect();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(k, _)| !dead.contains(k))
            .map(|(_, x)| Crossing {
                a: rank[x.a],
                b: rank[x.b],
                over_first: x.over_first,
            })
            .collect();
        Self::from_records(crossings)
    }
}

fn dart_index(d: Dart, c: usize) -> usize {
    let e = dart_edge(d) - 1;
    if d > 0 {
        e
    } else {
        2 * c + e
    }
}

fn dart_from_index(i: usize, c: usize) -> Dart {
    if i < 2 * c {
        (i + 1) as Dart
    } else {
        -((i - 2 * c + 1) as Dart)
    }
}

/// Reject kinks and connect sums by reading the chord diagram alone.
pub fn check_reduced_prime(code: &DtCode) -> Result<()> {
    let c = code.crossings();
    if c == 0 {
        return Ok(());
    }
    let n = 2 * c;
    let partner = code.partner_table();
    for p in 1..=n {
        if partner[p] == p % n + 1 {
            return Err(Error::Kink(p, p % n + 1));
        }
    }
    // a proper cyclic interval of passages closed under the pairing cuts the
    // diagram into two summands
    for s in 1..=n {
        let mut inside = vec![false; n + 1];
        let mut open = 0usize;
        for len in 1..=(n - 2) {
            let p = (s + len - 2) % n + 1;
            if inside[partner[p]] {
                open -= 1;
            } else {
                open += 1;
            }
            inside[p] = true;
            if open == 0 {
                return Err(Error::Composite(s, p));
            }
        }
    }
    Ok(())
}

/// A chord pairing of passages with the face-count machinery shared by
/// realization and the non-realizability probe. Roles are per-chord bits.
struct Pairing {
    c: usize,
    pairs: Vec<(usize, usize)>,
    cross_of: Vec<usize>,
}

impl Pairing {
    fn new(pairs: &[(usize, usize)]) -> Self {
        let c = pairs.len();
        let mut cross_of = vec![0usize; 2 * c + 1];
        for (k, &(p, q)) in pairs.iter().enumerate() {
            cross_of[p] = k;
            cross_of[q] = k;
        }
        Self {
            c,
            pairs: pairs.to_vec(),
            cross_of,
        }
    }

    fn rotation(&self, k: usize, bits: u32) -> [Dart; 4] {
        let n = 2 * self.c as Dart;
        let (p, q) = self.pairs[k];
        let (a, b) = if bits >> k & 1 == 0 { (p, q) } else { (q, p) };
        let prev = |x: usize| -> Dart {
            if x == 1 {
                n
            } else {
                x as Dart - 1
            }
        };
        [-prev(a), -prev(b), a as Dart, b as Dart]
    }

    fn head(&self, d: Dart) -> usize {
        let e = dart_edge(d);
        if d > 0 {
            self.cross_of[e % (2 * self.c) + 1]
        } else {
            self.cross_of[e]
        }
    }

    fn faces(&self, bits: u32) -> usize {
        let n = 4 * self.c;
        let mut seen: u128 = 0;
        let mut count = 0;
        for i in 0..n {
            if seen >> i & 1 == 1 {
                continue;
            }
            count += 1;
            let start = dart_from_index(i, self.c);
            let mut d = start;
            loop {
                seen |= 1 << dart_index(d, self.c);
                let rot = self.rotation(self.head(d), bits);
                let pos = rot.iter().position(|&x| x == rev(d)).unwrap();
                d = rot[(pos + FACE_STEP) % 4];
                if d == start {
                    break;
                }
            }
        }
        count
    }

    fn realize(&self) -> Option<u32> {
        (0u32..1 << self.c).find(|&bits| self.faces(bits) == self.c + 2)
    }

    /// A chord whose removal leaves a realizable pairing, if one exists.
    fn obstruction(&self) -> Option<(usize, usize)> {
        for k in 0..self.c {
            let (rp, rq) = self.pairs[k];
            let mut rank = vec![0usize; 2 * self.c + 1];
            let mut r = 0;
            for p in 1..=2 * self.c {
                if p != rp && p != rq {
                    r += 1;
                    rank[p] = r;
                }
            }
            let sub: Vec<(usize, usize)> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &(p, q))| (rank[p], rank[q]))
                .collect();
            if sub.is_empty() || Pairing::new(&sub).realize().is_some() {
                return Some((rp, rq));
            }
        }
        None
    }
}
