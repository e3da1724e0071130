//! Polynomial invariants and the knot comparison built on them.
//!
//! Two diagrams are checked against each other with the Alexander polynomial
//! (cheap, mirror-blind) and the Jones polynomial (exponential state sum,
//! mirror-sensitive, so only run below a crossing threshold). Agreement of
//! both is strong evidence that two diagrams show the same knot up to mirror
//! images; it is not a proof, and the verdict names say no more than that.

use crate::diagram::PlanarDiagram;
use crate::poly::Laurent;
use std::fmt;

/// Largest crossing count the bracket state sum accepts unless told otherwise.
pub const DEFAULT_JONES_THRESHOLD: usize = 18;

/// Remove kinks and bigons until nothing applies or the pass budget runs out.
/// Each pass removes at least one crossing, so `max_passes >= crossings`
/// always reaches the greedy fixed point.
pub fn simplify(d: &PlanarDiagram, max_passes: usize) -> PlanarDiagram {
    let mut cur = d.clone();
    for _ in 0..max_passes {
        match cur.reduce_once() {
            Some(next) => cur = next,
            None => break,
        }
    }
    cur
}

/// The Alexander polynomial, normalized to be symmetric under `t <-> 1/t`
/// with positive leading coefficient.
///
/// Arcs of the diagram run from one under-passage to the next; every crossing
/// relates its over arc and the two under arcs it cuts. The determinant of
/// that relation matrix with one row and column removed is the polynomial, up
/// to the unit `+-t^k` that the normalization fixes.
pub fn alexander(d: &PlanarDiagram) -> Laurent<'t'> {
    let c = d.crossing_count();
    if c == 0 {
        return Laurent::one();
    }
    let n = 2 * c;
    let unders: Vec<usize> = (1..=n).filter(|&p| !d.is_over(p)).collect();
    debug_assert_eq!(unders.len(), c);
    // the arc through passage p is named by the under-passage ending it
    let arc_of = |p: usize| -> usize {
        match unders.binary_search(&p) {
            Ok(i) => i,
            Err(i) => i % c,
        }
    };

    let one = Laurent::<'t'>::one();
    let t = Laurent::<'t'>::term(1, 1);
    let mut rows = vec![vec![Laurent::<'t'>::zero(); c]; c];
    for (k, row) in rows.iter_mut().enumerate() {
        let x = d.crossing(k);
        let u = x.under();
        let ov = arc_of(x.over());
        let inn = arc_of(u);
        let out = arc_of(u % n + 1);
        if x.sign() > 0 {
            row[ov] = &row[ov] + &(&one - &t);
            row[inn] = &row[inn] + &t;
            row[out] = &row[out] - &one;
        } else {
            row[ov] = &row[ov] + &(&t - &one);
            row[inn] = &row[inn] + &one;
            row[out] = &row[out] - &t;
        }
    }

    let det = bareiss_det(&mut rows, c - 1);
    assert!(!det.is_zero(), "crossing relation minor is singular");
    let (lo, hi) = (det.min_exp().unwrap(), det.max_exp().unwrap());
    debug_assert_eq!((lo + hi).rem_euclid(2), 0);
    let mut out = det.shifted(-(lo + hi) / 2);
    if out.coeff(out.max_exp().unwrap()) < 0 {
        out = out.scaled(-1);
    }
    debug_assert_eq!(out, out.invert_variable());
    debug_assert_eq!(out.eval_unit(1).abs(), 1);
    out
}

/// Fraction-free determinant of the leading `k x k` block; every division is
/// exact, so the intermediate entries stay polynomials.
fn bareiss_det(m: &mut [Vec<Laurent<'t'>>], k: usize) -> Laurent<'t'> {
    let mut prev = Laurent::one();
    let mut sign = 1;
    for col in 0..k {
        if m[col][col].is_zero() {
            let Some(swap) = (col + 1..k).find(|&r| !m[r][col].is_zero()) else {
                return Laurent::zero();
            };
            m.swap(col, swap);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let num = &(&m[col][col] * &m[r][c]) - &(&m[r][col] * &m[col][c]);
                m[r][c] = num.div_exact(&prev);
            }
            m[r][col] = Laurent::zero();
        }
        prev = m[col][col].clone();
    }
    if k == 0 {
        Laurent::one()
    } else {
        m[k - 1][k - 1].clone().scaled(sign)
    }
}

/// The Kauffman bracket in the variable `A`, by summing over all `2^c`
/// smoothings with a union-find loop count per state.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Laurent<'A'> {
    let c = d.crossing_count();
    if c == 0 {
        return Laurent::one();
    }
    let n = 2 * c;

    // slot numbering follows the rotation order: 0 into a, 1 into b,
    // 2 out of a, 3 out of b
    let mut edge_join = Vec::with_capacity(n);
    for e in 1..=n {
        let tail = d.crossing_at(e);
        let t_slot = if d.crossing(tail).a == e { 2 } else { 3 };
        let h = e % n + 1;
        let head = d.crossing_at(h);
        let h_slot = if d.crossing(head).a == h { 0 } else { 1 };
        edge_join.push((4 * tail + t_slot, 4 * head + h_slot));
    }
    // per crossing, the slot pairings of the A-smoothing and the B-smoothing;
    // A joins the two sectors swept by turning the over strand
    // counterclockwise onto the under strand
    let smoothings: Vec<([(usize, usize); 2], [(usize, usize); 2])> = (0..c)
        .map(|k| {
            let cross = [(0, 3), (1, 2)];
            let plus = [(0, 1), (2, 3)];
            if d.crossing(k).over_first {
                (cross, plus)
            } else {
                (plus, cross)
            }
        })
        .collect();

    // exponents are bounded by |a - b| + 2 * loops <= 3c + 2
    let span = 3 * c as i64 + 2;
    let mut acc = vec![0i64; (2 * span + 1) as usize];
    let delta = Laurent::<'A'>::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pow = vec![Laurent::<'A'>::one()];
    for _ in 0..=c {
        delta_pow.push(delta_pow.last().unwrap() * &delta);
    }

    let mut dsu = vec![0u32; 4 * c];
    for state in 0u64..1 << c {
        for (i, p) in dsu.iter_mut().enumerate() {
            *p = i as u32;
        }
        for &(x, y) in &edge_join {
            union(&mut dsu, x, y);
        }
        for (k, s) in smoothings.iter().enumerate() {
            let pairs = if state >> k & 1 == 0 { &s.0 } else { &s.1 };
            for &(x, y) in pairs {
                union(&mut dsu, 4 * k + x, 4 * k + y);
            }
        }
        let loops = (0..4 * c).filter(|&i| find(&mut dsu, i) == i as u32).count();
        let a_minus_b = c as i64 - 2 * state.count_ones() as i64;
        for (e, coeff) in delta_pow[loops - 1].iter() {
            acc[(e + a_minus_b + span) as usize] += coeff;
        }
    }
    Laurent::from_terms(acc.iter().enumerate().map(|(i, &v)| (i as i64 - span, v)))
}

fn find(dsu: &mut [u32], mut x: usize) -> u32 {
    while dsu[x] != x as u32 {
        dsu[x] = dsu[dsu[x] as usize];
        x = dsu[x] as usize;
    }
    x as u32
}

fn union(dsu: &mut [u32], x: usize, y: usize) {
    let (rx, ry) = (find(dsu, x), find(dsu, y));
    dsu[rx as usize] = ry;
}

/// The Jones polynomial in `t`, or `None` when the diagram is larger than
/// `max_crossings` and the state sum would be too expensive.
pub fn kauffman_jones(d: &PlanarDiagram, max_crossings: usize) -> Option<Laurent<'t'>> {
    if d.crossing_count() > max_crossings {
        return None;
    }
    let bracket = kauffman_bracket(d);
    let w = d.writhe();
    // multiply by (-A)^(-3w), then substitute t = A^-4
    let corrected = bracket
        .shifted(-3 * w)
        .scaled(if w.rem_euclid(2) == 0 { 1 } else { -1 });
    Some(Laurent::from_terms(corrected.iter().map(|(e, coeff)| {
        assert_eq!(e.rem_euclid(4), 0, "bracket exponent escaped the writhe correction");
        (-e / 4, coeff)
    })))
}

/// How a two-diagram comparison came out.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Alexander and Jones both agree, Jones up to `t <-> 1/t`.
    Consistent,
    /// Alexander agrees and Jones was skipped on at least one side.
    ConsistentWeak,
    /// Some invariant differs; the knots are different.
    Distinguished,
    /// Neither invariant could be compared.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "consistent",
            Verdict::ConsistentWeak => "consistent-weak",
            Verdict::Distinguished => "distinguished",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

impl serde::Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Everything `compare` measured, for reports.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub alexander: (Laurent<'t'>, Laurent<'t'>),
    pub jones: (Option<Laurent<'t'>>, Option<Laurent<'t'>>),
    /// `Some(true)` when the Jones polynomials match only after `t <-> 1/t`,
    /// i.e. the two diagrams show mirror forms of the knot.
    pub jones_mirrored: Option<bool>,
    pub verdict: Verdict,
}

/// Compare two diagrams up to mirror images. Both are simplified first; the
/// state sum runs only on diagrams with at most `jones_threshold` crossings.
pub fn compare(d1: &PlanarDiagram, d2: &PlanarDiagram, jones_threshold: usize) -> Comparison {
    let s1 = simplify(d1, d1.crossing_count() + 1);
    let s2 = simplify(d2, d2.crossing_count() + 1);
    let alex = (alexander(&s1), alexander(&s2));
    let jones = (
        kauffman_jones(&s1, jones_threshold),
        kauffman_jones(&s2, jones_threshold),
    );
    let (verdict, jones_mirrored) = if alex.0 != alex.1 {
        (Verdict::Distinguished, None)
    } else {
        match (&jones.0, &jones.1) {
            (Some(v1), Some(v2)) if v1 == v2 => (Verdict::Consistent, Some(false)),
            (Some(v1), Some(v2)) if *v1 == v2.invert_variable() => {
                (Verdict::Consistent, Some(true))
            }
            (Some(_), Some(_)) => (Verdict::Distinguished, None),
            _ => (Verdict::ConsistentWeak, None),
        }
    };
    Comparison {
        alexander: alex,
        jones,
        jones_mirrored,
        verdict,
    }
}

/// `compare` with the default state-sum threshold, reduced to its verdict.
pub fn same_knot_up_to_mirror(d1: &PlanarDiagram, d2: &PlanarDiagram) -> Verdict {
    compare(d1, d2, DEFAULT_JONES_THRESHOLD).verdict
}
