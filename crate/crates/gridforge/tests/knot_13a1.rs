// End-to-end fixture for the alternating 13-crossing knot 13a1. Every stage
// of the pipeline has a hand-checked expected value for this input, so the
// file doubles as a worked example of the whole construction.

use gridforge::{ArcPresentation, DtCode, PlanarDiagram, SpanningTree};

const CODE: &str = "4 8 10 14 2 16 20 6 22 24 12 26 18";

/// A known admissible growth sequence for this diagram, rooted at the
/// crossing of passages 23 and 26. The library's own search finds a
/// different (equally valid) tree, so the fixtures below replay this one.
const TREE: [i32; 12] = [-25, -22, 18, -21, -16, 12, -15, -10, 6, -9, -4, 2];

fn diagram() -> PlanarDiagram {
    let code: DtCode = CODE.parse().unwrap();
    PlanarDiagram::from_dt(&code).unwrap()
}

fn presentation() -> ArcPresentation {
    let d = diagram();
    let root = d.crossing_at(26);
    let t = SpanningTree::from_sequence(&d, root, &TREE).unwrap();
    ArcPresentation::build(&d, &t).unwrap()
}

fn sorted(mut v: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
    v.sort();
    v
}

#[test]
fn regions_match_fixture() {
    let want = sorted(vec![
        vec![2, 8],
        vec![6, 14],
        vec![12, 20],
        vec![18, 24],
        vec![-1, 4, -9],
        vec![1, -8, 3],
        vec![-5, 10, -15],
        vec![-11, 16, -21],
        vec![-17, 22, -25],
        vec![-18, 25, 23],
        vec![-4, -26, -22, -16, -10],
        vec![-6, 15, 11, -20, 13],
        vec![-12, 21, 17, -24, 19],
        vec![-2, 9, 5, -14, 7],
        vec![-3, -7, -13, -19, -23, 26],
    ]);
    assert_eq!(sorted(diagram().regions()), want);
}

#[test]
fn replayed_tree_is_admissible() {
    let d = diagram();
    let root = d.crossing_at(26);
    assert_eq!(root, SpanningTree::default_root(&d));
    let t = SpanningTree::from_sequence(&d, root, &TREE).unwrap();
    assert_eq!(t.order(), TREE);
    assert_eq!(t.star_edge(), 3);
    assert_eq!(
        t.non_tree_edges(),
        [1, 3, 5, 7, 8, 11, 13, 14, 17, 19, 20, 23, 24, 26]
    );
}

#[test]
fn levels_match_fixture() {
    let ap = presentation();
    assert_eq!(ap.levels(), 15);
    assert_eq!(ap.star_level(), 1);
    assert_eq!(ap.star_edge(), 3);
    let want: Vec<(usize, Vec<usize>)> = vec![
        (2, vec![1]),
        (3, vec![4, 5]),
        (4, vec![9, 10, 11]),
        (5, vec![15, 16, 17]),
        (6, vec![21, 22, 23]),
        (7, vec![25, 26]),
        (8, vec![18, 19]),
        (9, vec![24]),
        (10, vec![12, 13]),
        (11, vec![20]),
        (12, vec![6, 7]),
        (13, vec![14]),
        (14, vec![2, 3]),
        (15, vec![8]),
    ];
    assert_eq!(ap.arcs_by_level(), want);
}

#[test]
fn page_intervals_match_fixture() {
    let ap = presentation();
    assert_eq!(
        ap.intervals(),
        [
            (2, 7),
            (1, 3),
            (2, 14),
            (4, 15),
            (1, 14),
            (3, 12),
            (5, 13),
            (12, 15),
            (4, 10),
            (6, 11),
            (10, 13),
            (5, 8),
            (7, 9),
            (8, 11),
            (6, 9),
        ]
    );
    let g = ap.to_grid();
    assert_eq!(g.size(), 15);
    assert!(!g.mirror());
}

#[test]
fn both_trees_shape_to_seventeen_crossings() {
    use gridforge::invariants::compare;
    use gridforge::Verdict;

    let d = diagram();

    // the replayed tree's grid
    let g = presentation().to_grid();
    assert_eq!((g.to_diagram().crossing_count(), g.total_length()), (22, 146));
    assert!(!g.mirror());
    let (s, how) = g.shape_canonical_report();
    assert_eq!(how.to_string(), "reflect-vertical, columns +0, rows +11");
    assert_eq!((s.to_diagram().crossing_count(), s.total_length()), (17, 124));
    assert!(s.mirror());
    assert_eq!(s.size(), 15);
    assert_eq!(
        s.cols(),
        [
            (2, 5),
            (4, 7),
            (3, 5),
            (1, 4),
            (6, 9),
            (2, 7),
            (6, 15),
            (8, 11),
            (1, 9),
            (8, 14),
            (10, 12),
            (11, 15),
            (10, 13),
            (12, 14),
            (3, 13)
        ]
    );
    assert_eq!(s.shape_canonical(), s);
    // 17 crossings is already irreducible for the simplifier
    assert_eq!(s.to_diagram().simplified().crossing_count(), 17);
    assert_eq!(compare(&d, &s.to_diagram(), 18).verdict, Verdict::Consistent);

    // the search's own tree lands on a different grid with the same minimum
    let root = SpanningTree::default_root(&d);
    let t = SpanningTree::find(&d, root).unwrap();
    assert_eq!(t.order(), [-22, -16, -10, -4, 1, 5, -8, 11, -14, 17, 18, 12]);
    let g2 = ArcPresentation::build(&d, &t).unwrap().to_grid();
    assert_eq!(
        (g2.to_diagram().crossing_count(), g2.total_length()),
        (19, 152)
    );
    let (s2, how2) = g2.shape_canonical_report();
    assert_eq!(how2.to_string(), "reflect-horizontal, columns +14, rows +10");
    assert_eq!(
        (s2.to_diagram().crossing_count(), s2.total_length()),
        (17, 136)
    );
    assert_eq!(compare(&d, &s2.to_diagram(), 18).verdict, Verdict::Consistent);
}
