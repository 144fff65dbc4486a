use aperiodic::a2_analysis::*;
use aperiodic::golden::QSqrt5;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn fibonacci_values() {
    let first: Vec<_> = (0..11).map(fib).collect();
    let want: Vec<_> = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55].map(big).to_vec();
    assert_eq!(first, want);
    for n in 0..60 {
        let sum: BigInt = (1..=n).map(fib).sum();
        assert_eq!(sum, fib(n + 2) - 1);
        assert_eq!(fib_binet(n).to_integer(), Some(fib(n)), "n = {n}");
    }
}

#[test]
fn label_lists() {
    assert_eq!(label_list(7).unwrap().labels, vec![1, 2, 3]);
    assert_eq!(label_list(8).unwrap().labels, vec![2, 4, 1, 2]);
    assert_eq!(label_list(9).unwrap().labels, vec![1, 3, 2, 4, 1]);
    assert!(label_list(6).is_err());
    for k in 7..30 {
        let l = label_list(k).unwrap();
        assert_eq!(l.next().labels.len() - l.labels.len(), l.ones());
        assert_eq!(
            BigInt::from(l.labels.len() - 1),
            middle_points(k - 6).unwrap()
        );
    }
}

#[test]
fn middle_point_table() {
    let want = [2, 3, 4, 6, 7, 10, 12, 17, 20, 28, 33];
    for (i, &d) in want.iter().enumerate() {
        let k = i as u32 + 1;
        assert_eq!(middle_points(k).unwrap(), big(d));
        assert_eq!(middle_points_by_increments(k).unwrap(), big(d));
    }
    for k in 1..80 {
        assert_eq!(
            middle_points(k).unwrap(),
            middle_points_by_increments(k).unwrap()
        );
    }
    assert!(middle_points(0).is_err());
}

#[test]
fn vertex_and_degree_counts() {
    let want = [
        (6, 12),
        (6, 12),
        (9, 20),
        (12, 28),
        (18, 44),
        (26, 66),
        (40, 104),
        (61, 162),
    ];
    for (i, &(v, t)) in want.iter().enumerate() {
        let c = A2Counts::of(i as u32 + 1).unwrap();
        assert_eq!((c.vertices, c.total_degree), (big(v), big(t)));
    }
    // two steps of the recursion by hand
    assert_eq!(v_count(9).unwrap(), big(61 + 40 - 2 - 4));
    assert_eq!(t_count(9).unwrap(), big(162 + 104 - 2 - 8));
    assert_eq!(v_count(10).unwrap(), big(95 + 61 - 2 - 6));
    assert!(v_count(0).is_err());
}

#[test]
fn closed_forms_agree_with_recursion() {
    for k in 7..=60 {
        assert_eq!(
            v_closed(k).unwrap().to_integer(),
            Some(v_count(k).unwrap()),
            "V k = {k}"
        );
        assert_eq!(
            t_closed(k).unwrap().to_integer(),
            Some(t_count(k).unwrap()),
            "T k = {k}"
        );
    }
}

#[test]
fn limit_value() {
    let (exact, value) = limit_avg_degree();
    let expected = &(&QSqrt5::integer(29) + &QSqrt5::sqrt5()) / &QSqrt5::integer(11);
    assert_eq!(exact, expected);
    assert!((value - (29.0 + 5f64.sqrt()) / 11.0).abs() < 1e-15);
    assert!((value - 2.839643).abs() < 1e-6);
    // the pasting loss grows like φ^(k/2), so the gap shrinks like φ^(-k/2)
    for (k, bound) in [(30, 1e-3), (40, 1e-4), (80, 1e-8)] {
        let a = avg_degree(k).unwrap().to_f64().unwrap();
        assert!((a - value).abs() < bound, "k = {k}");
    }
}

#[test]
fn average_stays_below_three_and_converges() {
    let two = BigRational::from_integer(big(2));
    let three = BigRational::from_integer(big(3));
    for k in 3..=60 {
        let a = avg_degree(k).unwrap();
        assert!(a > two && a < three, "k = {k}");
    }
    let (_, limit) = limit_avg_degree();
    let gaps: Vec<f64> = (9..=40)
        .map(|k| (avg_degree(k).unwrap().to_f64().unwrap() - limit).abs())
        .collect();
    // the gap shrinks over every two steps
    assert!(gaps.windows(3).all(|w| w[2] < w[0]));
}

#[test]
fn formulas_match_built_graphs() {
    let report = verify_against_graphs(14);
    assert_eq!(report.rows.len(), 14);
    assert!(
        report.all_match(),
        "first mismatch at {:?}",
        report.first_mismatch()
    );
}

#[test]
fn pasting_line_degrees() {
    for k in 9..=14 {
        let line = pasting_line(k).unwrap();
        assert!(
            line.interior.iter().all(|&d| d == 4),
            "k = {k}: {:?}",
            line.interior
        );
        assert!(
            line.endpoints.iter().all(|d| [3, 4].contains(d)),
            "k = {k}: {:?}",
            line.endpoints
        );
        assert_eq!(
            BigInt::from(line.interior.len()),
            middle_points(k - 6).unwrap()
        );
    }
}

#[test]
fn pasting_maps_rebuild_the_patch() {
    use aperiodic::substitution::{dedup_tiles, Tile};
    for k in 5..=10 {
        let (turned, flipped) = pasting_maps(k).unwrap();
        let mut pasted: Vec<Tile<_>> = a2_patch(k - 1)
            .unwrap()
            .tiles
            .iter()
            .map(|t| t.transformed(&turned))
            .collect();
        pasted.extend(
            a2_patch(k - 2)
                .unwrap()
                .tiles
                .iter()
                .map(|t| t.transformed(&flipped)),
        );
        let keys = |ts: Vec<Tile<_>>| {
            dedup_tiles(ts)
                .into_iter()
                .map(|t| (t.kind, t.canonical_key()))
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(keys(pasted), keys(a2_patch(k).unwrap().tiles));
    }
}

proptest! {
    #[test]
    fn closed_forms_are_integers(k in 7u32..200) {
        prop_assert!(v_closed(k).unwrap().is_rational());
        prop_assert!(t_closed(k).unwrap().is_rational());
        prop_assert_eq!(v_closed(k + 2).unwrap().to_integer().unwrap(),
            v_closed(k + 1).unwrap().to_integer().unwrap() + v_closed(k).unwrap().to_integer().unwrap()
                - 2 - middle_points(k - 4).unwrap());
    }
}
