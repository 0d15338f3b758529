//! The fast crossing predicate against the brute-force lift oracle.

use angulator::oracle::{crossing_oracle, default_window};
use angulator::{all_diagonals, crosses, AnnulusConfig};

fn agree_on(p: usize, q: usize, m: usize, max_winding: i64) -> usize {
    let c = AnnulusConfig::new(p, q, m).unwrap();
    let ds = all_diagonals(&c, -max_winding..=max_winding);
    let mut pairs = 0;
    for a in &ds {
        for b in &ds {
            let fast = crosses(&c, a, b).unwrap();
            let slow = crossing_oracle(&c, a, b, default_window(&c, a, b));
            assert_eq!(fast, slow, "{c}: {a} vs {b}");
            pairs += 1;
        }
    }
    pairs
}

#[test]
fn agreement_on_small_annuli() {
    for (p, q, m) in [(2, 2, 2), (3, 2, 1), (2, 3, 1), (3, 2, 2), (2, 2, 3)] {
        assert!(agree_on(p, q, m, 2) > 0);
    }
}

#[test]
fn agreement_with_loops_and_wide_windings() {
    agree_on(4, 2, 1, 3);
    agree_on(2, 4, 1, 1);
}
