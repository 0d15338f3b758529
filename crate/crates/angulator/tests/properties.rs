mod common;

use angulator::{
    all_diagonals, bound_quiver, classify, coloured_quiver, crosses, delta_p, iso_check, recognize,
    rotate, validate, Angulation, AnnulusConfig, BoundQuiver, MDiagonal,
};
use common::{all_angulations, config};
use proptest::prelude::*;
use proptest::sample::select;

fn small_config() -> impl Strategy<Value = AnnulusConfig> {
    (2usize..=4, 2usize..=4, 1usize..=3).prop_map(|(p, q, m)| config(p, q, m))
}

fn config_and_two_diagonals() -> impl Strategy<Value = (AnnulusConfig, MDiagonal, MDiagonal)> {
    small_config().prop_flat_map(|c| {
        let all = all_diagonals(&c, -2..=2);
        (Just(c), select(all.clone()), select(all))
    })
}

fn swept_angulation() -> impl Strategy<Value = Angulation> {
    let mut pool = Vec::new();
    for (p, q, m) in [(2, 2, 2), (3, 2, 1), (2, 3, 2)] {
        pool.extend(all_angulations(&config(p, q, m)));
    }
    select(pool)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn crossing_is_symmetric_and_irreflexive((c, a, b) in config_and_two_diagonals()) {
        prop_assert_eq!(crosses(&c, &a, &b).unwrap(), crosses(&c, &b, &a).unwrap());
        prop_assert!(!crosses(&c, &a, &a).unwrap());
    }

    #[test]
    fn rotation_preserves_crossing((c, a, b) in config_and_two_diagonals(), s in -12i64..=12) {
        let (ra, rb) = (rotate(&c, &a, s), rotate(&c, &b, s));
        prop_assert_eq!(crosses(&c, &ra, &rb).unwrap(), crosses(&c, &a, &b).unwrap());
        prop_assert_eq!(rotate(&c, &ra, -s), a);
    }

    #[test]
    fn rotation_shifts_degree((c, a, _b) in config_and_two_diagonals(), s in 0i64..=12) {
        let m = c.m();
        let before = classify(&c, &a);
        let after = classify(&c, &rotate(&c, &a, s));
        prop_assert_eq!(after.degree, (before.degree + s as usize) % m);
        prop_assert_eq!((after.kind, after.level), (before.kind, before.level));
    }

    #[test]
    fn rotated_angulations_stay_valid(a in swept_angulation(), s in -8i64..=8) {
        let c = *a.config();
        let turned: Vec<MDiagonal> = a.diagonals().iter().map(|d| rotate(&c, d, s)).collect();
        let b = validate(&c, &turned).unwrap();
        prop_assert!(iso_check(&bound_quiver(&a), &bound_quiver(&b)));
    }

    #[test]
    fn colours_of_opposite_arrows_add_up_to_m(a in swept_angulation()) {
        let cq = coloured_quiver(&a);
        let m = a.config().m();
        for x in &cq.arrows {
            prop_assert!(cq.arrows.iter().any(|y| y.src == x.dst && y.dst == x.src && y.face == x.face && x.colour + y.colour == m));
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(
        (a, perm) in swept_angulation().prop_flat_map(|a| {
            let n = a.diagonals().len();
            (Just(a), permutation(n))
        })
    ) {
        let q = bound_quiver(&a);
        let shuffled = q.permuted(&perm);
        prop_assert!(iso_check(&q, &shuffled));
        prop_assert_eq!(
            recognize(&q, a.config().m()).map(|r| r.verdict).ok(),
            recognize(&shuffled, a.config().m()).map(|r| r.verdict).ok()
        );
    }

    #[test]
    fn json_round_trips(a in swept_angulation()) {
        let text = a.to_json().to_string();
        prop_assert_eq!(&Angulation::from_json(&text).unwrap(), &a);
        let q = bound_quiver(&a);
        let back = BoundQuiver::from_json(&q.to_json().to_string()).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn hereditary_quiver_has_no_relations(c in small_config()) {
        let q = bound_quiver(&delta_p(&c));
        prop_assert!(q.relations.is_empty());
        prop_assert_eq!(q.arrows.len(), c.p() + c.q());
    }
}
