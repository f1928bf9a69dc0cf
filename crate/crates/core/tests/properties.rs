use proptest::prelude::*;

use lie_cideal::catalog::{builtin, parse, random_solvable, serialize, Family};
use lie_cideal::cideal::{cideal_brute_force, is_cideal, line_cideal, Answer};
use lie_cideal::lattice::{core_of, enum_subalgebras, subspace_count, subspaces};
use lie_cideal::structure::{classify_thm52, is_solvable, is_supersolvable, supersolvable_by_search};
use lie_cideal::{Budget, Field, Subspace, Vector};

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn rows(max: usize) -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..6).prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::vec(-4i64..=4, n), 0..=max)))
}

fn lift(field: Field, rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
}

fn field_strategy() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Q), Just(gf(2)), Just(gf(3)), Just(gf(5))]
}

proptest! {
    #[test]
    fn grassmann_identity(field in field_strategy(), (n, a) in rows(4), b_rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 0..=4)) {
        let b: Vec<Vec<i64>> = b_rows.into_iter().map(|r| r[..n].to_vec()).collect();
        let u = Subspace::span(field, n, &lift(field, &a)).unwrap();
        let w = Subspace::span(field, n, &lift(field, &b)).unwrap();
        let s = u.sum(&w).unwrap();
        let m = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + m.dim(), u.dim() + w.dim());
        prop_assert!(m.leq(&u).unwrap() && m.leq(&w).unwrap());
        prop_assert!(u.leq(&s).unwrap() && w.leq(&s).unwrap());
    }

    #[test]
    fn rref_is_canonical(field in field_strategy(), (n, a) in rows(5)) {
        let vs = lift(field, &a);
        let u = Subspace::span(field, n, &vs).unwrap();
        let mut reversed = vs.clone();
        reversed.reverse();
        prop_assert_eq!(&Subspace::span(field, n, &reversed).unwrap(), &u);
        prop_assert_eq!(&Subspace::span(field, n, &u.basis_vectors()).unwrap(), &u);
    }

    #[test]
    fn random_algebras_round_trip(seed in 0u64..10_000, p in prop_oneof![Just(2u64), Just(3), Just(5)], gens in 1usize..4) {
        let l = random_solvable(seed, gf(p), Family::UpperTriangular, 3, gens).unwrap();
        prop_assert!(l.validate().is_empty());
        prop_assert!(is_solvable(&l));
        let text = serialize(&l);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), text);
        prop_assert_eq!(back, l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn engine_matches_definition(seed in 0u64..5_000, gens in 1usize..4) {
        let l = random_solvable(seed, gf(2), Family::UpperTriangular, 3, gens).unwrap();
        let budget = Budget::default();
        for b in enum_subalgebras(&l, budget).unwrap() {
            let v = is_cideal(&l, &b, budget).unwrap();
            let oracle = cideal_brute_force(&l, &b, budget).unwrap();
            prop_assert_eq!(v.answer == Answer::Yes, oracle.is_some());
            let core = core_of(&l, &b).unwrap();
            prop_assert!(core.leq(&b).unwrap() && l.is_ideal(&core).unwrap());
        }
    }

    #[test]
    fn lines_follow_the_classifier(seed in 0u64..5_000, gens in 1usize..4, p in prop_oneof![Just(2u64), Just(3)]) {
        let l = random_solvable(seed, gf(p), Family::UpperTriangular, 3, gens).unwrap();
        let budget = Budget::default();
        let all = lie_cideal::lattice::projective_points(l.field(), l.dim(), budget)
            .unwrap()
            .into_iter()
            .all(|x| line_cideal(&l, &x).unwrap().is_yes());
        prop_assert_eq!(classify_thm52(&l).all_lines_cideal(), all);
    }

    #[test]
    fn supersolvable_agrees_with_search(seed in 0u64..5_000, gens in 1usize..4) {
        let l = random_solvable(seed, gf(3), Family::UpperTriangular, 3, gens).unwrap();
        prop_assert_eq!(is_supersolvable(&l), supersolvable_by_search(&l, Budget::default()).unwrap());
    }
}

#[test]
fn enumeration_matches_gaussian_counts() {
    let budget = Budget::default();
    for (p, n) in [(2u64, 4usize), (3, 3), (5, 3)] {
        for k in 0..=n {
            let got = subspaces(gf(p), n, Some(k), budget).unwrap().count() as u128;
            assert_eq!(got, subspace_count(n, p, Some(k)));
        }
    }
}

#[test]
fn rational_sl2_borel_is_reported_honestly() {
    let s = builtin("sl2", Field::Q).unwrap();
    let borel = s.span_of_names(&["e", "h"]).unwrap();
    let v = is_cideal(&s, &borel, Budget::default()).unwrap();
    assert_ne!(v.answer, Answer::Yes);
}
