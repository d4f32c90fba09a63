mod common;

use common::{period, shape};
use cylwalk::enumeration::{count_sct, FixedSide};
use cylwalk::insertion::reverse_walk_bijection;
use cylwalk::lattice::{
    count_walks, list_walks, map_f, map_g, map_h, map_q, walk_of_sct, walk_to_tasep, walk_to_tasep_ending, Cover,
    Necklace, SimplexPoint, TasepState, Vertex, WalkRecord,
};
use cylwalk::{Sct, TypeWord};
use proptest::prelude::*;
use std::collections::HashSet;

fn state() -> impl Strategy<Value = TasepState> {
    (1usize..=4, 1usize..=4, any::<u64>()).prop_map(|(d, l, seed)| {
        let all = TasepState::all(period(d, l));
        all[(seed % all.len() as u64) as usize].clone()
    })
}

proptest! {
    #[test]
    fn least_rotation_is_least(u in state()) {
        let n = u.sites() as i64;
        let best = (0..n).map(|k| u.rotated(k).bits().to_vec()).min().unwrap();
        prop_assert_eq!(u.rotated(u.least_rotation() as i64).bits().to_vec(), best);
        prop_assert_eq!(Necklace::of(&u), Necklace::of(&u.rotated(3)));
    }

    #[test]
    fn reverse_complement_swaps_parameters(u in state()) {
        let rc = u.reverse_complement();
        prop_assert_eq!(rc.period(), u.period().transposed());
        prop_assert_eq!(rc.reverse_complement(), u);
    }

    #[test]
    fn maps_commute(s in shape()) {
        prop_assert_eq!(map_g(&map_f(&s)), map_q(&map_h(&s)));
        prop_assert_eq!(map_f(&s).period(), s.period());
    }

    #[test]
    fn tasep_lifts_follow_the_simplex_walk(s in shape(), n in 0usize..8, seed in any::<u64>()) {
        let t = Sct::random(&s, n, seed);
        let walk = walk_of_sct(&t);
        let points = walk.vertices().unwrap();
        for lifted in [walk_to_tasep(t.inner(), &walk).unwrap(), walk_to_tasep_ending(&walk).unwrap()] {
            prop_assert_eq!(lifted.type_word(), walk.type_word());
            for (p, u) in points.iter().zip(lifted.vertices().unwrap()) {
                let (Vertex::Point(p), Vertex::State(u)) = (p, u) else { unreachable!() };
                prop_assert_eq!(map_g(p), Necklace::of(&u));
            }
        }
        let Vertex::Point(end) = walk.end() else { unreachable!() };
        prop_assert_eq!(walk_to_tasep_ending(&walk).unwrap().end(), Vertex::State(end.particle_word()));
        prop_assert_eq!(Cover::H.project(&walk_of_shapes(&t)).unwrap().end(), Vertex::State(map_h(t.outer())));
    }

    #[test]
    fn walk_serde_round_trip(s in shape(), n in 0usize..6, seed in any::<u64>()) {
        let walk = walk_of_sct(&Sct::random(&s, n, seed));
        let json = serde_json::to_string(&walk).unwrap();
        prop_assert_eq!(serde_json::from_str::<WalkRecord>(&json).unwrap(), walk.clone());
        prop_assert_eq!(walk.reversed().unwrap().reversed().unwrap(), walk);
    }

    #[test]
    fn sct_counts_agree(s in shape(), n in 0usize..6) {
        let inner = count_sct(&s, n, FixedSide::Inner, 1 << 24).unwrap();
        prop_assert_eq!(inner, count_sct(&s, n, FixedSide::Outer, 1 << 24).unwrap());
        prop_assert_eq!(inner, count_sct(&s.conjugate(), n, FixedSide::Inner, 1 << 24).unwrap());
    }
}

fn walk_of_shapes(t: &Sct) -> WalkRecord {
    let shapes = t.walk_rep();
    let steps = t.entry_rows().into_iter().map(|i| cylwalk::lattice::WalkStep { i, sign: cylwalk::Sign::Plus });
    WalkRecord::new(Vertex::Shape(shapes[0].clone()), steps.collect()).unwrap()
}

#[test]
fn reverse_walks_are_a_bijection_on_small_simplices() {
    for (d, l) in [(3, 2), (2, 3), (3, 3)] {
        let points = SimplexPoint::all(period(d, l));
        for n in 0..=5 {
            let word = TypeWord::all_plus(n);
            let all: Vec<WalkRecord> =
                points.iter().flat_map(|p| list_walks(&Vertex::Point(p.clone()), &word, 1 << 20).unwrap()).collect();
            for x in &points {
                let from_x: Vec<&WalkRecord> = all.iter().filter(|w| w.start() == &Vertex::Point(x.clone())).collect();
                let into_x: HashSet<&WalkRecord> = all.iter().filter(|w| w.end() == Vertex::Point(x.clone())).collect();
                let images: HashSet<WalkRecord> = from_x.iter().map(|w| reverse_walk_bijection(w).unwrap()).collect();
                assert_eq!(images.len(), from_x.len(), "({d},{l}) n={n} x={x}: not injective");
                assert_eq!(images.len(), into_x.len(), "({d},{l}) n={n} x={x}: not onto");
                assert!(images.iter().all(|w| into_x.contains(w)));
            }
        }
    }
}

#[test]
fn walk_counts_match_listings() {
    let p = period(3, 3);
    for x in SimplexPoint::all(p) {
        for w in TypeWord::all_of_length(4) {
            let v = Vertex::Point(x.clone());
            assert_eq!(count_walks(&v, &w, 1 << 20).unwrap(), list_walks(&v, &w, 1 << 20).unwrap().len() as u128);
        }
    }
    let corner = Vertex::Point(SimplexPoint::corner(p));
    assert!(count_walks(&corner, &TypeWord::all_plus(12), 5).is_err());
}

#[test]
fn bad_walks_are_rejected() {
    let json = r#"{"model":"simplex","start":{"coords":[0,0,3]},"steps":[{"i":1,"sign":"+"}]}"#;
    assert!(serde_json::from_str::<WalkRecord>(json).is_err());
    let json = r#"{"model":"simplex","start":{"coords":[0,-1,3]},"steps":[]}"#;
    assert!(serde_json::from_str::<WalkRecord>(json).is_err());
    let necklace = r#"{"model":"necklace","start":{"bits":"011"},"steps":[]}"#;
    assert!(serde_json::from_str::<WalkRecord>(necklace).unwrap().reversed().is_err());
}
