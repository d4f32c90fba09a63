mod common;

use common::{shape, window};
use cylwalk::shape::{containment_order, shapes_in_box};
use cylwalk::CylindricShape;
use proptest::prelude::*;
use std::cmp::Ordering;

/// `λ'_j = max{ i : λ_i >= j }`, searched over a range wide enough for the window.
fn conjugate_oracle(s: &CylindricShape) -> Vec<i64> {
    let (d, l) = (s.d() as i64, s.l() as i64);
    (1..=l)
        .map(|j| {
            let mut i = 200 * d;
            while s.row(i) < j {
                i -= 1;
            }
            i
        })
        .collect()
}

proptest! {
    #[test]
    fn corners_balance(s in shape()) {
        prop_assert_eq!(s.addable_rows().len(), s.removable_rows().len());
        prop_assert_eq!(s.addable_rows().len(), s.corner_count());
        prop_assert!(s.corner_count() >= 1);
    }

    #[test]
    fn add_then_remove(s in shape()) {
        for r in s.addable_rows() {
            let t = s.add_cell(r).unwrap();
            prop_assert!(t.is_removable(r));
            prop_assert_eq!(t.covers(&s), Some(r));
            prop_assert_eq!(t.remove_cell(r).unwrap(), s.clone());
            prop_assert_eq!(t.size(), s.size() + 1);
        }
    }

    #[test]
    fn involutions(s in shape()) {
        prop_assert_eq!(s.conjugate().conjugate(), s.clone());
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.conjugate().period(), s.period().transposed());
        prop_assert_eq!(s.conjugate().corner_count(), s.corner_count());
    }

    #[test]
    fn conjugate_matches_oracle(s in shape()) {
        prop_assert_eq!(s.conjugate().window().to_vec(), conjugate_oracle(&s));
    }

    #[test]
    fn boundary_words_transpose(s in shape()) {
        let w = s.boundary_word();
        prop_assert_eq!(w.0.len(), s.d() + s.l());
        prop_assert!(s.conjugate().boundary_word().is_rotation_of(&w.transposed()));
        let parsed: cylwalk::BoundaryWord = w.to_string().parse().unwrap();
        prop_assert_eq!(parsed, w);
    }

    #[test]
    fn lattice_laws(a in shape(), shift in -2i64..=2) {
        let b = a.complement().shifted(shift).unwrap();
        let b = CylindricShape::new(a.period(), b.window().to_vec());
        prop_assume!(b.is_ok());
        let b = b.unwrap();
        let u = a.union(&b).unwrap();
        let i = a.intersection(&b).unwrap();
        prop_assert!(a.is_contained_in(&u).unwrap() && b.is_contained_in(&u).unwrap());
        prop_assert!(i.is_contained_in(&a).unwrap() && i.is_contained_in(&b).unwrap());
        prop_assert_eq!(a.union(&i).unwrap(), a.clone());
        prop_assert_eq!(a.intersection(&u).unwrap(), a.clone());
        prop_assert_eq!(u.size() + i.size(), a.size() + b.size());
    }

    #[test]
    fn serde_round_trip(s in shape()) {
        let json = serde_json::to_string(&s).unwrap();
        let back: CylindricShape = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn skew_cells_count_the_size_difference() {
    let inner = window(3, 4, &[3, 1, 0]);
    let outer = window(3, 4, &[5, 5, 3]);
    assert_eq!(outer.skew_cells(&inner).unwrap().len(), 9);
    assert_eq!(outer.skew_size(&inner).unwrap(), 9);
    assert!(inner.skew_size(&outer).is_err());
}

#[test]
fn box_enumeration_is_sorted_by_nothing_but_complete() {
    let p = common::period(3, 3);
    let all = shapes_in_box(p, -1, 2);
    for a in &all {
        assert!(a.window().iter().all(|v| (-1..=2).contains(v)));
    }
    let brute = (-1..=2i64)
        .flat_map(|x| (-1..=2i64).flat_map(move |y| (-1..=2i64).map(move |z| vec![x, y, z])))
        .filter(|w| CylindricShape::new(p, w.clone()).is_ok())
        .count();
    assert_eq!(all.len(), brute);
}

#[test]
fn containment_is_a_partial_order() {
    let a = window(3, 3, &[2, 2, 0]);
    let b = window(3, 3, &[2, 2, 1]);
    let c = window(3, 3, &[3, 1, 1]);
    assert_eq!(containment_order(&a, &b), Some(Ordering::Less));
    assert_eq!(containment_order(&b, &a), Some(Ordering::Greater));
    assert_eq!(containment_order(&a, &a), Some(Ordering::Equal));
    assert_eq!(containment_order(&a, &c), None);
    assert_eq!(containment_order(&a, &window(3, 2, &[1, 1, 0])), None);
}

#[test]
fn invalid_windows_are_rejected() {
    assert!(CylindricShape::from_window(3, 2, vec![3, 0, 0]).is_err());
    assert!(CylindricShape::from_window(3, 2, vec![0, 1, 0]).is_err());
    assert!(CylindricShape::from_window(0, 2, vec![]).is_err());
    assert!(CylindricShape::from_window(2, 2, vec![0]).is_err());
}
