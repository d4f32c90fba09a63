#![allow(dead_code)]

use cylwalk::{CylindricShape, Period};
use proptest::prelude::*;

/// Shapes with `d, L <= 4` and bottom row in `-3..=3`.
pub fn shape() -> impl Strategy<Value = CylindricShape> {
    (1usize..=4, 1usize..=4, -3i64..=3, prop::collection::vec(0usize..=4, 4)).prop_map(|(d, l, base, gaps)| {
        let mut rows = vec![base; d];
        let mut budget = l;
        for i in (0..d - 1).rev() {
            let g = gaps[i].min(budget);
            budget -= g;
            rows[i] = rows[i + 1] + g as i64;
        }
        CylindricShape::from_window(d, l, rows).unwrap()
    })
}

pub fn period(d: usize, l: usize) -> Period {
    Period::new(d, l).unwrap()
}

pub fn window(d: usize, l: usize, rows: &[i64]) -> CylindricShape {
    CylindricShape::from_window(d, l, rows.to_vec()).unwrap()
}
