//! Counting: bounded Motzkin paths, the `d = 4` closed form, and DP counts
//! of tableaux over the shape graph.

use std::collections::HashMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lattice::{list_walks, Vertex};
use crate::shape::CylindricShape;
use crate::tableau::{Oct, Sct, Sign, TypeWord};

/// Path counts by (length, height) for Motzkin paths confined to `0..=h`.
#[derive(Clone, Debug)]
pub struct MotzkinTable {
    h: usize,
    flat_on_top: bool,
    /// `counts[len][height]`.
    counts: Vec<Vec<u128>>,
}

impl MotzkinTable {
    /// Table up to length `n_max`. With `flat_on_top == false` flat steps at
    /// height `h` are forbidden.
    pub fn new(n_max: usize, h: usize, flat_on_top: bool) -> Self {
        let mut counts = vec![vec![0u128; h + 1]];
        counts[0][0] = 1;
        for len in 1..=n_max {
            let prev = &counts[len - 1];
            let row: Vec<u128> = (0..=h)
                .map(|y| {
                    let flat = if y < h || flat_on_top { prev[y] } else { 0 };
                    let up = if y > 0 { prev[y - 1] } else { 0 };
                    let down = if y < h { prev[y + 1] } else { 0 };
                    flat.checked_add(up).and_then(|s| s.checked_add(down)).expect("Motzkin count overflows u128")
                })
                .collect();
            counts.push(row);
        }
        MotzkinTable { h, flat_on_top, counts }
    }

    /// Paths of length `n` from height 0 back to height 0.
    pub fn returning(&self, n: usize) -> u128 {
        self.counts[n][0]
    }

    pub fn height(&self) -> usize {
        self.h
    }

    pub fn allows_flat_on_top(&self) -> bool {
        self.flat_on_top
    }
}

/// `M_{n,h}`.
pub fn motzkin_bounded(n: usize, h: usize) -> u128 {
    MotzkinTable::new(n, h, true).returning(n)
}

/// `M'_{n,h}`: no flat steps at height `h`.
pub fn motzkin_bounded_noflat_top(n: usize, h: usize) -> u128 {
    MotzkinTable::new(n, h, false).returning(n)
}

/// `a_{n,L}`: `M_{n,h}` for `L = 2h + 1` and `M'_{n,h}` for `L = 2h`.
pub fn a_series(n: usize, l: usize) -> u128 {
    assert!(l >= 1, "L must be positive");
    if l % 2 == 1 {
        motzkin_bounded(n, l / 2)
    } else {
        motzkin_bounded_noflat_top(n, l / 2)
    }
}

/// Largest tolerated distance from an integer in [`d4_coefficient`].
pub const D4_TOLERANCE: f64 = 1e-6;

fn d4_sum(n: usize, l: usize, squared: bool) -> f64 {
    let m = l + 4;
    let theta = PI / m as f64;
    let c = |k: usize| 2.0 * (k as f64 * theta).cos();
    let mut total = 0.0;
    for k in (1..=l + 3).step_by(2) {
        for j in (1..k).step_by(2) {
            let diff = c(k) - c(j);
            let lead = if squared { diff * diff } else { diff };
            total += lead * (2.0 + c(j)) * (2.0 + c(k)) * (c(j) + c(k)).powi(n as i32);
        }
    }
    total / (m * m) as f64
}

/// The `t^n` coefficient of the `d = 4` generating function, as a float,
/// with the difference factor squared.
pub fn d4_value(n: usize, l: usize) -> f64 {
    d4_sum(n, l, true)
}

/// The same sum with the difference factor `ζ^k + ζ^{-k} - ζ^j - ζ^{-j}`
/// taken to the first power.
pub fn d4_value_unsquared(n: usize, l: usize) -> f64 {
    d4_sum(n, l, false)
}

/// Number of `n`-step walks from the corner of `Δ_{4,L}`, from the closed form.
pub fn d4_coefficient(n: usize, l: usize) -> Result<u128> {
    let v = d4_value(n, l);
    let r = v.round();
    if (v - r).abs() >= D4_TOLERANCE || r < 0.0 {
        return Err(Error::Numerical(format!(
            "d=4 coefficient for n={n}, L={l} evaluates to {v}, not an integer within {D4_TOLERANCE}"
        )));
    }
    Ok(r as u128)
}

/// Which side of the tableau the fixed shape is on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedSide {
    /// Count `SCT^n(· / α)`: `α` is the inner shape.
    Inner,
    /// Count `SCT^n(α / ·)`: `α` is the outer shape.
    Outer,
}

/// Number of walks of type `word` from `start`, keyed by their end shape.
pub fn walk_ends(start: &CylindricShape, word: &TypeWord, cap: u64) -> Result<HashMap<CylindricShape, u128>> {
    let mut layer: HashMap<CylindricShape, u128> = HashMap::from([(start.clone(), 1)]);
    let mut expanded = 0u64;
    for sign in &word.0 {
        let mut next: HashMap<CylindricShape, u128> = HashMap::new();
        for (s, c) in &layer {
            expanded += 1;
            if expanded > cap {
                return Err(Error::ResourceCap { cap });
            }
            let rows = match sign {
                Sign::Plus => s.addable_rows(),
                Sign::Minus => s.removable_rows(),
            };
            for r in rows {
                let t = match sign {
                    Sign::Plus => s.add_cell(r)?,
                    Sign::Minus => s.remove_cell(r)?,
                };
                let slot = next.entry(t).or_insert(0);
                *slot = slot.checked_add(*c).ok_or(Error::Overflow)?;
            }
        }
        layer = next;
    }
    Ok(layer)
}

fn total(counts: &HashMap<CylindricShape, u128>) -> Result<u128> {
    counts.values().try_fold(0u128, |a, c| a.checked_add(*c).ok_or(Error::Overflow))
}

/// `|SCT^n(· / α)|` or `|SCT^n(α / ·)|`.
pub fn count_sct(alpha: &CylindricShape, n: usize, side: FixedSide, cap: u64) -> Result<u128> {
    let word = match side {
        FixedSide::Inner => TypeWord::all_plus(n),
        FixedSide::Outer => TypeWord(vec![Sign::Minus; n]),
    };
    total(&walk_ends(alpha, &word, cap)?)
}

/// `|OCT^w(α, ·)|`.
pub fn count_oct(alpha: &CylindricShape, word: &TypeWord, cap: u64) -> Result<u128> {
    total(&walk_ends(alpha, word, cap)?)
}

/// `|OCT^w(α, β)|`.
pub fn count_oct_between(alpha: &CylindricShape, beta: &CylindricShape, word: &TypeWord, cap: u64) -> Result<u128> {
    Ok(walk_ends(alpha, word, cap)?.get(beta).copied().unwrap_or(0))
}

/// Every oscillating tableau of type `word` starting at `alpha`.
pub fn list_oct(alpha: &CylindricShape, word: &TypeWord, cap: u64) -> Result<Vec<Oct>> {
    list_walks(&Vertex::Shape(alpha.clone()), word, cap)?
        .iter()
        .map(|w| {
            let shapes = w
                .vertices()?
                .into_iter()
                .map(|v| match v {
                    Vertex::Shape(s) => s,
                    _ => unreachable!("shape walks stay in the shape graph"),
                })
                .collect();
            Oct::new(shapes)
        })
        .collect()
}

/// Every tableau in `SCT^n(· / α)` or `SCT^n(α / ·)`.
pub fn list_sct(alpha: &CylindricShape, n: usize, side: FixedSide, cap: u64) -> Result<Vec<Sct>> {
    let word = match side {
        FixedSide::Inner => TypeWord::all_plus(n),
        FixedSide::Outer => TypeWord(vec![Sign::Minus; n]),
    };
    list_oct(alpha, &word, cap)?
        .into_iter()
        .map(|o| match side {
            FixedSide::Inner => Sct::from_walk_rep(o.shapes()),
            FixedSide::Outer => Sct::from_walk_rep(o.reversed().shapes()),
        })
        .collect()
}
