//! Internal row insertion and the cylindric Robinson-Schensted correspondence.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::growth;
use crate::lattice::{base_shape, oct_of_walk, walk_of_sct, ModelKind, Vertex, WalkRecord, WalkStep};
use crate::shape::CellRef;
use crate::tableau::{Sct, Sign};

/// One link of a bumping chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bump {
    /// Row (in `1..=d`) the bumped value was inserted into.
    pub row: usize,
    /// The entry it displaced, or `None` when it was appended as a new cell.
    pub replaced: Option<usize>,
}

/// Result of one internal insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTrace {
    pub result: Sct,
    /// Row of the new outer cell.
    pub terminal_row: usize,
    pub bumping_path: Vec<Bump>,
}

/// Internal insertion at the inner corner in row `row`.
///
/// The entry in cell `⟨row, μ_row + 1⟩` leaves the inner shape and is
/// row-inserted into the next row down, bumping the smallest larger entry
/// into the row after that, and so on until a value lands at the end of a
/// row. If that cell is outside the tableau both shapes grow by the cell.
pub fn internal_insertion(t: &Sct, row: usize) -> Result<InsertionTrace> {
    let period = t.period();
    let mut inner = t.inner().clone();
    let mut outer = t.outer().clone();
    if !inner.is_addable(row) {
        return Err(Error::NotInsertionCorner { row, shape: inner.to_string() });
    }
    let corner = CellRef { row, col: inner.window()[row - 1] + 1 };
    let mut entries = t.entries().clone();
    let Some(mut carried) = entries.remove(&corner) else {
        inner = inner.add_cell(row)?;
        outer = outer.add_cell(row)?;
        let result = Sct::from_parts_unchecked(inner, outer, entries);
        return Ok(InsertionTrace { result, terminal_row: row, bumping_path: Vec::new() });
    };
    inner = inner.add_cell(row)?;
    let mut path = Vec::new();
    let mut r = row as i64 + 1;
    loop {
        let target = CellRef::canonical(period, r, 0).row;
        let lo = inner.row(r) + 1;
        let hi = outer.row(r);
        let bumped = (lo..=hi).map(|c| CellRef::canonical(period, r, c)).find(|cell| entries[cell] > carried);
        match bumped {
            Some(cell) => {
                let old = entries.insert(cell, carried).expect("cell in tableau");
                path.push(Bump { row: target, replaced: Some(old) });
                carried = old;
                r += 1;
            }
            None => {
                let cell = CellRef::canonical(period, r, hi + 1);
                outer = outer.add_cell(target)?;
                entries.insert(cell, carried);
                path.push(Bump { row: target, replaced: None });
                let result = Sct::from_parts_unchecked(inner, outer, entries);
                debug_assert!(result.validate().is_ok());
                return Ok(InsertionTrace { result, terminal_row: target, bumping_path: path });
            }
        }
    }
}

/// `CRS(T, U) = (P, Q)`, together with the insertion iterates `P_0, .., P_m`.
pub fn crs_forward_with_iterates(t: &Sct, u: &Sct) -> Result<(Sct, Sct, Vec<Sct>)> {
    if t.period() != u.period() {
        return Err(Error::PeriodMismatch(t.period(), u.period()));
    }
    if t.inner() != u.inner() {
        return Err(Error::InvalidTableau(format!("inner shapes differ: {} vs {}", t.inner(), u.inner())));
    }
    let mut p = t.clone();
    let mut q_entries = BTreeMap::new();
    let mut iterates = vec![p.clone()];
    for (k, row) in u.entry_rows().into_iter().enumerate() {
        assert!(p.inner().is_addable(row), "entry {} of U must sit at an inner corner", k + 1);
        let trace = internal_insertion(&p, row)?;
        p = trace.result;
        let r = trace.terminal_row;
        q_entries.insert(CellRef { row: r, col: p.outer().window()[r - 1] }, k + 1);
        iterates.push(p.clone());
    }
    let q = Sct::new(t.outer().clone(), p.outer().clone(), q_entries)?;
    Ok((p, q, iterates))
}

/// `CRS(T, U) = (P, Q)`.
pub fn crs_forward(t: &Sct, u: &Sct) -> Result<(Sct, Sct)> {
    crs_forward_with_iterates(t, u).map(|(p, q, _)| (p, q))
}

/// Inverse of [`crs_forward`], computed with the backward growth rules.
pub fn crs_inverse(p: &Sct, q: &Sct) -> Result<(Sct, Sct)> {
    growth::crs_inverse_by_growth(p, q)
}

/// `Φ(T)`, the common value of `P` and `Q` in `CRS(T, T)`.
pub fn phi(t: &Sct) -> Sct {
    crs_forward(t, t).expect("a tableau shares its inner shape with itself").0
}

/// `Φ^{-1}(P)`: complement, apply `Φ`, complement again.
pub fn phi_inverse(p: &Sct) -> Sct {
    phi(&p.complement()).complement()
}

/// Send an `n`-step forward walk from `x` to an `n`-step forward walk ending at `x`.
pub fn reverse_walk_bijection(walk: &WalkRecord) -> Result<WalkRecord> {
    let Vertex::Point(x) = walk.start() else {
        return Err(Error::InvalidWalk(format!("expected a simplex walk, got {}", walk.model())));
    };
    if walk.steps().iter().any(|s| s.sign != Sign::Plus) {
        return Err(Error::InvalidWalk("only forward steps are allowed".into()));
    }
    let alpha = base_shape(x);
    let t = Sct::from_walk_rep(oct_of_walk(&alpha, walk)?.shapes())?;
    let back = phi_inverse(&t);
    let start = walk_of_sct(&back).start().clone();
    let rows = back.entry_rows();
    let steps = rows.into_iter().map(|i| WalkStep { i, sign: Sign::Plus }).collect();
    let out = WalkRecord::new(start, steps)?;
    debug_assert_eq!(out.end(), Vertex::Point(x.clone()));
    debug_assert_eq!(out.model(), ModelKind::Simplex);
    Ok(out)
}
