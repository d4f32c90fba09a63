//! Cylindric shapes and their cells.
//!
//! A shape of period `(d, L)` is a weakly decreasing integer sequence with
//! `λ_i = λ_{i+d} + L`. It is stored as the window `[λ_1, .., λ_d]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(d, L)`: `d` rows per period and horizontal shift `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Period {
    d: usize,
    l: usize,
}

impl Period {
    pub fn new(d: usize, l: usize) -> Result<Self> {
        if d == 0 || l == 0 {
            return Err(Error::InvalidPeriod { d, l });
        }
        Ok(Period { d, l })
    }

    pub fn d(self) -> usize {
        self.d
    }

    pub fn l(self) -> usize {
        self.l
    }

    /// `N = d + L`, the number of sites of the matching TASEP ring.
    pub fn sites(self) -> usize {
        self.d + self.l
    }

    /// `(L, d)`, the period of conjugate shapes.
    pub fn transposed(self) -> Period {
        Period { d: self.l, l: self.d }
    }

    fn check_row(self, row: usize) -> Result<()> {
        if row == 0 || row > self.d {
            return Err(Error::RowOutOfRange { row, d: self.d });
        }
        Ok(())
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d, self.l)
    }
}

/// A cell `⟨row, col⟩` reduced so that `row` lies in `1..=d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellRef {
    pub row: usize,
    pub col: i64,
}

impl CellRef {
    /// Canonical representative of `⟨row, col⟩` under `⟨i,j⟩ ≡ ⟨i-d, j+L⟩`.
    pub fn canonical(period: Period, row: i64, col: i64) -> CellRef {
        let d = period.d as i64;
        let shift = (row - 1).div_euclid(d);
        CellRef { row: (row - shift * d) as usize, col: col + shift * period.l as i64 }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.row, self.col)
    }
}

/// One letter of a boundary word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryStep {
    /// A unit step west along a row line.
    W,
    /// A unit step south along a column line.
    S,
}

/// One period of the boundary path of a shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryWord(pub Vec<BoundaryStep>);

impl BoundaryWord {
    /// Swap `W` and `S` and reverse the word.
    pub fn transposed(&self) -> BoundaryWord {
        BoundaryWord(
            self.0
                .iter()
                .rev()
                .map(|s| match s {
                    BoundaryStep::W => BoundaryStep::S,
                    BoundaryStep::S => BoundaryStep::W,
                })
                .collect(),
        )
    }

    pub fn reversed(&self) -> BoundaryWord {
        BoundaryWord(self.0.iter().rev().copied().collect())
    }

    /// True when `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &BoundaryWord) -> bool {
        let n = self.0.len();
        if n != other.0.len() {
            return false;
        }
        n == 0 || (0..n).any(|k| (0..n).all(|t| self.0[(t + k) % n] == other.0[t]))
    }
}

impl fmt::Display for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                BoundaryStep::W => "W",
                BoundaryStep::S => "S",
            })?;
        }
        Ok(())
    }
}

impl FromStr for BoundaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'W' => Ok(BoundaryStep::W),
                'S' => Ok(BoundaryStep::S),
                other => Err(Error::Parse(format!("unexpected letter {other:?} in boundary word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BoundaryWord)
    }
}

/// A cylindric shape, stored by its window `[λ_1, .., λ_d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ShapeRepr", into = "ShapeRepr")]
pub struct CylindricShape {
    period: Period,
    rows: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct ShapeRepr {
    d: usize,
    #[serde(rename = "L")]
    l: usize,
    rows: Vec<i64>,
}

impl TryFrom<ShapeRepr> for CylindricShape {
    type Error = Error;

    fn try_from(r: ShapeRepr) -> Result<Self> {
        CylindricShape::from_window(r.d, r.l, r.rows)
    }
}

impl From<CylindricShape> for ShapeRepr {
    fn from(s: CylindricShape) -> Self {
        ShapeRepr { d: s.period.d, l: s.period.l, rows: s.rows }
    }
}

impl fmt::Display for CylindricShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]@{}", self.period)
    }
}

impl CylindricShape {
    pub fn new(period: Period, rows: Vec<i64>) -> Result<Self> {
        if rows.len() != period.d {
            return Err(Error::WindowLength { expected: period.d, got: rows.len() });
        }
        for i in 1..rows.len() {
            if rows[i - 1] < rows[i] {
                return Err(Error::WindowConstraint {
                    index: i + 1,
                    detail: format!("λ_{} = {} < λ_{} = {}", i, rows[i - 1], i + 1, rows[i]),
                });
            }
        }
        let last = rows[period.d - 1];
        let wrapped = last.checked_add(period.l as i64).ok_or(Error::Overflow)?;
        if wrapped < rows[0] {
            return Err(Error::WindowConstraint {
                index: period.d,
                detail: format!("λ_{} + L = {} < λ_1 = {}", period.d, wrapped, rows[0]),
            });
        }
        Ok(CylindricShape { period, rows })
    }

    /// Build a shape from `d`, `L` and the window.
    pub fn from_window(d: usize, l: usize, rows: Vec<i64>) -> Result<Self> {
        CylindricShape::new(Period::new(d, l)?, rows)
    }

    /// The shape `[0, .., 0]`, whose only corner is row 1.
    pub fn empty(period: Period) -> Self {
        CylindricShape { period, rows: vec![0; period.d] }
    }

    pub fn period(&self) -> Period {
        self.period
    }

    pub fn d(&self) -> usize {
        self.period.d
    }

    pub fn l(&self) -> usize {
        self.period.l
    }

    pub fn window(&self) -> &[i64] {
        &self.rows
    }

    /// `λ_i` for any integer `i`.
    pub fn row(&self, i: i64) -> i64 {
        let d = self.period.d as i64;
        let shift = (i - 1).div_euclid(d);
        let r = (i - 1).rem_euclid(d) as usize;
        self.rows[r] - shift * self.period.l as i64
    }

    /// `Σ λ_i` over the window; may be negative.
    pub fn size(&self) -> i64 {
        self.rows.iter().sum()
    }

    fn same_period(&self, other: &CylindricShape) -> Result<()> {
        if self.period != other.period {
            return Err(Error::PeriodMismatch(self.period, other.period));
        }
        Ok(())
    }

    /// Whether `self ⊆ outer`.
    pub fn is_contained_in(&self, outer: &CylindricShape) -> Result<bool> {
        self.same_period(outer)?;
        Ok(self.rows.iter().zip(&outer.rows).all(|(a, b)| a <= b))
    }

    /// `|self / inner|`, the number of cells between the two shapes.
    pub fn skew_size(&self, inner: &CylindricShape) -> Result<usize> {
        if !inner.is_contained_in(self)? {
            return Err(self.not_containing(inner));
        }
        Ok(self.rows.iter().zip(&inner.rows).map(|(a, b)| (a - b) as usize).sum())
    }

    fn not_containing(&self, inner: &CylindricShape) -> Error {
        Error::NotContained { inner: inner.to_string(), outer: self.to_string() }
    }

    /// Rows `i` in `1..=d` with `λ_{i-1} > λ_i`.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.period.d).filter(|&i| self.row(i as i64 - 1) > self.row(i as i64)).collect()
    }

    /// Rows `i` in `1..=d` with `λ_i > λ_{i+1}`.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.period.d).filter(|&i| self.row(i as i64) > self.row(i as i64 + 1)).collect()
    }

    pub fn corner_count(&self) -> usize {
        self.addable_rows().len()
    }

    pub fn is_addable(&self, row: usize) -> bool {
        (1..=self.period.d).contains(&row) && self.row(row as i64 - 1) > self.row(row as i64)
    }

    pub fn is_removable(&self, row: usize) -> bool {
        (1..=self.period.d).contains(&row) && self.row(row as i64) > self.row(row as i64 + 1)
    }

    pub fn add_cell(&self, row: usize) -> Result<Self> {
        self.period.check_row(row)?;
        if !self.is_addable(row) {
            return Err(Error::NotAddable { row, shape: self.to_string() });
        }
        let mut rows = self.rows.clone();
        rows[row - 1] = rows[row - 1].checked_add(1).ok_or(Error::Overflow)?;
        Ok(CylindricShape { period: self.period, rows })
    }

    pub fn remove_cell(&self, row: usize) -> Result<Self> {
        self.period.check_row(row)?;
        if !self.is_removable(row) {
            return Err(Error::NotRemovable { row, shape: self.to_string() });
        }
        let mut rows = self.rows.clone();
        rows[row - 1] = rows[row - 1].checked_sub(1).ok_or(Error::Overflow)?;
        Ok(CylindricShape { period: self.period, rows })
    }

    /// If `self` is `lower` plus one cell, the row of that cell.
    pub fn covers(&self, lower: &CylindricShape) -> Option<usize> {
        if self.period != lower.period {
            return None;
        }
        let mut found = None;
        for (i, (a, b)) in self.rows.iter().zip(&lower.rows).enumerate() {
            match a - b {
                0 => {}
                1 if found.is_none() => found = Some(i + 1),
                _ => return None,
            }
        }
        found
    }

    /// `W^{λ_0-λ_1} S W^{λ_1-λ_2} S .. W^{λ_{d-1}-λ_d} S`.
    pub fn boundary_word(&self) -> BoundaryWord {
        let mut steps = Vec::with_capacity(self.period.sites());
        for i in 1..=self.period.d as i64 {
            let run = self.row(i - 1) - self.row(i);
            steps.extend(std::iter::repeat_n(BoundaryStep::W, run as usize));
            steps.push(BoundaryStep::S);
        }
        BoundaryWord(steps)
    }

    /// The transpose shape, of period `(L, d)`.
    ///
    /// Walks the boundary path once. A `W` step from column line `c` to
    /// `c - 1` on row line `i` says exactly that `λ'_c = i`.
    pub fn conjugate(&self) -> CylindricShape {
        let Period { d, l } = self.period;
        let mut rows = vec![0i64; l];
        let mut row_line = 0i64;
        let mut col_line = self.row(0);
        for step in self.boundary_word().0 {
            match step {
                BoundaryStep::W => {
                    let j = (col_line - 1).rem_euclid(l as i64) + 1;
                    let shift = (col_line - j) / l as i64;
                    rows[(j - 1) as usize] = row_line + shift * d as i64;
                    col_line -= 1;
                }
                BoundaryStep::S => row_line += 1,
            }
        }
        CylindricShape { period: self.period.transposed(), rows }
    }

    /// `[L - λ_d, .., L - λ_1]`.
    pub fn complement(&self) -> CylindricShape {
        let l = self.period.l as i64;
        CylindricShape { period: self.period, rows: self.rows.iter().rev().map(|r| l - r).collect() }
    }

    /// Componentwise maximum.
    pub fn union(&self, other: &CylindricShape) -> Result<Self> {
        self.same_period(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| *a.max(b)).collect();
        Ok(CylindricShape { period: self.period, rows })
    }

    /// Componentwise minimum.
    pub fn intersection(&self, other: &CylindricShape) -> Result<Self> {
        self.same_period(other)?;
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| *a.min(b)).collect();
        Ok(CylindricShape { period: self.period, rows })
    }

    /// Add `by` to every entry of the window.
    pub fn shifted(&self, by: i64) -> Result<Self> {
        let rows = self.rows.iter().map(|r| r.checked_add(by).ok_or(Error::Overflow)).collect::<Result<_>>()?;
        Ok(CylindricShape { period: self.period, rows })
    }

    /// Cells `⟨i,j⟩` with `i` in `1..=d` and `inner_i < j ≤ λ_i`, by row then column.
    pub fn skew_cells(&self, inner: &CylindricShape) -> Result<Vec<CellRef>> {
        if !inner.is_contained_in(self)? {
            return Err(self.not_containing(inner));
        }
        Ok((1..=self.period.d)
            .flat_map(|i| (inner.rows[i - 1] + 1..=self.rows[i - 1]).map(move |col| CellRef { row: i, col }))
            .collect())
    }

    /// Whether the cell lies in the Young diagram of the shape.
    pub fn contains_cell(&self, cell: CellRef) -> bool {
        cell.col <= self.rows[cell.row - 1]
    }
}

/// Compare two shapes by containment; `None` when incomparable or of different period.
pub fn containment_order(a: &CylindricShape, b: &CylindricShape) -> Option<Ordering> {
    if a.period != b.period {
        return None;
    }
    let le = a.rows.iter().zip(&b.rows).all(|(x, y)| x <= y);
    let ge = a.rows.iter().zip(&b.rows).all(|(x, y)| x >= y);
    match (le, ge) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}

/// Every shape of the given period whose window entries lie in `lo..=hi`.
pub fn shapes_in_box(period: Period, lo: i64, hi: i64) -> Vec<CylindricShape> {
    let mut out = Vec::new();
    let mut window = vec![0i64; period.d];
    fn fill(period: Period, k: usize, lo: i64, hi: i64, window: &mut Vec<i64>, out: &mut Vec<CylindricShape>) {
        if k == period.d {
            if let Ok(s) = CylindricShape::new(period, window.clone()) {
                out.push(s);
            }
            return;
        }
        let top = if k == 0 { hi } else { window[k - 1].min(hi) };
        for v in (lo..=top).rev() {
            window[k] = v;
            fill(period, k + 1, lo, hi, window, out);
        }
    }
    fill(period, 0, lo, hi, &mut window, &mut out);
    out
}
