//! Standard and oscillating cylindric tableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{CellRef, CylindricShape, Period};

/// Direction of a step: a cell added (`+`) or removed (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A word over `{+, -}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TypeWord(pub Vec<Sign>);

impl TypeWord {
    pub fn all_plus(n: usize) -> TypeWord {
        TypeWord(vec![Sign::Plus; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pluses(&self) -> usize {
        self.0.iter().filter(|s| **s == Sign::Plus).count()
    }

    pub fn minuses(&self) -> usize {
        self.len() - self.pluses()
    }

    /// Reverse the word and flip every sign.
    pub fn reverse_flipped(&self) -> TypeWord {
        TypeWord(self.0.iter().rev().map(|s| s.flipped()).collect())
    }

    /// All `2^n` words of length `n`, in lexicographic order with `+` first.
    pub fn all_of_length(n: usize) -> Vec<TypeWord> {
        (0..1u64 << n)
            .map(|bits| {
                TypeWord((0..n).map(|k| if bits >> (n - 1 - k) & 1 == 0 { Sign::Plus } else { Sign::Minus }).collect())
            })
            .collect()
    }

    /// All words with `m` pluses and `n` minuses.
    pub fn all_with_counts(m: usize, n: usize) -> Vec<TypeWord> {
        TypeWord::all_of_length(m + n).into_iter().filter(|w| w.pluses() == m).collect()
    }
}

impl fmt::Display for TypeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for TypeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '−' => Ok(Sign::Minus),
                other => Err(Error::Parse(format!("unexpected sign {other:?} in type word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TypeWord)
    }
}

impl Serialize for TypeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A standard filling of `outer / inner` by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SctRepr", into = "SctRepr")]
pub struct Sct {
    inner: CylindricShape,
    outer: CylindricShape,
    entries: BTreeMap<CellRef, usize>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    row: usize,
    col: i64,
    value: usize,
}

#[derive(Serialize, Deserialize)]
struct SctRepr {
    inner: CylindricShape,
    outer: CylindricShape,
    entries: Vec<EntryRepr>,
}

impl TryFrom<SctRepr> for Sct {
    type Error = Error;

    fn try_from(r: SctRepr) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for e in r.entries {
            let cell = CellRef::canonical(r.inner.period(), e.row as i64, e.col);
            if entries.insert(cell, e.value).is_some() {
                return Err(Error::InvalidTableau(format!("cell {cell} listed twice")));
            }
        }
        Sct::new(r.inner, r.outer, entries)
    }
}

impl From<Sct> for SctRepr {
    fn from(t: Sct) -> Self {
        let mut entries: Vec<EntryRepr> =
            t.entries.iter().map(|(c, v)| EntryRepr { row: c.row, col: c.col, value: *v }).collect();
        entries.sort_by_key(|e| e.value);
        SctRepr { inner: t.inner, outer: t.outer, entries }
    }
}

impl Sct {
    /// Build and validate a tableau.
    pub fn new(inner: CylindricShape, outer: CylindricShape, entries: BTreeMap<CellRef, usize>) -> Result<Self> {
        let cells = outer.skew_cells(&inner)?;
        if cells.len() != entries.len() || cells.iter().any(|c| !entries.contains_key(c)) {
            return Err(Error::InvalidTableau(format!("entries do not cover the skew shape {outer} / {inner}")));
        }
        let values: BTreeSet<usize> = entries.values().copied().collect();
        if values.len() != cells.len() || values.iter().enumerate().any(|(k, v)| *v != k + 1) {
            return Err(Error::InvalidTableau(format!("entries are not exactly 1..={}", cells.len())));
        }
        let t = Sct { inner, outer, entries };
        t.validate()?;
        Ok(t)
    }

    /// The empty tableau of shape `shape / shape`.
    pub fn empty(shape: CylindricShape) -> Sct {
        Sct { inner: shape.clone(), outer: shape, entries: BTreeMap::new() }
    }

    pub(crate) fn from_parts_unchecked(
        inner: CylindricShape,
        outer: CylindricShape,
        entries: BTreeMap<CellRef, usize>,
    ) -> Sct {
        Sct { inner, outer, entries }
    }

    /// Check that rows and columns increase, including across the wrap.
    pub fn validate(&self) -> Result<()> {
        let period = self.period();
        for (&cell, &value) in &self.entries {
            let right = CellRef { row: cell.row, col: cell.col + 1 };
            let below = CellRef::canonical(period, cell.row as i64 + 1, cell.col);
            for next in [right, below] {
                if let Some(&v) = self.entries.get(&next) {
                    if v <= value {
                        return Err(Error::TableauOrder {
                            first: cell,
                            second: next,
                            first_value: value,
                            second_value: v,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inner(&self) -> &CylindricShape {
        &self.inner
    }

    pub fn outer(&self) -> &CylindricShape {
        &self.outer
    }

    pub fn period(&self) -> Period {
        self.inner.period()
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &BTreeMap<CellRef, usize> {
        &self.entries
    }

    pub fn get(&self, cell: CellRef) -> Option<usize> {
        self.entries.get(&cell).copied()
    }

    /// `rows[k]` is the row holding entry `k + 1`.
    pub fn entry_rows(&self) -> Vec<usize> {
        let mut rows = vec![0; self.len()];
        for (c, v) in &self.entries {
            rows[v - 1] = c.row;
        }
        rows
    }

    /// Cell holding `value`, if any.
    pub fn cell_of(&self, value: usize) -> Option<CellRef> {
        self.entries.iter().find(|(_, v)| **v == value).map(|(c, _)| *c)
    }

    /// Outer shapes of the sub-tableaux on `1..=k`, for `k = 0..=n`.
    pub fn walk_rep(&self) -> Vec<CylindricShape> {
        let mut shapes = Vec::with_capacity(self.len() + 1);
        let mut current = self.inner.clone();
        shapes.push(current.clone());
        for row in self.entry_rows() {
            current = current.add_cell(row).expect("valid tableau grows by addable cells");
            shapes.push(current.clone());
        }
        shapes
    }

    /// Inverse of [`Sct::walk_rep`].
    pub fn from_walk_rep(shapes: &[CylindricShape]) -> Result<Sct> {
        let first = shapes.first().ok_or_else(|| Error::InvalidTableau("empty chain".into()))?;
        let mut entries = BTreeMap::new();
        for (k, pair) in shapes.windows(2).enumerate() {
            let row = pair[1]
                .covers(&pair[0])
                .ok_or_else(|| Error::InvalidTableau(format!("{} does not cover {}", pair[1], pair[0])))?;
            let col = pair[1].window()[row - 1];
            entries.insert(CellRef { row, col }, k + 1);
        }
        Ok(Sct { inner: first.clone(), outer: shapes[shapes.len() - 1].clone(), entries })
    }

    /// Transpose: `T'(⟨j,i⟩) = T(⟨i,j⟩)`, of period `(L, d)`.
    pub fn conjugate(&self) -> Sct {
        let period = self.period().transposed();
        let entries = self.entries.iter().map(|(c, v)| (CellRef::canonical(period, c.col, c.row as i64), *v)).collect();
        Sct { inner: self.inner.conjugate(), outer: self.outer.conjugate(), entries }
    }

    /// Rotate by 180 degrees and replace `k` by `n + 1 - k`.
    pub fn complement(&self) -> Sct {
        let period = self.period();
        let (d, l, n) = (period.d() as i64, period.l() as i64, self.len());
        let entries = self
            .entries
            .iter()
            .map(|(c, v)| (CellRef::canonical(period, d + 1 - c.row as i64, l + 1 - c.col), n + 1 - v))
            .collect();
        Sct { inner: self.outer.complement(), outer: self.inner.complement(), entries }
    }

    /// Random tableau with `n` cells and inner shape `inner`.
    ///
    /// Each step picks uniformly among the addable rows, so the result is
    /// not uniform over tableaux.
    pub fn random(inner: &CylindricShape, n: usize, seed: u64) -> Sct {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chain = vec![inner.clone()];
        for _ in 0..n {
            let last = &chain[chain.len() - 1];
            let row = *last.addable_rows().choose(&mut rng).expect("every shape has a corner");
            chain.push(last.add_cell(row).expect("addable"));
        }
        Sct::from_walk_rep(&chain).expect("chain of covers")
    }
}

/// A sequence of shapes, each obtained from the last by adding or removing one cell.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "OctRepr", into = "OctRepr")]
pub struct Oct {
    shapes: Vec<CylindricShape>,
}

#[derive(Serialize, Deserialize)]
struct OctRepr {
    shapes: Vec<CylindricShape>,
}

impl TryFrom<OctRepr> for Oct {
    type Error = Error;

    fn try_from(r: OctRepr) -> Result<Self> {
        Oct::new(r.shapes)
    }
}

impl From<Oct> for OctRepr {
    fn from(o: Oct) -> Self {
        OctRepr { shapes: o.shapes }
    }
}

/// The row and direction of the step from `a` to `b`, if they are adjacent.
pub fn step_between(a: &CylindricShape, b: &CylindricShape) -> Option<(usize, Sign)> {
    if let Some(row) = b.covers(a) {
        return Some((row, Sign::Plus));
    }
    a.covers(b).map(|row| (row, Sign::Minus))
}

impl Oct {
    pub fn new(shapes: Vec<CylindricShape>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::InvalidOscillating("no shapes".into()));
        }
        for (k, pair) in shapes.windows(2).enumerate() {
            if step_between(&pair[0], &pair[1]).is_none() {
                return Err(Error::InvalidOscillating(format!(
                    "shapes {} and {} ({} and {}) differ by more than one cell",
                    k,
                    k + 1,
                    pair[0],
                    pair[1]
                )));
            }
        }
        Ok(Oct { shapes })
    }

    pub fn shapes(&self) -> &[CylindricShape] {
        &self.shapes
    }

    pub fn into_shapes(self) -> Vec<CylindricShape> {
        self.shapes
    }

    pub fn start(&self) -> &CylindricShape {
        &self.shapes[0]
    }

    pub fn end(&self) -> &CylindricShape {
        &self.shapes[self.shapes.len() - 1]
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(row, sign)` of every step.
    pub fn steps(&self) -> Vec<(usize, Sign)> {
        self.shapes.windows(2).map(|p| step_between(&p[0], &p[1]).expect("validated on construction")).collect()
    }

    pub fn type_word(&self) -> TypeWord {
        TypeWord(self.steps().into_iter().map(|(_, s)| s).collect())
    }

    pub fn reversed(&self) -> Oct {
        Oct { shapes: self.shapes.iter().rev().cloned().collect() }
    }

    /// Random oscillating tableau of type `word` starting at `start`.
    pub fn random(start: &CylindricShape, word: &TypeWord, seed: u64) -> Oct {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut shapes = vec![start.clone()];
        for sign in &word.0 {
            let last = &shapes[shapes.len() - 1];
            let next = match sign {
                Sign::Plus => {
                    let row = *last.addable_rows().choose(&mut rng).expect("a corner exists");
                    last.add_cell(row)
                }
                Sign::Minus => {
                    let row = *last.removable_rows().choose(&mut rng).expect("a corner exists");
                    last.remove_cell(row)
                }
            }
            .expect("chosen row is a corner");
            shapes.push(next);
        }
        Oct { shapes }
    }
}

impl From<&Sct> for Oct {
    fn from(t: &Sct) -> Oct {
        Oct { shapes: t.walk_rep() }
    }
}

/// A standard Young tableau of straight shape, stored as rows of entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syt {
    rows: Vec<Vec<usize>>,
}

impl Syt {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::InvalidTableau("row lengths must weakly decrease".into()));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidTableau(format!("entries must be 1..={n}")));
                }
                if j > 0 && row[j - 1] >= v || i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::InvalidTableau(format!("entry {v} breaks monotonicity")));
                }
            }
        }
        Ok(Syt { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Number of `k` with `k + 1` in a lower row than `k`.
    pub fn descents(&self) -> usize {
        let mut row_of = vec![0; self.size() + 1];
        for (i, r) in self.rows.iter().enumerate() {
            for &v in r {
                row_of[v] = i;
            }
        }
        (1..self.size()).filter(|&k| row_of[k + 1] > row_of[k]).count()
    }

    /// Schützenberger evacuation, by repeated deletion of the minimum and
    /// jeu de taquin sliding of the hole to an outer corner.
    pub fn evacuation(&self) -> Syt {
        let n = self.size();
        let mut grid: Vec<Vec<usize>> = self.rows.clone();
        let mut out: Vec<Vec<usize>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for k in 0..n {
            let (mut i, mut j) = (0usize, 0usize);
            loop {
                let right = grid[i].get(j + 1).copied();
                let below = grid.get(i + 1).and_then(|r| r.get(j)).copied();
                match (right, below) {
                    (None, None) => break,
                    (Some(_), None) => {
                        grid[i][j] = grid[i][j + 1];
                        j += 1;
                    }
                    (Some(r), Some(b)) if r < b => {
                        grid[i][j] = r;
                        j += 1;
                    }
                    (_, Some(b)) => {
                        grid[i][j] = b;
                        i += 1;
                    }
                }
            }
            grid[i].pop();
            if grid[i].is_empty() {
                grid.pop();
            }
            out[i][j] = n - k;
        }
        Syt { rows: out }
    }

    /// All standard Young tableaux with `n` cells.
    pub fn all_of_size(n: usize) -> Vec<Syt> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = Vec::new();
        fn grow(k: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Syt>) {
            if k > n {
                out.push(Syt { rows: rows.clone() });
                return;
            }
            for i in 0..=rows.len() {
                let fits = if i == rows.len() { true } else { i == 0 || rows[i - 1].len() > rows[i].len() };
                if !fits {
                    continue;
                }
                if i == rows.len() {
                    rows.push(vec![k]);
                    grow(k + 1, n, rows, out);
                    rows.pop();
                } else {
                    rows[i].push(k);
                    grow(k + 1, n, rows, out);
                    rows[i].pop();
                }
            }
        }
        grow(1, n, &mut rows, &mut out);
        out
    }

    /// View as a cylindric tableau of period `(n, n)` with inner shape `[0^n]`.
    pub fn to_sct(&self) -> Sct {
        let n = self.size().max(1);
        let period = Period::new(n, n).expect("positive");
        let mut window = vec![0i64; n];
        let mut entries = BTreeMap::new();
        for (i, row) in self.rows.iter().enumerate() {
            window[i] = row.len() as i64;
            for (j, &v) in row.iter().enumerate() {
                entries.insert(CellRef { row: i + 1, col: j as i64 + 1 }, v);
            }
        }
        let outer = CylindricShape::new(period, window).expect("partition fits in an n x n box");
        Sct { inner: CylindricShape::empty(period), outer, entries }
    }

    /// Read back a cylindric tableau whose inner shape is `[0^d]` and whose
    /// cells all sit in columns `1..`.
    pub fn from_sct(t: &Sct) -> Result<Syt> {
        if t.inner().window().iter().any(|v| *v != 0) {
            return Err(Error::InvalidTableau("inner shape is not [0^d]".into()));
        }
        if t.outer().window().iter().any(|v| *v < 0) {
            return Err(Error::InvalidTableau("not a straight shape".into()));
        }
        let rows = t
            .outer()
            .window()
            .iter()
            .enumerate()
            .map(|(i, &len)| (1..=len).map(|c| t.get(CellRef { row: i + 1, col: c }).expect("cell present")).collect())
            .collect();
        Syt::new(rows)
    }
}

/// Evacuation of a straight-shape tableau given in cylindric form, keeping its period.
pub fn evacuation_sct(t: &Sct) -> Result<Sct> {
    let ev = Syt::from_sct(t)?.evacuation();
    let period = t.period();
    let mut window = vec![0i64; period.d()];
    let mut entries = BTreeMap::new();
    for (i, row) in ev.rows().iter().enumerate() {
        window[i] = row.len() as i64;
        for (j, &v) in row.iter().enumerate() {
            entries.insert(CellRef { row: i + 1, col: j as i64 + 1 }, v);
        }
    }
    Ok(Sct { inner: t.inner().clone(), outer: CylindricShape::new(period, window)?, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(d: usize, l: usize, rows: &[i64]) -> CylindricShape {
        CylindricShape::from_window(d, l, rows.to_vec()).unwrap()
    }

    fn sct(inner: CylindricShape, outer: CylindricShape, cells: &[(usize, i64, usize)]) -> Sct {
        let entries = cells.iter().map(|&(r, c, v)| (CellRef { row: r, col: c }, v)).collect();
        Sct::new(inner, outer, entries).unwrap()
    }

    fn three_by_four() -> Sct {
        sct(
            shape(3, 4, &[3, 1, 0]),
            shape(3, 4, &[5, 5, 3]),
            &[(2, 2, 1), (1, 4, 2), (3, 1, 3), (3, 2, 4), (2, 3, 5), (3, 3, 6), (1, 5, 7), (2, 4, 8), (2, 5, 9)],
        )
    }

    #[test]
    fn validation_catches_swapped_entries() {
        let t = three_by_four();
        let mut entries = t.entries().clone();
        entries.insert(CellRef { row: 3, col: 1 }, 4);
        entries.insert(CellRef { row: 3, col: 2 }, 3);
        let err = Sct::new(t.inner().clone(), t.outer().clone(), entries).unwrap_err();
        assert_eq!(
            err,
            Error::TableauOrder {
                first: CellRef { row: 3, col: 1 },
                second: CellRef { row: 3, col: 2 },
                first_value: 4,
                second_value: 3,
            }
        );
    }

    #[test]
    fn wrapped_column_is_checked() {
        // <3,1> sits directly above <4,1> = <1,4>.
        let inner = shape(3, 3, &[3, 1, 0]);
        let outer = shape(3, 3, &[4, 1, 1]);
        let ok = sct(inner.clone(), outer.clone(), &[(3, 1, 1), (1, 4, 2)]);
        assert!(ok.validate().is_ok());
        let bad = BTreeMap::from([(CellRef { row: 3, col: 1 }, 2), (CellRef { row: 1, col: 4 }, 1)]);
        assert!(matches!(Sct::new(inner, outer, bad), Err(Error::TableauOrder { .. })));
    }

    #[test]
    fn walk_reps() {
        let t = sct(
            shape(3, 2, &[1, 1, 0]),
            shape(3, 2, &[3, 3, 1]),
            &[(1, 2, 1), (3, 1, 2), (1, 3, 3), (2, 2, 4), (2, 3, 5)],
        );
        let expected: Vec<_> =
            [[1, 1, 0], [2, 1, 0], [2, 1, 1], [3, 1, 1], [3, 2, 1], [3, 3, 1]].iter().map(|r| shape(3, 2, r)).collect();
        assert_eq!(t.walk_rep(), expected);
        assert_eq!(Sct::from_walk_rep(&expected).unwrap(), t);
        let a = shape(3, 2, &[1, 1, 0]);
        assert_eq!(Sct::from_walk_rep(std::slice::from_ref(&a)).unwrap(), Sct::empty(a));
        assert!(Sct::from_walk_rep(&[shape(3, 2, &[1, 1, 0]), shape(3, 2, &[2, 2, 0])]).is_err());
    }

    #[test]
    fn conjugate_and_complement_are_involutions() {
        let t = three_by_four();
        assert_eq!(t.conjugate().conjugate(), t);
        assert!(t.conjugate().validate().is_ok());
        assert_eq!(t.complement().complement(), t);
        assert!(t.complement().validate().is_ok());
        let e = Sct::empty(shape(3, 2, &[2, 0, 0]));
        assert_eq!(e.conjugate(), Sct::empty(shape(2, 3, &[1, 1])));
        assert_eq!(e.complement(), Sct::empty(shape(3, 2, &[2, 2, 0])));
    }

    #[test]
    fn oct_types() {
        let shapes: Vec<_> = [
            [3, 3, 1],
            [3, 3, 2],
            [3, 2, 2],
            [4, 2, 2],
            [4, 3, 2],
            [4, 2, 2],
            [3, 2, 2],
            [3, 3, 2],
            [3, 2, 2],
            [2, 2, 2],
        ]
        .iter()
        .map(|r| shape(3, 2, r))
        .collect();
        let o = Oct::new(shapes).unwrap();
        assert_eq!(o.type_word().to_string(), "+-++--+--");
        assert_eq!(o.reversed().type_word().to_string(), "++-++--+-");
        assert!(Oct::new(vec![shape(3, 2, &[1, 1, 0])]).unwrap().type_word().is_empty());
        assert!(Oct::new(vec![shape(3, 2, &[1, 1, 0]), shape(3, 2, &[2, 2, 0])]).is_err());
    }

    #[test]
    fn type_word_parsing() {
        let w: TypeWord = "+-−+".parse().unwrap();
        assert_eq!(w.to_string(), "+--+");
        assert_eq!(w.reverse_flipped().to_string(), "-++-");
        assert_eq!(TypeWord::all_with_counts(2, 1).len(), 3);
        assert!("+x".parse::<TypeWord>().is_err());
    }

    #[test]
    fn evacuation_examples() {
        let p = Syt::new(vec![vec![1, 3, 5, 6], vec![2, 7], vec![4, 9], vec![8]]).unwrap();
        let e = Syt::new(vec![vec![1, 2, 6, 8], vec![3, 5], vec![4, 7], vec![9]]).unwrap();
        assert_eq!(p.evacuation(), e);
        let one = Syt::new(vec![vec![1]]).unwrap();
        assert_eq!(one.evacuation(), one);
        let row = Syt::new(vec![vec![1, 2]]).unwrap();
        assert_eq!(row.evacuation(), row);
    }

    #[test]
    fn syt_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| Syt::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
    }

    #[test]
    fn syt_round_trip_through_sct() {
        for t in Syt::all_of_size(4) {
            let s = t.to_sct();
            assert!(s.validate().is_ok());
            assert_eq!(Syt::from_sct(&s).unwrap(), t);
        }
    }

    #[test]
    fn random_is_deterministic() {
        let a = shape(3, 2, &[1, 1, 0]);
        let t = Sct::random(&a, 1, 1);
        assert!([shape(3, 2, &[2, 1, 0]), shape(3, 2, &[1, 1, 1])].contains(t.outer()));
        assert_eq!(Sct::random(&a, 5, 7), Sct::random(&a, 5, 7));
        assert!(Sct::random(&shape(3, 3, &[0, 0, 0]), 0, 3).is_empty());
    }

    #[test]
    fn json_round_trip() {
        let t = three_by_four();
        let j = serde_json::to_string(&t).unwrap();
        assert!(j.starts_with(r#"{"inner":{"d":3,"L":4,"rows":[3,1,0]},"outer""#));
        assert_eq!(serde_json::from_str::<Sct>(&j).unwrap(), t);
    }
}
