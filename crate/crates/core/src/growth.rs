//! Cylindric growth diagrams.
//!
//! Grid points `(x, y)` with `0 ≤ x ≤ m`, `0 ≤ y ≤ n`, origin at the bottom
//! left. Every edge going right or up adds one cell.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::CylindricShape;
use crate::tableau::{Oct, Sct, Sign, TypeWord};

fn cover_row(upper: &CylindricShape, lower: &CylindricShape, what: &str) -> Result<usize> {
    upper.covers(lower).ok_or_else(|| Error::LocalRule(format!("{what}: {upper} does not cover {lower}")))
}

fn next_row(row: usize, d: usize) -> usize {
    row % d + 1
}

fn prev_row(row: usize, d: usize) -> usize {
    (row + d - 2) % d + 1
}

/// Forward rule: the upper-right label from the other three corners of a square.
pub fn forward_local(ll: &CylindricShape, ul: &CylindricShape, lr: &CylindricShape) -> Result<CylindricShape> {
    let row = cover_row(ul, ll, "upper-left over lower-left")?;
    cover_row(lr, ll, "lower-right over lower-left")?;
    if ul != lr {
        return ul.union(lr);
    }
    ul.add_cell(next_row(row, ul.d()))
}

/// Backward rule: the lower-left label from the other three corners.
pub fn backward_local(ul: &CylindricShape, lr: &CylindricShape, ur: &CylindricShape) -> Result<CylindricShape> {
    let row = cover_row(ur, ul, "upper-right over upper-left")?;
    cover_row(ur, lr, "upper-right over lower-right")?;
    if ul != lr {
        return ul.intersection(lr);
    }
    ul.remove_cell(prev_row(row, ul.d()))
}

/// A filled growth diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct GrowthDiagram {
    m: usize,
    n: usize,
    /// Row-major: `labels[y * (m + 1) + x]`.
    labels: Vec<CylindricShape>,
}

/// JSON form: `labels[y][x]`, one inner array per horizontal grid line.
#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    m: usize,
    n: usize,
    labels: Vec<Vec<CylindricShape>>,
}

impl TryFrom<DiagramRepr> for GrowthDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        if r.labels.len() != r.n + 1 || r.labels.iter().any(|row| row.len() != r.m + 1) {
            return Err(Error::InvalidDiagram(format!("labels must form {} rows of {} shapes", r.n + 1, r.m + 1)));
        }
        Ok(GrowthDiagram { m: r.m, n: r.n, labels: r.labels.into_iter().flatten().collect() })
    }
}

impl From<GrowthDiagram> for DiagramRepr {
    fn from(g: GrowthDiagram) -> Self {
        let labels = g.labels.chunks(g.m + 1).map(|c| c.to_vec()).collect();
        DiagramRepr { m: g.m, n: g.n, labels }
    }
}

/// A side of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Bottom,
    Right,
    Top,
}

impl GrowthDiagram {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, x: usize, y: usize) -> &CylindricShape {
        &self.labels[y * (self.m + 1) + x]
    }

    /// Boundary labels, bottom to top for left/right and left to right for bottom/top.
    pub fn boundary(&self, side: Side) -> Vec<CylindricShape> {
        match side {
            Side::Left => (0..=self.n).map(|y| self.at(0, y).clone()).collect(),
            Side::Right => (0..=self.n).map(|y| self.at(self.m, y).clone()).collect(),
            Side::Bottom => (0..=self.m).map(|x| self.at(x, 0).clone()).collect(),
            Side::Top => (0..=self.m).map(|x| self.at(x, self.n).clone()).collect(),
        }
    }

    /// Labels along the lattice path of `word` from `(0, n)` to `(m, 0)`.
    pub fn along(&self, word: &TypeWord) -> Result<Vec<CylindricShape>> {
        check_path_word(word, self.m, self.n)?;
        let (mut x, mut y) = (0, self.n);
        let mut out = vec![self.at(x, y).clone()];
        for s in &word.0 {
            match s {
                Sign::Plus => x += 1,
                Sign::Minus => y -= 1,
            }
            out.push(self.at(x, y).clone());
        }
        Ok(out)
    }

    /// Reflection across the diagonal `x = y`.
    pub fn transposed(&self) -> GrowthDiagram {
        let mut labels = Vec::with_capacity(self.labels.len());
        for y in 0..=self.m {
            for x in 0..=self.n {
                labels.push(self.at(y, x).clone());
            }
        }
        GrowthDiagram { m: self.n, n: self.m, labels }
    }

    /// Complement every label and rotate the grid by 180 degrees.
    pub fn complemented(&self) -> GrowthDiagram {
        let mut labels = Vec::with_capacity(self.labels.len());
        for y in 0..=self.n {
            for x in 0..=self.m {
                labels.push(self.at(self.m - x, self.n - y).complement());
            }
        }
        GrowthDiagram { m: self.m, n: self.n, labels }
    }

    /// Check every edge and every square.
    pub fn validate(&self) -> Result<()> {
        for y in 0..=self.n {
            for x in 0..=self.m {
                if x < self.m && self.at(x + 1, y).covers(self.at(x, y)).is_none() {
                    return Err(Error::InvalidDiagram(format!("edge ({x},{y})-({},{y}) is not a cover", x + 1)));
                }
                if y < self.n && self.at(x, y + 1).covers(self.at(x, y)).is_none() {
                    return Err(Error::InvalidDiagram(format!("edge ({x},{y})-({x},{}) is not a cover", y + 1)));
                }
            }
        }
        for y in 1..=self.n {
            for x in 1..=self.m {
                let ur = forward_local(self.at(x - 1, y - 1), self.at(x - 1, y), self.at(x, y - 1))?;
                if &ur != self.at(x, y) {
                    return Err(Error::InvalidDiagram(format!(
                        "square with upper-right corner ({x},{y}) breaks the local rule: expected {ur}, found {}",
                        self.at(x, y)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn check_path_word(word: &TypeWord, m: usize, n: usize) -> Result<()> {
    if word.pluses() != m || word.minuses() != n {
        return Err(Error::TypeWord(format!(
            "{word} has {} pluses and {} minuses, expected {m} and {n}",
            word.pluses(),
            word.minuses()
        )));
    }
    Ok(())
}

/// Fill the diagram whose left boundary is `walk_rep(T)` and bottom
/// boundary is `walk_rep(U)`.
pub fn grow_from_tu(t: &Sct, u: &Sct) -> Result<GrowthDiagram> {
    if t.period() != u.period() {
        return Err(Error::PeriodMismatch(t.period(), u.period()));
    }
    if t.inner() != u.inner() {
        return Err(Error::InvalidTableau(format!("inner shapes differ: {} vs {}", t.inner(), u.inner())));
    }
    let left = t.walk_rep();
    let bottom = u.walk_rep();
    let (m, n) = (bottom.len() - 1, left.len() - 1);
    let mut labels = Vec::with_capacity((m + 1) * (n + 1));
    labels.extend(bottom.iter().cloned());
    for y in 1..=n {
        labels.push(left[y].clone());
        for x in 1..=m {
            let w = m + 1;
            let ur = forward_local(&labels[(y - 1) * w + x - 1], &labels[y * w + x - 1], &labels[(y - 1) * w + x])?;
            labels.push(ur);
        }
    }
    Ok(GrowthDiagram { m, n, labels })
}

/// Fill the diagram whose right boundary is `walk_rep(P)` and top boundary
/// is `walk_rep(Q)`, using the backward rules.
pub fn grow_from_pq(p: &Sct, q: &Sct) -> Result<GrowthDiagram> {
    if p.period() != q.period() {
        return Err(Error::PeriodMismatch(p.period(), q.period()));
    }
    if p.outer() != q.outer() {
        return Err(Error::InvalidTableau(format!("outer shapes differ: {} vs {}", p.outer(), q.outer())));
    }
    let right = p.walk_rep();
    let top = q.walk_rep();
    let (m, n) = (top.len() - 1, right.len() - 1);
    let mut word = vec![Sign::Plus; m];
    word.extend(std::iter::repeat_n(Sign::Minus, n));
    let mut path = top.clone();
    path.extend(right.iter().rev().skip(1).cloned());
    complete_from_path(&TypeWord(word), &path)
}

/// `CRS^{-1}(P, Q)`, read off the left and bottom of the backward-filled diagram.
pub fn crs_inverse_by_growth(p: &Sct, q: &Sct) -> Result<(Sct, Sct)> {
    let g = grow_from_pq(p, q)?;
    let t = Sct::from_walk_rep(&g.boundary(Side::Left))?;
    let u = Sct::from_walk_rep(&g.boundary(Side::Bottom))?;
    Ok((t, u))
}

/// `CRS(T, U)` read off the right and top of the forward-filled diagram.
pub fn crs_by_growth(t: &Sct, u: &Sct) -> Result<(Sct, Sct)> {
    let g = grow_from_tu(t, u)?;
    let p = Sct::from_walk_rep(&g.boundary(Side::Right))?;
    let q = Sct::from_walk_rep(&g.boundary(Side::Top))?;
    Ok((p, q))
}

/// The unique diagram carrying `labels` along the lattice path of `word`
/// from `(0, n)` to `(m, 0)`, with `+` an east step and `-` a south step.
pub fn complete_from_path(word: &TypeWord, labels: &[CylindricShape]) -> Result<GrowthDiagram> {
    if labels.len() != word.len() + 1 {
        return Err(Error::InvalidDiagram(format!(
            "a path of {} steps needs {} labels, got {}",
            word.len(),
            word.len() + 1,
            labels.len()
        )));
    }
    let oct = Oct::new(labels.to_vec())?;
    if oct.type_word() != *word {
        return Err(Error::TypeWord(format!("labels have type {}, path has type {word}", oct.type_word())));
    }
    let (m, n) = (word.pluses(), word.minuses());
    let w = m + 1;
    let mut grid: Vec<Option<CylindricShape>> = vec![None; (m + 1) * (n + 1)];
    // lowest and highest y of the path in each column
    let mut low = vec![n; m + 1];
    let mut high = vec![0; m + 1];
    let (mut x, mut y) = (0usize, n);
    grid[y * w + x] = Some(labels[0].clone());
    high[0] = n;
    for (k, s) in word.0.iter().enumerate() {
        match s {
            Sign::Plus => {
                x += 1;
                high[x] = y;
            }
            Sign::Minus => y -= 1,
        }
        low[x] = y;
        grid[y * w + x] = Some(labels[k + 1].clone());
    }
    for sum in 0..=m + n {
        for x in 0..=m.min(sum) {
            let y = sum - x;
            if y > n || y <= high[x] || x == 0 {
                continue;
            }
            let get = |xx: usize, yy: usize| grid[yy * w + xx].clone().expect("filled earlier in the sweep");
            let ur = forward_local(&get(x - 1, y - 1), &get(x - 1, y), &get(x, y - 1))?;
            grid[y * w + x] = Some(ur);
        }
    }
    for sum in (0..=m + n).rev() {
        for x in 0..=m.min(sum) {
            let y = sum - x;
            if y > n || y >= low[x] || x == m {
                continue;
            }
            let get = |xx: usize, yy: usize| grid[yy * w + xx].clone().expect("filled earlier in the sweep");
            let ll = backward_local(&get(x, y + 1), &get(x + 1, y), &get(x + 1, y + 1))?;
            grid[y * w + x] = Some(ll);
        }
    }
    let labels = grid.into_iter().map(|s| s.expect("every point is reached")).collect();
    Ok(GrowthDiagram { m, n, labels })
}

/// How the endpoints of an oscillating tableau are treated when retyping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RetypeMode {
    /// Keep both endpoints; the new word must have the same sign counts.
    FixedEnds,
    /// Keep only the start; any word of the same length is allowed.
    FromStart,
}

/// Re-read an oscillating tableau along the path of a different type word.
pub fn retype_oct(oct: &Oct, new_word: &TypeWord, mode: RetypeMode) -> Result<Oct> {
    match mode {
        RetypeMode::FixedEnds => {
            let word = oct.type_word();
            if word.pluses() != new_word.pluses() || word.minuses() != new_word.minuses() {
                return Err(Error::TypeWord(format!("{new_word} does not have the sign counts of {word}")));
            }
            let g = complete_from_path(&word, oct.shapes())?;
            Oct::new(g.along(new_word)?)
        }
        RetypeMode::FromStart => {
            if new_word.len() != oct.len() {
                return Err(Error::TypeWord(format!(
                    "{new_word} has length {}, expected {}",
                    new_word.len(),
                    oct.len()
                )));
            }
            let g = symmetric_diagram(oct)?;
            let mut path_word = new_word.0.clone();
            path_word.extend(new_word.reverse_flipped().0);
            let mut shapes = g.along(&TypeWord(path_word))?;
            shapes.truncate(oct.len() + 1);
            Oct::new(shapes)
        }
    }
}

/// The diagram grown from the palindromic path `ρ^0, .., ρ^n, .., ρ^0`.
pub fn symmetric_diagram(oct: &Oct) -> Result<GrowthDiagram> {
    let word = oct.type_word();
    let mut path_word = word.0.clone();
    path_word.extend(word.reverse_flipped().0);
    let mut labels = oct.shapes().to_vec();
    labels.extend(oct.shapes().iter().rev().skip(1).cloned());
    complete_from_path(&TypeWord(path_word), &labels)
}
