//! The walk models: the shape graph, the simplex `Δ_{d,L}`, the TASEP state
//! graph on a ring of `d + L` sites, and its necklace quotient, together
//! with the covering maps between them.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{CylindricShape, Period};
use crate::tableau::{Oct, Sct, Sign, TypeWord};

/// A lattice point `(x_1, .., x_d)` with nonnegative entries summing to `L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct SimplexPoint {
    coords: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    coords: Vec<usize>,
}

impl TryFrom<PointRepr> for SimplexPoint {
    type Error = Error;

    fn try_from(r: PointRepr) -> Result<Self> {
        SimplexPoint::new(r.coords)
    }
}

impl From<SimplexPoint> for PointRepr {
    fn from(p: SimplexPoint) -> Self {
        PointRepr { coords: p.coords }
    }
}

impl SimplexPoint {
    pub fn new(coords: Vec<usize>) -> Result<Self> {
        if coords.is_empty() || coords.iter().sum::<usize>() == 0 {
            return Err(Error::InvalidWalk("a simplex point needs d ≥ 1 and L ≥ 1".into()));
        }
        Ok(SimplexPoint { coords })
    }

    /// The corner `(L, 0, .., 0)`.
    pub fn corner(period: Period) -> Self {
        let mut coords = vec![0; period.d()];
        coords[0] = period.l();
        SimplexPoint { coords }
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    pub fn period(&self) -> Period {
        Period::new(self.coords.len(), self.coords.iter().sum()).expect("checked on construction")
    }

    /// Apply `+s_i` (move a unit from `x_i` to `x_{i+1}`) or `-s_i`.
    pub fn step(&self, i: usize, sign: Sign) -> Option<SimplexPoint> {
        let d = self.coords.len();
        if i == 0 || i > d {
            return None;
        }
        let (from, to) = match sign {
            Sign::Plus => (i - 1, i % d),
            Sign::Minus => (i % d, i - 1),
        };
        if self.coords[from] == 0 {
            return None;
        }
        let mut coords = self.coords.clone();
        coords[from] -= 1;
        coords[to] += 1;
        Some(SimplexPoint { coords })
    }

    /// The word `0^{x_1} 1 0^{x_2} 1 .. 0^{x_d} 1`.
    pub fn particle_word(&self) -> TasepState {
        let mut bits = Vec::with_capacity(self.coords.len() + self.coords.iter().sum::<usize>());
        for &x in &self.coords {
            bits.extend(std::iter::repeat_n(false, x));
            bits.push(true);
        }
        TasepState { bits }
    }

    /// Every point of `Δ_{d,L}`.
    pub fn all(period: Period) -> Vec<SimplexPoint> {
        fn fill(k: usize, left: usize, coords: &mut Vec<usize>, out: &mut Vec<SimplexPoint>) {
            if k + 1 == coords.len() {
                coords[k] = left;
                out.push(SimplexPoint { coords: coords.clone() });
                return;
            }
            for v in (0..=left).rev() {
                coords[k] = v;
                fill(k + 1, left - v, coords, out);
            }
        }
        let mut out = Vec::new();
        fill(0, period.l(), &mut vec![0; period.d()], &mut out);
        out
    }
}

impl fmt::Display for SimplexPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A configuration of `d` particles on a ring of `d + L` sites.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "StateRepr", into = "StateRepr")]
pub struct TasepState {
    bits: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct StateRepr {
    bits: String,
}

impl TryFrom<StateRepr> for TasepState {
    type Error = Error;

    fn try_from(r: StateRepr) -> Result<Self> {
        r.bits.parse()
    }
}

impl From<TasepState> for StateRepr {
    fn from(s: TasepState) -> Self {
        StateRepr { bits: s.to_string() }
    }
}

impl std::str::FromStr for TasepState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected bit {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TasepState::new(bits)
    }
}

impl fmt::Display for TasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits.iter().try_for_each(|b| f.write_str(if *b { "1" } else { "0" }))
    }
}

impl TasepState {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        let ones = bits.iter().filter(|b| **b).count();
        if ones == 0 || ones == bits.len() {
            return Err(Error::InvalidWalk("a TASEP state needs at least one particle and one hole".into()));
        }
        Ok(TasepState { bits })
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// `(d, L)`: number of particles and number of holes.
    pub fn period(&self) -> Period {
        let d = self.bits.iter().filter(|b| **b).count();
        Period::new(d, self.bits.len() - d).expect("checked on construction")
    }

    pub fn sites(&self) -> usize {
        self.bits.len()
    }

    /// Site `r`, 1-based and cyclic.
    pub fn site(&self, r: i64) -> bool {
        self.bits[(r - 1).rem_euclid(self.bits.len() as i64) as usize]
    }

    /// `ρ^k`: move the first bit to the end `k` times (negative `k` rotates back).
    pub fn rotated(&self, k: i64) -> TasepState {
        let n = self.bits.len() as i64;
        let k = k.rem_euclid(n) as usize;
        let mut bits = self.bits.clone();
        bits.rotate_left(k);
        TasepState { bits }
    }

    /// `u^{rc}_k = 1 - u_{N+1-k}`, a state of the transposed period.
    pub fn reverse_complement(&self) -> TasepState {
        TasepState { bits: self.bits.iter().rev().map(|b| !b).collect() }
    }

    /// Sites `r` where a jump happens in the given direction: forward steps
    /// need `u_{r-1} u_r = 01`, backward steps `u_{r-1} u_r = 10`.
    pub fn jump_sites(&self, sign: Sign) -> Vec<usize> {
        let want = match sign {
            Sign::Plus => (false, true),
            Sign::Minus => (true, false),
        };
        (1..=self.bits.len()).filter(|&r| (self.site(r as i64 - 1), self.site(r as i64)) == want).collect()
    }

    /// Swap sites `r - 1` and `r`, provided the pattern matches the direction.
    pub fn jump(&self, r: usize, sign: Sign) -> Option<TasepState> {
        if !self.jump_sites(sign).contains(&r) {
            return None;
        }
        let n = self.bits.len();
        let (a, b) = ((r + n - 2) % n, (r - 1) % n);
        let mut bits = self.bits.clone();
        bits.swap(a, b);
        Some(TasepState { bits })
    }

    /// Offset `t` of the least rotation, so that `canonical[k] = self[k + t]`.
    pub fn least_rotation(&self) -> usize {
        least_rotation(&self.bits)
    }

    /// Site positions of the particles, left to right.
    pub fn particle_sites(&self) -> Vec<usize> {
        (1..=self.bits.len()).filter(|&r| self.bits[r - 1]).collect()
    }

    /// Every state with `d` particles and `L` holes.
    pub fn all(period: Period) -> Vec<TasepState> {
        let n = period.sites();
        (0u64..1 << n)
            .filter(|m| m.count_ones() as usize == period.d())
            .map(|m| TasepState { bits: (0..n).map(|k| m >> (n - 1 - k) & 1 == 1).collect() })
            .collect()
    }
}

/// Start index of the lexicographically least rotation, by the linear
/// two-pointer minimal-rotation scan.
fn least_rotation(s: &[bool]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (s[(i + k) % n], s[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a & !b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// A rotation class of TASEP states, held by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "StateRepr", into = "StateRepr")]
pub struct Necklace {
    canonical: TasepState,
}

impl TryFrom<StateRepr> for Necklace {
    type Error = Error;

    fn try_from(r: StateRepr) -> Result<Self> {
        Ok(Necklace::of(&r.bits.parse()?))
    }
}

impl From<Necklace> for StateRepr {
    fn from(n: Necklace) -> Self {
        StateRepr { bits: n.canonical.to_string() }
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.canonical)
    }
}

impl Necklace {
    pub fn of(state: &TasepState) -> Necklace {
        Necklace { canonical: state.rotated(state.least_rotation() as i64) }
    }

    pub fn canonical(&self) -> &TasepState {
        &self.canonical
    }

    pub fn period(&self) -> Period {
        self.canonical.period()
    }

    /// Every necklace with `d` ones and `L` zeros.
    pub fn all(period: Period) -> Vec<Necklace> {
        let mut out: Vec<Necklace> = TasepState::all(period).iter().map(Necklace::of).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// `f(α) = (α_0 - α_1, .., α_{d-1} - α_d)`.
pub fn map_f(shape: &CylindricShape) -> SimplexPoint {
    let coords = (1..=shape.d() as i64).map(|i| (shape.row(i - 1) - shape.row(i)) as usize).collect();
    SimplexPoint { coords }
}

/// `g(x) = ⟨0^{x_1} 1 .. 0^{x_d} 1⟩`.
pub fn map_g(point: &SimplexPoint) -> Necklace {
    Necklace::of(&point.particle_word())
}

/// `h(α) = ρ^{α_d}(0^{α_0-α_1} 1 .. 0^{α_{d-1}-α_d} 1)`.
pub fn map_h(shape: &CylindricShape) -> TasepState {
    map_f(shape).particle_word().rotated(shape.row(shape.d() as i64))
}

/// Rotation class of a state.
pub fn map_q(state: &TasepState) -> Necklace {
    Necklace::of(state)
}

/// Which of the four walk models a vertex or walk lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Shapes,
    Simplex,
    Tasep,
    Necklace,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Shapes => "shapes",
            ModelKind::Simplex => "simplex",
            ModelKind::Tasep => "tasep",
            ModelKind::Necklace => "necklace",
        })
    }
}

impl std::str::FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shapes" => Ok(ModelKind::Shapes),
            "simplex" => Ok(ModelKind::Simplex),
            "tasep" => Ok(ModelKind::Tasep),
            "necklace" => Ok(ModelKind::Necklace),
            other => Err(Error::Parse(format!("unknown model {other:?}"))),
        }
    }
}

/// A vertex of one of the four models.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Vertex {
    Shape(CylindricShape),
    Point(SimplexPoint),
    State(TasepState),
    Necklace(Necklace),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Shape(s) => s.fmt(f),
            Vertex::Point(p) => p.fmt(f),
            Vertex::State(u) => u.fmt(f),
            Vertex::Necklace(n) => n.fmt(f),
        }
    }
}

impl Vertex {
    pub fn model(&self) -> ModelKind {
        match self {
            Vertex::Shape(_) => ModelKind::Shapes,
            Vertex::Point(_) => ModelKind::Simplex,
            Vertex::State(_) => ModelKind::Tasep,
            Vertex::Necklace(_) => ModelKind::Necklace,
        }
    }

    /// Out-neighbors (`Plus`) or in-neighbors (`Minus`) with their edge labels.
    ///
    /// Shapes and simplex points are labelled by row index; TASEP states
    /// and necklaces by the site `r` of the `01` (or `10`) pair at sites
    /// `r - 1, r`, read in the canonical representative for necklaces.
    pub fn neighbors(&self, sign: Sign) -> Vec<(usize, Vertex)> {
        match self {
            Vertex::Shape(s) => {
                let rows = match sign {
                    Sign::Plus => s.addable_rows(),
                    Sign::Minus => s.removable_rows(),
                };
                rows.into_iter()
                    .map(|i| {
                        let next = match sign {
                            Sign::Plus => s.add_cell(i),
                            Sign::Minus => s.remove_cell(i),
                        };
                        (i, Vertex::Shape(next.expect("corner row")))
                    })
                    .collect()
            }
            Vertex::Point(p) => {
                (1..=p.coords.len()).filter_map(|i| p.step(i, sign).map(|q| (i, Vertex::Point(q)))).collect()
            }
            Vertex::State(u) => u
                .jump_sites(sign)
                .into_iter()
                .map(|r| (r, Vertex::State(u.jump(r, sign).expect("matching site"))))
                .collect(),
            Vertex::Necklace(n) => n
                .canonical
                .jump_sites(sign)
                .into_iter()
                .map(|r| {
                    let next = n.canonical.jump(r, sign).expect("matching site");
                    (r, Vertex::Necklace(Necklace::of(&next)))
                })
                .collect(),
        }
    }

    /// Follow the edge with the given label, if it exists.
    pub fn step(&self, label: usize, sign: Sign) -> Option<Vertex> {
        match self {
            Vertex::Shape(s) => match sign {
                Sign::Plus => s.add_cell(label).ok(),
                Sign::Minus => s.remove_cell(label).ok(),
            }
            .map(Vertex::Shape),
            Vertex::Point(p) => p.step(label, sign).map(Vertex::Point),
            Vertex::State(u) => u.jump(label, sign).map(Vertex::State),
            Vertex::Necklace(n) => n.canonical.jump(label, sign).map(|u| Vertex::Necklace(Necklace::of(&u))),
        }
    }
}

/// One step of a walk: an edge label and a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WalkStep {
    pub i: usize,
    pub sign: Sign,
}

/// A walk in one of the models.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WalkRepr", into = "WalkRepr")]
pub struct WalkRecord {
    model: ModelKind,
    start: Vertex,
    steps: Vec<WalkStep>,
}

#[derive(Serialize, Deserialize)]
struct WalkRepr {
    model: ModelKind,
    start: serde_json::Value,
    steps: Vec<WalkStep>,
}

impl TryFrom<WalkRepr> for WalkRecord {
    type Error = Error;

    fn try_from(r: WalkRepr) -> Result<Self> {
        let parse_err = |e: serde_json::Error| Error::Parse(e.to_string());
        let start = match r.model {
            ModelKind::Shapes => Vertex::Shape(serde_json::from_value(r.start).map_err(parse_err)?),
            ModelKind::Simplex => Vertex::Point(serde_json::from_value(r.start).map_err(parse_err)?),
            ModelKind::Tasep => Vertex::State(serde_json::from_value(r.start).map_err(parse_err)?),
            ModelKind::Necklace => Vertex::Necklace(serde_json::from_value(r.start).map_err(parse_err)?),
        };
        WalkRecord::new(start, r.steps)
    }
}

impl From<WalkRecord> for WalkRepr {
    fn from(w: WalkRecord) -> Self {
        WalkRepr { model: w.model, start: serde_json::to_value(&w.start).expect("vertices serialize"), steps: w.steps }
    }
}

impl WalkRecord {
    /// Build a walk, checking that every step exists.
    pub fn new(start: Vertex, steps: Vec<WalkStep>) -> Result<Self> {
        let w = WalkRecord { model: start.model(), start, steps };
        w.vertices()?;
        Ok(w)
    }

    pub fn model(&self) -> ModelKind {
        self.model
    }

    pub fn start(&self) -> &Vertex {
        &self.start
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn type_word(&self) -> TypeWord {
        TypeWord(self.steps.iter().map(|s| s.sign).collect())
    }

    /// The vertex sequence, of length `len() + 1`.
    pub fn vertices(&self) -> Result<Vec<Vertex>> {
        let mut out = vec![self.start.clone()];
        for (k, s) in self.steps.iter().enumerate() {
            let next = out[k].step(s.i, s.sign).ok_or_else(|| {
                Error::InvalidWalk(format!(
                    "step {} ({}{}) is not available at {}",
                    k + 1,
                    s.sign.as_char(),
                    s.i,
                    out[k]
                ))
            })?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Vertex {
        self.vertices().expect("validated").pop().expect("nonempty")
    }

    /// The same path traversed backwards. Edge labels of the shape, simplex
    /// and TASEP graphs do not depend on direction; necklace labels do.
    pub fn reversed(&self) -> Result<WalkRecord> {
        if self.model == ModelKind::Necklace {
            return Err(Error::InvalidWalk("necklace walks cannot be reversed label-wise".into()));
        }
        let steps = self.steps.iter().rev().map(|s| WalkStep { i: s.i, sign: s.sign.flipped() }).collect();
        WalkRecord::new(self.end(), steps)
    }
}

/// The covering maps between models.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cover {
    /// shapes → simplex
    F,
    /// simplex → necklace
    G,
    /// shapes → tasep
    H,
    /// tasep → necklace
    Q,
    /// shapes → necklace, as `g ∘ f`
    GF,
}

impl std::str::FromStr for Cover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(Cover::F),
            "g" => Ok(Cover::G),
            "h" => Ok(Cover::H),
            "q" => Ok(Cover::Q),
            "gf" | "g∘f" | "g.f" => Ok(Cover::GF),
            other => Err(Error::Parse(format!("unknown covering map {other:?}"))),
        }
    }
}

impl Cover {
    pub fn domain(self) -> ModelKind {
        match self {
            Cover::F | Cover::H | Cover::GF => ModelKind::Shapes,
            Cover::G => ModelKind::Simplex,
            Cover::Q => ModelKind::Tasep,
        }
    }

    pub fn codomain(self) -> ModelKind {
        match self {
            Cover::F => ModelKind::Simplex,
            Cover::H => ModelKind::Tasep,
            Cover::G | Cover::Q | Cover::GF => ModelKind::Necklace,
        }
    }

    /// Image of a vertex.
    pub fn apply(self, v: &Vertex) -> Result<Vertex> {
        match (self, v) {
            (Cover::F, Vertex::Shape(s)) => Ok(Vertex::Point(map_f(s))),
            (Cover::H, Vertex::Shape(s)) => Ok(Vertex::State(map_h(s))),
            (Cover::GF, Vertex::Shape(s)) => Ok(Vertex::Necklace(map_g(&map_f(s)))),
            (Cover::G, Vertex::Point(p)) => Ok(Vertex::Necklace(map_g(p))),
            (Cover::Q, Vertex::State(u)) => Ok(Vertex::Necklace(map_q(u))),
            _ => Err(Error::InvalidWalk(format!("{} is not in the domain of the covering map", v))),
        }
    }

    /// Label of the image of the edge `label` leaving `v` in direction `sign`.
    pub fn edge_image(self, v: &Vertex, label: usize, sign: Sign) -> Result<usize> {
        // Position in a particle word of the site r with the jump pattern
        // that corresponds to a move across the boundary after block `i`.
        fn word_site(x: &SimplexPoint, i: usize, sign: Sign) -> i64 {
            let end_of_block: usize = x.coords[..i].iter().sum::<usize>() + i;
            match sign {
                Sign::Plus => end_of_block as i64,
                Sign::Minus => end_of_block as i64 + 1,
            }
        }
        fn wrap(r: i64, n: usize) -> usize {
            ((r - 1).rem_euclid(n as i64) + 1) as usize
        }
        match (self, v) {
            (Cover::F, Vertex::Shape(_)) => Ok(label),
            (Cover::H, Vertex::Shape(s)) => {
                let x = map_f(s);
                let n = s.period().sites();
                Ok(wrap(word_site(&x, label, sign) - s.row(s.d() as i64), n))
            }
            (Cover::G, Vertex::Point(x)) => {
                let u = x.particle_word();
                let t = u.least_rotation() as i64;
                Ok(wrap(word_site(x, label, sign) - t, u.sites()))
            }
            (Cover::GF, Vertex::Shape(s)) => Cover::G.edge_image(&Vertex::Point(map_f(s)), label, sign),
            (Cover::Q, Vertex::State(u)) => {
                let t = u.least_rotation() as i64;
                Ok(wrap(label as i64 - t, u.sites()))
            }
            _ => Err(Error::InvalidWalk(format!("{} is not in the domain of the covering map", v))),
        }
    }

    /// Image of a walk.
    pub fn project(self, walk: &WalkRecord) -> Result<WalkRecord> {
        let vertices = walk.vertices()?;
        let steps = walk
            .steps
            .iter()
            .zip(&vertices)
            .map(|(s, v)| Ok(WalkStep { i: self.edge_image(v, s.i, s.sign)?, sign: s.sign }))
            .collect::<Result<Vec<_>>>()?;
        WalkRecord::new(self.apply(&walk.start)?, steps)
    }

    /// The unique walk from `start` whose image is `walk`.
    pub fn lift(self, start: &Vertex, walk: &WalkRecord) -> Result<WalkRecord> {
        let image = self.apply(start)?;
        if image != walk.start {
            return Err(Error::BasePoint { expected: walk.start.to_string(), got: image.to_string() });
        }
        let mut current = start.clone();
        let mut steps = Vec::with_capacity(walk.len());
        for s in &walk.steps {
            let mut found = None;
            for (label, next) in current.neighbors(s.sign) {
                if self.edge_image(&current, label, s.sign)? == s.i {
                    found = Some((label, next));
                    break;
                }
            }
            let (label, next) = found.ok_or_else(|| {
                Error::InvalidWalk(format!("no edge over {}{} at {}", s.sign.as_char(), s.i, current))
            })?;
            steps.push(WalkStep { i: label, sign: s.sign });
            current = next;
        }
        WalkRecord::new(start.clone(), steps)
    }
}

/// The simplex walk of an oscillating tableau.
pub fn walk_of_oct(oct: &Oct) -> WalkRecord {
    let steps = oct.steps().into_iter().map(|(i, sign)| WalkStep { i, sign }).collect();
    WalkRecord { model: ModelKind::Simplex, start: Vertex::Point(map_f(oct.start())), steps }
}

/// The simplex walk of a standard tableau's walk representation.
pub fn walk_of_sct(t: &Sct) -> WalkRecord {
    walk_of_oct(&Oct::from(t))
}

/// The oscillating tableau from `alpha` that follows a simplex walk.
pub fn oct_of_walk(alpha: &CylindricShape, walk: &WalkRecord) -> Result<Oct> {
    if walk.model != ModelKind::Simplex {
        return Err(Error::InvalidWalk(format!("expected a simplex walk, got {}", walk.model)));
    }
    let lifted = Cover::F.lift(&Vertex::Shape(alpha.clone()), walk)?;
    let shapes = lifted
        .vertices()?
        .into_iter()
        .map(|v| match v {
            Vertex::Shape(s) => s,
            _ => unreachable!("lift over f stays in the shape graph"),
        })
        .collect();
    Oct::new(shapes)
}

/// The shape with window `[.., x_d, 0]` mapping to `x` under `f`.
pub fn base_shape(point: &SimplexPoint) -> CylindricShape {
    let d = point.coords.len();
    let mut rows = vec![0i64; d];
    for i in (0..d - 1).rev() {
        rows[i] = rows[i + 1] + point.coords[i + 1] as i64;
    }
    CylindricShape::new(point.period(), rows).expect("differences are nonnegative and sum to L")
}

/// TASEP walk that moves particle `i` for each simplex step `(i, ±)`,
/// starting from the particle word of the walk's start.
pub fn walk_to_tasep(alpha: &CylindricShape, walk: &WalkRecord) -> Result<WalkRecord> {
    let start = match &walk.start {
        Vertex::Point(p) => p.clone(),
        other => return Err(Error::InvalidWalk(format!("expected a simplex walk, got {other}"))),
    };
    let fa = map_f(alpha);
    if fa != start {
        return Err(Error::BasePoint { expected: start.to_string(), got: fa.to_string() });
    }
    walk.vertices()?;
    let u = start.particle_word();
    let n = u.sites();
    let mut sites = u.particle_sites();
    let mut occupied: Vec<bool> = u.bits().to_vec();
    let mut steps = Vec::with_capacity(walk.len());
    for s in &walk.steps {
        let from = sites[s.i - 1];
        let (to, label) = match s.sign {
            Sign::Plus => ((from + n - 2) % n + 1, from),
            Sign::Minus => (from % n + 1, from % n + 1),
        };
        assert!(!occupied[to - 1], "lifted simplex steps never collide");
        occupied[from - 1] = false;
        occupied[to - 1] = true;
        sites[s.i - 1] = to;
        steps.push(WalkStep { i: label, sign: s.sign });
    }
    WalkRecord::new(Vertex::State(u), steps)
}

/// Lift a simplex walk to TASEP so that it ends at the particle word of its
/// end point, particles again numbered left to right there.
pub fn walk_to_tasep_ending(walk: &WalkRecord) -> Result<WalkRecord> {
    let Vertex::Point(x) = walk.end() else {
        return Err(Error::InvalidWalk(format!("expected a simplex walk, got {}", walk.model())));
    };
    walk_to_tasep(&base_shape(&x), &walk.reversed()?)?.reversed()
}

/// Count walks of type `word` from `start`, stopping once more than `cap`
/// (step, vertex) states have been expanded.
pub fn count_walks(start: &Vertex, word: &TypeWord, cap: u64) -> Result<u128> {
    let mut layer: HashMap<Vertex, u128> = HashMap::from([(start.clone(), 1)]);
    let mut expanded = 0u64;
    for sign in &word.0 {
        let mut next: HashMap<Vertex, u128> = HashMap::new();
        for (v, c) in &layer {
            expanded += 1;
            if expanded > cap {
                return Err(Error::ResourceCap { cap });
            }
            for (_, w) in v.neighbors(*sign) {
                let slot = next.entry(w).or_insert(0);
                *slot = slot.checked_add(*c).ok_or(Error::Overflow)?;
            }
        }
        layer = next;
    }
    layer.values().try_fold(0u128, |acc, c| acc.checked_add(*c).ok_or(Error::Overflow))
}

/// List every walk of type `word` from `start`, in lexicographic step order.
pub fn list_walks(start: &Vertex, word: &TypeWord, cap: u64) -> Result<Vec<WalkRecord>> {
    fn go(
        v: &Vertex,
        word: &[Sign],
        prefix: &mut Vec<WalkStep>,
        start: &Vertex,
        cap: u64,
        out: &mut Vec<WalkRecord>,
    ) -> Result<()> {
        let Some((sign, rest)) = word.split_first() else {
            if out.len() as u64 >= cap {
                return Err(Error::ResourceCap { cap });
            }
            out.push(WalkRecord { model: start.model(), start: start.clone(), steps: prefix.clone() });
            return Ok(());
        };
        let mut nbrs = v.neighbors(*sign);
        nbrs.sort_by_key(|(label, _)| *label);
        for (label, w) in nbrs {
            prefix.push(WalkStep { i: label, sign: *sign });
            go(&w, rest, prefix, start, cap, out)?;
            prefix.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(start, &word.0, &mut Vec::new(), start, cap, &mut out)?;
    Ok(out)
}

/// Default cap on enumerated states.
pub const DEFAULT_STATE_CAP: u64 = 10_000_000;

/// The state cap, overridden by `CYLWALK_STATE_CAP` when set.
pub fn state_cap() -> u64 {
    std::env::var("CYLWALK_STATE_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_STATE_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(d: usize, l: usize, rows: &[i64]) -> CylindricShape {
        CylindricShape::from_window(d, l, rows.to_vec()).unwrap()
    }

    fn point(c: &[usize]) -> SimplexPoint {
        SimplexPoint::new(c.to_vec()).unwrap()
    }

    fn state(s: &str) -> TasepState {
        s.parse().unwrap()
    }

    #[test]
    fn covering_maps_on_examples() {
        assert_eq!(map_f(&shape(3, 4, &[5, 5, 3])), point(&[2, 0, 2]));
        assert_eq!(map_f(&shape(3, 4, &[0, 0, 0])), point(&[4, 0, 0]));
        assert_eq!(map_f(&shape(3, 3, &[2, 2, 0])), point(&[1, 0, 2]));
        assert_eq!(map_g(&point(&[2, 0, 2])).canonical().to_string(), "0010011");
        assert_eq!(map_g(&point(&[3, 0, 0])).canonical().to_string(), "000111");
        assert_eq!(map_g(&point(&[1, 0, 2])), map_q(&state("011001")));
        assert_eq!(map_h(&shape(3, 4, &[3, 1, 0])).to_string(), "0100101");
        assert_eq!(map_h(&shape(3, 4, &[5, 5, 3])).to_string(), "1001001");
        assert_eq!(map_h(&shape(3, 2, &[0, 0, 0])).to_string(), "00111");
        assert_eq!(map_q(&state("1001001")).canonical().to_string(), "0010011");
        assert_eq!(map_q(&state("00111")).canonical().to_string(), "00111");
    }

    #[test]
    fn booth_matches_brute_force() {
        for p in [(2, 3), (3, 3), (3, 4), (4, 4)] {
            for u in TasepState::all(Period::new(p.0, p.1).unwrap()) {
                let best = (0..u.sites()).map(|k| u.rotated(k as i64)).min().unwrap();
                assert_eq!(Necklace::of(&u).canonical(), &best, "{u}");
            }
        }
    }

    #[test]
    fn negative_rotation() {
        let s = shape(3, 3, &[-1, -1, -2]);
        assert_eq!(map_f(&s).particle_word().to_string(), "001101");
        assert_eq!(map_h(&s).to_string(), "010011");
    }

    #[test]
    fn reverse_complements() {
        assert_eq!(state("10011").reverse_complement().to_string(), "00110");
        let u = state("0100101");
        assert_eq!(u.reverse_complement().reverse_complement(), u);
        assert_eq!(state("00111").reverse_complement().to_string(), "00011");
    }

    #[test]
    fn neighbor_lists() {
        let v = Vertex::Point(point(&[2, 0, 0]));
        assert_eq!(v.neighbors(Sign::Plus), vec![(1, Vertex::Point(point(&[1, 1, 0])))]);
        let s = Vertex::Shape(shape(3, 2, &[1, 1, 0]));
        assert_eq!(
            s.neighbors(Sign::Plus),
            vec![(1, Vertex::Shape(shape(3, 2, &[2, 1, 0]))), (3, Vertex::Shape(shape(3, 2, &[1, 1, 1])))]
        );
        let u = Vertex::State(state("011001"));
        let next: Vec<String> = u.neighbors(Sign::Plus).iter().map(|(_, v)| v.to_string()).collect();
        assert_eq!(next, vec!["101001", "011010"]);
    }

    #[test]
    fn lift_over_f() {
        let steps: Vec<WalkStep> = [1, 3, 3, 2, 3, 1, 1, 2].iter().map(|&i| WalkStep { i, sign: Sign::Plus }).collect();
        let walk = WalkRecord::new(Vertex::Point(point(&[1, 0, 2])), steps.clone()).unwrap();
        let lifted = Cover::F.lift(&Vertex::Shape(shape(3, 3, &[2, 2, 0])), &walk).unwrap();
        assert_eq!(lifted.steps(), &steps[..]);
        assert_eq!(lifted.end(), Vertex::Shape(shape(3, 3, &[5, 4, 3])));
        assert!(Cover::F.lift(&Vertex::Shape(shape(3, 3, &[2, 1, 0])), &walk).is_err());
    }

    #[test]
    fn tasep_walk_of_a_simplex_walk() {
        let steps: Vec<WalkStep> = [1, 3, 3, 2, 3, 1, 1, 2].iter().map(|&i| WalkStep { i, sign: Sign::Plus }).collect();
        let walk = WalkRecord::new(Vertex::Point(point(&[1, 0, 2])), steps).unwrap();
        let t = walk_to_tasep(&shape(3, 3, &[2, 2, 0]), &walk).unwrap();
        let states: Vec<String> = t.vertices().unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            states,
            vec!["011001", "101001", "101010", "101100", "110100", "111000", "011001", "011010", "101010"]
        );
        // Parallel necklace edges may carry different labels; the vertices agree.
        let via_tasep = Cover::Q.project(&t).unwrap().vertices().unwrap();
        assert_eq!(via_tasep, Cover::G.project(&walk).unwrap().vertices().unwrap());
    }

    #[test]
    fn walk_counts() {
        let p = Period::new(3, 1).unwrap();
        for n in 0..6 {
            let c = count_walks(&Vertex::Point(point(&[1, 0, 0])), &TypeWord::all_plus(n), 1000);
            assert_eq!(c.unwrap(), 1);
        }
        let c = Vertex::Point(SimplexPoint::corner(Period::new(3, 2).unwrap()));
        assert_eq!(count_walks(&c, &TypeWord::all_plus(3), 1000).unwrap(), 3);
        assert_eq!(list_walks(&c, &TypeWord::all_plus(3), 1000).unwrap().len(), 3);
        let u = state("00111");
        let w = TypeWord::all_plus(2);
        assert_eq!(
            count_walks(&Vertex::Necklace(Necklace::of(&u)), &w, 1000).unwrap(),
            count_walks(&Vertex::State(u), &w, 1000).unwrap()
        );
        assert!(matches!(
            count_walks(&Vertex::Shape(CylindricShape::empty(p)), &TypeWord::all_plus(5), 2),
            Err(Error::ResourceCap { cap: 2 })
        ));
    }

    #[test]
    fn base_shapes_map_back() {
        for x in SimplexPoint::all(Period::new(3, 3).unwrap()) {
            let a = base_shape(&x);
            assert_eq!(map_f(&a), x);
            assert_eq!(a.window()[2], 0);
        }
    }

    #[test]
    fn json_forms() {
        assert_eq!(serde_json::to_string(&point(&[1, 0, 2])).unwrap(), r#"{"coords":[1,0,2]}"#);
        assert_eq!(serde_json::to_string(&state("011001")).unwrap(), r#"{"bits":"011001"}"#);
        let walk =
            WalkRecord::new(Vertex::Point(point(&[1, 0, 2])), vec![WalkStep { i: 1, sign: Sign::Plus }]).unwrap();
        let j = serde_json::to_string(&walk).unwrap();
        assert_eq!(j, r#"{"model":"simplex","start":{"coords":[1,0,2]},"steps":[{"i":1,"sign":"+"}]}"#);
        assert_eq!(serde_json::from_str::<WalkRecord>(&j).unwrap(), walk);
    }
}
