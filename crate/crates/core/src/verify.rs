//! The acceptance checks, shared by the `acceptance` test target and the
//! `verify` CLI verb. Each check is exhaustive over a small range and
//! reports a one-line summary.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{
    a_series, count_oct, count_oct_between, count_sct, d4_value, d4_value_unsquared, list_oct, list_sct, walk_ends,
    FixedSide, D4_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::growth::{complete_from_path, grow_from_tu, retype_oct, symmetric_diagram, RetypeMode, Side};
use crate::insertion::{
    crs_forward, crs_forward_with_iterates, crs_inverse, internal_insertion, phi, phi_inverse, reverse_walk_bijection,
};
use crate::lattice::{
    count_walks, list_walks, map_f, map_g, map_h, map_q, walk_of_oct, walk_of_sct, walk_to_tasep, walk_to_tasep_ending,
    Cover, Necklace, SimplexPoint, TasepState, Vertex, WalkRecord,
};
use crate::shape::{shapes_in_box, CylindricShape, Period};
use crate::tableau::{Oct, Sct, Sign, Syt, TypeWord};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 1;

/// Number of acceptance criteria.
pub const CRITERIA: usize = 11;

const CAP: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

/// Short name of criterion `id`, or `None` outside `1..=CRITERIA`.
pub fn criterion_name(id: usize) -> Option<&'static str> {
    Some(match id {
        1 => "motzkin identity",
        2 => "d=4 closed form",
        3 => "crs bijectivity and symmetry",
        4 => "insertion equals growth",
        5 => "complement involution",
        6 => "covering structure",
        7 => "type invariance",
        8 => "pairwise sums",
        9 => "poset properties",
        10 => "evacuation (conjecture)",
        11 => "worked-example golden files",
        _ => return None,
    })
}

/// Run criterion `id`.
pub fn run(id: usize, seed: u64) -> Option<CriterionReport> {
    let name = criterion_name(id)?;
    let outcome = match id {
        1 => motzkin_identity(),
        2 => d4_formula(),
        3 => crs_bijectivity(),
        4 => insertion_growth(),
        5 => complement_involution(seed),
        6 => covering_structure(),
        7 => type_invariance(seed),
        8 => pairwise_sums(),
        9 => poset_properties(),
        10 => evacuation(),
        11 => golden_files(),
        _ => unreachable!(),
    };
    let (passed, detail) = match outcome {
        Ok(Check { failures, detail }) if failures.is_empty() => (true, detail),
        Ok(Check { failures, detail }) => {
            (false, format!("{detail}; {} failure(s), first: {}", failures.len(), failures[0]))
        }
        Err(e) => (false, format!("error: {e}")),
    };
    Some(CriterionReport { id, name, passed, detail })
}

/// Run every criterion in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    (1..=CRITERIA).filter_map(|id| run(id, seed)).collect()
}

struct Check {
    failures: Vec<String>,
    detail: String,
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, detail: impl Into<String>) -> Result<Check> {
        Ok(Check { failures: self.failures, detail: detail.into() })
    }
}

fn period(d: usize, l: usize) -> Period {
    Period::new(d, l).expect("small periods are valid")
}

const SMALL_PERIODS: [(usize, usize); 4] = [(2, 2), (3, 2), (2, 3), (3, 3)];

fn motzkin_identity() -> Result<Check> {
    let mut t = Tally::default();
    for l in 1..=6 {
        let corner = Vertex::Point(SimplexPoint::corner(period(3, l)));
        for n in 0..=12 {
            let walks = count_walks(&corner, &TypeWord::all_plus(n), CAP)?;
            let a = a_series(n, l);
            t.check(walks == a, || format!("L={l} n={n}: {walks} walks, a={a}"));
        }
    }
    let cases = t.cases;
    t.finish(format!("{cases} (L,n) pairs, L<=6, n<=12"))
}

fn d4_formula() -> Result<Check> {
    let mut t = Tally::default();
    let mut worst = 0.0f64;
    let mut unsquared_off = Vec::new();
    for l in 1..=3 {
        let corner = Vertex::Point(SimplexPoint::corner(period(4, l)));
        for n in 0..=8 {
            let brute = count_walks(&corner, &TypeWord::all_plus(n), CAP)? as f64;
            let v = d4_value(n, l);
            let residual = (v - brute).abs();
            worst = worst.max(residual);
            t.check(residual < D4_TOLERANCE, || format!("L={l} n={n}: formula {v}, walks {brute}"));
            let u = d4_value_unsquared(n, l);
            if (u - brute).abs() >= D4_TOLERANCE {
                unsquared_off.push(format!("L={l} n={n}: {u:.4} vs {brute}"));
            }
        }
    }
    let cases = t.cases;
    let note = if unsquared_off.is_empty() {
        "printed first-power difference factor also agrees".to_string()
    } else {
        format!(
            "DISCREPANCY: the printed first-power difference factor disagrees at {}/{cases} points (e.g. {}); \
             the squared factor is used",
            unsquared_off.len(),
            unsquared_off[0]
        )
    };
    t.finish(format!("{cases} points, max residual {worst:.1e}; {note}"))
}

/// Every pair of small tableaux with a common inner shape.
struct SmallPairs {
    period: Period,
    tableaux: Vec<Vec<Sct>>,
}

fn small_tableaux(max_n: usize) -> Result<Vec<SmallPairs>> {
    let mut out = Vec::new();
    for (d, l) in SMALL_PERIODS {
        let p = period(d, l);
        for mu in shapes_in_box(p, -1, 2) {
            let tableaux = (0..=max_n).map(|n| list_sct(&mu, n, FixedSide::Inner, CAP)).collect::<Result<Vec<_>>>()?;
            out.push(SmallPairs { period: p, tableaux });
        }
    }
    Ok(out)
}

fn for_each_pair(max_n: usize, mut f: impl FnMut(&Sct, &Sct) -> Result<()>) -> Result<()> {
    for group in small_tableaux(max_n)? {
        debug_assert!(group.tableaux.iter().flatten().all(|t| t.period() == group.period));
        let all: Vec<&Sct> = group.tableaux.iter().flatten().collect();
        for t in &all {
            for u in &all {
                f(t, u)?;
            }
        }
    }
    Ok(())
}

fn crs_bijectivity() -> Result<Check> {
    let mut tally = Tally::default();
    for_each_pair(3, |t, u| {
        let (p, q) = crs_forward(t, u)?;
        let shapes_ok = p.inner() == u.outer()
            && q.inner() == t.outer()
            && p.outer() == q.outer()
            && p.len() == t.len()
            && q.len() == u.len();
        tally.check(shapes_ok, || format!("codomain shapes for T={t:?}"));
        let back = crs_inverse(&p, &q)?;
        tally.check(back == (t.clone(), u.clone()), || format!("inverse fails for T={t:?}, U={u:?}"));
        let swapped = crs_forward(u, t)?;
        tally.check(swapped == (q, p), || format!("swap fails for T={t:?}, U={u:?}"));
        Ok(())
    })?;
    let cases = tally.cases / 3;
    tally.finish(format!("{cases} pairs over (d,L) in {SMALL_PERIODS:?}, mu in [-1,2], n,m<=3"))
}

fn insertion_growth() -> Result<Check> {
    let mut tally = Tally::default();
    for_each_pair(3, |t, u| {
        let (p, q, iterates) = crs_forward_with_iterates(t, u)?;
        let g = grow_from_tu(t, u)?;
        g.validate()?;
        for (k, pk) in iterates.iter().enumerate() {
            let column: Vec<CylindricShape> = (0..=g.n()).map(|y| g.at(k, y).clone()).collect();
            tally.check(column == pk.walk_rep(), || format!("column {k} differs for T={t:?}, U={u:?}"));
        }
        tally.check(g.boundary(Side::Right) == p.walk_rep() && g.boundary(Side::Top) == q.walk_rep(), || {
            format!("boundary differs for T={t:?}, U={u:?}")
        });
        Ok(())
    })?;
    let cases = tally.cases;
    tally.finish(format!("{cases} column and boundary comparisons"))
}

fn complement_checks(t: &Sct, u: &Sct, tally: &mut Tally) -> Result<()> {
    tally.check(phi_inverse(&phi(t)) == *t, || format!("phi^-1(phi(T)) != T for {t:?}"));
    tally.check(phi(&phi_inverse(t)) == *t, || format!("phi(phi^-1(T)) != T for {t:?}"));
    let (p, q) = crs_forward(t, u)?;
    let dual = crs_forward(&p.complement(), &q.complement())?;
    tally.check(dual == (t.complement(), u.complement()), || format!("CRS of complements fails for T={t:?}, U={u:?}"));
    Ok(())
}

fn complement_involution(seed: u64) -> Result<Check> {
    let mut tally = Tally::default();
    for_each_pair(3, |t, u| complement_checks(t, u, &mut tally))?;
    let exhaustive = tally.cases / 3;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let boxes: Vec<(Period, Vec<CylindricShape>)> =
        SMALL_PERIODS.iter().map(|&(d, l)| (period(d, l), shapes_in_box(period(d, l), -2, 3))).collect();
    for _ in 0..500 {
        let (_, shapes) = boxes.choose(&mut rng).expect("nonempty");
        let mu = shapes.choose(&mut rng).expect("nonempty");
        let n = rng.gen_range(0..=6);
        let m = rng.gen_range(0..=6);
        let t = Sct::random(mu, n, rng.gen());
        let u = Sct::random(mu, m, rng.gen());
        complement_checks(&t, &u, &mut tally)?;
    }
    tally.finish(format!("{exhaustive} exhaustive pairs plus 500 random pairs with n,m<=6 (seed {seed})"))
}

fn domain_vertices(cover: Cover, p: Period, lo: i64, hi: i64) -> Vec<Vertex> {
    use crate::lattice::ModelKind;
    match cover.domain() {
        ModelKind::Shapes => shapes_in_box(p, lo, hi).into_iter().map(Vertex::Shape).collect(),
        ModelKind::Simplex => SimplexPoint::all(p).into_iter().map(Vertex::Point).collect(),
        ModelKind::Tasep => TasepState::all(p).into_iter().map(Vertex::State).collect(),
        ModelKind::Necklace => Necklace::all(p).into_iter().map(Vertex::Necklace).collect(),
    }
}

const COVERS: [Cover; 5] = [Cover::F, Cover::G, Cover::H, Cover::Q, Cover::GF];

fn covering_structure() -> Result<Check> {
    let mut tally = Tally::default();
    for (d, l) in SMALL_PERIODS {
        let p = period(d, l);
        for cover in COVERS {
            for v in domain_vertices(cover, p, -3, 6) {
                let image = cover.apply(&v)?;
                for sign in [Sign::Plus, Sign::Minus] {
                    let up: Vec<(usize, Vertex)> = v.neighbors(sign);
                    let down: Vec<(usize, Vertex)> = image.neighbors(sign);
                    let mut mapped = Vec::new();
                    for (label, w) in &up {
                        let l2 = cover.edge_image(&v, *label, sign)?;
                        let target = image.step(l2, sign);
                        tally.check(target.as_ref() == Some(&cover.apply(w)?), || {
                            format!("{cover:?}: edge {label}{} at {v} maps off its endpoint", sign.as_char())
                        });
                        mapped.push(l2);
                    }
                    mapped.sort_unstable();
                    let mut labels: Vec<usize> = down.iter().map(|(l, _)| *l).collect();
                    labels.sort_unstable();
                    tally.check(mapped == labels, || {
                        format!("{cover:?}: {} edges at {v} are not a bijection", sign.as_char())
                    });
                }
            }
            for v in domain_vertices(cover, p, -1, 2) {
                let image = cover.apply(&v)?;
                for n in 0..=4 {
                    for w in TypeWord::all_of_length(n) {
                        let below = list_walks(&image, &w, CAP)?;
                        for walk in &below {
                            let lifted = cover.lift(&v, walk)?;
                            tally.check(lifted.start() == &v && cover.project(&lifted)? == *walk, || {
                                format!("{cover:?}: lift/project of {walk:?} from {v}")
                            });
                        }
                        let above = count_walks(&v, &w, CAP)?;
                        tally.check(above == below.len() as u128, || {
                            format!("{cover:?}: {above} walks of type {w} at {v}, {} below", below.len())
                        });
                    }
                }
            }
        }
        for a in shapes_in_box(p, -3, 6) {
            tally.check(map_g(&map_f(&a)) == map_q(&map_h(&a)), || format!("g(f({a})) != q(h({a}))"));
        }
    }
    let cases = tally.cases;
    tally.finish(format!("{cases} checks over (d,L) in {SMALL_PERIODS:?}, walks of length <=4"))
}

fn type_invariance(seed: u64) -> Result<Check> {
    let mut tally = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (d, l) in [(3, 2), (3, 3)] {
        let p = period(d, l);
        let mut pool = shapes_in_box(p, -2, 3);
        pool.shuffle(&mut rng);
        for alpha in pool.iter().take(10) {
            for n in 0..=5 {
                let sct_count = count_sct(alpha, n, FixedSide::Inner, CAP)?;
                let words = TypeWord::all_of_length(n);
                for w in &words {
                    let octs = list_oct(alpha, w, CAP)?;
                    tally.check(octs.len() as u128 == sct_count, || {
                        format!("|OCT^{w}({alpha},.)| = {} but |SCT^{n}(./{alpha})| = {sct_count}", octs.len())
                    });
                    let diagrams = octs.iter().map(symmetric_diagram).collect::<Result<Vec<_>>>()?;
                    for w2 in &words {
                        let mut seen = HashSet::new();
                        for (oct, g) in octs.iter().zip(&diagrams) {
                            let mut path = w2.0.clone();
                            path.extend(w2.reverse_flipped().0);
                            let mut shapes = g.along(&TypeWord(path))?;
                            shapes.truncate(n + 1);
                            let image = Oct::new(shapes)?;
                            if w2 == &words[0] || w2 == w {
                                let direct = retype_oct(oct, w2, RetypeMode::FromStart)?;
                                tally.check(direct == image, || format!("retype of {oct:?} to {w2} disagrees"));
                            }
                            let back = retype_oct(&image, w, RetypeMode::FromStart)?;
                            tally.check(image.type_word() == *w2 && image.start() == alpha && back == *oct, || {
                                format!("retype {w} -> {w2} -> {w} fails on {oct:?}")
                            });
                            seen.insert(image);
                        }
                        let target = count_oct(alpha, w2, CAP)?;
                        tally.check(seen.len() == octs.len() && seen.len() as u128 == target, || {
                            format!("retype {w} -> {w2} at {alpha} is not a bijection")
                        });
                    }
                }
            }
        }
    }
    let cases = tally.cases;
    tally.finish(format!("{cases} checks, (d,L) in {{(3,2),(3,3)}}, 10 sampled alpha each (seed {seed}), n<=5"))
}

fn pairwise_sums() -> Result<Check> {
    let mut tally = Tally::default();
    for (d, l) in SMALL_PERIODS {
        let p = period(d, l);
        for alpha in shapes_in_box(p, -1, 2) {
            for m in 0..=3 {
                for n in 0..=3 {
                    let words = TypeWord::all_with_counts(m, n);
                    let ends = words.iter().map(|w| walk_ends(&alpha, w, CAP)).collect::<Result<Vec<_>>>()?;
                    let betas: BTreeSet<CylindricShape> = ends.iter().flat_map(|e| e.keys().cloned()).collect();
                    let alpha_down = walk_ends(&alpha, &TypeWord(vec![Sign::Minus; n]), CAP)?;
                    let alpha_up = walk_ends(&alpha, &TypeWord::all_plus(m), CAP)?;
                    for beta in &betas {
                        let beta_down = walk_ends(beta, &TypeWord(vec![Sign::Minus; m]), CAP)?;
                        let beta_up = walk_ends(beta, &TypeWord::all_plus(n), CAP)?;
                        let below = dot(&alpha_down, &beta_down);
                        let above = dot(&alpha_up, &beta_up);
                        tally.check(below == above, || format!("sums differ for {alpha}, {beta}: {below} vs {above}"));
                        for (w, e) in words.iter().zip(&ends) {
                            let c = e.get(beta).copied().unwrap_or(0);
                            tally.check(c == below, || format!("|OCT^{w}({alpha},{beta})| = {c}, sums give {below}"));
                        }
                        debug_assert_eq!(
                            count_oct_between(&alpha, beta, &words[0], CAP).ok(),
                            Some(ends[0].get(beta).copied().unwrap_or(0))
                        );
                    }
                }
            }
        }
    }
    let cases = tally.cases;
    tally.finish(format!("{cases} comparisons over (d,L) in {SMALL_PERIODS:?}, n,m<=3"))
}

fn dot(a: &HashMap<CylindricShape, u128>, b: &HashMap<CylindricShape, u128>) -> u128 {
    a.iter().map(|(k, x)| x * b.get(k).copied().unwrap_or(0)).sum()
}

fn poset_properties() -> Result<Check> {
    let mut tally = Tally::default();
    for (d, l) in SMALL_PERIODS.into_iter().chain([(4, 3), (3, 4)]) {
        let p = period(d, l);
        let up = |s: &CylindricShape| -> HashSet<CylindricShape> {
            s.addable_rows().into_iter().map(|r| s.add_cell(r).expect("addable")).collect()
        };
        let down = |s: &CylindricShape| -> HashSet<CylindricShape> {
            s.removable_rows().into_iter().map(|r| s.remove_cell(r).expect("removable")).collect()
        };
        for x in shapes_in_box(p, -2, 3) {
            let (ux, dx) = (up(&x), down(&x));
            tally.check(
                ux.len() == dx.len() && ux.len() == x.corner_count() && x.addable_rows().len() == ux.len(),
                || format!("cover counts differ at {x}"),
            );
            let mut others: HashSet<CylindricShape> = ux.iter().flat_map(&down).collect();
            others.extend(dx.iter().flat_map(&up));
            others.remove(&x);
            for y in others {
                let common_up = ux.intersection(&up(&y)).count();
                let common_down = dx.intersection(&down(&y)).count();
                tally.check(common_up == common_down && common_up <= 1, || {
                    format!("{x} and {y}: {common_up} common upper, {common_down} common lower covers")
                });
            }
        }
    }
    let cases = tally.cases;
    tally.finish(format!("{cases} checks on windows in [-2,3]"))
}

fn evacuation() -> Result<Check> {
    let mut tally = Tally::default();
    for n in 0..=8 {
        for syt in Syt::all_of_size(n) {
            let p = syt.to_sct();
            let l = p.period().l() as i64;
            let image = phi(&p.complement());
            let shapes = image.walk_rep().iter().map(|s| s.shifted(-l)).collect::<Result<Vec<_>>>()?;
            let image = Syt::from_sct(&Sct::from_walk_rep(&shapes)?)?;
            tally.check(image == syt.evacuation(), || format!("mismatch at {:?}", syt.rows()));
        }
    }
    let cases = tally.cases;
    tally.finish(format!("all {cases} SYT with n<=8 agree; checked data, not a proved theorem"))
}

/// A worked example: fixture input, shipped expected output, and the
/// function producing the output.
struct Golden {
    name: &'static str,
    input: &'static str,
    expected: &'static str,
    render: fn(&Value) -> Result<Value>,
}

macro_rules! golden {
    ($name:literal, $render:expr) => {
        Golden {
            name: $name,
            input: include_str!(concat!("../fixtures/", $name, ".input.json")),
            expected: include_str!(concat!("../fixtures/", $name, ".expected.json")),
            render: $render,
        }
    };
}

fn field<T: serde::de::DeserializeOwned>(v: &Value, key: &str) -> Result<T> {
    let raw = v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key}")))?;
    serde_json::from_value(raw.clone()).map_err(|e| Error::Parse(format!("{key}: {e}")))
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn state_strings(walk: &WalkRecord) -> Result<Vec<String>> {
    Ok(walk.vertices()?.iter().map(|v| v.to_string()).collect())
}

fn golden_skew_tableau(input: &Value) -> Result<Value> {
    let t: Sct = field(input, "tableau")?;
    Ok(json!({
        "skew_size": t.outer().skew_size(t.inner())?,
        "inner_boundary_word": t.inner().boundary_word().to_string(),
        "insertion_corners": t.inner().addable_rows(),
        "walk_rep": to_json(&t.walk_rep()),
    }))
}

fn golden_covering_maps(input: &Value) -> Result<Value> {
    let a: CylindricShape = field(input, "shape")?;
    let h = map_h(&a);
    Ok(json!({
        "f": to_json(&map_f(&a)),
        "g_of_f": to_json(&map_g(&map_f(&a))),
        "h": to_json(&h),
        "q_of_h": to_json(&map_q(&h)),
    }))
}

fn golden_internal_insertion(input: &Value) -> Result<Value> {
    let t: Sct = field(input, "tableau")?;
    let row: usize = field(input, "row")?;
    let trace = internal_insertion(&t, row)?;
    Ok(json!({
        "result": to_json(&trace.result),
        "terminal_row": trace.terminal_row,
        "bumping_path": to_json(&trace.bumping_path),
    }))
}

fn golden_walk_and_tasep(input: &Value) -> Result<Value> {
    let p: Sct = field(input, "tableau")?;
    let walk = walk_of_sct(&p);
    let tasep = walk_to_tasep(p.inner(), &walk)?;
    Ok(json!({ "simplex_walk": to_json(&walk), "tasep_states": state_strings(&tasep)? }))
}

fn golden_conjugate_tableau(input: &Value) -> Result<Value> {
    let t: Sct = field(input, "tableau")?;
    let u = map_f(t.inner()).particle_word();
    Ok(json!({
        "conjugate": to_json(&t.conjugate()),
        "simplex_walk": to_json(&walk_of_sct(&t)),
        "conjugate_walk": to_json(&walk_of_sct(&t.conjugate())),
        "tasep_start": to_json(&u),
        "reverse_complement": to_json(&u.reverse_complement()),
    }))
}

fn golden_complements(input: &Value) -> Result<Value> {
    let p: Sct = field(input, "p")?;
    let t: Sct = field(input, "t")?;
    Ok(json!({
        "p_complement": to_json(&p.complement()),
        "t_complement": to_json(&t.complement()),
        "phi_of_p_complement": to_json(&phi(&p.complement())),
    }))
}

fn golden_growth_diagram(input: &Value) -> Result<Value> {
    let t: Sct = field(input, "t")?;
    let u: Sct = field(input, "u")?;
    let oct: Oct = field(input, "oct")?;
    let word: TypeWord = field(input, "type_word")?;
    let (p, q) = crs_forward(&t, &u)?;
    Ok(json!({
        "diagram": to_json(&grow_from_tu(&t, &u)?),
        "completed_from_oct": to_json(&complete_from_path(&oct.type_word(), oct.shapes())?),
        "p": to_json(&p),
        "q": to_json(&q),
        "oct_type": oct.type_word().to_string(),
        "retyped": to_json(&retype_oct(&oct, &word, RetypeMode::FixedEnds)?),
    }))
}

fn golden_symmetric_growth(input: &Value) -> Result<Value> {
    let t: Sct = field(input, "t")?;
    Ok(json!({ "diagram": to_json(&grow_from_tu(&t, &t)?), "phi": to_json(&phi(&t)) }))
}

fn golden_reverse_walk(input: &Value) -> Result<Value> {
    let walk: WalkRecord = field(input, "walk")?;
    let back = reverse_walk_bijection(&walk)?;
    let Vertex::Point(x) = walk.start() else {
        return Err(Error::InvalidWalk("expected a simplex walk".into()));
    };
    let alpha = crate::lattice::base_shape(x);
    let t = phi_inverse(&Sct::from_walk_rep(crate::lattice::oct_of_walk(&alpha, &walk)?.shapes())?);
    Ok(json!({
        "reversed_walk": to_json(&back),
        "tableau": to_json(&t),
        "tasep_states": state_strings(&walk_to_tasep_ending(&back)?)?,
    }))
}

fn golden_retype(input: &Value) -> Result<Value> {
    let oct: Oct = field(input, "oct")?;
    let word: TypeWord = field(input, "type_word")?;
    let t: Sct = field(input, "t")?;
    Ok(json!({
        "diagram": to_json(&symmetric_diagram(&oct)?),
        "oct_walk": to_json(&walk_of_oct(&oct)),
        "retyped": to_json(&retype_oct(&oct, &word, RetypeMode::FromStart)?),
        "phi": to_json(&phi(&t)),
    }))
}

fn goldens() -> Vec<Golden> {
    vec![
        golden!("skew_tableau", golden_skew_tableau),
        golden!("covering_maps", golden_covering_maps),
        golden!("internal_insertion", golden_internal_insertion),
        golden!("walk_and_tasep", golden_walk_and_tasep),
        golden!("conjugate_tableau", golden_conjugate_tableau),
        golden!("complements", golden_complements),
        golden!("growth_diagram", golden_growth_diagram),
        golden!("symmetric_growth", golden_symmetric_growth),
        golden!("reverse_walk", golden_reverse_walk),
        golden!("retype", golden_retype),
    ]
}

/// Render a JSON value the way the fixtures are stored.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

/// Recompute the expected file of one fixture from its input.
pub fn render_golden(name: &str) -> Option<Result<String>> {
    let g = goldens().into_iter().find(|g| g.name == name)?;
    Some(
        serde_json::from_str(g.input)
            .map_err(|e| Error::Parse(e.to_string()))
            .and_then(|input| (g.render)(&input))
            .map(|v| canonical_json(&v)),
    )
}

fn golden_files() -> Result<Check> {
    let mut tally = Tally::default();
    let all = goldens();
    for g in &all {
        match render_golden(g.name).expect("listed") {
            Ok(out) => tally.check(out == g.expected, || format!("{} differs from its golden file", g.name)),
            Err(e) => tally.check(false, || format!("{}: {e}", g.name)),
        }
    }
    let names: Vec<&str> = all.iter().map(|g| g.name).collect();
    tally.finish(format!("{} fixtures byte-exact ({})", names.len(), names.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn goldens_reproduce() {
        for g in goldens() {
            let out = render_golden(g.name).unwrap().unwrap();
            assert_eq!(out, g.expected, "{}", g.name);
        }
    }

    #[test]
    fn unknown_criterion() {
        assert!(run(0, DEFAULT_SEED).is_none());
        assert!(run(CRITERIA + 1, DEFAULT_SEED).is_none());
    }
}
