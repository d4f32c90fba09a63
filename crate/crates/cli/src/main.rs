//! `cylwalk`: JSON in on stdin, JSON out on stdout.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cylwalk::enumeration::{a_series, d4_coefficient};
use cylwalk::growth::{
    backward_local, complete_from_path, grow_from_pq, grow_from_tu, retype_oct, symmetric_diagram, GrowthDiagram,
    RetypeMode,
};
use cylwalk::insertion::{crs_forward_with_iterates, crs_inverse, phi, phi_inverse, reverse_walk_bijection};
use cylwalk::lattice::{
    count_walks, map_f, map_g, map_h, map_q, oct_of_walk, state_cap, walk_of_oct, walk_of_sct, walk_to_tasep,
    walk_to_tasep_ending, Cover, ModelKind, SimplexPoint, TasepState, Vertex, WalkRecord,
};
use cylwalk::verify::{self, CriterionReport, CRITERIA, DEFAULT_SEED};
use cylwalk::{CylindricShape, Error, Oct, Period, Sct, TypeWord};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cylwalk", version, about = "Cylindric tableaux, lattice walks and the cylindric RS correspondence")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Read input from this file instead of standard input.
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,

    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a shape or derive a related one.
    Shape(ShapeArgs),
    /// Apply one of the maps f, g, h, q.
    Map(MapArgs),
    /// Convert and transport walks.
    Walk(WalkArgs),
    /// CRS(T, U) for input {"t": .., "u": ..}.
    Crs {
        /// Also print the insertion iterates P_0, .., P_m.
        #[arg(long)]
        iterates: bool,
    },
    /// Inverse CRS for input {"p": .., "q": ..}.
    CrsInv,
    /// The bijection Φ on one tableau.
    Phi,
    /// The inverse of Φ on one tableau.
    PhiInv,
    /// Turn a forward simplex walk from x into one ending at x.
    ReverseWalk,
    /// Growth diagram from {"t","u"}, or from {"p","q"} with --backward.
    Grow {
        #[arg(long)]
        backward: bool,
    },
    /// Complete the diagram along the path of an oscillating tableau.
    Complete {
        /// Use the palindromic path, giving the symmetric diagram.
        #[arg(long)]
        symmetric: bool,
    },
    /// Re-read an oscillating tableau along another type word.
    Retype(RetypeArgs),
    /// Check every edge and square of a growth diagram.
    ValidateDiagram,
    /// Count walks or tableaux.
    Count(CountArgs),
    /// Draw a random tableau or oscillating tableau.
    Sample(SampleArgs),
    /// Run acceptance criteria and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Args)]
#[group(multiple = false)]
struct ShapeArgs {
    #[arg(long)]
    validate: bool,
    #[arg(long)]
    conjugate: bool,
    #[arg(long)]
    complement: bool,
    /// Print size, boundary word and corner rows.
    #[arg(long)]
    info: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MapArgs {
    #[arg(long)]
    f: bool,
    #[arg(long)]
    g: bool,
    #[arg(long)]
    h: bool,
    #[arg(long)]
    q: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum WalkAction {
    /// List the vertices of a walk.
    Vertices,
    /// Simplex walk of a tableau or oscillating tableau.
    OfTableau,
    /// Oscillating tableau of a simplex walk; needs --alpha.
    ToOct,
    /// TASEP lift starting at the particle word of the start.
    Tasep,
    /// TASEP lift ending at the particle word of the end.
    TasepEnd,
    /// Image of a walk under --cover.
    Project,
    /// Lift of a walk along --cover from --start.
    Lift,
    /// The walk traversed backwards.
    Reverse,
}

#[derive(Args)]
struct WalkArgs {
    #[arg(value_enum, default_value = "vertices")]
    action: WalkAction,
    /// One of f, g, h, q, gf (any case).
    #[arg(long)]
    cover: Option<String>,
    /// Start vertex (JSON) for lifting.
    #[arg(long)]
    start: Option<String>,
    /// Start shape (JSON) for to-oct and tasep.
    #[arg(long)]
    alpha: Option<String>,
}

#[derive(Args)]
struct RetypeArgs {
    /// The new type word, over '+' and '-'.
    #[arg(long = "to", allow_hyphen_values = true)]
    to: String,
    /// Keep only the start shape fixed.
    #[arg(long)]
    from_start: bool,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long = "L")]
    l: Option<usize>,
    /// Start vertex as JSON (a shape for the shape model).
    #[arg(long, alias = "start")]
    shape: Option<String>,
    /// Number of forward steps.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    type_word: Option<String>,
    /// Start at the corner [0^d], C or its images.
    #[arg(long)]
    from_corner: bool,
    /// Use the closed form (d = 3 or 4, from the corner, forward steps).
    #[arg(long)]
    formula: bool,
    /// Cap on expanded states; defaults to CYLWALK_STATE_CAP or 10^7.
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Shapes,
    Simplex,
    Tasep,
    Necklace,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Shapes => ModelKind::Shapes,
            ModelArg::Simplex => ModelKind::Simplex,
            ModelArg::Tasep => ModelKind::Tasep,
            ModelArg::Necklace => ModelKind::Necklace,
        }
    }
}

#[derive(Args)]
struct SampleArgs {
    /// Inner (or start) shape as JSON.
    #[arg(long)]
    shape: String,
    /// Size of a standard tableau.
    #[arg(long, conflicts_with = "type_word")]
    n: Option<usize>,
    /// Type of an oscillating tableau.
    #[arg(long, allow_hyphen_values = true)]
    type_word: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// `all` or a criterion number.
    #[arg(default_value = "all")]
    suite: String,
    /// Worker threads; the report does not depend on it.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// Failure of a verb: a domain error (exit 1) or a usage error (exit 2).
enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Output, Failure>;

enum Output {
    Json(Value),
    Text(String, bool),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let (text, ok) = match out {
                Output::Json(v) => (render(&v, cli.pretty), true),
                Output::Text(s, ok) => (s, ok),
            };
            let _ = stdout.write_all(text.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            let body = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            eprintln!("{body}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s =
        if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }.expect("values serialize");
    s.push('\n');
    s
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Domain(Error::Parse(e.to_string())))
}

fn read_input(cli: &Cli) -> Result<String, Failure> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn input<T: DeserializeOwned>(cli: &Cli) -> Result<T, Failure> {
    parse(&read_input(cli)?)
}

fn parse_vertex(model: ModelKind, text: &str) -> Result<Vertex, Failure> {
    Ok(match model {
        ModelKind::Shapes => Vertex::Shape(parse(text)?),
        ModelKind::Simplex => Vertex::Point(parse(text)?),
        ModelKind::Tasep => Vertex::State(parse(text)?),
        ModelKind::Necklace => Vertex::Necklace(parse(text)?),
    })
}

fn parse_word(text: &str) -> Result<TypeWord, Failure> {
    text.parse().map_err(Failure::Domain)
}

#[derive(Deserialize)]
struct TuPair {
    t: Sct,
    u: Sct,
}

#[derive(Deserialize)]
struct PqPair {
    p: Sct,
    q: Sct,
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Shape(args) => shape(cli, args),
        Command::Map(args) => map(cli, args),
        Command::Walk(args) => walk(cli, args),
        Command::Crs { iterates } => {
            let TuPair { t, u } = input(cli)?;
            let (p, q, steps) = crs_forward_with_iterates(&t, &u)?;
            let mut out = json!({ "p": to_json(&p), "q": to_json(&q) });
            if *iterates {
                out["iterates"] = to_json(&steps);
            }
            Ok(Output::Json(out))
        }
        Command::CrsInv => {
            let PqPair { p, q } = input(cli)?;
            let (t, u) = crs_inverse(&p, &q)?;
            Ok(Output::Json(json!({ "t": to_json(&t), "u": to_json(&u) })))
        }
        Command::Phi => Ok(Output::Json(to_json(&phi(&input(cli)?)))),
        Command::PhiInv => Ok(Output::Json(to_json(&phi_inverse(&input(cli)?)))),
        Command::ReverseWalk => Ok(Output::Json(to_json(&reverse_walk_bijection(&input(cli)?)?))),
        Command::Grow { backward } => {
            let g = if *backward {
                let PqPair { p, q } = input(cli)?;
                grow_from_pq(&p, &q)?
            } else {
                let TuPair { t, u } = input(cli)?;
                grow_from_tu(&t, &u)?
            };
            Ok(Output::Json(to_json(&g)))
        }
        Command::Complete { symmetric } => {
            let oct: Oct = input(cli)?;
            let g =
                if *symmetric { symmetric_diagram(&oct)? } else { complete_from_path(&oct.type_word(), oct.shapes())? };
            Ok(Output::Json(to_json(&g)))
        }
        Command::Retype(args) => {
            let oct: Oct = input(cli)?;
            let mode = if args.from_start { RetypeMode::FromStart } else { RetypeMode::FixedEnds };
            Ok(Output::Json(to_json(&retype_oct(&oct, &parse_word(&args.to)?, mode)?)))
        }
        Command::ValidateDiagram => {
            let g: GrowthDiagram = input(cli)?;
            g.validate()?;
            for x in 1..=g.m() {
                for y in 1..=g.n() {
                    backward_local(g.at(x - 1, y), g.at(x, y - 1), g.at(x, y))?;
                }
            }
            Ok(Output::Json(json!({ "ok": true })))
        }
        Command::Count(args) => count(args),
        Command::Sample(args) => {
            let alpha: CylindricShape = parse(&args.shape)?;
            match (&args.type_word, args.n) {
                (Some(w), _) => Ok(Output::Json(to_json(&Oct::random(&alpha, &parse_word(w)?, cli.seed)))),
                (None, Some(n)) => Ok(Output::Json(to_json(&Sct::random(&alpha, n, cli.seed)))),
                (None, None) => Err(Failure::Usage("sample needs --n or --type-word".into())),
            }
        }
        Command::Verify(args) => verify_suite(cli.seed, args),
    }
}

#[derive(Deserialize)]
struct RawShape {
    d: usize,
    #[serde(rename = "L")]
    l: usize,
    rows: Vec<i64>,
}

fn shape(cli: &Cli, args: &ShapeArgs) -> Outcome {
    // Parsed field by field so that window violations keep their own error kind.
    let raw: RawShape = input(cli)?;
    let s = CylindricShape::from_window(raw.d, raw.l, raw.rows)?;
    let out = if args.conjugate {
        to_json(&s.conjugate())
    } else if args.complement {
        to_json(&s.complement())
    } else if args.info {
        json!({
            "shape": to_json(&s),
            "size": s.size(),
            "boundary_word": s.boundary_word().to_string(),
            "addable_rows": s.addable_rows(),
            "removable_rows": s.removable_rows(),
        })
    } else {
        to_json(&s)
    };
    Ok(Output::Json(out))
}

fn map(cli: &Cli, args: &MapArgs) -> Outcome {
    let text = read_input(cli)?;
    let out = if args.f {
        to_json(&map_f(&parse(&text)?))
    } else if args.h {
        to_json(&map_h(&parse(&text)?))
    } else if args.g {
        let x: SimplexPoint = parse(&text)?;
        to_json(&map_g(&x))
    } else {
        let u: TasepState = parse(&text)?;
        to_json(&map_q(&u))
    };
    Ok(Output::Json(out))
}

fn cover(args: &WalkArgs) -> Result<Cover, Failure> {
    let name = args.cover.as_deref().ok_or_else(|| Failure::Usage("--cover is required".into()))?;
    name.parse().map_err(Failure::Domain)
}

fn walk(cli: &Cli, args: &WalkArgs) -> Outcome {
    let text = read_input(cli)?;
    let alpha = || -> Result<CylindricShape, Failure> {
        parse(args.alpha.as_deref().ok_or_else(|| Failure::Usage("--alpha is required".into()))?)
    };
    let out = match args.action {
        WalkAction::Vertices => {
            let w: WalkRecord = parse(&text)?;
            to_json(&w.vertices()?)
        }
        WalkAction::OfTableau => {
            let v: Value = parse(&text)?;
            if v.get("shapes").is_some() {
                to_json(&walk_of_oct(&parse::<Oct>(&text)?))
            } else {
                to_json(&walk_of_sct(&parse::<Sct>(&text)?))
            }
        }
        WalkAction::ToOct => to_json(&oct_of_walk(&alpha()?, &parse(&text)?)?),
        WalkAction::Tasep => {
            let w: WalkRecord = parse(&text)?;
            let a = match &args.alpha {
                Some(_) => alpha()?,
                None => match w.start() {
                    Vertex::Point(x) => cylwalk::lattice::base_shape(x),
                    other => return Err(Error::InvalidWalk(format!("expected a simplex walk, got {other}")).into()),
                },
            };
            to_json(&walk_to_tasep(&a, &w)?)
        }
        WalkAction::TasepEnd => to_json(&walk_to_tasep_ending(&parse(&text)?)?),
        WalkAction::Project => to_json(&cover(args)?.project(&parse(&text)?)?),
        WalkAction::Lift => {
            let c = cover(args)?;
            let start = args.start.as_deref().ok_or_else(|| Failure::Usage("--start is required".into()))?;
            let start = parse_vertex(c.domain(), start)?;
            to_json(&c.lift(&start, &parse(&text)?)?)
        }
        WalkAction::Reverse => to_json(&parse::<WalkRecord>(&text)?.reversed()?),
    };
    Ok(Output::Json(out))
}

fn count(args: &CountArgs) -> Outcome {
    let model = ModelKind::from(args.model);
    let word = match (&args.type_word, args.n) {
        (Some(w), None) => parse_word(w)?,
        (None, Some(n)) => TypeWord::all_plus(n),
        (Some(_), Some(_)) => return Err(Failure::Usage("give either --n or --type-word".into())),
        (None, None) => return Err(Failure::Usage("count needs --n or --type-word".into())),
    };
    let start = match (&args.shape, args.from_corner) {
        (Some(s), false) => parse_vertex(model, s)?,
        (None, true) => {
            let (d, l) = match (args.d, args.l) {
                (Some(d), Some(l)) => (d, l),
                _ => return Err(Failure::Usage("--from-corner needs --d and --L".into())),
            };
            let corner = SimplexPoint::corner(Period::new(d, l)?);
            match model {
                ModelKind::Shapes => Vertex::Shape(CylindricShape::empty(Period::new(d, l)?)),
                ModelKind::Simplex => Vertex::Point(corner),
                ModelKind::Tasep => Vertex::State(corner.particle_word()),
                ModelKind::Necklace => Vertex::Necklace(map_g(&corner)),
            }
        }
        _ => return Err(Failure::Usage("give exactly one of --shape and --from-corner".into())),
    };
    if let (Some(d), Some(l)) = (args.d, args.l) {
        let p = match &start {
            Vertex::Shape(s) => s.period(),
            Vertex::Point(x) => x.period(),
            Vertex::State(u) => u.period(),
            Vertex::Necklace(n) => n.period(),
        };
        if p != Period::new(d, l)? {
            return Err(Error::PeriodMismatch(Period::new(d, l)?, p).into());
        }
    }
    let n = if args.formula {
        let d = args.d.ok_or_else(|| Failure::Usage("--formula needs --d and --L".into()))?;
        let l = args.l.ok_or_else(|| Failure::Usage("--formula needs --d and --L".into()))?;
        if !args.from_corner || word.minuses() > 0 {
            return Err(Failure::Usage("--formula counts forward walks from the corner".into()));
        }
        match d {
            3 => a_series(word.len(), l),
            4 => d4_coefficient(word.len(), l)?,
            _ => return Err(Failure::Usage("closed forms exist for d = 3 and d = 4 only".into())),
        }
    } else {
        count_walks(&start, &word, args.cap.unwrap_or_else(state_cap))?
    };
    Ok(Output::Json(json!({ "count": n })))
}

fn verify_suite(seed: u64, args: &VerifyArgs) -> Outcome {
    let ids: Vec<usize> = if args.suite == "all" {
        (1..=CRITERIA).collect()
    } else {
        match args.suite.parse::<usize>() {
            Ok(id) if (1..=CRITERIA).contains(&id) => vec![id],
            _ => return Err(Failure::Usage(format!("unknown suite {:?}; use all or 1..={CRITERIA}", args.suite))),
        }
    };
    let jobs = args
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
        .clamp(1, ids.len());
    let next = AtomicUsize::new(0);
    let done: Mutex<Vec<CriterionReport>> = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                let Some(&id) = ids.get(k) else { break };
                let report = verify::run(id, seed).expect("id in range");
                done.lock().expect("no worker panics while holding the lock").push(report);
            });
        }
    });
    let mut reports = done.into_inner().expect("workers finished");
    reports.sort_by_key(|r| r.id);
    let ok = reports.iter().all(|r| r.passed);
    let text = if args.json {
        render(&to_json(&reports), false)
    } else {
        let mut t: String = reports.iter().map(|r| format!("{r}\n")).collect();
        let passed = reports.iter().filter(|r| r.passed).count();
        t.push_str(&format!("{passed}/{} criteria passed (seed {seed})\n", reports.len()));
        t
    };
    Ok(Output::Text(text, ok))
}
