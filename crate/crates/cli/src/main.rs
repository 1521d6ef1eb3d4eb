use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cliffordspec::clifford::default_rep;
use cliffordspec::config::{load_path, Loaded};
use cliffordspec::gallery::{self, EXAMPLES};
use cliffordspec::invariants::{self, IndexReport};
use cliffordspec::polynomial::{char_poly, reduced_char_poly, MultiPoly};
use cliffordspec::sampler::{self, Axis, GridSpec, Indicator, SpectrumGrid, SpectrumMesh};
use cliffordspec::variance;
use cliffordspec::{AnyTuple, Error, HermitianTuple, Scalar};

#[derive(Parser)]
#[command(name = "cliffordspec", version, about = "Clifford spectra of Hermitian matrix tuples")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "CLIFFORDSPEC_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// JSON tuple config.
    #[arg(long, conflicts_with = "example")]
    config: Option<PathBuf>,

    /// Gallery example name (see list-examples).
    #[arg(long)]
    example: Option<String>,

    /// Example parameter as key=value; repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List gallery examples and their parameters.
    ListExamples,
    /// Characteristic polynomial in canonical text form.
    Charpoly {
        #[command(flatten)]
        input: Input,
        /// Determinant of the reduced localizer (d = 4).
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Index at one or more points (coordinates grouped by d).
    Index {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        at: Vec<f64>,
        #[arg(long, value_enum, default_value_t = IndexKindArg::Half)]
        kind: IndexKindArg,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Sample an indicator on a grid and write CSV.
    Grid(GridArgs),
    /// Sample on a 3D grid and write the contour as OBJ.
    Mesh(GridArgs),
    /// Contour a 3D slice of a 4-tuple (requires one --fix) as OBJ.
    Slice(GridArgs),
    /// Variance certificate from a near-kernel vector of the localizer.
    Variance {
        #[command(flatten)]
        input: Input,
        #[arg(long, num_args = 1.., allow_negative_numbers = true, required = true)]
        at: Vec<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexKindArg {
    Half,
    Arch,
    Graded,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    input: Input,
    /// Range applied to every sampled coordinate.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true, default_values_t = [-2.0, 2.0])]
    range: Vec<f64>,
    /// Nodes per sampled axis.
    #[arg(long, default_value_t = 41)]
    res: usize,
    #[arg(long, default_value = "sigma-min")]
    indicator: String,
    /// Contour level: a number, or "default" / "covering" for sigma-min.
    #[arg(long)]
    level: Option<String>,
    /// Fixed coordinate as axis=value (1-based axis); repeatable.
    #[arg(long, value_name = "AXIS=VALUE")]
    fix: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Config(_)
            | Error::Parse(_)
            | Error::UnknownExample(_)
            | Error::Io { .. }
            | Error::NotHermitian { .. }
            | Error::Dimension(_)
            | Error::Contract(_) => 2,
            Error::SingularAtTolerance { .. } => 4,
            Error::Symmetry { .. } => 5,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn load(input: &Input) -> CliResult<Loaded> {
    match (&input.config, &input.example) {
        (Some(path), _) => {
            if !input.params.is_empty() {
                return Err(fail(2, "--param only applies to --example"));
            }
            Ok(load_path(path)?)
        }
        (None, Some(name)) => {
            let mut params = BTreeMap::new();
            for p in &input.params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| fail(2, format!("parameter '{p}' is not key=value")))?;
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
            let ex = gallery::build(name, &params).map_err(|e| match e {
                Error::UnknownExample(n) => fail(2, format!("unknown example '{n}'")),
                Error::Config(m) => fail(2, format!("config error: {m}")),
                other => other.into(),
            })?;
            Ok(Loaded {
                tuple: ex.tuple.clone(),
                example: Some(ex),
            })
        }
        (None, None) => Err(fail(2, "give --config FILE or --example NAME")),
    }
}

fn input_label(input: &Input) -> String {
    match (&input.config, &input.example) {
        (Some(p), _) => p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "tuple".into()),
        (None, Some(n)) => n.clone(),
        _ => "tuple".into(),
    }
}

fn points(at: &[f64], d: usize) -> CliResult<Vec<Vec<f64>>> {
    if at.is_empty() || !at.len().is_multiple_of(d) {
        return Err(fail(2, format!("--at needs a multiple of d={d} coordinates, got {}", at.len())));
    }
    Ok(at.chunks(d).map(<[f64]>::to_vec).collect())
}

fn fmt_point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|v| format!("{v}")).collect();
    format!("({})", parts.join(", "))
}

fn write_out(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| {
            Error::Io {
                path: p.to_path_buf(),
                source,
            }
            .into()
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn list_examples() -> String {
    let mut out = String::new();
    for (name, params, about) in EXAMPLES {
        let params = if params.is_empty() { "-".to_string() } else { params.replace(' ', ",") };
        writeln!(out, "{name:<20} {params:<14} {about}").unwrap();
    }
    out
}

fn charpoly_text<T: Scalar>(t: &HermitianTuple<T>, reduced: bool) -> CliResult<String> {
    let p: MultiPoly<T> = if reduced {
        if t.d() != 4 {
            return Err(fail(2, format!("--reduced needs d=4, tuple has d={}", t.d())));
        }
        reduced_char_poly(t)?
    } else {
        char_poly(t, &default_rep(t.d())?)?
    };
    Ok(p.to_text())
}

fn index_one<T: Scalar>(t: &HermitianTuple<T>, p: &[f64], kind: IndexKindArg, tol: Option<f64>) -> cliffordspec::Result<IndexReport> {
    match kind {
        IndexKindArg::Half => invariants::index(t, p, tol),
        IndexKindArg::Arch => invariants::archetypal_sign(t, p, tol),
        IndexKindArg::Graded => {
            let g = invariants::default_grading::<T>(t.n())?;
            invariants::graded_index(t, p, &g, tol)
        }
    }
}

fn run_index<T: Scalar>(t: &HermitianTuple<T>, at: &[f64], kind: IndexKindArg, tol: Option<f64>) -> CliResult<()> {
    let mut on_spectrum = false;
    for p in points(at, t.d())? {
        match index_one(t, &p, kind, tol) {
            Ok(r) => println!("lambda={} gap={:.6e} index={}", fmt_point(&p), r.gap, r.value),
            Err(Error::SingularAtTolerance { gap, tol }) => {
                println!("lambda={} gap={gap:.6e} index=on-spectrum (tol {tol:.3e})", fmt_point(&p));
                on_spectrum = true;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if on_spectrum {
        return Err(fail(4, "at least one point is on the Clifford spectrum at this tolerance"));
    }
    Ok(())
}

fn run_variance<T: Scalar>(t: &HermitianTuple<T>, at: &[f64]) -> CliResult<()> {
    let rep = default_rep(t.d())?;
    let mut violated = false;
    for p in points(at, t.d())? {
        let c = variance::certificate(t, &rep, &p)?;
        let list = |v: &[f64]| v.iter().map(|x| format!("{x:.6e}")).collect::<Vec<_>>().join(" ");
        println!("lambda={}", fmt_point(&p));
        println!("  epsilon={:.6e}", c.epsilon);
        println!("  E={}", list(&c.expectations));
        println!("  Var={}", list(&c.variances));
        println!("  lhs={:.6e} rhs={:.6e} {}", c.lhs, c.rhs, if c.holds { "HOLDS" } else { "VIOLATED" });
        violated |= !c.holds;
    }
    if violated {
        return Err(fail(6, "variance bound VIOLATED"));
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq)]
enum GridMode {
    Csv,
    Mesh,
    Slice,
}

fn grid_spec(args: &GridArgs, d: usize, mode: GridMode) -> CliResult<GridSpec> {
    let mut fixed = Vec::new();
    for f in &args.fix {
        let (axis, value) = f
            .split_once('=')
            .ok_or_else(|| fail(2, format!("--fix '{f}' is not axis=value")))?;
        let axis: usize = axis
            .trim()
            .parse()
            .map_err(|_| fail(2, format!("--fix axis '{axis}' is not a number")))?;
        if axis == 0 || axis > d {
            return Err(fail(2, format!("--fix axis {axis} outside 1..={d}")));
        }
        let value = cliffordspec::tuple::parse_float(value.trim()).map_err(|e| fail(2, e.to_string()))?;
        fixed.push((axis - 1, value));
    }
    let fixed_axes: Vec<usize> = fixed.iter().map(|f| f.0).collect();
    let axes: Vec<Axis> = (0..d)
        .filter(|c| !fixed_axes.contains(c))
        .map(|c| Axis::new(c, args.range[0], args.range[1], args.res))
        .collect();
    match mode {
        GridMode::Mesh if axes.len() != 3 => {
            return Err(fail(2, format!("mesh needs 3 sampled axes, got {} (use --fix)", axes.len())))
        }
        GridMode::Slice if d != 4 || fixed.len() != 1 => {
            return Err(fail(2, "slice needs a 4-tuple and exactly one --fix"))
        }
        _ => {}
    }
    Ok(GridSpec::new(d, axes, fixed)?)
}

fn contour_level<T: Scalar>(args: &GridArgs, t: &HermitianTuple<T>, spec: &GridSpec, ind: Indicator) -> CliResult<f64> {
    let rep = default_rep(t.d())?;
    match (args.level.as_deref(), ind) {
        (None | Some("default"), Indicator::SigmaMin) => Ok(sampler::default_sigma_level(t, &rep)?),
        (Some("covering"), Indicator::SigmaMin) => Ok(sampler::covering_sigma_level(spec)),
        (None | Some("default"), _) => Ok(0.0),
        (Some(text), _) => cliffordspec::tuple::parse_float(text).map_err(|e| fail(2, format!("--level: {e}"))),
    }
}

fn mesh_summary(grid: &SpectrumGrid, mesh: &SpectrumMesh, level: f64) -> String {
    let s = mesh.stats();
    let radii = mesh.radii();
    let rmin = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let rmax = radii.iter().copied().fold(0.0, f64::max);
    let mut out = format!(
        "nodes={} indicator={} level={level:.6e} min_value={:.6e}\nvertices={} triangles={} boundary_edges={} components={} euler={}",
        grid.values.len(),
        grid.indicator,
        grid.min_value(),
        s.vertices,
        s.triangles,
        s.boundary_edges,
        s.components,
        s.euler
    );
    if !mesh.is_empty() {
        write!(out, "\nradius_min={rmin:.6} radius_max={rmax:.6}").unwrap();
    }
    out
}

fn run_grid<T: Scalar>(t: &HermitianTuple<T>, args: &GridArgs, mode: GridMode, label: &str) -> CliResult<()> {
    let ind: Indicator = args.indicator.parse()?;
    let spec = grid_spec(args, t.d(), mode)?;
    let rep = default_rep(t.d())?;
    let grid = match mode {
        GridMode::Slice => sampler::slice_4d(t, &rep, &spec, ind)?,
        _ => sampler::sample(t, &rep, &spec, ind)?,
    };
    if mode == GridMode::Csv {
        let out = args.out.clone().unwrap_or_else(|| PathBuf::from(format!("{label}_{ind}.csv")));
        sampler::write_grid_csv(&grid, &out)?;
        println!("nodes={} indicator={ind} min_value={:.6e} out={}", grid.values.len(), grid.min_value(), out.display());
        return Ok(());
    }
    let level = contour_level(args, t, &spec, ind)?;
    let mesh = sampler::extract_isosurface(&grid, level)?;
    let out = args.out.clone().unwrap_or_else(|| PathBuf::from(format!("{label}_{ind}.obj")));
    sampler::write_mesh_obj(&mesh, &out)?;
    println!("{}\nout={}", mesh_summary(&grid, &mesh, level), out.display());
    Ok(())
}

macro_rules! dispatch {
    ($tuple:expr, $t:ident => $body:expr) => {
        match $tuple {
            AnyTuple::Exact($t) => $body,
            AnyTuple::Float($t) => $body,
        }
    };
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(fail(2, "--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| fail(2, format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::ListExamples => {
            print!("{}", list_examples());
            Ok(())
        }
        Command::Charpoly { input, reduced, out } => {
            let loaded = load(&input)?;
            let text = dispatch!(&loaded.tuple, t => charpoly_text(t, reduced))?;
            write_out(out.as_deref(), &text)
        }
        Command::Index { input, at, kind, tol } => {
            let loaded = load(&input)?;
            dispatch!(&loaded.tuple, t => run_index(t, &at, kind, tol))
        }
        Command::Variance { input, at } => {
            let loaded = load(&input)?;
            dispatch!(&loaded.tuple, t => run_variance(t, &at))
        }
        Command::Grid(args) => grid_command(args, GridMode::Csv),
        Command::Mesh(args) => grid_command(args, GridMode::Mesh),
        Command::Slice(args) => grid_command(args, GridMode::Slice),
    }
}

fn grid_command(args: GridArgs, mode: GridMode) -> CliResult<()> {
    let loaded = load(&args.input)?;
    let label = input_label(&args.input);
    dispatch!(&loaded.tuple, t => run_grid(t, &args, mode, &label))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
