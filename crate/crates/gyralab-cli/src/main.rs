//! gyralab: exact loop-model enumeration, scattering ground states, gyration
//! orbits, and verification reports from the command line.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gyralab_core::correspondence::{
    hexagon_tilings_weighted, k_factor, k_triangoloid, macmahon_count, psi_lambda,
    psi_prime_lambda, verify_df, verify_ordinary_rs, verify_t0_fpl, verify_theorem_main,
    EnumerationVector, KForm,
};
use gyralab_core::domains::{
    build_domain, symmetry_class_domain, triangoloid as triangoloid_spec, DihedralDomain,
    DomainSpec, SymmetryClass,
};
use gyralab_core::fplenum::{
    config_svg, enumerate_all, enumerate_sector, is_b, refinement_histogram,
    refinement_position, Sector,
};
use gyralab_core::gyration::{check_gyration_suite, Gyration};
use gyralab_core::linkpat::{enumerate_patterns, PatternKind};
use gyralab_core::report::Report;
use gyralab_core::tlops::{check_tl_relations, ground_state_scattering};

#[derive(Parser)]
#[command(name = "gyralab", version, about = "exact loop-model laboratory")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output file (default: stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Parallelism bound (also via GYRALAB_JOBS); computations are exact and
    /// deterministic regardless.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Args)]
struct DomainArgs {
    /// n x n square domain.
    #[arg(long)]
    square: Option<usize>,
    /// Half-turn-symmetric domain of the given side.
    #[arg(long)]
    htasm: Option<usize>,
    /// Triangoloid domain parameters alpha beta gamma.
    #[arg(long, num_args = 3, value_names = ["A", "B", "G"])]
    triangoloid: Option<Vec<usize>>,
    /// Domain spec as a JSON file.
    #[arg(long)]
    domain: Option<PathBuf>,
}

impl DomainArgs {
    fn spec(&self) -> Result<DomainSpec> {
        let picks = [
            self.square.is_some(),
            self.htasm.is_some(),
            self.triangoloid.is_some(),
            self.domain.is_some(),
        ];
        if picks.iter().filter(|&&b| b).count() != 1 {
            bail!("give exactly one of --square, --htasm, --triangoloid, --domain");
        }
        if let Some(n) = self.square {
            if n == 0 {
                bail!("square size must be positive");
            }
            return Ok(DomainSpec::first(n, n, [0, 0, 0, 0]));
        }
        if let Some(n) = self.htasm {
            return symmetry_class_domain(SymmetryClass::Htasm, n)
                .map_err(|e| anyhow!("{e}"));
        }
        if let Some(t) = &self.triangoloid {
            return triangoloid_spec(t[0], t[1], t[2]).map_err(|e| anyhow!("{e}"));
        }
        let path = self.domain.as_ref().unwrap();
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let spec: DomainSpec = serde_json::from_str(&text).context("parsing domain spec")?;
        Ok(spec)
    }

    fn build(&self) -> Result<DihedralDomain> {
        build_domain(&self.spec()?).map_err(|e| anyhow!("{e}"))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Plain,
    PuncturedEven,
    PuncturedOdd,
}

impl From<KindArg> for PatternKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Plain => PatternKind::Plain,
            KindArg::PuncturedEven => PatternKind::PuncturedEven,
            KindArg::PuncturedOdd => PatternKind::PuncturedOdd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SectorArg {
    Plus,
    Minus,
    B,
    W,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate a link-pattern space.
    Patterns {
        #[arg(long, value_enum, default_value_t = KindArg::Plain)]
        kind: KindArg,
        /// Number of boundary points.
        #[arg(short)]
        n: usize,
    },
    /// Scattering-equation ground state on a pattern space.
    GroundState {
        #[arg(long, value_enum, default_value_t = KindArg::Plain)]
        kind: KindArg,
        #[arg(short)]
        n: usize,
        /// Reference site of the scattering equation.
        #[arg(long, default_value_t = 1)]
        site: usize,
    },
    /// Enumerate loop configurations of a domain.
    EnumerateFpl {
        #[command(flatten)]
        dom: DomainArgs,
        #[arg(long, value_enum, default_value_t = SectorArg::All)]
        sector: SectorArg,
        /// Also print the refinement-position histogram.
        #[arg(long)]
        histogram: bool,
    },
    /// Polynomial enumeration vector of a domain.
    Psi {
        #[command(flatten)]
        dom: DomainArgs,
        /// Use the ordinary (position-1) map over the plus sector.
        #[arg(long)]
        ordinary: bool,
    },
    /// Proportionality factor against the minimal scattering solution.
    Kfactor {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Triangoloid K-polynomial, determinant and closed forms.
    Triangoloid { alpha: usize, beta: usize, gamma: usize },
    /// Weighted rhombus tilings of the (alpha, beta, gamma) hexagon.
    Tilings { alpha: usize, beta: usize, gamma: usize },
    /// Gyration orbit trace of one configuration.
    Orbit {
        #[command(flatten)]
        dom: DomainArgs,
        /// Index of the starting configuration in enumeration order.
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Run verification checks; exit 1 on any failure.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Slice, rotation, and scattering identities of the refined theorem.
    Main {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Symmetrized equality of the two enumeration vectors.
    Df {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Unrefined correspondence at t = 1.
    Rs {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Low-order reduction to the trimmed domain.
    T0 {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Algebra relations on a pattern space.
    TlRelations {
        #[arg(long, value_enum, default_value_t = KindArg::Plain)]
        kind: KindArg,
        #[arg(short)]
        n: usize,
    },
    /// Full gyration suite on a domain.
    Gyration {
        #[command(flatten)]
        dom: DomainArgs,
    },
    /// Everything applicable to the given domain.
    All {
        #[command(flatten)]
        dom: DomainArgs,
    },
}

fn poly_string(p: &gyralab_core::exactmath::Poly) -> String {
    let cs = p.coeffs();
    if cs.is_empty() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, c) in cs.iter().enumerate() {
        if c == &num_bigint_zero() {
            continue;
        }
        let t = match k {
            0 => c.to_string(),
            1 if c.to_string() == "1" => "t".into(),
            1 => format!("{c}*t"),
            _ if c.to_string() == "1" => format!("t^{k}"),
            _ => format!("{c}*t^{k}"),
        };
        terms.push(t);
    }
    terms.join(" + ")
}

fn num_bigint_zero() -> num_bigint::BigInt {
    num_bigint::BigInt::from(0)
}

fn emit(cli_out: &Option<PathBuf>, text: &str) -> Result<()> {
    match cli_out {
        None => {
            let mut stdout = std::io::stdout();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
    }
    Ok(())
}

fn vector_output(v: &EnumerationVector, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let comps: Vec<_> = v
                .space
                .patterns
                .iter()
                .zip(&v.components)
                .map(|(p, c)| {
                    json!({
                        "pattern": p.to_string(),
                        "poly": poly_string(c),
                        "coeffs": c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let slices: Vec<Vec<String>> = (1..=v.n_slices())
                .map(|i| v.slice(i).iter().map(|x| x.to_string()).collect())
                .collect();
            Ok(serde_json::to_string_pretty(&json!({
                "domain": v.spec.name(),
                "components": comps,
                "slices": slices,
                "sym": poly_string(&v.sym()),
            }))?)
        }
        Format::Csv => {
            let mut s = String::from("pattern,coeffs\n");
            for (p, c) in v.space.patterns.iter().zip(&v.components) {
                let cs: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
                s.push_str(&format!("\"{}\",\"{}\"\n", p, cs.join(";")));
            }
            Ok(s)
        }
        Format::Svg => bail!("svg output is only available for configurations"),
    }
}

fn report_exit(cli_out: &Option<PathBuf>, rep: &Report) -> Result<ExitCode> {
    emit(cli_out, &serde_json::to_string_pretty(rep)?)?;
    Ok(if rep.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if cli.jobs.is_none() {
        // accepted for interface stability; all computations are exact and
        // single-threaded at these sizes
        let _ = std::env::var("GYRALAB_JOBS");
    }
    match &cli.cmd {
        Cmd::Patterns { kind, n } => {
            let space =
                enumerate_patterns((*kind).into(), *n).map_err(|e| anyhow!("{e}"))?;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "kind": format!("{}", space.kind),
                    "n": n,
                    "dim": space.dim(),
                    "patterns": space.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }))?,
                Format::Csv => {
                    let mut s = String::from("index,pattern\n");
                    for (i, p) in space.patterns.iter().enumerate() {
                        s.push_str(&format!("{i},\"{p}\"\n"));
                    }
                    s
                }
                Format::Svg => bail!("svg output is only available for configurations"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::GroundState { kind, n, site } => {
            let gs = ground_state_scattering((*kind).into(), *n).map_err(|e| anyhow!("{e}"))?;
            let gs = gs.at_site(*site);
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "kind": format!("{}", gs.space.kind),
                    "n": n,
                    "site": site,
                    "components": gs.space.patterns.iter()
                        .map(|p| json!({
                            "pattern": p.to_string(),
                            "poly": poly_string(gs.coeff(p)),
                        }))
                        .collect::<Vec<_>>(),
                    "total_at_1": gs.sym().eval_one().to_string(),
                }))?,
                Format::Csv => {
                    let mut s = String::from("pattern,coeffs\n");
                    for p in &gs.space.patterns {
                        let cs: Vec<String> =
                            gs.coeff(p).coeffs().iter().map(|x| x.to_string()).collect();
                        s.push_str(&format!("\"{}\",\"{}\"\n", p, cs.join(";")));
                    }
                    s
                }
                Format::Svg => bail!("svg output is only available for configurations"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::EnumerateFpl {
            dom,
            sector,
            histogram,
        } => {
            let d = dom.build()?;
            let cfgs = match sector {
                SectorArg::Plus => enumerate_sector(&d, Sector::Plus),
                SectorArg::Minus => enumerate_sector(&d, Sector::Minus),
                SectorArg::All => enumerate_all(&d),
                SectorArg::B => enumerate_all(&d)
                    .into_iter()
                    .filter(|c| is_b(&d, c))
                    .collect(),
                SectorArg::W => enumerate_all(&d)
                    .into_iter()
                    .filter(|c| !is_b(&d, c))
                    .collect(),
            };
            match cli.format {
                Format::Svg => {
                    let first = cfgs
                        .first()
                        .ok_or_else(|| anyhow!("no configurations to draw"))?;
                    emit(&cli.out, &config_svg(&d, first))?;
                }
                Format::Json => {
                    let mut obj = json!({
                        "domain": d.spec.name(),
                        "count": cfgs.len(),
                    });
                    if *histogram {
                        obj["histogram"] = json!(refinement_histogram(&d, &cfgs));
                    }
                    emit(&cli.out, &serde_json::to_string_pretty(&obj)?)?;
                }
                Format::Csv => {
                    let mut s = String::from("index,h,sector\n");
                    for (i, c) in cfgs.iter().enumerate() {
                        let sec = match c.sector(&d) {
                            Sector::Plus => "plus",
                            Sector::Minus => "minus",
                        };
                        s.push_str(&format!("{i},{},{sec}\n", refinement_position(&d, c)));
                    }
                    emit(&cli.out, &s)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Psi { dom, ordinary } => {
            let d = dom.build()?;
            let v = if *ordinary {
                psi_prime_lambda(&d)
            } else {
                psi_lambda(&d)
            }
            .map_err(|e| anyhow!("{e}"))?;
            emit(&cli.out, &vector_output(&v, cli.format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Kfactor { dom } => {
            let d = dom.build()?;
            let k = k_factor(&d).map_err(|e| anyhow!("{e}"))?;
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&json!({
                    "domain": d.spec.name(),
                    "k": poly_string(&k),
                }))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Triangoloid { alpha, beta, gamma } => {
            let det =
                k_triangoloid(*alpha, *beta, *gamma, KForm::Determinant).map_err(|e| anyhow!("{e}"))?;
            let closed =
                k_triangoloid(*alpha, *beta, *gamma, KForm::Closed).map_err(|e| anyhow!("{e}"))?;
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&json!({
                    "alpha": alpha, "beta": beta, "gamma": gamma,
                    "determinant": poly_string(&det),
                    "closed": poly_string(&closed),
                    "agree": det == closed,
                }))?,
            )?;
            Ok(if det == closed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Cmd::Tilings { alpha, beta, gamma } => {
            if *alpha == 0 || *beta == 0 || *gamma == 0 {
                bail!("all three hexagon sides must be positive");
            }
            let w = hexagon_tilings_weighted(*alpha, *beta, *gamma);
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&json!({
                    "alpha": alpha, "beta": beta, "gamma": gamma,
                    "weighted": poly_string(&w),
                    "count": w.eval_one().to_string(),
                    "macmahon": macmahon_count(*alpha, *beta, *gamma).to_string(),
                }))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Orbit { dom, start } => {
            let d = dom.build()?;
            let cfgs = enumerate_all(&d);
            let cfg = cfgs
                .get(*start)
                .ok_or_else(|| anyhow!("start index {start} out of range (< {})", cfgs.len()))?;
            let gy = Gyration::new(&d).map_err(|e| anyhow!("{e}"))?;
            let orbit = gy.orbit(cfg);
            if cli.format == Format::Svg {
                emit(&cli.out, &config_svg(&d, cfg))?;
                return Ok(ExitCode::SUCCESS);
            }
            let trace: Vec<_> = orbit
                .iter()
                .map(|c| {
                    json!({
                        "h": refinement_position(&d, c),
                        "sector": match c.sector(&d) { Sector::Plus => "plus", Sector::Minus => "minus" },
                        "b": is_b(&d, c),
                    })
                })
                .collect();
            emit(
                &cli.out,
                &serde_json::to_string_pretty(&json!({
                    "domain": d.spec.name(),
                    "start": start,
                    "period": orbit.len(),
                    "trace": trace,
                }))?,
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { what } => {
            let rep = match what {
                VerifyCmd::Main { dom } => {
                    verify_theorem_main(&dom.build()?).map_err(|e| anyhow!("{e}"))?
                }
                VerifyCmd::Df { dom } => verify_df(&dom.build()?).map_err(|e| anyhow!("{e}"))?,
                VerifyCmd::Rs { dom } => {
                    verify_ordinary_rs(&dom.build()?).map_err(|e| anyhow!("{e}"))?
                }
                VerifyCmd::T0 { dom } => {
                    verify_t0_fpl(&dom.build()?).map_err(|e| anyhow!("{e}"))?
                }
                VerifyCmd::TlRelations { kind, n } => {
                    let space =
                        enumerate_patterns((*kind).into(), *n).map_err(|e| anyhow!("{e}"))?;
                    check_tl_relations(&space)
                }
                VerifyCmd::Gyration { dom } => {
                    check_gyration_suite(&dom.build()?).map_err(|e| anyhow!("{e}"))?
                }
                VerifyCmd::All { dom } => {
                    let d = dom.build()?;
                    let mut parts = vec![
                        verify_theorem_main(&d).map_err(|e| anyhow!("{e}"))?,
                        verify_df(&d).map_err(|e| anyhow!("{e}"))?,
                        verify_ordinary_rs(&d).map_err(|e| anyhow!("{e}"))?,
                        check_gyration_suite(&d).map_err(|e| anyhow!("{e}"))?,
                        check_tl_relations(
                            &enumerate_patterns(d.lp_kind, d.pattern_points())
                                .map_err(|e| anyhow!("{e}"))?,
                        ),
                    ];
                    if let Ok(rep) = verify_t0_fpl(&d) {
                        parts.push(rep);
                    }
                    Report::combine("all checks", parts).with_domain(d.spec.name())
                }
            };
            report_exit(&cli.out, &rep)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gyralab: {e:#}");
            ExitCode::from(2)
        }
    }
}
