//! Command line for the exact root-system toolkit.
//!
//! Exit codes: 0 success, 1 claim failures (`verify` only), 2 usage or
//! input errors.

mod catalog;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use lietheta::classify::{
    descriptor_grid, injectivity_scan, restrict_descriptor, ParameterDescriptor,
    RestrictionSetting, Series,
};
use lietheta::kappa::KappaRule;
use lietheta::ledger::{render_report, run_ledger, ReportFormat, Verdict};
use lietheta::rat::{format_rat, parse_rat, Rat};
use lietheta::roots::RootSystem;
use lietheta::weights::{compensation, ThetaMap, Weight};
use lietheta::weyl::weyl_group;

use catalog::PresetCatalog;

#[derive(Parser)]
#[command(
    name = "lietheta",
    version,
    about = "Exact-arithmetic root systems, Weyl groups, and the rank-6 to rank-2 theta-projection pipeline"
)]
struct Cli {
    /// Preset catalog file merged over the bundled one
    #[arg(long, global = true, env = "LIETHETA_PRESETS", value_name = "FILE")]
    presets: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the roots of a preset
    Roots {
        /// Preset id, e.g. E6-bourbaki
        preset: String,
        /// List every root with its squared length
        #[arg(long)]
        list: bool,
    },
    /// Compute the order of the Weyl group of a preset
    Weyl {
        preset: String,
        /// Generate only from these 1-based simple reflections, e.g. 2,3,4,5
        #[arg(long, value_delimiter = ',', value_name = "NODES")]
        generators: Option<Vec<usize>>,
    },
    /// Apply the theta projection to a rank-6 weight
    Project {
        /// Comma-separated rational coordinates, e.g. 1,0,0,0,0,1
        weight: String,
    },
    /// Compensation term of a rank-6 weight over the compact nodes
    Compensate {
        /// Comma-separated rational coordinates
        weight: String,
    },
    /// Restrict a descriptor document (JSON) to the rank-2 side
    Classify {
        /// Input file; stdin when omitted or "-"
        file: Option<PathBuf>,
        /// Scale rule for complementary descriptors
        #[arg(long, value_enum, default_value_t = KappaArg::One)]
        kappa: KappaArg,
        /// Custom rational expression in t, e.g. "t/(1-t)"; overrides --kappa
        #[arg(long, value_name = "EXPR")]
        kappa_expr: Option<String>,
    },
    /// Scan a descriptor grid for restriction-image collisions
    Scan {
        /// Series to enumerate
        #[arg(long, value_enum, value_delimiter = ',',
              default_values_t = [SeriesArg::Discrete, SeriesArg::Principal, SeriesArg::Complementary])]
        series: Vec<SeriesArg>,
        /// Weight coordinates range over 0..=bound on the support nodes
        #[arg(long, default_value_t = 1)]
        bound: u32,
        /// 1-based node indices carrying nonzero coordinates
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 6])]
        support: Vec<usize>,
        /// Refuse to enumerate families larger than this
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
    /// Evaluate the claim catalog and render the report
    Verify {
        /// Rank-6 preset the preset-dependent claims run against
        #[arg(long, default_value = "E6-bourbaki")]
        preset: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum KappaArg {
    One,
    #[value(name = "inverse-gap")]
    InverseGap,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum SeriesArg {
    Discrete,
    Principal,
    Complementary,
}

impl From<SeriesArg> for Series {
    fn from(s: SeriesArg) -> Series {
        match s {
            SeriesArg::Discrete => Series::Discrete,
            SeriesArg::Principal => Series::Principal,
            SeriesArg::Complementary => Series::Complementary,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum FormatArg {
    Json,
    Markdown,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let catalog = PresetCatalog::load(cli.presets.as_deref())?;
    match cli.command {
        Command::Roots { preset, list } => cmd_roots(&catalog, &preset, list),
        Command::Weyl { preset, generators } => cmd_weyl(&catalog, &preset, generators.as_deref()),
        Command::Project { weight } => cmd_project(&weight),
        Command::Compensate { weight } => cmd_compensate(&weight),
        Command::Classify {
            file,
            kappa,
            kappa_expr,
        } => cmd_classify(file.as_deref(), kappa, kappa_expr.as_deref()),
        Command::Scan {
            series,
            bound,
            support,
            cap,
        } => cmd_scan(&series, bound, &support, cap),
        Command::Verify { preset, format } => cmd_verify(&catalog, &preset, format),
    }
}

fn lookup<'a>(catalog: &'a PresetCatalog, id: &str) -> Result<&'a lietheta::CartanSpec> {
    catalog.get(id).ok_or_else(|| {
        anyhow!(
            "unknown preset {id:?}; available: {}",
            catalog.ids().join(", ")
        )
    })
}

fn cmd_roots(catalog: &PresetCatalog, preset: &str, list: bool) -> Result<ExitCode> {
    let spec = lookup(catalog, preset)?;
    let rs = RootSystem::build(spec.clone())?;
    println!("{} roots", rs.count());
    if list {
        for root in rs.roots() {
            let coords = root
                .coords()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            println!("({coords})  length^2 = {}", format_rat(&rs.length_sq(root)));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_weyl(
    catalog: &PresetCatalog,
    preset: &str,
    generators: Option<&[usize]>,
) -> Result<ExitCode> {
    let spec = lookup(catalog, preset)?;
    let rs = RootSystem::build(spec.clone())?;
    let group = weyl_group(&rs, generators)?;
    println!("order {}", group.order());
    Ok(ExitCode::SUCCESS)
}

fn parse_weight_arg(arg: &str) -> Result<Weight> {
    let coords = arg
        .split(',')
        .map(|part| parse_rat(part).map_err(|e| anyhow!("{e}")))
        .collect::<Result<Vec<Rat>>>()?;
    if coords.len() != 6 {
        bail!(
            "weight: expected 6 comma-separated coordinates, got {}",
            coords.len()
        );
    }
    Ok(Weight::new(lietheta::weights::LATTICE_E6, coords))
}

fn cmd_project(weight_arg: &str) -> Result<ExitCode> {
    let weight = parse_weight_arg(weight_arg)?;
    let image = ThetaMap::e6_to_sp4().project(&weight)?;
    println!("{}", serde_json::to_string_pretty(&image)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_compensate(weight_arg: &str) -> Result<ExitCode> {
    let weight = parse_weight_arg(weight_arg)?;
    let value = compensation(
        &weight,
        lietheta::classify::GroupId::E6m14.compact_indices(),
    )?;
    println!("{}", format_rat(&value));
    Ok(ExitCode::SUCCESS)
}

fn read_input(file: Option<&std::path::Path>) -> Result<String> {
    match file {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display())),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn cmd_classify(
    file: Option<&std::path::Path>,
    kappa: KappaArg,
    kappa_expr: Option<&str>,
) -> Result<ExitCode> {
    let text = read_input(file)?;
    let descriptor: ParameterDescriptor =
        serde_json::from_str(&text).context("parsing descriptor document")?;
    descriptor.validate()?;
    let rule = match kappa_expr {
        Some(expr) => KappaRule::custom(expr)?,
        None => match kappa {
            KappaArg::One => KappaRule::One,
            KappaArg::InverseGap => KappaRule::InverseGap,
        },
    };
    let result = restrict_descriptor(&descriptor, &RestrictionSetting::with_kappa(rule))?;
    println!("{}", serde_json::to_string_pretty(&result)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(series: &[SeriesArg], bound: u32, support: &[usize], cap: usize) -> Result<ExitCode> {
    let series: Vec<Series> = series.iter().copied().map(Series::from).collect();
    let per_series = (u64::from(bound) + 1)
        .checked_pow(support.len() as u32)
        .ok_or_else(|| anyhow!("grid size overflows"))?;
    let family_size = per_series.saturating_mul(series.len() as u64);
    if family_size > cap as u64 {
        bail!("grid would contain {family_size} descriptors, above the cap of {cap}; lower --bound or raise --cap");
    }
    let family = descriptor_grid(&series, bound, support)?;
    let report = injectivity_scan(&family, &RestrictionSetting::shipped())?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(catalog: &PresetCatalog, preset: &str, format: FormatArg) -> Result<ExitCode> {
    let spec = lookup(catalog, preset)?;
    let report = run_ledger(spec)?;
    let rendered = match format {
        FormatArg::Json => render_report(&report, ReportFormat::Json),
        FormatArg::Markdown => render_report(&report, ReportFormat::Markdown),
    };
    println!("{rendered}");
    let any_fail = report.records.iter().any(|r| r.verdict == Verdict::Fail);
    Ok(if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
