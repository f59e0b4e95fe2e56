//! `aindex` — score, compare and validate author publication records.
//!
//! Exit codes: 0 success, 2 input or usage error, 3 invariant violation,
//! 4 remote/provider failure.

mod options;
mod render;

use std::fmt;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use aindex_core::analysis::{compare, sweep, AnalysisError, InputField};
use aindex_core::bibfetch::{fetch_author, save_cache, FetchError, ProviderConfig};
use aindex_core::ingestion::{
    build_profile, derive_inputs, parse_records, AuthorProfile, CorpusFormat, IngestError,
    Publication,
};
use aindex_core::metrics::{
    a_index, errata::published_value_for, g_index, validate_inputs, MetricInputs, MetricsError,
};
use aindex_core::Weights;

use options::{BaseInputs, EntrySpec, OutputFormat, ValueList, WeightOpts};

const PROVIDER_CONFIG_ENV: &str = "AINDEX_PROVIDER_CONFIG";

#[derive(Parser)]
#[command(
    name = "aindex",
    version,
    about = "Author-impact toolkit: composite index, h/g/AsF, sweeps, comparisons, fetching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score one author from a corpus file or from inline inputs
    Compute(ComputeArgs),
    /// Rank several authors side by side
    Compare(CompareArgs),
    /// Evaluate the index while one input field varies
    Sweep(SweepArgs),
    /// Download an author's works from a provider into a local cache
    Fetch(FetchArgs),
    /// Check a corpus and its derived inputs against all consistency rules
    Validate(ValidateArgs),
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Corpus file (CSV or JSON)
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Corpus format; inferred from the extension when omitted
    #[arg(long)]
    format: Option<CorpusFormat>,

    /// Author to profile; omitted means the whole corpus is one author's record
    #[arg(long)]
    author: Option<String>,

    /// Inline inputs n1,n2,n3,n4,n5,n6 instead of a corpus
    #[arg(long, value_name = "N1,N2,N3,N4,N5,N6", conflicts_with = "input")]
    base: Option<BaseInputs>,

    /// Count only indexed publications in the single-author figures
    #[arg(long)]
    indexed_only: bool,

    #[command(flatten)]
    weight_opts: WeightOpts,

    /// Write output here instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    output_format: OutputFormat,
}

#[derive(clap::Args)]
struct CompareArgs {
    /// Corpus file the --author flags draw from
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    #[arg(long)]
    format: Option<CorpusFormat>,

    /// Author present in the corpus; repeat for several
    #[arg(long)]
    author: Vec<String>,

    /// Inline entry label=n1,n2,n3,n4,n5,n6; repeat for several
    #[arg(long, value_name = "LABEL=N1,..,N6")]
    entry: Vec<EntrySpec>,

    #[arg(long)]
    indexed_only: bool,

    #[command(flatten)]
    weight_opts: WeightOpts,

    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
    output_format: OutputFormat,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Input field to vary: n1..n6
    #[arg(long)]
    field: InputField,

    /// Values the field takes, comma-separated
    #[arg(long, value_name = "V1,V2,..")]
    values: ValueList,

    /// Inline base inputs n1,n2,n3,n4,n5,n6
    #[arg(long, value_name = "N1,N2,N3,N4,N5,N6", conflicts_with = "input")]
    base: Option<BaseInputs>,

    /// Corpus file to derive the base inputs from
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    #[arg(long)]
    format: Option<CorpusFormat>,

    #[arg(long)]
    author: Option<String>,

    #[arg(long)]
    indexed_only: bool,

    #[command(flatten)]
    weight_opts: WeightOpts,

    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    output_format: OutputFormat,
}

#[derive(clap::Args)]
struct FetchArgs {
    /// Provider description (JSON); falls back to $AINDEX_PROVIDER_CONFIG
    #[arg(long, value_name = "FILE")]
    provider_config: Option<PathBuf>,

    /// Author identifier passed to the provider
    #[arg(long)]
    author: String,

    /// Cache file to write (ingestion JSON schema)
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
}

#[derive(clap::Args)]
struct ValidateArgs {
    #[arg(long, value_name = "FILE")]
    input: PathBuf,

    #[arg(long)]
    format: Option<CorpusFormat>,

    #[arg(long)]
    author: Option<String>,

    #[arg(long)]
    indexed_only: bool,
}

/// A verdict failure from `validate`: the corpus or its derived inputs
/// broke a consistency rule. Distinct from usage errors so it can map to
/// exit code 3.
#[derive(Debug)]
struct ValidationFailed(String);

impl fmt::Display for ValidationFailed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "validation failed: {}", self.0)
    }
}

impl std::error::Error for ValidationFailed {}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Fetch(args) => cmd_fetch(args),
        Command::Validate(args) => cmd_validate(args),
    };
    if let Err(err) = result {
        eprintln!("aindex: {err:#}");
        std::process::exit(exit_code_for(&err));
    }
}

fn exit_code_for(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(metrics) = cause.downcast_ref::<MetricsError>() {
            return metrics_exit_code(metrics);
        }
        if let Some(analysis) = cause.downcast_ref::<AnalysisError>() {
            return match analysis {
                AnalysisError::Metrics(inner) => metrics_exit_code(inner),
                _ => 2,
            };
        }
        if let Some(fetch) = cause.downcast_ref::<FetchError>() {
            return match fetch {
                FetchError::InvalidConfig(_) | FetchError::Cache { .. } => 2,
                _ => 4,
            };
        }
        if cause.downcast_ref::<ValidationFailed>().is_some() {
            return 3;
        }
        if cause.downcast_ref::<IngestError>().is_some() {
            return 2;
        }
    }
    2
}

fn metrics_exit_code(err: &MetricsError) -> i32 {
    match err {
        // Bad weights come from flags or config files: a usage problem.
        MetricsError::InvalidWeights(_) => 2,
        _ => 3,
    }
}

fn load_corpus(path: &Path, format: Option<CorpusFormat>) -> anyhow::Result<Vec<Publication>> {
    let format = format
        .or_else(|| CorpusFormat::from_extension(path))
        .unwrap_or(CorpusFormat::Csv);
    let bytes =
        std::fs::read(path).with_context(|| format!("reading corpus {}", path.display()))?;
    Ok(parse_records(&bytes, format)?)
}

fn profile_for(records: Vec<Publication>, author: Option<&str>) -> anyhow::Result<AuthorProfile> {
    match author {
        Some(name) => Ok(build_profile(&records, name)?),
        None => Ok(AuthorProfile {
            author_key: "corpus".into(),
            publications: records,
        }),
    }
}

fn emit(out: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("writing output {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Points out inputs whose originally published reference value disagrees
/// with the formula. Diagnostics only; never part of the data output.
fn errata_note(inputs: &MetricInputs, weights: &Weights) {
    if *weights != Weights::default() {
        return;
    }
    if let Some(published) = published_value_for(inputs) {
        eprintln!(
            "note: the originally published reference tables list {} for these inputs; \
             the formula yields {} (docs/errata.json has the full list)",
            render::fmt3(published.published_a_index),
            render::fmt3(published.computed_a_index()),
        );
    }
}

fn cmd_compute(args: ComputeArgs) -> anyhow::Result<()> {
    let weights = options::resolve_weights(&args.weight_opts)?;
    let (inputs, g_all) = match (args.base, &args.input) {
        (Some(BaseInputs(inputs)), None) => (inputs, None),
        (None, Some(path)) => {
            let records = load_corpus(path, args.format)?;
            let profile = profile_for(records, args.author.as_deref())?;
            let inputs = derive_inputs(&profile, args.indexed_only);
            let g = g_index(&profile.citations());
            (inputs, Some(g))
        }
        _ => bail!("exactly one of --input or --base is required"),
    };

    let mut report = a_index(&inputs, &weights)?;
    if let Some(g) = g_all {
        report = report.with_g_all(g);
    }
    errata_note(&inputs, &weights);

    let rendered = match args.output_format {
        OutputFormat::Table => render::report_table(&report),
        OutputFormat::Csv => render::report_csv(&report),
        OutputFormat::Json => render::json(&report)?,
    };
    emit(args.out.as_deref(), &rendered)
}

fn cmd_compare(args: CompareArgs) -> anyhow::Result<()> {
    let weights = options::resolve_weights(&args.weight_opts)?;

    let mut entries: Vec<(String, MetricInputs)> = Vec::new();
    if !args.author.is_empty() {
        let path = args
            .input
            .as_ref()
            .ok_or_else(|| anyhow::anyhow!("--author needs --input to draw from"))?;
        let records = load_corpus(path, args.format)?;
        for author in &args.author {
            let profile = build_profile(&records, author)?;
            if profile.publications.is_empty() {
                bail!("unknown author {author:?} in {}", path.display());
            }
            entries.push((author.clone(), derive_inputs(&profile, args.indexed_only)));
        }
    }
    entries.extend(args.entry.iter().map(|e| (e.label.clone(), e.inputs)));

    let table = compare(&entries, &weights)?;
    for row in &table.rows {
        errata_note(&row.report.inputs, &weights);
    }

    let rendered = match args.output_format {
        OutputFormat::Table => render::compare_table(&table),
        OutputFormat::Csv => render::compare_csv(&table),
        OutputFormat::Json => render::json(&table)?,
    };
    emit(args.out.as_deref(), &rendered)
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<()> {
    let weights = options::resolve_weights(&args.weight_opts)?;
    let base = match (args.base, &args.input) {
        (Some(BaseInputs(inputs)), None) => inputs,
        (None, Some(path)) => {
            let records = load_corpus(path, args.format)?;
            let profile = profile_for(records, args.author.as_deref())?;
            derive_inputs(&profile, args.indexed_only)
        }
        _ => bail!("exactly one of --base or --input is required"),
    };

    let series = sweep(&base, args.field, &args.values.0, &weights)?;
    for rejected in &series.rejected {
        let rules: Vec<String> = rejected.violations.iter().map(|v| v.to_string()).collect();
        eprintln!(
            "warning: {}={} skipped: {}",
            args.field,
            rejected.value,
            rules.join("; ")
        );
    }

    let rendered = match args.output_format {
        OutputFormat::Table => render::sweep_table(&series),
        OutputFormat::Csv => render::sweep_csv(&series),
        OutputFormat::Json => render::json(&series)?,
    };
    emit(args.out.as_deref(), &rendered)
}

fn cmd_fetch(args: FetchArgs) -> anyhow::Result<()> {
    let config_path = args
        .provider_config
        .or_else(|| std::env::var_os(PROVIDER_CONFIG_ENV).map(PathBuf::from))
        .ok_or_else(|| {
            anyhow::anyhow!(
                "no provider config: pass --provider-config or set {PROVIDER_CONFIG_ENV}"
            )
        })?;
    let cfg = ProviderConfig::from_json_file(&config_path)?;
    if let Some(name) = &cfg.name {
        eprintln!("provider: {name}");
    }

    let records = fetch_author(&cfg, &args.author)?;
    save_cache(&records, &args.out)?;
    println!("fetched {} records", records.len());
    Ok(())
}

fn cmd_validate(args: ValidateArgs) -> anyhow::Result<()> {
    let format = args
        .format
        .or_else(|| CorpusFormat::from_extension(&args.input))
        .unwrap_or(CorpusFormat::Csv);
    let bytes = std::fs::read(&args.input)
        .with_context(|| format!("reading corpus {}", args.input.display()))?;

    // Content problems are the verdict this subcommand exists to deliver,
    // so they exit 3 rather than 2.
    let records = match parse_records(&bytes, format) {
        Ok(records) => records,
        Err(err) => return Err(ValidationFailed(err.to_string()).into()),
    };
    let profile = profile_for(records, args.author.as_deref())?;
    let inputs = derive_inputs(&profile, args.indexed_only);
    let violations = validate_inputs(&inputs);
    if !violations.is_empty() {
        for violation in &violations {
            println!("{violation}");
        }
        return Err(ValidationFailed(format!("{} rule(s) broken", violations.len())).into());
    }

    println!(
        "ok: {} records; inputs n1={} n2={} n3={} n4={} n5={} n6={}",
        profile.publications.len(),
        inputs.n1,
        inputs.n2,
        inputs.n3,
        inputs.n4,
        inputs.n5,
        inputs.n6
    );
    Ok(())
}
