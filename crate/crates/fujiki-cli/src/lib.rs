//! Command-line surface: computes the fourfold table from the catalog,
//! checks it against the reference tables, and exposes the library
//! operations one group at a time.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use fujiki::catalog::{
    classify_entry_with, compute_row, compute_table, deformation_dedup, load_catalog, Catalog,
    CatalogEntry, CatalogError, CatalogMethod, ComputedRow, DedupKey, DedupResult,
};
use fujiki::fixedpoints::FujikiInput;
use fujiki::invariants::{
    int, invariants_from_data, render_half_as_decimal, series_report, verification_radicand,
    InvariantError, Rational,
};
use fujiki::singularities::SingularityProfile;

/// Environment variable that overrides the catalog path.
pub const CATALOG_ENV: &str = "FUJIKI_CATALOG";

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("output failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "fujiki",
    version,
    about = "Valid involutions, singularities and invariants of Fujiki orbifolds"
)]
pub struct Cli {
    /// Catalog file to use instead of the built-in one (also FUJIKI_CATALOG).
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every row of the fourfold table from scratch.
    Table(TableArgs),
    /// Invariants and rationality check for user-supplied data.
    VerifyCustom(VerifyCustomArgs),
    /// List the catalog groups.
    List,
    /// Enumerate and classify the valid involutions of a group.
    Involutions(InvolutionArgs),
    /// Orbit count, b2 and singularities of a group's orbifolds.
    Profile(GroupArgs),
    /// Full invariants and rationality verdict of a group's orbifolds.
    Verify(GroupArgs),
    /// b2 of the higher-dimensional series and distinctness certificates.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Compare against the reference table; mismatches fail the run.
    #[arg(long)]
    pub golden: bool,
    /// Collapse proven deformation equivalences and flag candidate couples.
    #[arg(long)]
    pub dedup: bool,
}

#[derive(Debug, Args)]
pub struct VerifyCustomArgs {
    /// Fujiki-constant factor C_X entering C(c2)² = C_X·(7c2² − 4c4)/15.
    #[arg(long)]
    pub order_factor: String,
    #[arg(long)]
    pub b2: i64,
    #[arg(long, default_value_t = 0)]
    pub b3: i64,
    /// Singularities, e.g. `a2=45,a4=2` (b4sing/b6sing accepted).
    #[arg(long, default_value = "")]
    pub profile: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bases,
    Ambient,
}

#[derive(Debug, Args)]
pub struct InvolutionArgs {
    pub group: String,
    #[arg(long, value_enum, default_value_t = Method::Bases)]
    pub method: Method,
    /// Also use the catalog's bridge overgroups (otherwise only Ḡ = G).
    #[arg(long)]
    pub bridge: bool,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    pub group: String,
    /// Restrict to one involution class (`unique`, `id`, `not-id`).
    #[arg(long = "class")]
    pub class_label: Option<String>,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, default_value_t = 10)]
    pub max_n: u32,
}

/// One rendered row of the fourfold table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub group: String,
    pub involution_class: String,
    pub b2: i64,
    pub profile: SingularityProfile,
    pub b4: i64,
    pub chi: i64,
    pub c4: String,
    pub c2_squared: String,
    /// `C(c₂)` as `p/q`, absent when irrational.
    pub cbar: Option<String>,
    pub verdict: String,
    pub verified: bool,
}

impl From<&ComputedRow> for TableRow {
    fn from(r: &ComputedRow) -> Self {
        let inv = &r.invariants;
        TableRow {
            group: r.group.clone(),
            involution_class: r.class_label.clone(),
            b2: inv.b2,
            profile: r.profile,
            b4: inv.b4,
            chi: inv.chi,
            c4: inv.c4.to_string(),
            c2_squared: inv.c2_squared.to_string(),
            cbar: inv.cbar_c2().map(ToString::to_string),
            verdict: inv.verification.to_string(),
            verified: inv.verification.is_rational(),
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    group: &'a str,
    class: &'a str,
    b2: i64,
    a2: u64,
    a3: u64,
    a4: u64,
    a6: u64,
    a8: u64,
    a12: u64,
    b4sing: u64,
    b6sing: u64,
    b4: i64,
    chi: i64,
    c4: &'a str,
    c2sq: &'a str,
    cbar: &'a str,
    verified: bool,
}

impl<'a> From<&'a TableRow> for CsvRow<'a> {
    fn from(r: &'a TableRow) -> Self {
        let p = &r.profile;
        CsvRow {
            group: &r.group,
            class: &r.involution_class,
            b2: r.b2,
            a2: p.a2,
            a3: p.a3,
            a4: p.a4,
            a6: p.a6,
            a8: p.a8,
            a12: p.a12,
            b4sing: p.b4,
            b6sing: p.b6,
            b4: r.b4,
            chi: r.chi,
            c4: &r.c4,
            c2sq: &r.c2_squared,
            cbar: &r.verdict,
            verified: r.verified,
        }
    }
}

/// Deduplication outcome in output form.
#[derive(Clone, Debug, Serialize)]
pub struct DedupReport {
    pub collapsed: Vec<fujiki::catalog::Collapse>,
    pub candidate_couples: Vec<Vec<String>>,
    pub distinct_rows: usize,
    pub minimum_classes: usize,
    pub dimension_six: Vec<fujiki::catalog::DimensionSixFact>,
    pub headline: String,
    /// Whether the remaining rows equal the deduplicated reference table.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_reference: Option<bool>,
}

/// Reference-table comparison outcome.
#[derive(Clone, Debug, Serialize)]
pub struct GoldenReport {
    pub rows_compared: usize,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub rows: Vec<TableRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dedup: Option<DedupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub golden: Option<GoldenReport>,
}

impl TableReport {
    pub fn success(&self) -> bool {
        self.rows.iter().all(|r| r.verified)
            && self.golden.as_ref().is_none_or(|g| g.mismatches.is_empty())
            && self
                .dedup
                .as_ref()
                .and_then(|d| d.matches_reference)
                .unwrap_or(true)
    }
}

fn key_label(k: &DedupKey) -> String {
    if k.class_label == "unique" {
        k.group.clone()
    } else {
        format!("{} ({})", k.group, k.class_label)
    }
}

/// Loads the catalog from `--catalog`, then `FUJIKI_CATALOG`, then the built-in data.
pub fn resolve_catalog(flag: Option<&PathBuf>) -> Result<Catalog, CatalogError> {
    let from_env = std::env::var_os(CATALOG_ENV).map(PathBuf::from);
    load_catalog(flag.or(from_env.as_ref()).map(PathBuf::as_path))
}

/// Computes the table report behind `fujiki table`.
pub fn build_table_report(
    catalog: &Catalog,
    golden: bool,
    dedup: bool,
) -> Result<TableReport, CliError> {
    let computed = compute_table(catalog)?;
    let golden_report = golden.then(|| {
        let mut mismatches = Vec::new();
        for g in &catalog.golden {
            match computed
                .iter()
                .find(|r| r.group == g.group && r.class_label == g.class_label)
            {
                Some(r) if r.matches(g) => {}
                Some(r) => mismatches.push(format!(
                    "{} ({}): computed {:?}",
                    g.group,
                    g.class_label,
                    TableRow::from(r)
                )),
                None => mismatches.push(format!("{} ({}): not computed", g.group, g.class_label)),
            }
        }
        if computed.len() != catalog.golden.len() {
            mismatches.push(format!(
                "computed {} rows, reference has {}",
                computed.len(),
                catalog.golden.len()
            ));
        }
        GoldenReport {
            rows_compared: catalog.golden.len(),
            mismatches,
        }
    });
    let (rows, dedup_report) = if dedup {
        let keys: Vec<DedupKey> = computed.iter().map(DedupKey::from).collect();
        let result = deformation_dedup(&keys, &catalog.deformation_facts);
        let kept: Vec<TableRow> = result
            .rows
            .iter()
            .filter_map(|k| {
                computed
                    .iter()
                    .find(|r| r.group == k.group && r.class_label == k.class_label)
            })
            .map(TableRow::from)
            .collect();
        let report = dedup_report(catalog, &result, golden);
        (kept, Some(report))
    } else {
        (computed.iter().map(TableRow::from).collect(), None)
    };
    Ok(TableReport {
        rows,
        dedup: dedup_report,
        golden: golden_report,
    })
}

fn dedup_report(catalog: &Catalog, result: &DedupResult, golden: bool) -> DedupReport {
    let minimum = result.minimum_classes();
    let extra = catalog.dimension_six.len();
    let matches_reference = golden.then(|| {
        let mut ours: Vec<(i64, String, SingularityProfile)> = result
            .rows
            .iter()
            .map(|k| (k.b2, k.group.clone(), k.profile))
            .collect();
        let mut theirs: Vec<(i64, String, SingularityProfile)> = catalog
            .deduplicated_fixture
            .iter()
            .map(|f| (f.b2, f.group.clone(), f.profile))
            .collect();
        ours.sort();
        theirs.sort();
        ours == theirs
    });
    DedupReport {
        collapsed: result.collapsed.clone(),
        candidate_couples: result
            .candidate_couples
            .iter()
            .map(|c| c.iter().map(key_label).collect())
            .collect(),
        distinct_rows: result.rows.len(),
        minimum_classes: minimum,
        dimension_six: catalog.dimension_six.clone(),
        headline: format!(
            "≥ {minimum} (+{extra} in dimension 6) = {}",
            minimum + extra
        ),
        matches_reference,
    }
}

/// Markdown cell for a rational: halves and quarters as decimals.
fn md_rational(text: &str) -> String {
    Rational::from_str(text)
        .map(|r| render_half_as_decimal(&r))
        .unwrap_or_else(|_| text.to_string())
}

fn class_cell(r: &TableRow) -> String {
    match r.involution_class.as_str() {
        "unique" => String::new(),
        other => other.to_string(),
    }
}

pub fn render_csv(rows: &[TableRow], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(CsvRow::from(r))?;
    }
    if rows.is_empty() {
        w.write_record([
            "group", "class", "b2", "a2", "a3", "a4", "a6", "a8", "a12", "b4sing", "b6sing", "b4",
            "chi", "c4", "c2sq", "cbar", "verified",
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn render_markdown(report: &TableReport, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        out,
        "| G | θ | b₂ | singularities | b₄ | χ | c₄ | c₂² | C(c₂) |"
    )?;
    writeln!(out, "|---|---|---|---|---|---|---|---|---|")?;
    for r in &report.rows {
        let cbar = r.cbar.as_deref().map_or(r.verdict.clone(), md_rational);
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.group,
            class_cell(r),
            r.b2,
            r.profile,
            r.b4,
            r.chi,
            md_rational(&r.c4),
            md_rational(&r.c2_squared),
            cbar
        )?;
    }
    if let Some(d) = &report.dedup {
        writeln!(out)?;
        writeln!(out, "Proven equivalences collapsed:")?;
        for c in &d.collapsed {
            writeln!(
                out,
                "- {} {} ~ {} {} {}",
                c.removed.0, c.removed.1, c.onto.0, c.onto.1, c.fact
            )?;
        }
        writeln!(out)?;
        writeln!(
            out,
            "Candidate-equivalent couples (same b₂ and singularities):"
        )?;
        for c in &d.candidate_couples {
            writeln!(out, "- {{{}}}", c.join(", "))?;
        }
        writeln!(out)?;
        writeln!(out, "Dimension 6:")?;
        for f in &d.dimension_six {
            writeln!(out, "- S({})^[3], b₂ = {}", f.group, f.b2)?;
        }
        writeln!(out)?;
        writeln!(
            out,
            "{} distinct rows; deformation classes: {}",
            d.distinct_rows, d.headline
        )?;
    }
    Ok(())
}

fn write_dedup_summary(d: &DedupReport, err: &mut dyn Write) -> Result<(), CliError> {
    for c in &d.candidate_couples {
        writeln!(err, "candidate couple: {{{}}}", c.join(", "))?;
    }
    for f in &d.dimension_six {
        writeln!(err, "dimension 6: S({})^[3], b2 = {}", f.group, f.b2)?;
    }
    writeln!(
        err,
        "{} distinct rows; deformation classes: {}",
        d.distinct_rows, d.headline
    )?;
    Ok(())
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli, out, err) {
        Ok(code) => code,
        // A reader that stops early (e.g. `| head`) is not an input error.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    if let Command::VerifyCustom(args) = &cli.command {
        return verify_custom(args, out);
    }
    let catalog = resolve_catalog(cli.catalog.as_ref())?;
    match &cli.command {
        Command::Table(args) => table(&catalog, args, out, err),
        Command::List => list(&catalog, out),
        Command::Involutions(args) => involutions(&catalog, args, out),
        Command::Profile(args) => profile(&catalog, args, out),
        Command::Verify(args) => verify(&catalog, args, out),
        Command::Series(args) => series(&catalog, args, out),
        Command::VerifyCustom(_) => unreachable!("handled above"),
    }
}

fn table(
    catalog: &Catalog,
    args: &TableArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let report = build_table_report(catalog, args.golden, args.dedup)?;
    match args.format {
        Format::Csv => {
            render_csv(&report.rows, out)?;
            if let Some(d) = &report.dedup {
                write_dedup_summary(d, err)?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Markdown => render_markdown(&report, out)?,
    }
    if let Some(g) = &report.golden {
        for m in &g.mismatches {
            writeln!(err, "reference mismatch: {m}")?;
        }
    }
    if let Some(false) = report.dedup.as_ref().and_then(|d| d.matches_reference) {
        writeln!(err, "deduplicated rows differ from the reference table")?;
    }
    for r in report.rows.iter().filter(|r| !r.verified) {
        writeln!(
            err,
            "verification failed: {} ({}): {}",
            r.group, r.involution_class, r.verdict
        )?;
    }
    Ok(if report.success() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn verify_custom(args: &VerifyCustomArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let c_x = Rational::from_str(args.order_factor.trim())
        .map_err(|_| CliError::Input(format!("`{}` is not a rational", args.order_factor)))?;
    let profile = SingularityProfile::parse_assignments(&args.profile).map_err(CliError::Input)?;
    let inv = invariants_from_data(&profile, args.b2, args.b3, &c_x)?;
    writeln!(out, "b2 = {}", inv.b2)?;
    writeln!(out, "b3 = {}", inv.b3)?;
    writeln!(out, "singularities: {profile}")?;
    writeln!(out, "s = {}", inv.s_value)?;
    writeln!(out, "b4 = {}", inv.b4)?;
    writeln!(out, "chi = {}", inv.chi)?;
    writeln!(out, "c4 = {}", inv.c4)?;
    writeln!(out, "S0 = {}", inv.s0_value)?;
    writeln!(out, "c2sq = {}", inv.c2_squared)?;
    writeln!(
        out,
        "C(c2)^2 = {}",
        verification_radicand(&c_x, &inv.c4, &inv.c2_squared)
    )?;
    if let Some(d) = inv.verification.squarefree() {
        writeln!(out, "squarefree part = {d}")?;
    }
    writeln!(out, "C(c2) = {}", inv.verification)?;
    Ok(if inv.verification.is_rational() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn list(catalog: &Catalog, out: &mut dyn Write) -> Result<u8, CliError> {
    writeln!(
        out,
        "name\tdisplay\tSmallGroup\tdegree\trank\tclasses\taliases"
    )?;
    for e in &catalog.groups {
        let classes: Vec<&str> = e
            .involution_classes
            .iter()
            .map(|c| c.label.as_str())
            .collect();
        writeln!(
            out,
            "{}\t{}\t({},{})\t{}\t{}\t{}\t{}",
            e.name,
            e.display,
            e.small_group_id.0,
            e.small_group_id.1,
            e.degree,
            e.xiao_rank,
            classes.join(","),
            e.aliases.join(",")
        )?;
    }
    Ok(EXIT_OK)
}

fn involutions(
    catalog: &Catalog,
    args: &InvolutionArgs,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let entry = catalog.entry(&args.group)?;
    let method = match args.method {
        Method::Bases => CatalogMethod::Bases,
        Method::Ambient => CatalogMethod::Ambient,
    };
    let result = classify_entry_with(catalog, entry, method, args.bridge)?;
    writeln!(
        out,
        "{}: order {}, degree {}, {} valid involutions, {} classes",
        entry.name,
        result.group.order(),
        result.group.degree(),
        result.candidates.len(),
        result.class_count()
    )?;
    for (i, class) in result.classification.classes.iter().enumerate() {
        writeln!(
            out,
            "class {}: representative {} ({} members)",
            i + 1,
            class.representative.describe(),
            class.members.len()
        )?;
    }
    for m in &result.classification.merges {
        let via = m
            .extra_generator
            .as_ref()
            .map(|h| format!(" with h = {h}"))
            .unwrap_or_default();
        writeln!(
            out,
            "merge {} ~ {} via {}{}: h1 = {}, h2 = {}",
            m.left, m.right, m.bridge, via, m.witness.h1, m.witness.h2
        )?;
    }
    Ok(EXIT_OK)
}

fn selected_classes<'a>(
    entry: &'a CatalogEntry,
    class_label: Option<&str>,
) -> Result<Vec<&'a str>, CliError> {
    match class_label {
        Some(label) => Ok(vec![entry.class(label)?.label.as_str()]),
        None => Ok(entry
            .involution_classes
            .iter()
            .map(|c| c.label.as_str())
            .collect()),
    }
}

fn profile(catalog: &Catalog, args: &GroupArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let entry = catalog.entry(&args.group)?;
    for label in selected_classes(entry, args.class_label.as_deref())? {
        let group = entry.group()?;
        let theta = entry.class(label)?.build(&group)?;
        let input = FujikiInput::new(theta, 2).map_err(CatalogError::from)?;
        let row = compute_row(entry, label)?;
        writeln!(out, "{} ({label})", entry.name)?;
        writeln!(out, "  involution: {}", input.theta().describe())?;
        writeln!(out, "  fixed-surface orbits: {}", row.orbit_count)?;
        writeln!(
            out,
            "  b2 = {} + {} = {}",
            entry.xiao_rank, row.orbit_count, row.invariants.b2
        )?;
        writeln!(out, "  profile {:?}", row.profile.without_a12())?;
        writeln!(out, "  singularities: {}", row.profile)?;
    }
    Ok(EXIT_OK)
}

fn verify(catalog: &Catalog, args: &GroupArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let entry = catalog.entry(&args.group)?;
    let mut ok = true;
    for label in selected_classes(entry, args.class_label.as_deref())? {
        let row = compute_row(entry, label)?;
        let inv = &row.invariants;
        writeln!(out, "{} ({label})", entry.name)?;
        writeln!(out, "  b2 = {}, b4 = {}, chi = {}", inv.b2, inv.b4, inv.chi)?;
        writeln!(out, "  singularities: {}", row.profile)?;
        writeln!(
            out,
            "  c4 = {}, c2sq = {}, S0 = {}",
            inv.c4, inv.c2_squared, inv.s0_value
        )?;
        writeln!(
            out,
            "  C(c2)^2 = {}",
            verification_radicand(&int(3 * row.order as i64), &inv.c4, &inv.c2_squared)
        )?;
        writeln!(out, "  C(c2) = {}", inv.verification)?;
        ok &= row.verified();
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

fn series(catalog: &Catalog, args: &SeriesArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let report = series_report(&catalog.series, args.max_n)?;
    let mut ok = true;
    writeln!(out, "series\t|H|\tb2")?;
    for r in &report.rows {
        writeln!(out, "S({})^[n]\t{}\t{}", r.name, r.order, r.b2)?;
        if let Some(reference) = catalog
            .series_b2_reference
            .iter()
            .find(|s| s.name == r.name)
        {
            ok &= reference.b2 == r.b2;
        }
    }
    writeln!(out)?;
    writeln!(
        out,
        "equal b2 pairs (n-th root of the order ratio irrational for 3 ≤ n ≤ {}):",
        report.max_n
    )?;
    for p in &report.pairs {
        writeln!(
            out,
            "{} / {}\tb2 = {}\tratio {}\t{}",
            p.first,
            p.second,
            p.b2,
            p.ratio,
            if p.distinct {
                "distinct"
            } else {
                "not certified"
            }
        )?;
        ok &= p.distinct;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}
