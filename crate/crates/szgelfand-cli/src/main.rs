//! `szg`: command-line front end for the szgelfand toolkit.
//!
//! Exit codes: 0 = computation completed (whatever the mathematical verdict),
//! 1 = a construction or internal self-check failed, 2 = usage or domain
//! error, 3 = a resource cap was exceeded.

mod output;
mod suzuki_cmd;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use szgelfand::error::{Error, Result};
use szgelfand::groups::Group;
use szgelfand::{chartab, corpus, gelfand, io, suzuki, Caps};

use output::{emit, Timings};

#[derive(Parser)]
#[command(
    name = "szg",
    version,
    about = "Exact group theory: Suzuki groups, character tables, Gelfand pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Maximum number of elements a closure may enumerate.
    #[arg(long, global = true)]
    closure_cap: Option<usize>,
    /// Maximum group order for full subgroup-lattice scans.
    #[arg(long, global = true)]
    lattice_cap: Option<usize>,
    /// Maximum group order for the Schur-ring oracle.
    #[arg(long, global = true)]
    oracle_cap: Option<usize>,
    /// Omit the timings block, making output byte-deterministic.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build Suzuki groups and their maximal subgroups.
    Suzuki {
        #[command(subcommand)]
        sub: suzuki_cmd::SuzukiCmd,
    },
    /// Character table of a group (Dixon method over a prime field).
    Table(TableArgs),
    /// Conjugacy-class data of a group.
    Classes(ClassesArgs),
    /// Strong Gelfand pair decisions.
    Sgp {
        #[command(subcommand)]
        sub: SgpCmd,
    },
    /// Plain Gelfand pair decisions.
    Gelfand {
        #[command(subcommand)]
        sub: GelfandCmd,
    },
    /// Independent oracles: Schur-ring commutativity, double cosets.
    Oracle {
        #[command(subcommand)]
        sub: OracleCmd,
    },
    /// Closed-form values.
    Formula {
        #[command(subcommand)]
        sub: FormulaCmd,
    },
    /// List the bundled corpus of small groups.
    Corpus,
}

#[derive(Args)]
struct GroupArg {
    /// Path to a group JSON file, inline JSON (starting with '{'), or
    /// corpus:<name> for a bundled fixture.
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    group: GroupArg,
    /// Use this Dixon prime instead of the least admissible one.
    #[arg(long)]
    prime: Option<u64>,
    /// Aligned text instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Tab-separated values instead of JSON.
    #[arg(long, conflicts_with = "pretty")]
    tsv: bool,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    group: GroupArg,
}

#[derive(Subcommand)]
enum SgpCmd {
    /// Decide whether (G, H) is a strong Gelfand pair.
    Check(PairArgs),
    /// Scan a whole subgroup lattice (small groups), or the maximal
    /// families of a Suzuki group with --suzuki-m.
    Scan(ScanArgs),
}

#[derive(Args)]
struct PairArgs {
    #[command(flatten)]
    group: GroupArg,
    /// JSON array of subgroup generators (same element format as the group).
    #[arg(long)]
    subgroup_gens: String,
    /// Compute the full multiplicity matrix even when the total-character
    /// filter already refutes the pair.
    #[arg(long)]
    force_full: bool,
}

#[derive(Args)]
struct ScanArgs {
    /// Group to scan (file, inline JSON, or corpus:<name>).
    #[arg(long, conflicts_with = "suzuki_m")]
    group: Option<String>,
    /// Scan the constructed maximal subgroups of Sz(2^m) instead of a full
    /// lattice.
    #[arg(long)]
    suzuki_m: Option<u32>,
    /// Compute full multiplicity matrices even where the filter fires.
    #[arg(long)]
    force_full: bool,
}

#[derive(Subcommand)]
enum GelfandCmd {
    /// Decide whether (G, H) is a Gelfand pair (induced trivial character
    /// multiplicity-free).
    Check(GelfandCheckArgs),
}

#[derive(Args)]
struct GelfandCheckArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long)]
    subgroup_gens: String,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Schur-ring commutativity of the H-class sums (strong Gelfand oracle).
    Schur(OraclePairArgs),
    /// Count double cosets HgH and cross-check against the induced trivial
    /// character.
    Doublecosets(OraclePairArgs),
}

#[derive(Args)]
struct OraclePairArgs {
    #[command(flatten)]
    group: GroupArg,
    #[arg(long)]
    subgroup_gens: String,
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Total character degree of Sz(q0) in closed form.
    SzTotal {
        #[arg(long)]
        q0: u64,
    },
}

fn effective_caps(cli: &Cli) -> Result<Caps> {
    let mut caps = Caps::default();
    if let Ok(env) = std::env::var("GELFAND_SCOPE_CAPS") {
        for part in env.split([',', ';']).filter(|s| !s.trim().is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| {
                Error::usage(format!("GELFAND_SCOPE_CAPS entry {part:?} is not key=value"))
            })?;
            let value: usize = value.trim().parse().map_err(|_| {
                Error::usage(format!("GELFAND_SCOPE_CAPS value {value:?} is not a number"))
            })?;
            if value == 0 {
                return Err(Error::usage("caps must be positive"));
            }
            match key.trim() {
                "closure" => caps.closure = value,
                "lattice" => caps.lattice = value,
                "oracle" => caps.oracle = value,
                other => {
                    return Err(Error::usage(format!(
                        "unknown GELFAND_SCOPE_CAPS key {other:?}"
                    )))
                }
            }
        }
    }
    // flags win over the environment
    if let Some(v) = cli.closure_cap {
        caps.closure = v;
    }
    if let Some(v) = cli.lattice_cap {
        caps.lattice = v;
    }
    if let Some(v) = cli.oracle_cap {
        caps.oracle = v;
    }
    if caps.closure == 0 || caps.lattice == 0 || caps.oracle == 0 {
        return Err(Error::usage("caps must be positive"));
    }
    Ok(caps)
}

fn load_group(spec: &str, caps: &Caps) -> Result<Group> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::load(name);
    }
    if spec.trim_start().starts_with('{') {
        return io::parse_group_str(spec, caps.closure);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Error::usage(format!("cannot read group file {spec}: {e}")))?;
    io::parse_group_str(&text, caps.closure)
}

/// Shared-prime pair of character tables for a parent group and an embedded
/// subgroup.
fn pair_tables(
    g: &Group,
    gens: Vec<szgelfand::groups::GroupElement>,
    caps: &Caps,
) -> Result<(
    chartab::CharacterTable,
    szgelfand::groups::SubgroupEmbedding,
    chartab::CharacterTable,
)> {
    let ctx = chartab::dixon_context(g.order(), chartab::exponent(g));
    let tg = chartab::character_table_with(g, &ctx)?;
    let emb = szgelfand::groups::subgroup_embed(g, &gens, caps.closure)?;
    let th = chartab::character_table_with(emb.sub(), &ctx)?;
    Ok((tg, emb, th))
}

fn run(cli: &Cli) -> Result<()> {
    let caps = effective_caps(cli)?;
    let timings = Timings::new(!cli.no_timings);
    match &cli.command {
        Command::Suzuki { sub } => suzuki_cmd::run(sub, &caps, timings),
        Command::Table(args) => cmd_table(args, &caps, timings),
        Command::Classes(args) => cmd_classes(args, &caps, timings),
        Command::Sgp { sub } => match sub {
            SgpCmd::Check(args) => cmd_sgp_check(args, &caps, timings),
            SgpCmd::Scan(args) => cmd_sgp_scan(args, &caps, timings),
        },
        Command::Gelfand { sub } => match sub {
            GelfandCmd::Check(args) => cmd_gelfand_check(args, &caps, timings),
        },
        Command::Oracle { sub } => match sub {
            OracleCmd::Schur(args) => cmd_oracle_schur(args, &caps, timings),
            OracleCmd::Doublecosets(args) => cmd_oracle_doublecosets(args, &caps, timings),
        },
        Command::Formula { sub } => match sub {
            FormulaCmd::SzTotal { q0 } => {
                let total = suzuki::sz_total_degree_formula(*q0)?;
                emit(&serde_json::json!({ "q0": q0, "total_degree": total }));
                Ok(())
            }
        },
        Command::Corpus => {
            emit(&serde_json::json!({ "groups": corpus::names() }));
            Ok(())
        }
    }
}

#[derive(serde::Serialize)]
struct TableReport {
    p: u64,
    e: u64,
    omega: u64,
    order: u64,
    class_sizes: Vec<u64>,
    element_orders: Vec<u64>,
    degrees: Vec<u64>,
    values: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<String, u128>>,
}

fn cmd_table(args: &TableArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    timings.record("load", start);
    let start = Instant::now();
    let e = chartab::exponent(&g);
    let ctx = match args.prime {
        Some(p) => chartab::dixon_context_with_prime(g.order(), e, p)?,
        None => chartab::dixon_context(g.order(), e),
    };
    let t = chartab::character_table_with(&g, &ctx)?;
    timings.record("table", start);
    if args.pretty {
        print!("{}", output::pretty_table(&t));
        return Ok(());
    }
    if args.tsv {
        print!("{}", output::tsv_table(&t));
        return Ok(());
    }
    emit(&TableReport {
        p: ctx.p,
        e: ctx.e,
        omega: ctx.omega,
        order: t.order(),
        class_sizes: t.class_sizes().to_vec(),
        element_orders: t.element_orders().to_vec(),
        degrees: t.degrees().to_vec(),
        values: t.values().to_vec(),
        timings_ms: timings.into_map(),
    });
    Ok(())
}

fn cmd_classes(args: &ClassesArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    let cc = g.classes();
    timings.record("classes", start);
    let reps: Vec<serde_json::Value> = cc
        .reps
        .iter()
        .map(|&r| output::element_json(&g.elements()[r as usize]))
        .collect();
    emit(&serde_json::json!({
        "order": g.order(),
        "class_count": cc.count(),
        "sizes": cc.sizes,
        "element_orders": cc.element_orders,
        "inverse_class": cc.inverse_class,
        "representatives": reps,
        "timings_ms": timings.into_map(),
    }));
    Ok(())
}

#[derive(serde::Serialize)]
struct PairReport<R> {
    group_order: u64,
    subgroup: szgelfand::groups::StructureFingerprint,
    p: u64,
    #[serde(flatten)]
    report: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<String, u128>>,
}

fn cmd_sgp_check(args: &PairArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    let gens = io::parse_subgroup_gens(&g, &args.subgroup_gens)?;
    timings.record("load", start);
    let start = Instant::now();
    let (tg, emb, th) = pair_tables(&g, gens, caps)?;
    timings.record("tables", start);
    let start = Instant::now();
    let report = gelfand::is_strong_gelfand(&tg, &emb, &th, args.force_full)?;
    timings.record("decision", start);
    emit(&PairReport {
        group_order: g.order(),
        subgroup: szgelfand::groups::fingerprint(emb.sub()),
        p: tg.context().p,
        report,
        timings_ms: timings.into_map(),
    });
    Ok(())
}

fn cmd_sgp_scan(args: &ScanArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    if let Some(m) = args.suzuki_m {
        return suzuki_cmd::maximal_scan(m, caps, timings);
    }
    let Some(spec) = &args.group else {
        return Err(Error::usage("sgp scan needs --group or --suzuki-m"));
    };
    let start = Instant::now();
    let g = load_group(spec, caps)?;
    timings.record("load", start);
    let start = Instant::now();
    let scan = gelfand::sgp_scan(&g, caps, args.force_full)?;
    timings.record("scan", start);
    emit(&serde_json::json!({
        "scan": scan,
        "timings_ms": timings.into_map(),
    }));
    Ok(())
}

fn cmd_gelfand_check(args: &GelfandCheckArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    let gens = io::parse_subgroup_gens(&g, &args.subgroup_gens)?;
    timings.record("load", start);
    let start = Instant::now();
    let (tg, emb, th) = pair_tables(&g, gens, caps)?;
    let report = gelfand::is_gelfand(&tg, &emb, &th)?;
    timings.record("decision", start);
    emit(&PairReport {
        group_order: g.order(),
        subgroup: szgelfand::groups::fingerprint(emb.sub()),
        p: tg.context().p,
        report,
        timings_ms: timings.into_map(),
    });
    Ok(())
}

fn cmd_oracle_schur(args: &OraclePairArgs, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    let gens = io::parse_subgroup_gens(&g, &args.subgroup_gens)?;
    let emb = szgelfand::groups::subgroup_embed(&g, &gens, caps.closure)?;
    timings.record("load", start);
    let start = Instant::now();
    let commutes = gelfand::schur_ring_commutes(&g, emb.parent_index(), caps.oracle)?;
    timings.record("oracle", start);
    emit(&serde_json::json!({
        "group_order": g.order(),
        "subgroup_order": emb.sub().order(),
        "schur_ring_commutes": commutes,
        "timings_ms": timings.into_map(),
    }));
    Ok(())
}

fn cmd_oracle_doublecosets(
    args: &OraclePairArgs,
    caps: &Caps,
    mut timings: Timings,
) -> Result<()> {
    let start = Instant::now();
    let g = load_group(&args.group.group, caps)?;
    let gens = io::parse_subgroup_gens(&g, &args.subgroup_gens)?;
    let emb = szgelfand::groups::subgroup_embed(&g, &gens, caps.closure)?;
    timings.record("load", start);
    let start = Instant::now();
    let count = gelfand::double_coset_count(&g, emb.parent_index())?;
    timings.record("cosets", start);
    // Cross-check against the induced trivial character when tables are
    // within reach; otherwise report the count alone.
    let start = Instant::now();
    let cross = (|| -> Result<u64> {
        let ctx = chartab::dixon_context(g.order(), chartab::exponent(&g));
        let tg = chartab::character_table_with(&g, &ctx)?;
        let th = chartab::character_table_with(emb.sub(), &ctx)?;
        let mm = gelfand::restriction_multiplicities(&tg, &emb, &th)?;
        Ok(gelfand::induced_trivial_square_sum(&mm))
    })();
    timings.record("cross_check", start);
    let (square_sum, consistent) = match cross {
        Ok(s) => (Some(s), Some(s == count)),
        Err(Error::Resource(_)) => (None, None),
        Err(e) => return Err(e),
    };
    emit(&serde_json::json!({
        "group_order": g.order(),
        "subgroup_order": emb.sub().order(),
        "double_cosets": count,
        "induced_trivial_square_sum": square_sum,
        "consistent": consistent,
        "timings_ms": timings.into_map(),
    }));
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(&cli) {
        eprintln!("szg: {e}");
        std::process::exit(e.exit_code());
    }
}
