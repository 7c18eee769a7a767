//! The `szg suzuki ...` subcommands and the Suzuki maximal-family scan.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Args, Subcommand, ValueEnum};
use szgelfand::error::Result;
use szgelfand::gelfand::{self, SgpReport};
use szgelfand::groups::{self, StructureFingerprint};
use szgelfand::io::{self, GroupJson};
use szgelfand::suzuki::{MaximalKind, MaximalSubgroup, Suzuki};
use szgelfand::{chartab, Caps};

use crate::output::{emit, Timings};

#[derive(Subcommand)]
pub enum SuzukiCmd {
    /// Construct Sz(2^m) and emit it with its verification certificate.
    Build(BuildArgs),
    /// Construct one maximal subgroup of Sz(2^m) in the ovoid action.
    Subgroup(SubgroupArgs),
}

#[derive(Args)]
pub struct BuildArgs {
    /// Field degree: q = 2^m, m odd.
    #[arg(long)]
    m: u32,
    /// Emit the degree q^2+1 permutation form instead of the matrix form.
    #[arg(long)]
    perm: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Borel,
    Dihedral,
    #[value(name = "torus+")]
    TorusPlus,
    #[value(name = "torus-")]
    TorusMinus,
}

#[derive(Args)]
pub struct SubgroupArgs {
    #[arg(long)]
    m: u32,
    /// Which maximal family to construct.
    #[arg(long, value_enum)]
    which: Which,
}

#[derive(serde::Serialize)]
struct GroupWithCert<C: serde::Serialize> {
    #[serde(flatten)]
    group: GroupJson,
    certificate: C,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<String, u128>>,
}

pub fn run(cmd: &SuzukiCmd, caps: &Caps, mut timings: Timings) -> Result<()> {
    match cmd {
        SuzukiCmd::Build(args) => {
            let start = Instant::now();
            let sz = Suzuki::build_with_cap(args.m, caps.closure)?;
            timings.record("build", start);
            let group = if args.perm {
                io::group_to_json(sz.perm_group())
            } else {
                io::group_to_json(sz.matrix_group())
            };
            emit(&GroupWithCert {
                group,
                certificate: sz.certificate().clone(),
                timings_ms: timings.into_map(),
            });
            Ok(())
        }
        SuzukiCmd::Subgroup(args) => {
            let start = Instant::now();
            let sz = Suzuki::build_with_cap(args.m, caps.closure)?;
            let max = match args.which {
                Which::Borel => sz.borel()?,
                Which::Dihedral => sz.dihedral()?,
                Which::TorusPlus => sz.torus_normalizer(1)?,
                Which::TorusMinus => sz.torus_normalizer(-1)?,
            };
            timings.record("build", start);
            let cert = subgroup_certificate(&sz, &max, caps)?;
            emit(&GroupWithCert {
                group: io::group_to_json(max.embedding.sub()),
                certificate: cert,
                timings_ms: timings.into_map(),
            });
            Ok(())
        }
    }
}

#[derive(serde::Serialize)]
struct SubgroupCertificate {
    which: MaximalKind,
    q: u64,
    order: u64,
    expected_order: u64,
    class_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected_class_count: Option<u64>,
    fingerprint: StructureFingerprint,
    checks: BTreeMap<&'static str, bool>,
}

fn subgroup_certificate(
    sz: &Suzuki,
    max: &MaximalSubgroup,
    caps: &Caps,
) -> Result<SubgroupCertificate> {
    let q = sz.params().q;
    let sub = max.embedding.sub();
    let fp = groups::fingerprint(sub);
    let mut checks: BTreeMap<&'static str, bool> = BTreeMap::new();
    checks.insert("order", sub.order() == max.expected_order);
    let expected_class_count = match max.kind {
        MaximalKind::Borel => {
            checks.insert("class_count", sub.classes().count() as u64 == q + 2);
            Some(q + 2)
        }
        MaximalKind::Dihedral => {
            // 2(q-1) elements, q-1 of them involutions, abelianization C2
            checks.insert("involutions", fp.involutions == q - 1);
            let derived = groups::commutator_subgroup(sub, caps.closure)?;
            checks.insert("abelianization_order_2", sub.order() / derived.order() == 2);
            None
        }
        MaximalKind::TorusPlus | MaximalKind::TorusMinus => {
            // a cyclic torus of index 4
            checks.insert("cyclic_torus_index_4", fp.exponent % (max.expected_order / 4) == 0);
            None
        }
    };
    Ok(SubgroupCertificate {
        which: max.kind,
        q,
        order: sub.order(),
        expected_order: max.expected_order,
        class_count: sub.classes().count(),
        expected_class_count,
        fingerprint: fp,
        checks,
    })
}

#[derive(serde::Serialize)]
struct FamilyEntry {
    which: MaximalKind,
    order: u64,
    class_count: usize,
    total_degree_h: u64,
    max_degree_g: u64,
    filter_fires: bool,
    /// Force-full decision (the filter is audited, never trusted alone).
    report: SgpReport,
}

#[derive(serde::Serialize)]
struct MaximalScanReport {
    q: u64,
    group_order: u64,
    group_class_count: usize,
    p: u64,
    families: Vec<FamilyEntry>,
    all_non_sgp: bool,
    statement: String,
    subfield_families: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<String, u128>>,
}

/// Scan the constructed maximal subgroups of Sz(2^m): for each family, the
/// total-character filter and the full multiplicity matrix.
pub fn maximal_scan(m: u32, caps: &Caps, mut timings: Timings) -> Result<()> {
    let start = Instant::now();
    let sz = Suzuki::build_with_cap(m, caps.closure)?;
    timings.record("build", start);
    let g = sz.perm_group();
    let start = Instant::now();
    let ctx = chartab::dixon_context(g.order(), chartab::exponent(g));
    let tg = chartab::character_table_with(g, &ctx)?;
    timings.record("table", start);
    let max_degree_g = tg.degrees().iter().copied().max().unwrap_or(1);
    let start = Instant::now();
    let mut families = Vec::new();
    for max in sz.maximal_subgroups()? {
        let th = chartab::character_table_with(max.embedding.sub(), &ctx)?;
        let report = gelfand::is_strong_gelfand(&tg, &max.embedding, &th, true)?;
        families.push(FamilyEntry {
            which: max.kind,
            order: max.embedding.sub().order(),
            class_count: max.class_count,
            total_degree_h: th.total_degree(),
            max_degree_g,
            filter_fires: th.total_degree() < max_degree_g,
            report,
        });
    }
    timings.record("scan", start);
    let all_non_sgp = families.iter().all(|f| !f.report.verdict);
    let q = sz.params().q;
    let statement = if all_non_sgp {
        format!("no constructed maximal subgroup of Sz({q}) is a strong Gelfand subgroup")
    } else {
        format!("some maximal subgroup of Sz({q}) is a strong Gelfand subgroup")
    };
    let subfield_families = format!(
        "subfield subgroups Sz(q0) with q = q0^r require q0 > 2; q = {q} = 2^{m} has no such q0, so the family is empty here",
    );
    emit(&MaximalScanReport {
        q,
        group_order: g.order(),
        group_class_count: g.classes().count(),
        p: ctx.p,
        families,
        all_non_sgp,
        statement,
        subfield_families,
        timings_ms: timings.into_map(),
    });
    Ok(())
}
