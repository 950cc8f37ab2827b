//! Run orchestration and report rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::catalog::{catalog, find, CatalogEntry, CatalogPartition, Tier};
use crate::chartab::{character_table, CharacterTable, RepVector};
use crate::error::{Error, Result};
use crate::fimonoid::{analyze, FactorizationWitness};
use crate::fusion::{fusion_from_partition, fusion_pattern, parse_partition, FusionPattern};
use crate::perm::{parse_generators, sylow_subgroup, PermGroup, DEFAULT_CONJUGACY_CAP};
use crate::repring::rep_lattice;
use crate::util::is_prime;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Full,
    Fusion,
    Lattice,
}

#[derive(Clone, Debug)]
pub enum GroupSource {
    Catalog(String),
    /// An entry not necessarily in the built-in catalog.
    Entry(Box<CatalogEntry>),
    /// A generator file: optional `degree N` line, then one permutation per
    /// line in cycle notation.
    File(PathBuf),
}

impl GroupSource {
    /// A catalog name if one matches, otherwise a path.
    pub fn detect(text: &str) -> Self {
        if find(text).is_ok() {
            GroupSource::Catalog(text.to_string())
        } else {
            GroupSource::File(PathBuf::from(text))
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub source: GroupSource,
    /// Defaults to the catalog prime for catalog sources.
    pub prime: Option<u64>,
    pub mode: Mode,
    /// 0-based blocks of classes of the given group, which is then taken to
    /// be the `p`-group itself.
    pub partition: Option<Vec<Vec<usize>>>,
    pub conjugacy_cap: u64,
    pub timings: bool,
}

impl RunOptions {
    pub fn new(source: GroupSource) -> Self {
        RunOptions {
            source,
            prime: None,
            mode: Mode::Full,
            partition: None,
            conjugacy_cap: DEFAULT_CONJUGACY_CAP,
            timings: false,
        }
    }

    pub fn catalog(name: &str) -> Self {
        Self::new(GroupSource::Catalog(name.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub group: String,
    pub prime: u64,
    pub degree: usize,
    pub group_order: String,
    pub mode: Mode,
    /// 1-based, as supplied.
    pub partition: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub representative: String,
    pub size: u64,
    pub element_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SylowSummary {
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassSummary>,
    pub degrees: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionSummary {
    pub labels: Vec<usize>,
    pub class_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSummary {
    pub rank: usize,
    pub basis: Vec<Vec<String>>,
    pub display: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomSummary {
    pub multiplicities: Vec<u64>,
    pub dimension: u64,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSummary {
    pub element: Vec<u64>,
    /// 1-based atom indices.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub relation: String,
}

impl From<&FactorizationWitness> for WitnessSummary {
    fn from(w: &FactorizationWitness) -> Self {
        WitnessSummary {
            element: w.element.mult.clone(),
            left: w.decomp_a.iter().map(|i| i + 1).collect(),
            right: w.decomp_b.iter().map(|i| i + 1).collect(),
            relation: w.relation_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub atom_count: usize,
    pub factorial: bool,
    pub half_factorial: bool,
    pub regular_conjecture: bool,
    pub transitive: bool,
    pub factorial_witness: Option<WitnessSummary>,
    pub half_factorial_witness: Option<WitnessSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: InputEcho,
    pub sylow: SylowSummary,
    pub fusion: FusionSummary,
    pub lattice: Option<LatticeSummary>,
    pub atoms: Option<Vec<AtomSummary>>,
    pub verdicts: Option<Verdicts>,
    /// Seconds per stage; only filled on request so that reports stay
    /// byte-identical across runs.
    pub timings: Option<BTreeMap<String, f64>>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let i = &self.input;
        let _ = writeln!(s, "group        {}", i.group);
        let _ = writeln!(s, "prime        {}", i.prime);
        let _ = writeln!(s, "degree       {}", i.degree);
        let _ = writeln!(s, "order        {}", i.group_order);
        let _ = writeln!(s, "|S|          {}", self.sylow.order);
        let _ = writeln!(s, "S-classes    {}", self.sylow.classes.len());
        let _ = writeln!(s, "degrees      {:?}", self.sylow.degrees);
        let _ = writeln!(s, "fusion       {:?}", self.fusion.labels);
        let _ = writeln!(s, "classes      {}", self.fusion.class_count);
        if let Some(l) = &self.lattice {
            let _ = writeln!(s, "lattice rank {}", l.rank);
            for (k, line) in l.display.iter().enumerate() {
                let _ = writeln!(s, "  b{:<3} {}", k + 1, line);
            }
        }
        if let Some(atoms) = &self.atoms {
            let _ = writeln!(s, "atoms        {}", atoms.len());
            for (k, a) in atoms.iter().enumerate() {
                let _ = writeln!(s, "  α{:<3} dim {:<6} {}", k + 1, a.dimension, a.display);
            }
        }
        if let Some(v) = &self.verdicts {
            let _ = writeln!(s, "factorial    {}", v.factorial);
            if let Some(w) = &v.factorial_witness {
                let _ = writeln!(s, "  witness    {}", w.relation);
            }
            let _ = writeln!(s, "half-fact.   {}", v.half_factorial);
            if let Some(w) = &v.half_factorial_witness {
                let _ = writeln!(s, "  witness    {}", w.relation);
            }
            let _ = writeln!(s, "regular      {}", v.regular_conjecture);
            let _ = writeln!(s, "transitive   {}", v.transitive);
        }
        if let Some(t) = &self.timings {
            for (k, v) in t {
                let _ = writeln!(s, "time {k:<8} {v:.3}s");
            }
        }
        s
    }
}

/// Reads a generator file: `degree N` (optional) and permutations.
pub fn load_group_file(path: &std::path::Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let (degree, gens) = parse_generators(&text)?;
    PermGroup::from_generators(degree, &gens)
}

/// Reads a partition file holding 1-based JSON blocks.
pub fn load_partition_file(path: &std::path::Path) -> Result<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    parse_partition(&text)
}

fn transitive_partition(classes: usize) -> Vec<Vec<usize>> {
    let mut p = vec![vec![0]];
    if classes > 1 {
        p.push((1..classes).collect());
    }
    p
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn summarize_sylow(t: &CharacterTable) -> SylowSummary {
    SylowSummary {
        order: t.group_order(),
        exponent: t.exponent(),
        classes: t
            .classes()
            .iter()
            .map(|c| ClassSummary {
                representative: c.representative.to_string(),
                size: c.size,
                element_order: c.element_order,
            })
            .collect(),
        degrees: t.degrees().to_vec(),
    }
}

fn atom_summary(a: &RepVector, degrees: &[u64]) -> AtomSummary {
    AtomSummary { multiplicities: a.mult.clone(), dimension: a.dimension(degrees), display: a.to_string() }
}

/// Runs the pipeline as far as `opts.mode` asks.
pub fn run(opts: &RunOptions) -> Result<RunReport> {
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, f64>| {
        timings.insert(name.to_string(), clock.elapsed().as_secs_f64());
        clock = Instant::now();
    };

    let (name, entry, g): (String, Option<&CatalogEntry>, PermGroup) = match &opts.source {
        GroupSource::Catalog(n) => {
            let e = find(n)?;
            (e.name.clone(), Some(e), e.group()?)
        }
        GroupSource::Entry(e) => (e.name.clone(), Some(&**e), e.group()?),
        GroupSource::File(path) => (path.display().to_string(), None, load_group_file(path)?),
    };
    let p = opts
        .prime
        .or(entry.map(|e| e.prime))
        .ok_or_else(|| Error::InvalidInput("a prime is required for generator files".into()))?;
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }

    let partition = match (&opts.partition, entry.and_then(|e| e.partition)) {
        (Some(blocks), _) => Some(blocks.clone()),
        (None, Some(CatalogPartition::Transitive)) => None,
        (None, None) => None,
    };
    let given_pattern = opts.partition.is_some() || entry.and_then(|e| e.partition).is_some();

    let s = if given_pattern {
        let order = g.order_u64()?;
        if !is_power_of(order, p) {
            return Err(Error::InvalidInput(format!(
                "a fusion partition needs the {p}-group itself as the group source, got order {order}"
            )));
        }
        g.clone()
    } else {
        sylow_subgroup(&g, p)?
    };
    lap("sylow", &mut timings);

    let t = character_table(&s)?;
    lap("table", &mut timings);

    let f: FusionPattern = if given_pattern {
        let blocks = partition.clone().unwrap_or_else(|| transitive_partition(t.class_count()));
        fusion_from_partition(&blocks, &t)?
    } else {
        fusion_pattern(&g, &s, &t, opts.conjugacy_cap)?
    };
    lap("fusion", &mut timings);

    let input = InputEcho {
        group: name,
        prime: p,
        degree: g.degree(),
        group_order: g.order().to_string(),
        mode: opts.mode,
        partition: opts.partition.as_ref().map(|b| b.iter().map(|x| x.iter().map(|i| i + 1).collect()).collect()),
    };
    let mut report = RunReport {
        input,
        sylow: summarize_sylow(&t),
        fusion: FusionSummary { labels: f.labels().to_vec(), class_count: f.class_count() },
        lattice: None,
        atoms: None,
        verdicts: None,
        timings: None,
    };
    if opts.mode != Mode::Fusion {
        let l = rep_lattice(&f, &t)?;
        report.lattice = Some(LatticeSummary {
            rank: l.rank(),
            basis: l.basis().row_iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
            display: l.display_lines(),
        });
        lap("lattice", &mut timings);
        if opts.mode == Mode::Full {
            let m = analyze(l, &t, &f)?;
            lap("atoms", &mut timings);
            report.atoms = Some(m.atoms.iter().map(|a| atom_summary(a, t.degrees())).collect());
            report.verdicts = Some(Verdicts {
                atom_count: m.atoms.len(),
                factorial: m.factorial,
                half_factorial: m.half_factorial,
                regular_conjecture: m.regular_conjecture_holds,
                transitive: m.transitive,
                factorial_witness: m.factorial_witness.as_ref().map(WitnessSummary::from),
                half_factorial_witness: m.half_factorial_witness.as_ref().map(WitnessSummary::from),
            });
        }
    }
    if opts.timings {
        report.timings = Some(timings);
    }
    Ok(report)
}

/// Which catalog tiers a verification covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TierSelection {
    Fast,
    Table,
    All,
}

impl TierSelection {
    pub fn includes(self, t: Tier) -> bool {
        match self {
            TierSelection::Fast => t == Tier::Fast,
            TierSelection::Table => t == Tier::Table,
            TierSelection::All => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub field: String,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryResult {
    pub name: String,
    pub tier: Tier,
    pub classes: Option<usize>,
    pub atoms: Option<usize>,
    pub factorial: Option<bool>,
    pub half_factorial: Option<bool>,
    pub mismatches: Vec<Mismatch>,
    pub error: Option<String>,
    pub seconds: f64,
}

impl EntryResult {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub entries: Vec<EntryResult>,
}

impl VerifySummary {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(EntryResult::ok)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            let status = if e.ok() { "ok" } else { "MISMATCH" };
            let _ = write!(
                s,
                "{:<10} {:<6} classes {:<3} atoms {:<4} factorial {:<5} half {:<5} {:>8.2}s  {}",
                e.name,
                e.tier,
                show(e.classes),
                show(e.atoms),
                e.factorial.map_or("-".into(), |b| b.to_string()),
                e.half_factorial.map_or("-".into(), |b| b.to_string()),
                e.seconds,
                status
            );
            for m in &e.mismatches {
                let _ = write!(s, "  [{}: expected {}, found {}]", m.field, m.expected, m.found);
            }
            if let Some(err) = &e.error {
                let _ = write!(s, "  [error: {err}]");
            }
            s.push('\n');
        }
        s
    }
}

fn diff<T: PartialEq + ToString>(out: &mut Vec<Mismatch>, field: &str, expected: Option<T>, found: Option<T>) {
    if let Some(e) = expected {
        if found.as_ref() != Some(&e) {
            out.push(Mismatch {
                field: field.into(),
                expected: e.to_string(),
                found: found.map_or("none".into(), |f| f.to_string()),
            });
        }
    }
}

/// Runs one catalog entry and compares it with its expectations.
pub fn verify_entry(entry: &CatalogEntry) -> EntryResult {
    let start = Instant::now();
    let result = run(&RunOptions::new(GroupSource::Entry(Box::new(entry.clone()))));
    let mut r = EntryResult {
        name: entry.name.clone(),
        tier: entry.tier,
        classes: None,
        atoms: None,
        factorial: None,
        half_factorial: None,
        mismatches: Vec::new(),
        error: None,
        seconds: 0.0,
    };
    match result {
        Ok(report) => {
            r.classes = Some(report.fusion.class_count);
            if let Some(v) = &report.verdicts {
                r.atoms = Some(v.atom_count);
                r.factorial = Some(v.factorial);
                r.half_factorial = Some(v.half_factorial);
            }
            let e = &entry.expected;
            diff(&mut r.mismatches, "classes", e.classes, r.classes);
            diff(&mut r.mismatches, "atoms", e.atoms, r.atoms);
            diff(&mut r.mismatches, "factorial", e.factorial, r.factorial);
            diff(&mut r.mismatches, "half_factorial", e.half_factorial, r.half_factorial);
        }
        Err(err) => r.error = Some(err.to_string()),
    }
    r.seconds = start.elapsed().as_secs_f64();
    r
}

/// Verifies every built-in entry in the selected tiers, in catalog order.
pub fn verify_catalog(tiers: TierSelection) -> VerifySummary {
    verify_entries(catalog(), tiers)
}

pub fn verify_entries(entries: &[CatalogEntry], tiers: TierSelection) -> VerifySummary {
    VerifySummary { entries: entries.iter().filter(|e| tiers.includes(e.tier)).map(verify_entry).collect() }
}
