//! Verification campaigns: scan every graph of a hereditary class up to a
//! size bound (internal enumeration or an ingested graph6 stream), run the
//! per-graph check a theorem or lemma calls for, and aggregate into a
//! plain-text report that is byte-identical across runs and worker counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{color_fork_butterfly, color_fork_gem, Step};
use crate::divisibility::find_perfect_division;
use crate::enumerate::enumerate_levels;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::{read_graph6, to_graph6};
use crate::patterns::{
    find_odd_balloon, find_odd_hole, is_free, minimum_odd_balloon, PatternId,
};
use crate::replay::validate_certificate;
use crate::solve::{chi_bound, chromatic_number, clique_number};
use crate::structure::{audit_lemma_2_4, find_homogeneous_set, is_bisimplicial, is_trisimplicial};

/// A hereditary graph class cut out by forbidden induced subgraphs. Every
/// shipped filter is hereditary, which is what makes size-ordered
/// counterexample scans return minimal witnesses.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ClassFilter {
    All,
    Fork,
    ForkGem,
    ForkButterfly,
    ForkOddBalloon,
    ForkP6,
    ForkBull,
    ForkCoDart,
    ForkHammer,
    ForkOddHole,
}

impl ClassFilter {
    pub const ALL: [ClassFilter; 10] = [
        ClassFilter::All,
        ClassFilter::Fork,
        ClassFilter::ForkGem,
        ClassFilter::ForkButterfly,
        ClassFilter::ForkOddBalloon,
        ClassFilter::ForkP6,
        ClassFilter::ForkBull,
        ClassFilter::ForkCoDart,
        ClassFilter::ForkHammer,
        ClassFilter::ForkOddHole,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::All => "all",
            ClassFilter::Fork => "fork",
            ClassFilter::ForkGem => "fork-gem",
            ClassFilter::ForkButterfly => "fork-butterfly",
            ClassFilter::ForkOddBalloon => "fork-odd-balloon",
            ClassFilter::ForkP6 => "fork-p6",
            ClassFilter::ForkBull => "fork-bull",
            ClassFilter::ForkCoDart => "fork-co-dart",
            ClassFilter::ForkHammer => "fork-hammer",
            ClassFilter::ForkOddHole => "fork-odd-hole",
        }
    }

    pub fn parse(s: &str) -> Option<ClassFilter> {
        ClassFilter::ALL.iter().find(|f| f.name() == s).copied()
    }

    pub fn matches(self, g: &Graph) -> bool {
        let fork_free = || is_free(g, PatternId::Fork);
        match self {
            ClassFilter::All => true,
            ClassFilter::Fork => fork_free(),
            ClassFilter::ForkGem => fork_free() && is_free(g, PatternId::Gem),
            ClassFilter::ForkButterfly => fork_free() && is_free(g, PatternId::Butterfly),
            ClassFilter::ForkOddBalloon => fork_free() && find_odd_balloon(g).is_none(),
            ClassFilter::ForkP6 => fork_free() && is_free(g, PatternId::P6),
            ClassFilter::ForkBull => fork_free() && is_free(g, PatternId::Bull),
            ClassFilter::ForkCoDart => fork_free() && is_free(g, PatternId::CoDart),
            ClassFilter::ForkHammer => fork_free() && is_free(g, PatternId::Hammer),
            ClassFilter::ForkOddHole => fork_free() && find_odd_hole(g, 5).is_none(),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CampaignId {
    /// Perfect divisibility of (fork, odd-balloon)-free graphs, also run
    /// with the corollary class filters.
    Theorem1,
    /// Certified coloring of (fork, gem)-free graphs within C(ω+1, 2).
    Theorem2,
    /// Certified coloring of (fork, butterfly)-free graphs within C(ω+1, 2).
    Theorem3,
    /// Odd holes in fork-free graphs: outside vertices with a pendant
    /// neighbor see a consecutive pair or the whole hole.
    Lemma24,
    /// (fork, gem)-free graphs with an odd balloon have a bisimplicial
    /// minimum-balloon center within the 2ω-2 degree cap.
    Lemma31,
    /// (fork, butterfly)-free analogue with trisimplicial centers and 3ω-3.
    Lemma41,
    /// Fork-free graphs: χ ≤ 3 at ω = 2 and χ ≤ 4 at ω = 3.
    Rb93SmallOmega,
}

impl CampaignId {
    pub const ALL: [CampaignId; 7] = [
        CampaignId::Theorem1,
        CampaignId::Theorem2,
        CampaignId::Theorem3,
        CampaignId::Lemma24,
        CampaignId::Lemma31,
        CampaignId::Lemma41,
        CampaignId::Rb93SmallOmega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CampaignId::Theorem1 => "theorem-1",
            CampaignId::Theorem2 => "theorem-2",
            CampaignId::Theorem3 => "theorem-3",
            CampaignId::Lemma24 => "lemma-2-4",
            CampaignId::Lemma31 => "lemma-3-1",
            CampaignId::Lemma41 => "lemma-4-1",
            CampaignId::Rb93SmallOmega => "rb93-small-omega",
        }
    }

    pub fn parse(s: &str) -> Option<CampaignId> {
        CampaignId::ALL.iter().find(|c| c.name() == s).copied()
    }

    pub fn default_filter(self) -> ClassFilter {
        match self {
            CampaignId::Theorem1 => ClassFilter::ForkOddBalloon,
            CampaignId::Theorem2 | CampaignId::Lemma31 => ClassFilter::ForkGem,
            CampaignId::Theorem3 | CampaignId::Lemma41 => ClassFilter::ForkButterfly,
            CampaignId::Lemma24 | CampaignId::Rb93SmallOmega => ClassFilter::Fork,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    /// Internal enumeration, capped at 8 vertices.
    Internal,
    /// A graph6 file, one graph per line.
    File(PathBuf),
}

impl Source {
    fn describe(&self) -> String {
        match self {
            Source::Internal => "internal".into(),
            Source::File(path) => format!("file:{}", path.display()),
        }
    }
}

/// Per-graph verdict produced by a campaign check.
pub struct CheckResult {
    pub stats: BTreeMap<&'static str, usize>,
    /// `None` means pass; otherwise a one-line reason.
    pub failure: Option<String>,
}

impl CheckResult {
    fn pass() -> CheckResult {
        CheckResult {
            stats: BTreeMap::new(),
            failure: None,
        }
    }

    fn with_stat(mut self, key: &'static str, value: usize) -> CheckResult {
        *self.stats.entry(key).or_insert(0) += value;
        self
    }

    fn fail(reason: String) -> CheckResult {
        CheckResult {
            stats: BTreeMap::new(),
            failure: Some(reason),
        }
    }
}

/// Deterministic campaign outcome. `render` excludes wall time so reports
/// compare byte-for-byte across runs; the timing is carried separately.
#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub campaign: CampaignId,
    pub filter: ClassFilter,
    pub source: String,
    pub n_max: usize,
    pub sizes: Option<(usize, usize)>,
    pub scanned: usize,
    pub checked: usize,
    pub stats: BTreeMap<&'static str, usize>,
    /// (graph6, reason), ordered by (size, canonical form).
    pub failures: Vec<(String, String)>,
    pub wall: Duration,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The stable text form; pinned by a golden sample in the test suite.
    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "campaign {}", self.campaign.name()).unwrap();
        writeln!(out, "filter {}", self.filter.name()).unwrap();
        writeln!(out, "source {}", self.source).unwrap();
        writeln!(out, "max-n {}", self.n_max).unwrap();
        match self.sizes {
            Some((lo, hi)) => writeln!(out, "sizes {lo}..{hi}").unwrap(),
            None => writeln!(out, "sizes -").unwrap(),
        }
        writeln!(out, "scanned {}", self.scanned).unwrap();
        writeln!(out, "checked {}", self.checked).unwrap();
        for (key, value) in &self.stats {
            writeln!(out, "stat {key}={value}").unwrap();
        }
        writeln!(out, "failures {}", self.failures.len()).unwrap();
        for (graph6, reason) in &self.failures {
            writeln!(out, "failure {graph6} {reason}").unwrap();
        }
        writeln!(out, "verdict {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

/// Runs one campaign. The filter defaults to the campaign's class and may be
/// overridden (the theorem-1 corollary classes, or diagnostics over `all`).
/// With `fail_fast`, scanning stops after the first size level that produced
/// failures; that level is still fully scanned, keeping the report
/// deterministic.
pub fn run_campaign(
    campaign: CampaignId,
    n_max: usize,
    source: &Source,
    filter_override: Option<ClassFilter>,
    fail_fast: bool,
) -> Result<CampaignReport> {
    let filter = filter_override.unwrap_or_else(|| campaign.default_filter());
    let start = Instant::now();

    // levels[i] holds the class members with i vertices, ascending sizes
    let (levels, scanned_total, checked_total): (Vec<Vec<Graph>>, usize, usize) = match source {
        Source::Internal => {
            let levels = enumerate_levels(n_max, |g| filter.matches(g))?;
            let checked = levels.iter().map(Vec::len).sum();
            (levels, checked, checked)
        }
        Source::File(path) => {
            let reader = BufReader::new(File::open(path)?);
            let graphs: Vec<Graph> = read_graph6(reader).collect::<Result<_>>()?;
            let mut levels: Vec<Vec<Graph>> = vec![Vec::new(); n_max + 1];
            let scanned = graphs.len();
            let mut checked = 0;
            for g in graphs {
                if g.n() > n_max {
                    return Err(crate::error::Error::SizeExceedsMax { n: g.n(), max: n_max });
                }
                if filter.matches(&g) {
                    checked += 1;
                    levels[g.n()].push(g);
                }
            }
            (levels, scanned, checked)
        }
    };

    let mut stats: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut failures: Vec<(String, String)> = Vec::new();
    let mut sizes: Option<(usize, usize)> = None;

    for level in &levels {
        if level.is_empty() {
            continue;
        }
        let n = level[0].n();
        sizes = Some(match sizes {
            None => (n, n),
            Some((lo, _)) => (lo, n),
        });
        let results: Vec<(String, CheckResult)> = level
            .par_iter()
            .map(|g| (to_graph6(g), check_graph(campaign, g)))
            .collect();
        let mut level_failed = false;
        let mut level_failures: Vec<(String, String)> = Vec::new();
        for (g6, result) in results {
            for (key, value) in result.stats {
                *stats.entry(key).or_insert(0) += value;
            }
            if let Some(reason) = result.failure {
                level_failed = true;
                level_failures.push((g6, reason));
            }
        }
        level_failures.sort();
        failures.extend(level_failures);
        if fail_fast && level_failed {
            break;
        }
    }

    Ok(CampaignReport {
        campaign,
        filter,
        source: source.describe(),
        n_max,
        sizes,
        scanned: scanned_total,
        checked: checked_total,
        stats,
        failures,
        wall: start.elapsed(),
    })
}

/// Re-runs the campaign check on a single graph; failure lines in a report
/// re-trigger through exactly this path.
pub fn check_graph(campaign: CampaignId, g: &Graph) -> CheckResult {
    match campaign {
        CampaignId::Theorem1 => check_division(g),
        CampaignId::Theorem2 => check_certified_coloring(g, true),
        CampaignId::Theorem3 => check_certified_coloring(g, false),
        CampaignId::Lemma24 => check_hole_neighborhoods(g),
        CampaignId::Lemma31 => check_balloon_center(g, true),
        CampaignId::Lemma41 => check_balloon_center(g, false),
        CampaignId::Rb93SmallOmega => check_small_omega(g),
    }
}

fn check_division(g: &Graph) -> CheckResult {
    match find_perfect_division(g) {
        Err(e) => CheckResult::fail(format!("division-error: {e}")),
        Ok(Some(div)) => {
            if !div.verify(g) {
                return CheckResult::fail("division-failed-reverification".into());
            }
            let key = match div.method {
                crate::divisibility::DivisionMethod::Perfect => "division-perfect",
                crate::divisibility::DivisionMethod::VertexCriterion(_) => "division-vertex",
                crate::divisibility::DivisionMethod::Exhaustive => "division-exhaustive",
            };
            CheckResult::pass().with_stat(key, 1)
        }
        Ok(None) => {
            // a minimal counterexample cannot carry a homogeneous set; if one
            // is present the scan itself is suspect, so flag it distinctly
            if find_homogeneous_set(g).is_some() {
                CheckResult::fail("no-division non-minimal-flag".into())
            } else {
                CheckResult::fail("no-division".into())
            }
        }
    }
}

fn check_certified_coloring(g: &Graph, gem: bool) -> CheckResult {
    let run = if gem {
        color_fork_gem(g)
    } else {
        color_fork_butterfly(g)
    };
    let (coloring, cert) = match run {
        Ok(pair) => pair,
        Err(e) => return CheckResult::fail(format!("coloring-error: {e}")),
    };
    let bound = chi_bound(clique_number(g));
    if coloring.palette_span() > bound {
        return CheckResult::fail(format!(
            "colors {} exceed bound {bound}",
            coloring.palette_span()
        ));
    }
    if let Err(e) = validate_certificate(&cert.to_text(g)) {
        return CheckResult::fail(format!("replay-rejected: {e}"));
    }
    if chromatic_number(g) > bound {
        return CheckResult::fail(format!("exact-chi-exceeds-bound {bound}"));
    }
    let mut result = CheckResult::pass();
    for step in &cert.steps {
        result = match step {
            Step::Peel { .. } => result.with_stat("peels", 1),
            Step::Divide { .. } => result.with_stat("divides", 1),
            Step::ExactFallback { .. } => result.with_stat("exact-fallbacks", 1),
        };
    }
    result
}

fn check_hole_neighborhoods(g: &Graph) -> CheckResult {
    let violations = audit_lemma_2_4(g);
    if violations.is_empty() {
        CheckResult::pass()
    } else {
        let v = &violations[0];
        CheckResult::fail(format!(
            "hole-neighborhood-violations {} first u={} v={} seen={}",
            violations.len(),
            v.u,
            v.v,
            v.neighborhood
        ))
    }
}

fn check_balloon_center(g: &Graph, gem: bool) -> CheckResult {
    let Some(balloon) = minimum_odd_balloon(g) else {
        return CheckResult::pass();
    };
    if !balloon.verify(g) {
        return CheckResult::fail("balloon-witness-failed-reverification".into());
    }
    let omega = clique_number(g);
    let (center_ok, cap, kind) = if gem {
        (is_bisimplicial(g, balloon.center), 2 * omega - 2, "bisimplicial")
    } else {
        (is_trisimplicial(g, balloon.center), 3 * omega - 3, "trisimplicial")
    };
    if !center_ok {
        // distinguish a failed center from total absence
        let any = g.vertices().any(|v| {
            if gem {
                is_bisimplicial(g, v)
            } else {
                is_trisimplicial(g, v)
            }
        });
        return CheckResult::fail(format!(
            "balloon-center-not-{kind} center={} any-{kind}-vertex={any}",
            balloon.center
        ));
    }
    if g.degree(balloon.center) > cap {
        return CheckResult::fail(format!(
            "balloon-center-degree {} exceeds cap {cap}",
            g.degree(balloon.center)
        ));
    }
    CheckResult::pass().with_stat("balloons-found", 1)
}

fn check_small_omega(g: &Graph) -> CheckResult {
    match clique_number(g) {
        2 => {
            let chi = chromatic_number(g);
            if chi <= 3 {
                CheckResult::pass().with_stat("omega2-checked", 1)
            } else {
                CheckResult::fail(format!("chi {chi} above 3 at omega 2"))
            }
        }
        3 => {
            let chi = chromatic_number(g);
            if chi <= 4 {
                CheckResult::pass().with_stat("omega3-checked", 1)
            } else {
                CheckResult::fail(format!("chi {chi} above 4 at omega 3"))
            }
        }
        _ => CheckResult::pass().with_stat("omega-out-of-scope", 1),
    }
}
