//! Invariant checks run by `ratcat verify`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use ratcat::statistics::{dinv_fast, dinv_naive, skips_cells};
use ratcat::three_n::{
    construct_word, schur_expansion, skips_adjacent, swap_bijection, triple_of_path,
};
use ratcat::{
    enumerate_paths, rational_catalan, stat_triple, CoprimePair, DyckPath, RankWord, Var,
};
use serde::Serialize;

use crate::config::RunConfig;
use crate::failure::Failure;
use crate::genfun::{compute_c, compute_w};
use crate::sweep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Count,
    Conservation,
    FastDinv,
    Transport,
    Classes,
    Genfun,
    Schur,
    QtSymmetry,
    TripleRoundtrip,
    SwapInvolution,
    SkipsAdjacent,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Count,
        Check::Conservation,
        Check::FastDinv,
        Check::Transport,
        Check::Classes,
        Check::Genfun,
        Check::Schur,
        Check::QtSymmetry,
        Check::TripleRoundtrip,
        Check::SwapInvolution,
        Check::SkipsAdjacent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Count => "count",
            Check::Conservation => "conservation",
            Check::FastDinv => "fast-dinv",
            Check::Transport => "transport",
            Check::Classes => "classes",
            Check::Genfun => "genfun",
            Check::Schur => "schur",
            Check::QtSymmetry => "qt-symmetry",
            Check::TripleRoundtrip => "triple-roundtrip",
            Check::SwapInvolution => "swap-involution",
            Check::SkipsAdjacent => "skips-adjacent",
        }
    }

    fn needs_m3(self) -> bool {
        matches!(
            self,
            Check::Schur | Check::TripleRoundtrip | Check::SwapInvolution | Check::SkipsAdjacent
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Parses `all` or a comma-separated list of check names.
pub fn parse_checks(list: &str) -> Result<Vec<Check>, Failure> {
    if list.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut checks = list
        .split(',')
        .map(|s| s.trim().parse::<Check>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| {
            let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
            Failure::usage(format!("{e}; known checks: all, {}", known.join(", ")))
        })?;
    checks.sort();
    checks.dedup();
    Ok(checks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<&'static str>,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<DyckPath>,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{status} {}", self.check)?;
        if let Some(label) = self.label {
            write!(f, " [{label}]")?;
        }
        write!(f, ": {}", self.detail)?;
        if let Some(p) = &self.counterexample {
            write!(f, "; counterexample {p}")?;
        }
        Ok(())
    }
}

/// Runs a per-path predicate over every path; the first failure in
/// enumeration order is the counterexample.
fn per_path<F>(
    cfg: &RunConfig,
    pair: CoprimePair,
    check: F,
) -> Result<(usize, Option<(DyckPath, String)>), Failure>
where
    F: Fn(&DyckPath) -> Option<String> + Sync,
{
    let pool = cfg.pool()?;
    let mut seen = 0usize;
    let mut failure = None;
    sweep::ordered(&pool, enumerate_paths(pair), check, |p, bad| {
        seen += 1;
        match bad {
            Some(why) => {
                failure = Some((p, why));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok((seen, failure))
}

fn fast_dinv(p: &DyckPath) -> Option<String> {
    (dinv_fast(p) != dinv_naive(p)).then(|| "fast and naive dinv cells differ".into())
}

fn conservation(p: &DyckPath) -> Option<String> {
    let pair = p.pair();
    let st = stat_triple(p);
    let want = (pair.m() as usize - 1) * (pair.n() as usize - 1) / 2;
    (st.total() as usize != want)
        .then(|| format!("area+dinv+skips = {}, expected {want}", st.total()))
}

fn transport(p: &DyckPath) -> Option<String> {
    let w = RankWord::from_path(p);
    if w.to_path() != *p {
        return Some("path -> word -> path is not the identity".into());
    }
    let (ws, ps) = (w.stats(), stat_triple(p));
    (ws != ps).then(|| format!("word stats {ws:?} differ from path stats {ps:?}"))
}

fn classes(p: &DyckPath) -> Option<String> {
    let (k, s) = (
        RankWord::from_path(p).skip_classes().len(),
        skips_cells(p).len(),
    );
    (k != s).then(|| format!("{k} skip classes, {s} skip cells"))
}

fn triple_roundtrip(p: &DyckPath) -> Option<String> {
    let t = match triple_of_path(p) {
        Ok(t) => t,
        Err(e) => return Some(e.to_string()),
    };
    match construct_word(t) {
        Ok(w) if w.to_path() == *p => None,
        Ok(w) => Some(format!("triple {t} constructs {}", w.to_path())),
        Err(e) => Some(e.to_string()),
    }
}

fn swap_involution(p: &DyckPath) -> Option<String> {
    let img = match swap_bijection(p) {
        Ok(img) => img,
        Err(e) => return Some(e.to_string()),
    };
    let (a, b) = (stat_triple(p), stat_triple(&img));
    if (a.area, a.dinv, a.skips) != (b.dinv, b.area, b.skips) {
        return Some(format!("image {img} has stats {b:?}, source {a:?}"));
    }
    match swap_bijection(&img) {
        Ok(back) if back == *p => None,
        Ok(back) => Some(format!("swapping twice gives {back}")),
        Err(e) => Some(e.to_string()),
    }
}

fn skips_adjacent_rule(p: &DyckPath) -> Option<String> {
    let w = RankWord::from_path(p);
    match skips_adjacent(&w) {
        Ok(k) if k as usize == w.skip_classes().len() => None,
        Ok(k) => Some(format!(
            "{k} adjacent skips, {} skip classes",
            w.skip_classes().len()
        )),
        Err(e) => Some(e.to_string()),
    }
}

fn from_per_path(check: Check, outcome: (usize, Option<(DyckPath, String)>)) -> Report {
    let (seen, failure) = outcome;
    match failure {
        None => Report {
            check: check.name(),
            status: Status::Pass,
            label: None,
            detail: format!("all {seen} paths"),
            counterexample: None,
        },
        Some((p, why)) => Report {
            check: check.name(),
            status: Status::Fail,
            label: None,
            detail: why,
            counterexample: Some(p),
        },
    }
}

fn verdict(check: Check, ok: bool, detail: String) -> Report {
    Report {
        check: check.name(),
        status: if ok { Status::Pass } else { Status::Fail },
        label: None,
        detail,
        counterexample: None,
    }
}

pub fn run(cfg: &RunConfig, pair: CoprimePair, check: Check) -> Result<Report, Failure> {
    if check.needs_m3() && pair.m() != 3 {
        return Ok(Report {
            check: check.name(),
            status: Status::Skip,
            label: None,
            detail: "requires m = 3".into(),
            counterexample: None,
        });
    }
    cfg.admit_all(pair)?;
    let report = match check {
        Check::Count => {
            let got = enumerate_paths(pair).count() as u128;
            let want = rational_catalan(pair).expect("admitted count fits");
            verdict(
                check,
                got == want,
                format!("{got} paths, formula gives {want}"),
            )
        }
        Check::Conservation => from_per_path(check, per_path(cfg, pair, conservation)?),
        Check::FastDinv => from_per_path(check, per_path(cfg, pair, fast_dinv)?),
        Check::Transport => from_per_path(check, per_path(cfg, pair, transport)?),
        Check::Classes => from_per_path(check, per_path(cfg, pair, classes)?),
        Check::TripleRoundtrip => from_per_path(check, per_path(cfg, pair, triple_roundtrip)?),
        Check::SwapInvolution => from_per_path(check, per_path(cfg, pair, swap_involution)?),
        Check::SkipsAdjacent => from_per_path(check, per_path(cfg, pair, skips_adjacent_rule)?),
        Check::Genfun => {
            let w = compute_w(cfg, pair)?;
            let c = compute_c(cfg, pair)?;
            let ok = w.substitute_one(Var::B)? == c;
            verdict(check, ok, "W(1,q,t) = C(q,t)".into())
        }
        Check::Schur => {
            let ok = compute_w(cfg, pair)? == schur_expansion(pair.n())?;
            verdict(check, ok, "W equals the two-row Schur expansion".into())
        }
        Check::QtSymmetry => {
            let c = compute_c(cfg, pair)?;
            let mut r = verdict(check, c.is_qt_symmetric(), "C(q,t) = C(t,q)".into());
            if pair.m() > 3 {
                r.label = Some("conjecture check (m>3)");
            }
            r
        }
    };
    Ok(report)
}
