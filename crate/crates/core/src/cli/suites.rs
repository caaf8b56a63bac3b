//! Verification suites behind `qtenum verify`. Each case compares two
//! independent routes to the same object or polynomial.

use std::collections::HashSet;
use std::io::Write;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use super::{CliError, CliResult, Format, RunConfig, Suite};
use crate::enumerators::{qt_brute, rp_rec, EnumKey, Family, Recursions};
use crate::labelled_objects::{
    all_dyck_paths, all_labellings, all_pdp, all_two_car, eta, eta_inv, psi, psi_inv,
    LabelledPolyomino, ParkingFunction, PartiallyLabelledDyckPath, TwoCarPF,
};
use crate::macdonald_oracle::{
    certify_equal, default_bounds, delta_hh, scalar_hook, sf_sum_term, OracleError, PartitionSum,
};
use crate::polyomino_core::{
    all_polyominoes, all_reduced, rp_zeta, rp_zeta_inv, subsets, zeta, zeta_inv, Decorated,
    DecorationKind, Polyomino, ReducedPolyomino,
};
use crate::qt_algebra::QtPoly;

/// Outcome of one verification case.
#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub suite: &'static str,
    pub case: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Case {
    fn new(suite: &'static str, case: String, failures: Vec<String>) -> Self {
        let pass = failures.is_empty();
        let mut detail = failures.into_iter().take(3).collect::<Vec<_>>().join("; ");
        if detail.len() > 400 {
            detail.truncate(400);
        }
        Case {
            suite,
            case,
            pass,
            detail,
        }
    }
}

pub fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Zeta => "zeta",
        Suite::Psi => "psi",
        Suite::Eta => "eta",
        Suite::Pmaj => "pmaj",
        Suite::Recursions => "recursions",
        Suite::MainIdentity => "main-identity",
        Suite::HhDelta => "hh-delta",
        Suite::Symmetry => "symmetry",
    }
}

/// Default largest `m + n` per suite.
pub fn default_size(s: Suite) -> usize {
    match s {
        Suite::Zeta | Suite::Psi | Suite::Pmaj => 7,
        Suite::Eta | Suite::MainIdentity | Suite::HhDelta | Suite::Symmetry => 5,
        Suite::Recursions => 8,
    }
}

pub fn run_suite(
    cfg: &RunConfig,
    suite: Suite,
    size: Option<usize>,
    out: &mut dyn Write,
) -> CliResult<()> {
    let size = size.unwrap_or_else(|| default_size(suite));
    if size > cfg.cap {
        return Err(CliError::Cap(format!(
            "suite size {size} exceeds the cap {}",
            cfg.cap
        )));
    }
    let cases = cases(cfg, suite, size)?;
    let failed = cases.iter().filter(|c| !c.pass).count();
    for c in &cases {
        match cfg.format {
            Format::Text => writeln!(
                out,
                "{} {} {}{}",
                if c.pass { "PASS" } else { "FAIL" },
                c.suite,
                c.case,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                }
            )?,
            _ => writeln!(out, "{}", serde_json::to_string(c).expect("serializable"))?,
        }
    }
    let summary = serde_json::json!({
        "suite": suite_name(suite), "size": size,
        "passed": cases.len() - failed, "failed": failed,
    });
    writeln!(out, "{summary}")?;
    if failed > 0 {
        return Err(CliError::Disagreement(format!(
            "{failed} of {} cases failed in suite {}",
            cases.len(),
            suite_name(suite)
        )));
    }
    Ok(())
}

pub fn cases(cfg: &RunConfig, suite: Suite, size: usize) -> CliResult<Vec<Case>> {
    Ok(match suite {
        Suite::Zeta => zeta_cases(size),
        Suite::Psi => psi_cases(size),
        Suite::Eta => eta_cases(size),
        Suite::Pmaj => pmaj_cases(size),
        Suite::Recursions => recursion_cases(cfg, size)?,
        Suite::MainIdentity => main_identity_cases(cfg, size)?,
        Suite::HhDelta => hh_cases(cfg, size)?,
        Suite::Symmetry => symmetry_cases(cfg, size)?,
    })
}

fn check(fails: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        fails.push(msg());
    }
}

/// ζ on standard polyominoes and reduced ζ: bijective, statistics and
/// class index transported, mutual inverses.
pub fn zeta_cases(size: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 1..size {
        for n in 1..=(size - m) {
            for k in 0..=2 {
                let mut fails = Vec::new();
                let mut images = HashSet::new();
                for p in all_polyominoes(m, n) {
                    for s in subsets(&p.red_peaks(), k) {
                        let d = Decorated::<Polyomino>::new(p.clone(), DecorationKind::RedPeak, s)
                            .expect("red peaks");
                        let img = match zeta(&d) {
                            Ok(x) => x,
                            Err(e) => {
                                fails.push(format!("{d:?}: {e}"));
                                continue;
                            }
                        };
                        let stats_ok = (img.obj.m(), img.obj.n()) == (n, m)
                            && img.obj.dinv() == p.area()
                            && img.uarea().ok() == d.ubounce().ok()
                            && img.obj.area_word().count_value(1, false)
                                == p.bounce_word().word.count_value(1, false);
                        check(&mut fails, stats_ok, || format!("statistics of {d:?}"));
                        check(&mut fails, zeta_inv(&img).ok().as_ref() == Some(&d), || {
                            format!("inverse of {d:?}")
                        });
                        check(&mut fails, images.insert(img), || {
                            format!("collision at {d:?}")
                        });
                    }
                }
                let target: usize = all_polyominoes(n, m)
                    .iter()
                    .map(|q| subsets(&q.rises(), k).len())
                    .sum();
                check(&mut fails, images.len() == target, || {
                    format!("{} images, {target} targets", images.len())
                });
                out.push(Case::new(
                    "zeta",
                    format!("standard m={m} n={n} k={k}"),
                    fails,
                ));
            }
        }
    }
    for m in 0..=size {
        for n in 0..=(size - m) {
            for k in 0..=2 {
                let mut fails = Vec::new();
                let mut images = HashSet::new();
                for p in all_reduced(m, n) {
                    for s in subsets(&p.green_peaks(), k) {
                        let d = Decorated::<ReducedPolyomino>::new(
                            p.clone(),
                            DecorationKind::GreenPeak,
                            s,
                        )
                        .expect("green peaks");
                        let img = match rp_zeta(&d) {
                            Ok(x) => x,
                            Err(e) => {
                                fails.push(format!("{d:?}: {e}"));
                                continue;
                            }
                        };
                        let stats_ok = (img.obj.m(), img.obj.n()) == (m, n)
                            && img.obj.dinv() == p.area()
                            && img.uarea().ok() == d.ubounce().ok()
                            && img.obj.area_word().count_value(0, false)
                                == p.bounce_word().word.count_value(0, false) + 1;
                        check(&mut fails, stats_ok, || format!("statistics of {d:?}"));
                        check(
                            &mut fails,
                            rp_zeta_inv(&img).ok().as_ref() == Some(&d),
                            || format!("inverse of {d:?}"),
                        );
                        check(&mut fails, images.insert(img), || {
                            format!("collision at {d:?}")
                        });
                    }
                }
                let target: usize = all_reduced(m, n)
                    .iter()
                    .map(|q| subsets(&q.rises(), k).len())
                    .sum();
                check(&mut fails, images.len() == target, || {
                    format!("{} images, {target} targets", images.len())
                });
                out.push(Case::new(
                    "zeta",
                    format!("reduced m={m} n={n} k={k}"),
                    fails,
                ));
            }
        }
    }
    out
}

/// ψ: reduced polyominoes onto two-car parking functions, preserving
/// (dinv, uarea) and the class index.
pub fn psi_cases(size: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            if m + n == 0 {
                continue;
            }
            for k in 0..=2 {
                let mut fails = Vec::new();
                let mut images = HashSet::new();
                for p in all_reduced(m, n) {
                    let r = p.area_word().count_value(0, false);
                    for s in subsets(&p.rises(), k) {
                        let d =
                            Decorated::<ReducedPolyomino>::new(p.clone(), DecorationKind::Rise, s)
                                .expect("rises");
                        let img = match psi(&d) {
                            Ok(x) => x,
                            Err(e) => {
                                fails.push(format!("{d:?}: {e}"));
                                continue;
                            }
                        };
                        let two = TwoCarPF::try_from(img.obj.clone());
                        let ok = two
                            .as_ref()
                            .is_ok_and(|t| t.mn() == (m, n) && t.class_r() == r)
                            && img.obj.dinv() == p.dinv()
                            && img.uarea().ok() == d.uarea().ok();
                        check(&mut fails, ok, || format!("statistics of {d:?}"));
                        check(&mut fails, psi_inv(&img).ok().as_ref() == Some(&d), || {
                            format!("inverse of {d:?}")
                        });
                        check(&mut fails, images.insert(img), || {
                            format!("collision at {d:?}")
                        });
                    }
                }
                let target: usize = all_two_car(m, n)
                    .iter()
                    .map(|pf| subsets(&pf.pf().rises(), k).len())
                    .sum();
                check(&mut fails, images.len() == target, || {
                    format!("{} images, {target} targets", images.len())
                });
                out.push(Case::new("psi", format!("m={m} n={n} k={k}"), fails));
            }
        }
    }
    out
}

/// η: partially labelled Dyck paths onto labelled polyominoes.
pub fn eta_cases(size: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            let max = n as u32 + 1;
            let shift = (m + n + 1) as u32;
            let mut fails = Vec::new();
            let mut images = HashSet::new();
            for d in all_pdp(m, n, n, max) {
                let lp = match eta(&d) {
                    Ok(x) => x,
                    Err(e) => {
                        fails.push(format!("{d:?}: {e}"));
                        continue;
                    }
                };
                let ok = (lp.poly().m(), lp.poly().n()) == (m + 1, n + 1)
                    && d.uarea().ok().map(|u| u + shift) == Some(lp.poly().area())
                    && d.obj.pmaj() == lp.pmaj()
                    && d.obj.dinv() == lp.dinv();
                check(&mut fails, ok, || format!("statistics of {d:?}"));
                let pdp = PartiallyLabelledDyckPath::try_from(d.obj.clone()).expect("pdp");
                let canon = LabelledPolyomino::canonical(lp.poly().clone()).pmaj();
                check(&mut fails, pdp.bounce() == canon, || {
                    format!("diagonal bounce of {d:?}")
                });
                check(&mut fails, eta_inv(&lp).ok().as_ref() == Some(&d), || {
                    format!("inverse of {d:?}")
                });
                check(&mut fails, images.insert(lp), || {
                    format!("collision at {d:?}")
                });
            }
            let target: usize = all_polyominoes(m + 1, n + 1)
                .iter()
                .map(|p| all_labellings(p, max).len())
                .sum();
            check(&mut fails, images.len() == target, || {
                format!("{} images, {target} targets", images.len())
            });
            out.push(Case::new("eta", format!("m={m} n={n}"), fails));
        }
    }
    out
}

/// Bounce of a Dyck path computed from its touch points: the `j`-th run of
/// north steps of the bounce path contributes `j` per step.
pub fn touch_bounce(path: &[u8]) -> u32 {
    let n = path.len() / 2;
    let mut top = vec![0usize; n + 1];
    let (mut x, mut y) = (0usize, 0usize);
    for &s in path {
        if s == 1 {
            y += 1;
        } else {
            top[x] = y;
            x += 1;
        }
    }
    let (mut pos, mut run, mut total) = (0usize, 0u32, 0u32);
    while pos < n {
        total += run * (top[pos] - pos) as u32;
        pos = top[pos];
        run += 1;
    }
    total
}

/// pmaj statements: reduced bounce equals pmaj of the ψ image, identity
/// labels give the bounce of the path (also as a partially labelled path
/// without blanks), and the labelled-polyomino bound with equality for
/// canonical labels.
pub fn pmaj_cases(size: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            if m + n == 0 {
                continue;
            }
            let mut fails = Vec::new();
            for p in all_reduced(m, n) {
                let d = Decorated::<ReducedPolyomino>::plain(p.clone());
                match psi(&d) {
                    Ok(img) => check(&mut fails, img.obj.pmaj() == p.bounce(), || {
                        format!("bounce {} vs pmaj {} for {p:?}", p.bounce(), img.obj.pmaj())
                    }),
                    Err(e) => fails.push(format!("{p:?}: {e}")),
                }
            }
            out.push(Case::new(
                "pmaj",
                format!("reduced bounce m={m} n={n}"),
                fails,
            ));
        }
    }
    for s in 1..=size {
        let mut fails = Vec::new();
        for path in all_dyck_paths(s) {
            let pf = ParkingFunction::new(path.clone(), (1..=s as u32).collect()).expect("labels");
            check(&mut fails, pf.pmaj() == touch_bounce(&path), || {
                format!("{path:?}")
            });
            let pdp = PartiallyLabelledDyckPath::new(path.clone(), (1..=s as u32).collect())
                .expect("labels");
            check(&mut fails, pdp.bounce() == touch_bounce(&path), || {
                format!("diagonal {path:?}")
            });
        }
        out.push(Case::new(
            "pmaj",
            format!("identity labels size={s}"),
            fails,
        ));
    }
    let lp_size = size.min(5);
    for m in 1..lp_size {
        for n in 1..=(lp_size - m) {
            let mut fails = Vec::new();
            for p in all_polyominoes(m, n) {
                let top = p.bounce() - (m + n - 1) as u32;
                let canon = LabelledPolyomino::canonical(p.clone()).pmaj();
                check(&mut fails, canon == top, || {
                    format!("canonical {canon} vs {top} for {p:?}")
                });
                for lp in all_labellings(&p, (m + n) as u32) {
                    check(&mut fails, lp.pmaj() <= top, || format!("{lp:?}"));
                }
            }
            out.push(Case::new(
                "pmaj",
                format!("labelled bound m={m} n={n}"),
                fails,
            ));
        }
    }
    out
}

fn bounds_for(cfg: &RunConfig, comb: &QtPoly, size: u32) -> (u32, u32) {
    match cfg.grid {
        Some(g) => (g, g),
        None => default_bounds(comb, size),
    }
}

fn certify(
    cfg: &RunConfig,
    comb: &QtPoly,
    oracle: &PartitionSum,
    size: u32,
) -> Result<bool, OracleError> {
    let b = bounds_for(cfg, comb, size);
    Ok(certify_equal("", &[], comb, |pt| oracle.eval(pt), b)?.pass)
}

fn oracle_case(
    suite: &'static str,
    name: String,
    res: Result<bool, OracleError>,
) -> CliResult<Case> {
    match res {
        Ok(true) => Ok(Case::new(suite, name, vec![])),
        Ok(false) => Ok(Case::new(suite, name, vec!["grid residual".into()])),
        Err(OracleError::Bound { .. }) => {
            Ok(Case::new(suite, name, vec!["degree bound exceeded".into()]))
        }
        Err(e) => Err(e.into()),
    }
}

/// Brute force against every recursion, plus the F-chain at seeded sample
/// tuples. Standard families run up to `size`, reduced and two-car ones up
/// to `size - 1`.
pub fn recursion_cases(cfg: &RunConfig, size: usize) -> CliResult<Vec<Case>> {
    let rec = Recursions::new();
    let mut out = Vec::new();
    for family in Family::ALL {
        let top = if family.is_reduced() {
            size.saturating_sub(1)
        } else {
            size
        };
        for m in 0..=top {
            for n in 0..=(top - m) {
                if !family.is_reduced() && (m == 0 || n == 0) {
                    continue;
                }
                for k in 0..=3 {
                    let probe = EnumKey {
                        family,
                        m,
                        n,
                        class: 1,
                        k,
                    };
                    let (lo, hi) = probe.class_range();
                    let mut fails = Vec::new();
                    for class in lo..=hi {
                        let key = EnumKey::new(family, m, n, class, k)?;
                        let b = qt_brute(&key, cfg.cap)?;
                        let r = rec.for_key(&key)?;
                        check(&mut fails, b == r, || {
                            format!("{key}: brute {b}, recursion {r}")
                        });
                    }
                    out.push(Case::new(
                        "recursions",
                        format!("{family} m={m} n={n} k={k}"),
                        fails,
                    ));
                }
            }
        }
    }
    for (m, r, n, k) in f_chain_sample(cfg.seed, 10, 6) {
        let a = rec.rp_via_f(m, r, n, k);
        let b = rec.rp(m, r, n, k);
        let mut fails = Vec::new();
        check(&mut fails, a == b, || format!("via F {a}, direct {b}"));
        out.push(Case::new(
            "recursions",
            format!("F-chain m={m} r={r} n={n} k={k}"),
            fails,
        ));
    }
    Ok(out)
}

/// `count` distinct tuples `(m, r, n, k)` with `m + n <= max`,
/// `1 <= r <= m + 1`, `k <= 3`, chosen by `seed`.
pub fn f_chain_sample(seed: u64, count: usize, max: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut all = Vec::new();
    for m in 0..=max {
        for n in 0..=(max - m) {
            for r in 1..=m + 1 {
                for k in 0..=3 {
                    all.push((m, r, n, k));
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pick: Vec<_> = all.choose_multiple(&mut rng, count).copied().collect();
    pick.sort_unstable();
    pick
}

/// Each reduced class against its partition-sum formula.
pub fn main_identity_cases(cfg: &RunConfig, size: usize) -> CliResult<Vec<Case>> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            for k in 0..=2usize {
                for r in 1..=m + 1 {
                    let key = EnumKey::new(Family::RpStar, m, n, r, k)?;
                    let comb = qt_brute(&key, cfg.cap)?;
                    let oracle = sf_sum_term(m as u32, n as u32, k as u32, r as u32);
                    let res = certify(cfg, &comb, &oracle, (m + n) as u32);
                    out.push(oracle_case(
                        "main-identity",
                        format!("m={m} r={r} n={n} k={k}"),
                        res,
                    )?);
                }
            }
        }
    }
    Ok(out)
}

fn class_total(cfg: &RunConfig, family: Family, m: usize, n: usize, k: usize) -> CliResult<QtPoly> {
    let mut total = QtPoly::zero();
    for r in 1..=m + 1 {
        total += &qt_brute(&EnumKey::new(family, m, n, r, k)?, cfg.cap)?;
    }
    Ok(total)
}

/// Summed reduced classes against the hook scalar product and the Δ′ form;
/// two-car parking functions against the Δ′ form.
pub fn hh_cases(cfg: &RunConfig, size: usize) -> CliResult<Vec<Case>> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            for k in 0..=2usize {
                let (mu, nu, ku) = (m as u32, n as u32, k as u32);
                let rp = class_total(cfg, Family::RpStar, m, n, k)?;
                let pf2 = class_total(cfg, Family::Pf2Star, m, n, k)?;
                let s = (m + n) as u32;
                let hook = certify(cfg, &rp, &scalar_hook(mu, nu, ku), s);
                out.push(oracle_case(
                    "hh-delta",
                    format!("RP vs hook m={m} n={n} k={k}"),
                    hook,
                )?);
                let hh = delta_hh(mu, nu, ku)?;
                let a = certify(cfg, &rp, &hh, s);
                out.push(oracle_case(
                    "hh-delta",
                    format!("RP vs delta m={m} n={n} k={k}"),
                    a,
                )?);
                let b = certify(cfg, &pf2, &hh, s);
                out.push(oracle_case(
                    "hh-delta",
                    format!("PF2 vs delta m={m} n={n} k={k}"),
                    b,
                )?);
            }
        }
    }
    Ok(out)
}

/// Symmetry in `m` and `n`: the combinatorial totals agree, and the hook
/// scalar product with swapped arguments certifies against the original
/// total.
pub fn symmetry_cases(cfg: &RunConfig, size: usize) -> CliResult<Vec<Case>> {
    let mut out = Vec::new();
    for m in 0..=size {
        for n in 0..=(size - m) {
            for k in 0..=2usize {
                let a = rp_total_brute(cfg, m, n, k)?;
                let b = rp_total_brute(cfg, n, m, k)?;
                let mut fails = Vec::new();
                check(&mut fails, a == b, || format!("{a} vs {b}"));
                out.push(Case::new(
                    "symmetry",
                    format!("totals m={m} n={n} k={k}"),
                    fails,
                ));
                let res = certify(
                    cfg,
                    &a,
                    &scalar_hook(n as u32, m as u32, k as u32),
                    (m + n) as u32,
                );
                out.push(oracle_case(
                    "symmetry",
                    format!("swapped hook m={m} n={n} k={k}"),
                    res,
                )?);
                let direct = rp_rec_total(m, n, k);
                let mut fails = Vec::new();
                check(&mut fails, direct == a, || {
                    format!("recursion {direct} vs brute {a}")
                });
                out.push(Case::new(
                    "symmetry",
                    format!("recursion total m={m} n={n} k={k}"),
                    fails,
                ));
            }
        }
    }
    Ok(out)
}

fn rp_total_brute(cfg: &RunConfig, m: usize, n: usize, k: usize) -> CliResult<QtPoly> {
    class_total(cfg, Family::RpStar, m, n, k)
}

fn rp_rec_total(m: usize, n: usize, k: usize) -> QtPoly {
    let mut t = QtPoly::zero();
    for r in 1..=m + 1 {
        t += &rp_rec(m, r, n, k);
    }
    t
}
