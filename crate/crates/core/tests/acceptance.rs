//! Acceptance run: one PASS/FAIL line per criterion. Criterion 8 checks
//! conjectures and is reported separately; its failures are findings and do
//! not fail the run.

use std::time::Instant;

use qtenum::cli::suites::{
    eta_cases, f_chain_sample, hh_cases, pmaj_cases, psi_cases, symmetry_cases, zeta_cases, Case,
};
use qtenum::cli::{conjecture_params, RunConfig};
use qtenum::enumerators::{qt_brute, EnumKey, Family, Recursions};
use qtenum::labelled_objects::{LabelledPolyomino, ParkingFunction};
use qtenum::macdonald_oracle::{
    certify_sum, check_conjecture, hook, schur_pairing, sf_sum_term, ConjectureKind,
};
use qtenum::partition_core::{b_mu, b_mu_minus_one, e_pleth, partitions_of, MonomialAlphabet};
use qtenum::polyomino_core::{
    path_from_points, Decorated, DecorationKind, Polyomino, ReducedPolyomino,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn report(id: &str, title: &str, start: Instant, o: &Outcome) {
    println!(
        "{id} {} {title}: {} [{:.1}s]",
        if o.pass { "PASS" } else { "FAIL" },
        o.detail,
        start.elapsed().as_secs_f64()
    );
}

fn from_cases(cases: &[Case]) -> Outcome {
    let failed: Vec<&Case> = cases.iter().filter(|c| !c.pass).collect();
    let mut detail = format!("{}/{} cases", cases.len() - failed.len(), cases.len());
    for c in failed.iter().take(5) {
        detail.push_str(&format!("; FAILED {} {}", c.suite, c.case));
    }
    Outcome {
        pass: failed.is_empty(),
        detail,
    }
}

fn peak_at(path: &[u8], pt: (u32, u32)) -> usize {
    let (mut x, mut y) = (0u32, 0u32);
    for (i, &s) in path.iter().enumerate() {
        if (x, y) == pt && s == 0 {
            return i;
        }
        if s == 1 {
            y += 1;
        } else {
            x += 1;
        }
    }
    panic!("no east step at {pt:?}");
}

fn golden() -> Outcome {
    let mut checks: Vec<(&str, String, String)> = Vec::new();
    let mut push = |name: &'static str, got: String, want: &str| {
        checks.push((name, got, want.to_string()));
    };

    let p = Polyomino::from_points(
        &[
            (0, 0),
            (0, 3),
            (3, 3),
            (3, 4),
            (5, 4),
            (5, 5),
            (8, 5),
            (8, 7),
            (12, 7),
        ],
        &[
            (0, 0),
            (3, 0),
            (3, 1),
            (7, 1),
            (7, 4),
            (10, 4),
            (10, 5),
            (12, 5),
            (12, 7),
        ],
    )
    .unwrap();
    push("12x7 area", p.area().to_string(), "34");
    push("12x7 dinv", p.dinv().to_string(), "32");

    let alt = Polyomino::from_points(
        &[
            (0, 0),
            (0, 3),
            (3, 3),
            (3, 4),
            (5, 4),
            (5, 5),
            (8, 5),
            (8, 7),
            (12, 7),
        ],
        &[
            (0, 0),
            (3, 0),
            (3, 1),
            (5, 1),
            (5, 3),
            (7, 3),
            (7, 4),
            (10, 4),
            (10, 5),
            (12, 5),
            (12, 7),
        ],
    )
    .unwrap();
    let peaks = vec![peak_at(alt.red(), (3, 4)), peak_at(alt.red(), (8, 7))];
    let d = Decorated::<Polyomino>::new(alt.clone(), DecorationKind::RedPeak, peaks).unwrap();
    push("12x7 bounce", alt.bounce().to_string(), "41");
    push("12x7 ubounce", d.ubounce().unwrap().to_string(), "37");

    let r = ReducedPolyomino::from_points(
        &[
            (0, 0),
            (0, 3),
            (3, 3),
            (3, 4),
            (5, 4),
            (5, 5),
            (8, 5),
            (8, 6),
            (12, 6),
            (12, 7),
        ],
        &[
            (0, 0),
            (2, 0),
            (2, 3),
            (7, 3),
            (7, 4),
            (10, 4),
            (10, 5),
            (12, 5),
            (12, 7),
        ],
    )
    .unwrap();
    let gp = vec![peak_at(r.green(), (2, 3)), peak_at(r.green(), (7, 4))];
    let rd = Decorated::<ReducedPolyomino>::new(r.clone(), DecorationKind::GreenPeak, gp).unwrap();
    push("reduced area", r.area().to_string(), "19");
    push("reduced bounce", r.bounce().to_string(), "21");
    push("reduced ubounce", rd.ubounce().unwrap().to_string(), "18");
    push("reduced dinv", r.dinv().to_string(), "28");

    let path = path_from_points(&[
        (0, 0),
        (0, 2),
        (1, 2),
        (1, 4),
        (3, 4),
        (3, 5),
        (5, 5),
        (5, 7),
        (6, 7),
        (6, 9),
        (7, 9),
        (7, 10),
        (8, 10),
        (8, 11),
        (11, 11),
    ]);
    let pf = ParkingFunction::new(path, vec![1, 2, 1, 2, 2, 1, 2, 1, 2, 2, 1]).unwrap();
    let tr = pf.pmaj_trace();
    push("two-car pmaj", tr.pmaj.to_string(), "7");
    push("two-car word", tr.word_string(), "22112222111");

    let lp = LabelledPolyomino::new(alt, vec![1, 2, 4, 7, 3, 6, 8]).unwrap();
    push(
        "labelled word",
        lp.pmaj_trace().word_string(),
        "421000073000008600",
    );

    let bad: Vec<String> = checks
        .iter()
        .filter(|(_, g, w)| g != w)
        .map(|(n, g, w)| format!("{n}: got {g}, expected {w}"))
        .collect();
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} values", checks.len())
        } else {
            bad.join("; ")
        },
    }
}

fn brute_vs_recursion() -> Outcome {
    let rec = Recursions::new();
    let (mut total, mut bad) = (0usize, Vec::new());
    for family in Family::ALL {
        let top = if family.is_reduced() { 7 } else { 8 };
        for m in 0..=top {
            for n in 0..=(top - m) {
                if !family.is_reduced() && (m == 0 || n == 0) {
                    continue;
                }
                for k in 0..=3 {
                    let (lo, hi) = EnumKey {
                        family,
                        m,
                        n,
                        class: 1,
                        k,
                    }
                    .class_range();
                    for class in lo..=hi {
                        let key = EnumKey::new(family, m, n, class, k).unwrap();
                        total += 1;
                        if qt_brute(&key, 12).unwrap() != rec.for_key(&key).unwrap() {
                            bad.push(key.to_string());
                        }
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{}/{total} classes agree{}",
            total - bad.len(),
            fmt_list(&bad)
        ),
    }
}

fn fmt_list(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!(
            "; mismatches: {}",
            items.iter().take(5).cloned().collect::<Vec<_>>().join(", ")
        )
    }
}

fn main_identity() -> Outcome {
    let (mut total, mut bad) = (0usize, Vec::new());
    for m in 0..=5usize {
        for n in 0..=(5 - m) {
            for k in 0..=2usize {
                for r in 1..=m + 1 {
                    let key = EnumKey::new(Family::RpStar, m, n, r, k).unwrap();
                    let comb = qt_brute(&key, 12).unwrap();
                    let oracle = sf_sum_term(m as u32, n as u32, k as u32, r as u32);
                    let v = certify_sum("main", &[], &comb, &oracle, (m + n) as u32).unwrap();
                    total += 1;
                    if !v.pass {
                        bad.push(key.to_string());
                    }
                }
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{}/{total} classes certified{}",
            total - bad.len(),
            fmt_list(&bad)
        ),
    }
}

/// The hh form is an empty partition sum at m = n = 0 while both
/// combinatorial sides count the empty object; those two cases are the only
/// expected mismatches.
const DEGENERATE_HH: [&str; 2] = ["RP vs delta m=0 n=0 k=0", "PF2 vs delta m=0 n=0 k=0"];

fn class_sums(cfg: &RunConfig) -> (Outcome, bool) {
    let mut cases = hh_cases(cfg, 5).unwrap();
    cases.extend(symmetry_cases(cfg, 5).unwrap());
    let failed: Vec<&str> = cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.case.as_str())
        .collect();
    let only_degenerate = failed.iter().all(|f| DEGENERATE_HH.contains(f));
    let mut o = from_cases(&cases);
    if !failed.is_empty() && only_degenerate {
        o.detail
            .push_str(" (the degenerate m=n=0 hh case; all m+n >= 1 pass)");
    }
    (o, only_degenerate)
}

fn oracle_self_check() -> Outcome {
    let (mut total, mut bad) = (0usize, Vec::new());
    for n in 1..=5u32 {
        for mu in partitions_of(n) {
            let bm1 = b_mu_minus_one(&mu);
            let b = MonomialAlphabet::from_poly(&b_mu(&mu));
            for r in 0..n {
                total += 1;
                if schur_pairing(&mu, &hook(n, r)).unwrap() != e_pleth(r as i64, &bm1) {
                    bad.push(format!("hook mu={mu:?} r={r}"));
                }
            }
            for k in 1..=n as i64 + 2 {
                total += 1;
                let lhs = e_pleth(k, &b);
                let rhs = &e_pleth(k, &bm1) + &e_pleth(k - 1, &bm1);
                if lhs != rhs {
                    bad.push(format!("additivity mu={mu:?} k={k}"));
                }
            }
            total += 1;
            if !e_pleth(n as i64 + 1, &b).is_zero() || !e_pleth(n as i64, &bm1).is_zero() {
                bad.push(format!("vanishing mu={mu:?}"));
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{}/{total} identities{}", total - bad.len(), fmt_list(&bad)),
    }
}

fn f_chain() -> Outcome {
    let rec = Recursions::new();
    let sample = f_chain_sample(0, 10, 6);
    let bad: Vec<String> = sample
        .iter()
        .filter(|&&(m, r, n, k)| rec.rp_via_f(m, r, n, k) != rec.rp(m, r, n, k))
        .map(|t| format!("{t:?}"))
        .collect();
    Outcome {
        pass: bad.is_empty(),
        detail: format!(
            "{}/{} tuples (m,r,n,k) {:?}{}",
            sample.len() - bad.len(),
            sample.len(),
            sample,
            fmt_list(&bad)
        ),
    }
}

fn conjectures() {
    println!("-- conjecture checks (findings, not build failures) --");
    for kind in ConjectureKind::ALL {
        let start = Instant::now();
        let (mut pass, mut total) = (0usize, 0usize);
        let mut failed = Vec::new();
        for vars in 1..=2usize {
            for (m, n, k) in conjecture_params(kind, 4) {
                match check_conjecture(kind, m, n, k, vars) {
                    Ok(vs) => {
                        for v in vs {
                            total += 1;
                            if v.pass {
                                pass += 1;
                            } else {
                                failed
                                    .push(format!("N={vars} m={m} n={n} k={k} x^{:?}", v.monomial));
                            }
                        }
                    }
                    Err(e) => failed.push(format!("N={vars} m={m} n={n} k={k}: {e}")),
                }
            }
        }
        println!(
            "C8 {} {}: {pass}/{total} monomials [{:.1}s]",
            if failed.is_empty() { "PASS" } else { "FAIL" },
            kind.name(),
            start.elapsed().as_secs_f64()
        );
        for f in &failed {
            println!("   FAIL {} {f}", kind.name());
        }
    }
}

fn main() {
    let cfg = RunConfig::default();
    let mut ok = true;

    let t = Instant::now();
    let o = golden();
    report("C1", "golden values", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let o = brute_vs_recursion();
    report("C2", "brute force vs recursions", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let mut cases = zeta_cases(7);
    cases.extend(psi_cases(7));
    cases.extend(eta_cases(5));
    let o = from_cases(&cases);
    report("C3", "bijections zeta, reduced zeta, psi, eta", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let o = from_cases(&pmaj_cases(7));
    report("C4", "pmaj statements", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let o = main_identity();
    report("C5", "reduced classes vs partition sums", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let (o, only_degenerate) = class_sums(&cfg);
    report("C6", "class sums vs hook and hh forms, symmetry", t, &o);
    ok &= o.pass || only_degenerate;

    let t = Instant::now();
    let o = oracle_self_check();
    report("C7", "hook pairings and Delta-prime additivity", t, &o);
    ok &= o.pass;

    let t = Instant::now();
    let o = f_chain();
    report("C9", "F recursion chain", t, &o);
    ok &= o.pass;

    conjectures();

    if !ok {
        eprintln!("acceptance: unexpected failures");
        std::process::exit(1);
    }
}
