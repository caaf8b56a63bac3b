use qtenum::enumerators::*;
use qtenum::qt_algebra::QtPoly;

fn brute(f: Family, m: usize, n: usize, c: usize, k: usize) -> QtPoly {
    qt_brute(&EnumKey::new(f, m, n, c, k).unwrap(), 12).unwrap()
}

#[test]
fn standard_recursions_match_brute_force() {
    for m in 1..=7usize {
        for n in 1..=(8 - m) {
            for k in 0..=3 {
                for r in 1..=m {
                    assert_eq!(
                        brute(Family::PpStar, m, n, r, k),
                        pp_dinv_rec(m, r, n, k),
                        "PP★ m={m} r={r} n={n} k={k}"
                    );
                }
                for s in 1..=n {
                    assert_eq!(
                        brute(Family::PpBullet, m, n, s, k),
                        pp_bounce_rec(m, n, s, k),
                        "PP• m={m} n={n} s={s} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn reduced_recursions_match_brute_force() {
    for m in 0..=7usize {
        for n in 0..=(7 - m) {
            for k in 0..=3 {
                for r in 1..=m + 1 {
                    let rec = rp_rec(m, r, n, k);
                    assert_eq!(
                        brute(Family::RpStar, m, n, r, k),
                        rec,
                        "RP★ m={m} r={r} n={n} k={k}"
                    );
                    assert_eq!(
                        brute(Family::RpBullet, m, n, r, k),
                        rp_bullet_rec(m, r, n, k),
                        "RP• m={m} r={r} n={n} k={k}"
                    );
                    assert_eq!(
                        brute(Family::Pf2Star, m, n, r, k),
                        pf2_rec(m, r, n, k),
                        "PF² m={m} r={r} n={n} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn zeta_swaps_families_and_shifts() {
    for m in 1..=7usize {
        for n in 1..=(8 - m) {
            for k in 0..=3 {
                for r in 1..=m {
                    let star = brute(Family::PpStar, m, n, r, k);
                    assert_eq!(star, brute(Family::PpBullet, n, m, r, k));
                    let shift = QtPoly::qt_pow((m + n - 1) as u32);
                    assert_eq!(star, &shift * &brute(Family::RpStar, m - 1, n - 1, r, k));
                    assert_eq!(
                        brute(Family::PpBullet, n, m, r, k),
                        &shift * &brute(Family::RpBullet, m - 1, n - 1, r, k)
                    );
                }
            }
        }
    }
}

#[test]
fn reduced_totals_are_symmetric() {
    for m in 0..=7usize {
        for n in 0..=(7 - m) {
            for k in 0..=3 {
                assert_eq!(rp_total(m, n, k), rp_total(n, m, k), "m={m} n={n} k={k}");
            }
        }
    }
}

#[test]
fn f_table_reproduces_reduced_recursion() {
    let rec = Recursions::new();
    for m in 0..=6usize {
        for n in 0..=6usize {
            for k in 0..=3 {
                for r in 1..=m + 1 {
                    assert_eq!(
                        rec.rp_via_f(m, r, n, k),
                        rec.rp(m, r, n, k),
                        "m={m} r={r} n={n} k={k}"
                    );
                }
            }
        }
    }
}

#[test]
fn parallel_memo_publishes_consistently() {
    use rayon::prelude::*;
    let rec = Recursions::new();
    let keys: Vec<_> = (0..=5)
        .flat_map(|m| (0..=5).flat_map(move |n| (1..=m + 1).map(move |r| (m, r, n))))
        .collect();
    let par: Vec<QtPoly> = keys
        .par_iter()
        .map(|&(m, r, n)| rec.rp(m, r, n, 1))
        .collect();
    for ((m, r, n), v) in keys.iter().zip(par) {
        assert_eq!(v, rp_rec(*m, *r, *n, 1));
    }
}
