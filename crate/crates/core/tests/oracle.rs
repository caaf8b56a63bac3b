use qtenum::enumerators::rp_rec;
use qtenum::macdonald_oracle::*;
use qtenum::partition_core::{b_mu_minus_one, e_pleth, partitions_of, Partition};
use qtenum::qt_algebra::QtPoly;

#[test]
fn hook_pairings_pin_the_fillings() {
    for n in 1..=5u32 {
        for mu in partitions_of(n) {
            for r in 0..n {
                let got = schur_pairing(&mu, &hook(n, r)).unwrap();
                assert_eq!(
                    got,
                    e_pleth(r as i64, &b_mu_minus_one(&mu)),
                    "mu={mu:?} r={r}"
                );
            }
        }
    }
}

#[test]
fn macdonald_polynomials_are_symmetric() {
    for n in 1..=4u32 {
        for mu in partitions_of(n) {
            let h = hhl_macdonald(&mu, 3).unwrap();
            for (alpha, c) in &h {
                let mut sorted = alpha.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                assert_eq!(h.get(&sorted), Some(c), "mu={mu:?} alpha={alpha:?}");
            }
        }
    }
}

#[test]
fn main_identity_small_cases() {
    for (m, n, k) in [(1u32, 1u32, 0u32), (2, 1, 1), (2, 2, 1), (1, 2, 0)] {
        for r in 1..=m + 1 {
            let comb = rp_rec(m as usize, r as usize, n as usize, k as usize);
            let v = certify_sum("main", &[], &comb, &sf_sum_term(m, n, k, r), m + n).unwrap();
            assert!(v.pass, "m={m} n={n} k={k} r={r}: {:?}", v.residuals.first());
        }
    }
}

#[test]
fn hook_and_hh_forms_agree() {
    for (m, n, k) in [(1u32, 1u32, 0u32), (2, 1, 0), (2, 1, 1), (1, 2, 1)] {
        let total: QtPoly = (1..=m as usize + 1)
            .map(|r| rp_rec(m as usize, r, n as usize, k as usize))
            .sum();
        let a = certify_sum("hook", &[], &total, &scalar_hook(m, n, k), m + n).unwrap();
        assert!(a.pass, "hook m={m} n={n} k={k}");
        let b = certify_sum("hh", &[], &total, &delta_hh(m, n, k).unwrap(), m + n).unwrap();
        assert!(b.pass, "hh m={m} n={n} k={k}");
    }
}

#[test]
fn empty_partition_is_rejected_only_where_undefined() {
    let one = Partition::new(vec![1]).unwrap();
    assert_eq!(hhl_coeff(&one, &[1]).unwrap(), QtPoly::one());
    assert!(hhl_coeff(&Partition::new(vec![9]).unwrap(), &[9]).is_err());
}
