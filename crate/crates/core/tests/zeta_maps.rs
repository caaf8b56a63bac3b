use std::collections::HashSet;

use qtenum::polyomino_core::*;

fn rise_decorated(p: &Polyomino, k: usize) -> Vec<Decorated<Polyomino>> {
    subsets(&p.rises(), k)
        .into_iter()
        .map(|s| Decorated::<Polyomino>::new(p.clone(), DecorationKind::Rise, s).unwrap())
        .collect()
}

#[test]
fn zeta_is_a_statistic_transporting_bijection() {
    for m in 1..=6usize {
        for n in 1..=(7 - m) {
            for k in 0..=2 {
                let mut images = HashSet::new();
                let mut count = 0;
                for p in all_polyominoes(m, n) {
                    for s in subsets(&p.red_peaks(), k) {
                        let d = Decorated::<Polyomino>::new(p.clone(), DecorationKind::RedPeak, s)
                            .unwrap();
                        let img = zeta(&d).unwrap();
                        assert_eq!((img.obj.m(), img.obj.n()), (n, m));
                        assert_eq!(img.obj.dinv(), p.area(), "{d:?}");
                        assert_eq!(img.uarea().unwrap(), d.ubounce().unwrap(), "{d:?}");
                        assert_eq!(
                            img.obj.area_word().count_value(1, false),
                            p.bounce_word().word.count_value(1, false)
                        );
                        assert_eq!(zeta_inv(&img).unwrap(), d);
                        assert!(images.insert(img));
                        count += 1;
                    }
                }
                let target: usize = all_polyominoes(n, m)
                    .iter()
                    .map(|q| rise_decorated(q, k).len())
                    .sum();
                assert_eq!(count, target, "m={m} n={n} k={k}");
                for q in all_polyominoes(n, m) {
                    for d in rise_decorated(&q, k) {
                        assert_eq!(zeta(&zeta_inv(&d).unwrap()).unwrap(), d);
                    }
                }
            }
        }
    }
}

#[test]
fn reduced_zeta_is_a_statistic_transporting_bijection() {
    for m in 0..=6usize {
        for n in 0..=(6 - m) {
            for k in 0..=2 {
                let mut images = HashSet::new();
                let mut count = 0;
                for p in all_reduced(m, n) {
                    for s in subsets(&p.green_peaks(), k) {
                        let d = Decorated::<ReducedPolyomino>::new(
                            p.clone(),
                            DecorationKind::GreenPeak,
                            s,
                        )
                        .unwrap();
                        let img = rp_zeta(&d).unwrap();
                        assert_eq!((img.obj.m(), img.obj.n()), (m, n));
                        assert_eq!(img.obj.dinv(), p.area(), "{d:?}");
                        assert_eq!(img.uarea().unwrap(), d.ubounce().unwrap(), "{d:?}");
                        // r zeros in the image area word, r - 1 in the bounce word
                        assert_eq!(
                            img.obj.area_word().count_value(0, false),
                            p.bounce_word().word.count_value(0, false) + 1
                        );
                        assert_eq!(rp_zeta_inv(&img).unwrap(), d);
                        assert!(images.insert(img));
                        count += 1;
                    }
                }
                let target: usize = all_reduced(m, n)
                    .iter()
                    .map(|q| subsets(&q.rises(), k).len())
                    .sum();
                assert_eq!(count, target, "m={m} n={n} k={k}");
            }
        }
    }
}
