use qtenum::polyomino_core::*;

#[test]
fn phi_shifts_area_and_uarea() {
    for m in 1..=6usize {
        for n in 1..=(7 - m) {
            let shift = (m + n - 1) as u32;
            for p in all_polyominoes(m, n) {
                let r = p.phi();
                assert_eq!((r.m(), r.n()), (m - 1, n - 1));
                assert_eq!(p.area(), r.area() + shift);
                assert_eq!(r.unphi(), p);
                for k in 0..=2 {
                    for s in subsets(&p.rises(), k) {
                        let d = Decorated::<Polyomino>::new(p.clone(), DecorationKind::Rise, s)
                            .unwrap();
                        let dr = d.phi_rises().unwrap();
                        assert_eq!(d.uarea().unwrap(), dr.uarea().unwrap() + shift);
                    }
                }
            }
        }
    }
}

#[test]
fn phi_s_shifts_ubounce() {
    for m in 1..=6usize {
        for n in 1..=(7 - m) {
            let shift = (m + n - 1) as u32;
            for p in all_polyominoes(m, n) {
                for k in 0..=2 {
                    for s in subsets(&p.red_peaks(), k) {
                        let d = Decorated::<Polyomino>::new(p.clone(), DecorationKind::RedPeak, s)
                            .unwrap();
                        let r = d.phi_s_peaks().unwrap();
                        assert_eq!((r.obj.m(), r.obj.n()), (n - 1, m - 1));
                        assert_eq!(d.ubounce().unwrap(), r.ubounce().unwrap() + shift, "{d:?}");
                        assert_eq!(p.bounce(), r.obj.bounce() + shift);
                        // s 1's in the bounce word <-> s - 1 0's in the reduced one
                        assert_eq!(
                            p.bounce_word().word.count_value(1, false),
                            r.obj.bounce_word().word.count_value(0, false) + 1
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn s_reflect_is_an_involution() {
    for n in 0..=3 {
        for p in all_reduced(n, n) {
            assert_eq!(p.s_reflect().s_reflect(), p);
        }
    }
}
