use num_bigint::BigInt;
use proptest::prelude::*;
use sylreg::weil::{
    expected_rho, fixed_dim, grid, omega_value, rho_trace, verify, weil_inner, weil_inner_closed_form,
    weil_inner_scaled, WeilKind, WeilSpec, XElement,
};

const PRIMES: [u64; 3] = [3, 5, 7];

/// Eigenvalues of z^a h^k as exponents of a primitive c-th root, counted directly.
fn fixed_dim_by_eigenvalues(s: &WeilSpec, x: XElement) -> u32 {
    let c = s.c();
    let eps = c / s.p;
    let eigen: Vec<u64> = (0..s.p).map(|j| (x.z_exp + eps * ((j * x.h_exp) % s.p)) % c).collect();
    eigen.iter().filter(|&&e| e == 0).count() as u32
}

#[test]
fn grids_are_nonempty() {
    let u = grid(WeilKind::Unitary, &PRIMES, 19);
    let l = grid(WeilKind::Linear, &PRIMES, 19);
    let pairs = |g: &[WeilSpec]| g.iter().map(|s| (s.p, s.q)).collect::<Vec<_>>();
    assert_eq!(pairs(&u), vec![(3, 5), (3, 8), (3, 11), (3, 17), (5, 4), (5, 9), (5, 19), (7, 13)]);
    assert_eq!(pairs(&l), vec![(3, 4), (3, 7), (3, 13), (3, 16), (3, 19), (5, 11), (5, 16), (7, 8)]);
}

#[test]
fn fixed_dimension_matches_eigenvalue_count() {
    for kind in [WeilKind::Unitary, WeilKind::Linear] {
        for s in grid(kind, &PRIMES, 19) {
            for x in s.elements() {
                assert_eq!(fixed_dim(&s, x), fixed_dim_by_eigenvalues(&s, x));
            }
        }
    }
}

#[test]
fn brute_force_sums_match_closed_forms() {
    let mut checked = 0;
    for kind in [WeilKind::Unitary, WeilKind::Linear] {
        for s in grid(kind, &PRIMES, 19) {
            for zeta in 0..s.c() {
                for i in 1..=s.p {
                    assert_eq!(
                        weil_inner_scaled(&s, zeta, i).unwrap(),
                        weil_inner_closed_form(&s, zeta, i),
                        "{kind} p={} q={} zeta={zeta} i={i}",
                        s.p,
                        s.q
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 400);
}

#[test]
fn multiplicities_sum_to_the_dimension() {
    for kind in [WeilKind::Unitary, WeilKind::Linear] {
        for s in grid(kind, &PRIMES, 19) {
            let r = verify(&s).unwrap();
            assert_eq!(r.summary.multiplicity_total, s.dimension().to_string());
            let want = s.q.pow(s.p as u32) as i64 - if kind == WeilKind::Linear { 1 } else { 0 };
            assert_eq!(s.dimension(), want);
        }
    }
}

#[test]
fn unitary_traces_hold_on_the_grid() {
    for s in grid(WeilKind::Unitary, &PRIMES, 19) {
        let r = verify(&s).unwrap();
        assert!(r.summary.ok, "p={} q={}: {:?}", s.p, s.q, r.records.iter().find(|x| !x.holds));
        for rec in &r.records {
            assert_eq!(rec.rho != 0, rec.trivial_on_zp);
        }
    }
}

#[test]
fn linear_traces() {
    for s in grid(WeilKind::Linear, &PRIMES, 19) {
        let p = s.p as i64;
        // trivial ζ: h fixes p points of projective space, minus the trivial summand
        assert_eq!(rho_trace(&s, 0).unwrap(), p - 1);
        assert_eq!(expected_rho(&s, 0), p - 2);
        for zeta in 1..s.c() {
            let t = rho_trace(&s, zeta).unwrap();
            assert_eq!(t, expected_rho(&s, zeta), "p={} q={} zeta={zeta}", s.p, s.q);
            assert_eq!(t != 0, zeta % s.p == 0);
        }
    }
}

#[test]
fn spot_values() {
    let s = WeilSpec::new(WeilKind::Unitary, 3, 5).unwrap();
    assert_eq!(s.x_order(), 18);
    assert_eq!(weil_inner(&s, 0, 3).unwrap(), BigInt::from(8));
    // GL_3(7): M_1 is the 57-point permutation module, one trivial and one degree-56 summand
    let l = WeilSpec::new(WeilKind::Linear, 3, 7).unwrap();
    let m1: BigInt = (1..=3).map(|i| weil_inner(&l, 0, i).unwrap()).sum();
    assert_eq!(m1, BigInt::from(57));
    assert_eq!(rho_trace(&l, 0).unwrap(), 2);
}

#[test]
fn report_lines_are_stable() {
    let s = WeilSpec::new(WeilKind::Unitary, 5, 9).unwrap();
    let a = verify(&s).unwrap().to_json_lines();
    assert_eq!(a, verify(&s).unwrap().to_json_lines());
    assert_eq!(a.lines().count(), 11);
}

proptest! {
    #[test]
    fn omega_is_determined_by_fixed_dimension(pi in 0usize..3, qi in 0usize..8, a in 0u64..1000, k in 0u64..7) {
        let specs = grid(WeilKind::Unitary, &PRIMES, 19);
        let s = specs[(pi * 3 + qi) % specs.len()];
        let x = XElement { z_exp: a % s.c(), h_exp: k % s.p };
        let d = fixed_dim(&s, x);
        prop_assert!(d <= s.p as u32);
        prop_assert_eq!(omega_value(&s, x), -(-(s.q as i64)).pow(d));
        // d = 0 exactly when z lies outside the order-p subgroup or z ≠ 1 with k = 0
        let in_zp = x.z_exp.is_multiple_of(s.c() / s.p);
        prop_assert_eq!(d == 0, !in_zp || (x.h_exp == 0 && x.z_exp != 0));
    }
}
