//! The closed-form inverse is consistent with the specialized routes after
//! regrouping `F_{q^n}` as `F_{(q^d)^(n/d)}` or lifting to `F_{(q^r)^n}`.

use linperm::binomial::lift;
use linperm::{BinomialSpec, Corollary, FieldCtx, LinearizedPoly};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn regrouped_field_matches_coprime_route() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (p, e, n) in [(2, 1, 6), (3, 1, 4), (2, 2, 4), (5, 1, 6), (2, 1, 12), (3, 2, 6)] {
        let ctx = FieldCtx::new(p, e, n).unwrap();
        for r in (1..n).filter(|r| r.gcd(&n) > 1) {
            let d = r.gcd(&n);
            let coarse = ctx.retower(e * d, n / d).unwrap();
            for _ in 0..20 {
                let a = ctx.random(&mut rng);
                let spec = BinomialSpec::new(a.clone(), r).unwrap();
                let coarse_spec = BinomialSpec::new(coarse.adopt(&a).unwrap(), r / d).unwrap();
                assert_eq!(spec.is_permutation(), coarse_spec.is_permutation());
                if !spec.is_permutation() {
                    continue;
                }
                let fine = spec.inverse().unwrap();
                let grouped = Corollary::Coprime.inverse(&coarse_spec).unwrap();
                for (slot, c) in fine.coeffs().iter().enumerate() {
                    if slot % d == 0 {
                        assert_eq!(
                            c,
                            &ctx.adopt(grouped.coeff(slot / d)).unwrap(),
                            "p={p} n={n} r={r} a={a}"
                        );
                    } else {
                        assert!(c.is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn lifted_unit_shift_matches_lifted_inverse() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (p, e, n) in [(3, 1, 3), (2, 1, 5), (5, 1, 3), (2, 2, 3), (3, 1, 4)] {
        let ctx = FieldCtx::new(p, e, n).unwrap();
        for r in (2..n).filter(|r| r.gcd(&n) == 1) {
            let big = FieldCtx::new(p, e * r, n).unwrap();
            let mut seen = 0;
            for _ in 0..200 {
                let spec = BinomialSpec::new(ctx.random(&mut rng), r).unwrap();
                if !spec.is_permutation() {
                    continue;
                }
                seen += 1;
                // slot i of the lift carries a_{ri mod n}, so x^(q^r) lands in slot 1
                let lifted = lift(&spec.poly(), r, &big).unwrap();
                assert!(lifted.coeff(1).is_one());
                let lifted_spec = BinomialSpec::new(lifted.coeff(0).clone(), 1).unwrap();
                assert_eq!(lifted_spec.poly(), lifted);
                let via_unit_shift = Corollary::UnitShift.inverse(&lifted_spec).unwrap();
                let via_closed = lift(&spec.inverse().unwrap(), r, &big).unwrap();
                assert_eq!(via_unit_shift, via_closed, "p={p} e={e} n={n} r={r}");
                if seen == 10 {
                    break;
                }
            }
            assert!(seen > 0);
        }
    }
}

#[test]
fn lift_preserves_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let small = FieldCtx::new(2, 1, 3).unwrap();
    let big = FieldCtx::new(2, 2, 3).unwrap();
    for _ in 0..30 {
        let mk = |rng: &mut ChaCha8Rng| {
            LinearizedPoly::new(&small, (0..3).map(|_| small.random(rng)).collect()).unwrap()
        };
        let (f, g) = (mk(&mut rng), mk(&mut rng));
        let lhs = lift(&f.compose(&g).unwrap(), 2, &big).unwrap();
        let rhs = lift(&f, 2, &big).unwrap().compose(&lift(&g, 2, &big).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn large_field_inverses_compose_to_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for (p, e, n, r) in [(3, 1, 32, 1), (2, 3, 20, 5), (7, 2, 12, 6), (65537, 1, 8, 3), (4294967291, 1, 4, 2)]
    {
        let ctx = FieldCtx::new(p, e, n).unwrap();
        let spec = linperm::timing::sample_permutation(&ctx, r, &mut rng).unwrap();
        let inverse = spec.inverse().unwrap();
        assert!(spec.poly().compose(&inverse).unwrap().is_identity(), "p={p} e={e} n={n} r={r}");
        assert!(inverse.compose(&spec.poly()).unwrap().is_identity());
        if let Ok(special) = spec.inverse_special() {
            assert_eq!(special, inverse);
        }
    }
}
