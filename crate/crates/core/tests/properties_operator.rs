//! Operator-level property sweeps: the telescoping identity made exact for
//! recurrence-generated sequences (the load-bearing check), the degree
//! lemma across catalog and constructed degenerate operators, adjoint
//! linearity and scale round-trips.

mod common;

use common::Rng;
use num_traits::Zero;
use polyred::goldens::builtin_operators;
use polyred::operator::RecOperator;
use polyred::poly::Rational;
use polyred::reduction::telescoped_sum;
use polyred::sequences::seq_terms_rec;

/// Random operator whose leading coefficient has no roots in `0..=limit`,
/// so the recurrence extends uniquely over the tested window.
fn operator_extendable(rng: &mut Rng, limit: i64) -> RecOperator {
    loop {
        let op = rng.operator(3, 3, 6);
        let lead = op.coeff(op.order());
        if (0..=limit).all(|n| !lead.eval_int(n).is_zero()) {
            return op;
        }
    }
}

#[test]
fn lagrange_exactness_on_recurrence_sequences() {
    let mut rng = Rng::new(0xA_0001);
    for _ in 0..100 {
        let op = operator_extendable(&mut rng, 45);
        let j = op.order();
        let p = rng.poly_up_to(4, 8);
        let initial: Vec<Rational> = (0..j).map(|_| rng.rational(10)).collect();
        let f = seq_terms_rec(&op, &initial, 40 + j).unwrap();
        let form = telescoped_sum(&op, &p, &initial).unwrap();
        for n in 1..=40 {
            assert_eq!(
                form.eval_lhs(&f, n),
                form.eval_rhs(&f, n).unwrap(),
                "operator {op:?}, p = {}, n = {n}",
                p.to_text("n")
            );
        }
    }
}

#[test]
fn lagrange_identity_pointwise_for_arbitrary_sequences() {
    // p(n) L(F)(n) - L*(p)(n) F(n) = G(n+1) - G(n) with
    // G(n) = sum_i u_i(n) F(n+i) holds for any values F whatsoever.
    let mut rng = Rng::new(0xA_0002);
    for _ in 0..100 {
        let op = rng.operator(3, 3, 6);
        let j = op.order();
        let p = rng.poly_up_to(4, 8);
        let f: Vec<Rational> = (0..32 + j).map(|_| rng.rational(9)).collect();
        let cert = op.certificate(&p).unwrap();
        let adj = op.adjoint_apply(&p);
        let g = |n: usize| -> Rational {
            let mut acc = Rational::zero();
            for (i, ui) in cert.u.iter().enumerate() {
                acc += ui.eval_int(n as i64) * &f[n + i];
            }
            acc
        };
        for n in 0..30 {
            let lhs = p.eval_int(n as i64) * op.apply_at(&f, n) - adj.eval_int(n as i64) * &f[n];
            assert_eq!(lhs, g(n + 1) - g(n), "operator {op:?} at n = {n}");
        }
    }
}

#[test]
fn degree_lemma_on_catalog_operators() {
    let mut rng = Rng::new(0xA_0003);
    for (name, op) in builtin_operators() {
        let dd = op.degree_data().unwrap();
        for s in 0..=6i64 {
            let p = rng.poly_exact_degree(s, 9);
            let got = op.adjoint_apply(&p).degree();
            if dd.r_set.contains(&(s as u64)) {
                assert!(
                    got < polyred::Degree::Finite(dd.d + s),
                    "{name}: expected degree drop at s = {s}"
                );
            } else {
                assert_eq!(
                    got,
                    polyred::Degree::Finite(dd.d + s),
                    "{name}: deg L*(p_{s})"
                );
            }
        }
    }
}

#[test]
fn degree_lemma_on_degenerate_operators() {
    let mut rng = Rng::new(0xA_0004);
    // sigma - 1, (sigma - 1)^2, and the family n - (n+1+s0) sigma with a
    // prescribed degenerate degree s0.
    let mut ops: Vec<(RecOperator, i64, Vec<u64>)> = vec![
        (
            RecOperator::parse_coeffs("n", &["-1", "1"]).unwrap(),
            -1,
            vec![0],
        ),
        (
            RecOperator::parse_coeffs("n", &["1", "-2", "1"]).unwrap(),
            -2,
            vec![0, 1],
        ),
    ];
    for s0 in 0..=3i64 {
        let a1 = format!("-(n+{})", 1 + s0);
        ops.push((
            RecOperator::parse_coeffs("n", &["n", &a1]).unwrap(),
            0,
            vec![s0 as u64],
        ));
    }
    for (op, d, r_set) in ops {
        let dd = op.degree_data().unwrap();
        assert_eq!(dd.d, d, "{op:?}");
        assert_eq!(dd.r_set, r_set.iter().copied().collect(), "{op:?}");
        assert!(dd.degenerated);
        for s in 0..=6i64 {
            let p = rng.poly_exact_degree(s, 9);
            let got = op.adjoint_apply(&p).degree();
            if dd.r_set.contains(&(s as u64)) {
                assert!(got < polyred::Degree::Finite(dd.d + s), "{op:?} at s = {s}");
            } else {
                assert_eq!(got, polyred::Degree::Finite(dd.d + s), "{op:?} at s = {s}");
            }
        }
    }
}

#[test]
fn adjoint_is_linear() {
    let mut rng = Rng::new(0xA_0005);
    for _ in 0..100 {
        let op = rng.operator(3, 3, 8);
        let p = rng.poly_up_to(5, 9);
        let q = rng.poly_up_to(5, 9);
        let alpha = rng.rational(7);
        let beta = rng.rational(7);
        let combined = op.adjoint_apply(&p.scale(&alpha).add(&q.scale(&beta)));
        let separate = op
            .adjoint_apply(&p)
            .scale(&alpha)
            .add(&op.adjoint_apply(&q).scale(&beta));
        assert_eq!(combined, separate, "{op:?}");
    }
}

#[test]
fn scale_round_trips_to_identity() {
    let mut rng = Rng::new(0xA_0006);
    for _ in 0..60 {
        let op = rng.operator(3, 3, 8);
        let r = rng.nonzero_rational(20);
        let back = op.scale(&r).unwrap().scale(&r.recip()).unwrap();
        assert_eq!(back, op, "r = {r}");
    }

    // Scaling tracks the weighted sequence: if L annihilates F then
    // scale(L, r) annihilates F(n) r^n.
    for _ in 0..40 {
        let op = operator_extendable(&mut rng, 25);
        let j = op.order();
        let r = rng.nonzero_rational(5);
        let initial: Vec<Rational> = (0..j).map(|_| rng.rational(6)).collect();
        let f = seq_terms_rec(&op, &initial, 20 + j).unwrap();
        let weighted: Vec<Rational> = f
            .iter()
            .enumerate()
            .map(|(n, v)| v * polyred::poly::rat_pow(&r, n as i64))
            .collect();
        let scaled = op.scale(&r).unwrap();
        for n in 0..=20 {
            assert!(scaled.apply_at(&weighted, n).is_zero());
        }
    }
}
