use super::*;
use crate::field::{Field, Matrix, RatFuncS, Rational};
use num_traits::{One, Zero};

fn q() -> RatFuncS {
    RatFuncS::q()
}

fn qinv() -> RatFuncS {
    RatFuncS::q_pow(-1)
}

fn sample() -> Vec<PbwElement> {
    vec![
        PbwElement::e(),
        PbwElement::f(),
        PbwElement::k_pow(1),
        PbwElement::k_half(1),
        PbwElement::e().mul(&PbwElement::f()),
        PbwElement::f().mul(&PbwElement::k_pow(-1)).add(&PbwElement::e().scale(&q())),
        PbwElement::normalize(&[Gen::E, Gen::E, Gen::F, Gen::K(3), Gen::F]),
    ]
}

#[test]
fn defining_relations() {
    let ef = PbwElement::normalize(&[Gen::E, Gen::F]);
    let k2 = PbwElement::k_pow(2).sub(&PbwElement::k_pow(-2));
    let d = (q() - qinv()).inv().unwrap();
    assert_eq!(ef, PbwElement::f().mul(&PbwElement::e()).add(&k2.scale(&d)));
    // KE = qEK, so EK normalises to q^-1 KE
    assert_eq!(PbwElement::normalize(&[Gen::E, Gen::K(2)]), PbwElement::mono(Mono::new(0, 2, 1)).scale(&qinv()));
    assert_eq!(PbwElement::normalize(&[Gen::K(2), Gen::F]), PbwElement::mono(Mono::new(1, 2, 0)).scale(&qinv()));
    assert!(ef.counit().is_zero());
    assert_eq!(PbwElement::normalize(&[Gen::K(1), Gen::K(-1)]), PbwElement::one());
}

#[test]
fn multiplication_is_associative() {
    let s = sample();
    for a in &s {
        for b in &s {
            for c in &s[..4] {
                assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
            }
        }
    }
}

#[test]
fn hopf_axioms_on_samples() {
    for x in sample() {
        let cop = x.coproduct();
        // counit
        let left = cop.terms().fold(PbwElement::zero(), |acc, ((a, b), c)| {
            acc.add(&PbwElement::mono(*b).scale(&(PbwElement::mono(*a).counit() * c.clone())))
        });
        assert_eq!(left, x);
        // antipode
        let ms = cop.terms().fold(PbwElement::zero(), |acc, ((a, b), c)| {
            acc.add(&PbwElement::mono(*a).antipode().mul(&PbwElement::mono(*b)).scale(c))
        });
        assert_eq!(ms, PbwElement::scalar(x.counit()));
        let sm = cop.terms().fold(PbwElement::zero(), |acc, ((a, b), c)| {
            acc.add(&PbwElement::mono(*a).mul(&PbwElement::mono(*b).antipode()).scale(c))
        });
        assert_eq!(sm, PbwElement::scalar(x.counit()));
    }
    let s = sample();
    for a in &s[..5] {
        for b in &s[..5] {
            assert_eq!(a.mul(b).coproduct(), a.coproduct().mul(&b.coproduct()));
        }
    }
}

#[test]
fn pairing_examples() {
    let a = AWord::letter(ALetter::A);
    assert_eq!(pair_word(&PbwElement::k_pow(2), &a).unwrap(), q());
    assert_eq!(pair_word(&PbwElement::e(), &AWord::letter(ALetter::B)).unwrap(), RatFuncS::one());
    assert!(pair_word(&PbwElement::e(), &AWord::letter(ALetter::C)).unwrap().is_zero());
    assert!(pair_word(&PbwElement::e(), &a).unwrap().is_zero());
    assert_eq!(pair_word(&PbwElement::f(), &AWord::letter(ALetter::C)).unwrap(), RatFuncS::one());
    let x = PbwElement::e().mul(&PbwElement::f()).add(&PbwElement::k_pow(1));
    assert_eq!(pair_word(&x, &AWord::one()).unwrap(), x.counit());
    assert!(matches!(pair_word(&PbwElement::k_half(1), &a), Err(UqError::HalfIntegerPairing(_))));
}

#[test]
fn pairing_dualities() {
    // <x, uv> = <x_(1), u><x_(2), v> and <xy, rho^i_j> = sum_k <x, rho^i_k><y, rho^k_j>.
    let s: Vec<PbwElement> = sample().into_iter().filter(|x| x.terms().all(|(m, _)| m.k2 % 2 == 0)).collect();
    for x in &s {
        for u in ALetter::ALL {
            for v in ALetter::ALL {
                let direct = pair_word(x, &AWord::word(&[u, v])).unwrap();
                let split = x.coproduct().terms().fold(RatFuncS::zero(), |acc, ((m1, m2), c)| {
                    let p1 = pair_word(&PbwElement::mono(*m1), &AWord::letter(u)).unwrap();
                    let p2 = pair_word(&PbwElement::mono(*m2), &AWord::letter(v)).unwrap();
                    acc + c.clone() * p1 * p2
                });
                assert_eq!(direct, split);
            }
        }
        for y in &s {
            for l in ALetter::ALL {
                let (i, j) = l.index();
                let lhs = pair_word(&x.mul(y), &AWord::letter(l)).unwrap();
                let rhs = (0..2).fold(RatFuncS::zero(), |acc, k| {
                    acc + pair_word(x, &AWord::letter(ALetter::from_index(i, k))).unwrap()
                        * pair_word(y, &AWord::letter(ALetter::from_index(k, j))).unwrap()
                });
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn casimir_properties() {
    let c = q_casimir().unwrap();
    let rho = tensor_rep(&c, 1).unwrap();
    let v = q().pow(2) + q().pow(-2);
    assert_eq!(rho, Matrix::identity(2).map(|x: &RatFuncS| x.clone() * v.clone()));
    assert_eq!(c.counit(), q() + qinv());
    assert!(c.commutator(&PbwElement::k_pow(1)).is_zero());
}

#[test]
fn consistency_and_negative_control() {
    let r = verify_su2_consistency().unwrap();
    assert_eq!((r.checked, r.mismatches.len()), (16, 0));
    let bad = verify_su2_consistency_with(false).unwrap();
    assert!(!bad.passed());
}

/// <Q(rho^i_j), w> from R21 R31 .. R_{n+1,1} R_{1,n+1} .. R12.
fn q_word_oracle(n: usize) -> Matrix<RatFuncS> {
    let r = r_matrix(true);
    let legs = n + 1;
    let mut factors = Vec::new();
    for t in 1..legs {
        factors.push(embed(&r, t, 0, legs));
    }
    for t in (1..legs).rev() {
        factors.push(embed(&r, 0, t, legs));
    }
    mul_all(&factors)
}

#[test]
fn q_pairings_match_rmatrix_products() {
    let qs = q_images().unwrap();
    for n in 1..=2 {
        let oracle = q_word_oracle(n);
        for (u, x) in qs.iter().enumerate() {
            let rep = tensor_rep(x, n).unwrap();
            let (i, j) = (u / 2, u % 2);
            let base = 1usize << n;
            for r in 0..base {
                for c in 0..base {
                    assert_eq!(rep[(r, c)], oracle[(i * base + r, j * base + c)], "u={u} n={n}");
                }
            }
        }
    }
}

#[test]
fn generators_and_structure() {
    let t = su2_q_generators().unwrap();
    assert_eq!(*t.x(0), PbwElement::k_pow(2).sub(&PbwElement::one()));
    for u in 0..4 {
        assert!(t.x(u).counit().is_zero());
    }
    assert_eq!(t.basis.dim(), 4);
    assert_eq!(bracket_adjoint(&t.basis).unwrap(), bracket_rmatrix());
    // the diagonal bracket [x^1_1, x^1_1] vanishes on both routes
    assert!(t.bracket[0].iter().all(|c| c.is_zero()));
    assert_eq!(braiding_coproduct(&t.basis).unwrap(), t.braiding);
    let rep = qlier_identities(&t.bracket, &t.braiding);
    assert!(rep.passed(), "{rep:?}");
}

#[test]
fn qlier_detects_perturbation() {
    let t = su2_q_generators().unwrap();
    let mut bad = t.bracket.clone();
    bad[1][1] = bad[1][1].clone() + RatFuncS::one();
    assert!(qlier_identities(&bad, &t.braiding).bracket_identity.is_some());
    let mut flip = vec![vec![RatFuncS::zero(); 16]; 16];
    for u in 0..4 {
        for v in 0..4 {
            flip[4 * u + v][4 * v + u] = RatFuncS::one();
        }
    }
    let r = qlier_identities(&t.bracket, &flip);
    assert!(r.braiding_identity.is_some());
    assert!(r.braid_relation.is_none());
}

#[test]
fn lc_matches_tangent() {
    let t = su2_q_generators().unwrap();
    let r = lc_tangent_sl2(&t).unwrap();
    assert_eq!(r.dimension, 4);
    assert!(r.equal && r.unit_word_in_span);
}

#[test]
fn qtrace_check_and_control() {
    let t = su2_q_generators().unwrap();
    let r = qtrace_inner_check(&t, 2).unwrap();
    assert!(r.passed(), "{:?}", r.failures.first());
    assert_eq!(r.checked, 4 * (4 + 16));
    let q3 = q().pow(3) - RatFuncS::one();
    let expected = (q() + qinv()) * q().pow(2) / (q3 * (q() - RatFuncS::one()));
    assert_eq!(r.eps_alpha, expected);
    let bad = qtrace_inner_check_with(&t, 1, TraceNormalisation::Unit).unwrap();
    assert!(!bad.passed());
}

#[test]
fn classical_limit_structure() {
    let t = su2_q_generators().unwrap();
    let r = classical_limit(&t).unwrap();
    assert!(r.zeroth_order_vanishes);
    assert!(r.kappa_uniform && r.trace_central && r.antisymmetric && r.jacobi);
    assert_eq!(r.kappa, Some(Rational::from_i64(-4)));
    assert!(r.uniform_braiding_is_flip);
    assert!(!r.graded_braiding_is_flip, "{:?}", r.graded_braiding);
    assert!(r.graded_matches_quadratic_form, "{:?}\n{:?}", r.graded_bracket, r.graded_braiding);
    assert!(r.casimir_tensor_matches);
    eprintln!("mu = {:?}, lambda = {:?}", r.casimir_eigenvalue, r.casimir_scale);
    assert_eq!(r.casimir_eigenvalue, Some(Rational::from_i64(32)));
    assert!(r.passed());
}

#[test]
fn qsuite_selection() {
    let r = run_qsuite(&[QCheck::Qlier], 1).unwrap();
    assert_eq!(r.checks.len(), 1);
    assert!(r.all_passed());
    assert_eq!(QCheck::parse("classical_limit"), Some(QCheck::ClassicalLimit));
    assert_eq!(QCheck::parse("nope"), None);
}
