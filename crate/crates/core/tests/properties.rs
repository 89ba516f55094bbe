use num_traits::{One, Zero};
use proptest::prelude::*;
use qtangent::field::{CyclotomicField, Field, Matrix, Poly, RatFuncS, Rational, Subspace};
use qtangent::group::{group_from_spec, GroupSpec, DEFAULT_CAP};
use qtangent::hopf::{HopfElement, HopfPair, Side};
use qtangent::uq::{pair_word, ALetter, AWord, Mono, PbwElement};
use std::sync::Arc;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn matrix(rows: usize, cols: usize, v: &[i64]) -> Matrix<Rational> {
    Matrix::new(rows, cols, v.iter().take(rows * cols).map(|&x| rat(x)).collect())
}

fn small_matrix(max: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(-2i64..=2, r * c).prop_map(move |v| matrix(r, c, &v)))
}

fn subspace(ambient: usize) -> impl Strategy<Value = Subspace<Rational>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, ambient), 0..=ambient)
        .prop_map(move |rows| Subspace::from_vectors(ambient, rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(5)) {
        let once = m.rref().unwrap();
        let twice = once.reduced.rref().unwrap();
        prop_assert_eq!(&once.reduced, &twice.reduced);
        prop_assert_eq!(once.rank, m.transpose().rank().unwrap());
    }

    #[test]
    fn kernel_is_annihilated(m in small_matrix(5)) {
        let k = m.kernel().unwrap();
        prop_assert_eq!(k.dim() + m.rank().unwrap(), m.cols());
        for v in k.basis().row_vecs() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn meet_join_dimensions(u in subspace(5), v in subspace(5)) {
        let join = u.join(&v).unwrap();
        let meet = u.meet(&v).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(meet.is_subspace_of(&u) && meet.is_subspace_of(&v));
        prop_assert!(u.is_subspace_of(&join) && v.is_subspace_of(&join));
    }

    #[test]
    fn annihilator_is_an_involution(u in subspace(4), p in prop::collection::vec(-3i64..=3, 16)) {
        let pm = matrix(4, 4, &p);
        prop_assume!(pm.rank().unwrap() == 4);
        let ann = u.annihilator(&pm).unwrap();
        prop_assert_eq!(ann.dim() + u.dim(), 4);
        let back = ann.annihilator(&pm.transpose()).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn inverse_roundtrip(m in prop::collection::vec(-3i64..=3, 9)) {
        let a = matrix(3, 3, &m);
        match a.inverse().unwrap() {
            Some(inv) => prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3)),
            None => prop_assert!(a.rank().unwrap() < 3),
        }
    }
}

fn ratfunc() -> impl Strategy<Value = RatFuncS> {
    (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-3i64..=3, 1..3), -3i64..=3).prop_filter_map(
        "nonzero denominator",
        |(n, d, k)| {
            let num = Poly::new(n.into_iter().map(rat).collect());
            let den = Poly::new(d.into_iter().map(rat).collect());
            (!den.is_zero()).then(|| RatFuncS::new(num, den) * RatFuncS::s_pow(k))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        if let Some(inv) = a.inv() {
            prop_assert!((a.clone() * inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        // lowest terms make equality structural
        if !b.is_zero() {
            prop_assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        }
    }

    #[test]
    fn specialisation_is_a_ring_map(a in ratfunc(), b in ratfunc()) {
        if let (Ok(x), Ok(y)) = (a.specialize_s1(), b.specialize_s1()) {
            prop_assert_eq!((a.clone() * b.clone()).specialize_s1().unwrap(), x.clone() * y.clone());
            prop_assert_eq!((a + b).specialize_s1().unwrap(), x + y);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_identities(
        n in prop::sample::select(vec![3u32, 4, 5, 6, 8, 12]),
        ca in prop::collection::vec(-3i64..=3, 1..8),
        cb in prop::collection::vec(-3i64..=3, 1..8),
        k in 1i64..24,
    ) {
        let f = CyclotomicField::new(n);
        let a = f.from_coeffs(ca.into_iter().map(rat).collect());
        let b = f.from_coeffs(cb.into_iter().map(rat).collect());
        let zeta = f.zeta(1);
        let mut p = zeta.clone();
        let mut sum = f.zeta(0);
        for _ in 1..n {
            sum = sum + p.clone();
            p = p * zeta.clone();
        }
        prop_assert!(p.is_one(), "zeta^n = 1");
        prop_assert!(sum.is_zero(), "sum of n-th roots vanishes");
        if let Some(inv) = a.inv() {
            prop_assert!((a.clone() * inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
        if num_integer::gcd(k, i64::from(n)) == 1 {
            prop_assert_eq!((a.clone() * b.clone()).galois(k), a.galois(k) * b.galois(k));
            prop_assert_eq!((a.clone() + b.clone()).galois(k), a.galois(k) + b.galois(k));
        }
        prop_assert_eq!(a.conj().conj(), a);
    }
}

fn pair(name: &str) -> HopfPair {
    HopfPair::new(Arc::new(group_from_spec(&GroupSpec::from_short(name).unwrap(), DEFAULT_CAP).unwrap()))
}

fn element(side: Side, n: usize, terms: &[(usize, i64)]) -> HopfElement<Rational> {
    HopfElement::from_terms(side, terms.iter().map(|&(i, c)| (i % n, rat(c))))
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..64, -3i64..=3), 1..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn finite_group_hopf_axioms(
        g in prop::sample::select(vec!["S3", "D4", "Q8", "A4"]),
        tx in terms(), ty in terms(), ta in terms(), tb in terms(),
    ) {
        let p = pair(g);
        let n = p.dim();
        for side in [Side::Group, Side::Function] {
            let x = element(side, n, &tx);
            // m (S (x) id) Delta = m (id (x) S) Delta = eps 1
            let mut left = HopfElement::zero(side);
            let mut right = HopfElement::zero(side);
            for ((u, v), c) in p.coproduct(&x).terms() {
                let (bu, bv) = (HopfElement::basis(side, u), HopfElement::basis(side, v));
                left.add_scaled(&p.product(&p.antipode(&bu), &bv).unwrap(), c);
                right.add_scaled(&p.product(&bu, &p.antipode(&bv)).unwrap(), c);
            }
            let unit = p.unit::<Rational>(side).scale(&p.counit(&x));
            prop_assert_eq!(&left, &unit);
            prop_assert_eq!(&right, &unit);
            // Delta is multiplicative
            let y = element(side, n, &ty);
            let dxy = p.coproduct(&p.product(&x, &y).unwrap());
            let (dx, dy) = (p.coproduct(&x), p.coproduct(&y));
            let mut prod = qtangent::hopf::TensorElement::zero((side, side));
            for ((a, b), c) in dx.terms() {
                for ((u, v), d) in dy.terms() {
                    if let (Some(s), Some(t)) = (p.product_basis(side, a, u), p.product_basis(side, b, v)) {
                        prod.add_term(s, t, c.clone() * d.clone());
                    }
                }
            }
            prop_assert_eq!(dxy, prod);
        }
        // <xy, a> = <x (x) y, Delta a> and <x, ab> = <Delta x, a (x) b>
        let (x, y) = (element(Side::Group, n, &tx), element(Side::Group, n, &ty));
        let (a, b) = (element(Side::Function, n, &ta), element(Side::Function, n, &tb));
        let lhs = p.pairing(&p.product(&x, &y).unwrap(), &a).unwrap();
        let rhs = p.coproduct(&a).terms().fold(Rational::zero(), |acc, ((u, v), c)| {
            acc + c.clone() * x.coeff(u) * y.coeff(v)
        });
        prop_assert_eq!(lhs, rhs);
        let lhs = p.pairing(&x, &p.product(&a, &b).unwrap()).unwrap();
        let rhs = p.coproduct(&x).terms().fold(Rational::zero(), |acc, ((u, v), c)| acc + c.clone() * a.coeff(u) * b.coeff(v));
        prop_assert_eq!(lhs, rhs);
    }
}

fn pbw() -> impl Strategy<Value = PbwElement> {
    prop::collection::vec((0u32..=2, -2i64..=2, 0u32..=2, -2i64..=2), 1..3).prop_map(|ts| {
        ts.into_iter().fold(PbwElement::zero(), |acc, (f, k, e, c)| {
            acc.add(&PbwElement::mono(Mono::new(f, 2 * k, e)).scale(&RatFuncS::int(c)))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn uq_hopf_structure(x in pbw(), y in pbw(), z in pbw()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y).coproduct(), x.coproduct().mul(&y.coproduct()));
        prop_assert_eq!(x.mul(&y).antipode(), y.antipode().mul(&x.antipode()));
        prop_assert_eq!(x.mul(&y).counit(), x.counit() * y.counit());
    }

    #[test]
    fn uq_pairing_duality(x in pbw(), y in pbw(), u in 0usize..4, v in 0usize..4) {
        let (lu, lv) = (ALetter::ALL[u], ALetter::ALL[v]);
        let (i, j) = lu.index();
        let lhs = pair_word(&x.mul(&y), &AWord::letter(lu)).unwrap();
        let rhs = (0..2).fold(RatFuncS::zero(), |acc, k| {
            acc + pair_word(&x, &AWord::letter(ALetter::from_index(i, k))).unwrap()
                * pair_word(&y, &AWord::letter(ALetter::from_index(k, j))).unwrap()
        });
        prop_assert_eq!(lhs, rhs);
        let direct = pair_word(&x, &AWord::word(&[lu, lv])).unwrap();
        let split = x.coproduct().terms().fold(RatFuncS::zero(), |acc, ((m1, m2), c)| {
            acc + c.clone()
                * pair_word(&PbwElement::mono(*m1), &AWord::letter(lu)).unwrap()
                * pair_word(&PbwElement::mono(*m2), &AWord::letter(lv)).unwrap()
        });
        prop_assert_eq!(direct, split);
    }
}
