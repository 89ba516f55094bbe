use super::*;
use crate::field::{Cyclotomic, Field, Rational};
use crate::group::{character_table, group_from_spec, FiniteGroup, GroupSpec, DEFAULT_CAP};
use crate::hopf::{CalculusSide, HopfElement, HopfPair, Side, TensorElement};
use num_traits::Zero;
use std::sync::Arc;

fn group(s: &str) -> Arc<FiniteGroup> {
    Arc::new(group_from_spec(&GroupSpec::from_short(s).unwrap(), DEFAULT_CAP).unwrap())
}

fn x_g(g: &FiniteGroup, name: &str) -> HopfElement<Rational> {
    let i = g.parse_element(name).unwrap();
    HopfElement::from_terms(Side::Group, [(i, Rational::from_i64(1)), (0, Rational::from_i64(-1))])
}

fn class_calculus(c: &FunctionClassification, g: &FiniteGroup, rep: &str) -> FirstOrderCalculus<Rational> {
    let idx = g.parse_element(rep).unwrap();
    let cc = c.calculi.iter().find(|cc| cc.tangent.basis().iter().any(|x| x.coeff(idx) != Rational::from_i64(0))).unwrap();
    FirstOrderCalculus::new(cc.tangent.clone()).unwrap()
}

#[test]
fn s3_function_side_dimensions() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let mut dims: Vec<usize> = c.calculi.iter().map(|cc| cc.tangent.dim()).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![2, 3]);
    assert!(c.direct_sum);
}

#[test]
fn z4_and_trivial_group() {
    let c = classify_functions(&group("Z4")).unwrap();
    assert_eq!(c.calculi.iter().map(|cc| cc.tangent.dim()).collect::<Vec<_>>(), vec![1, 1, 1]);
    let trivial = Arc::new(group_from_spec(&GroupSpec::from_short("Z1").unwrap(), DEFAULT_CAP).unwrap());
    assert!(classify_functions(&trivial).unwrap().calculi.is_empty());
}

#[test]
fn s3_braiding_and_bracket_on_class_tangents() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let trans = class_calculus(&c, &g, "(1,2)");
    let psi = trans.braiding(&x_g(&g, "(1,2)"), &x_g(&g, "(1,3)")).unwrap();
    assert_eq!(psi, TensorElement::outer(&x_g(&g, "(2,3)"), &x_g(&g, "(1,2)")));
    assert!(trans.bracket(&x_g(&g, "(1,2)"), &x_g(&g, "(1,2)")).unwrap().is_zero());

    // [x_(12), x_(123)] needs both classes, so use the universal calculus.
    let univ = FirstOrderCalculus::new(TangentSpace::universal(c.pair(), CalculusSide::Functions).unwrap()).unwrap();
    let br = univ.bracket(&x_g(&g, "(1,2)"), &x_g(&g, "(1,2,3)")).unwrap();
    assert_eq!(br, x_g(&g, "(1,3,2)").sub(&x_g(&g, "(1,2,3)")));
}

impl FunctionClassification {
    fn pair(&self) -> &HopfPair {
        &self.pair
    }
}

#[test]
fn partial_derivatives_on_functions() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let calc = class_calculus(&c, &g, "(1,2)");
    let s = g.parse_element("(1,2)").unwrap();
    let k = g.parse_element("(1,2,3)").unwrap();
    let d = calc.partial_derivative(&x_g(&g, "(1,2)"), &HopfElement::basis(Side::Function, k)).unwrap();
    let gk = g.mul(g.inverse(s), k);
    let expected = HopfElement::from_terms(Side::Function, [(gk, Rational::from_i64(1)), (k, Rational::from_i64(-1))]);
    assert_eq!(d, expected);
    assert!(calc.partial_derivative(&x_g(&g, "(1,2)"), &c.pair.unit(Side::Function)).unwrap().is_zero());
    assert_eq!(calc.partial_derivative(&x_g(&g, "(1,2,3)"), &expected), Err(CalculusError::NotInL));

    let z2 = group("Z2");
    let cz = classify_functions(&z2).unwrap();
    let calc = FirstOrderCalculus::new(cz.calculi[0].tangent.clone()).unwrap();
    let d = calc.differential(&HopfElement::basis(Side::Function, 0)).unwrap();
    let expected = HopfElement::from_terms(Side::Function, [(1, Rational::from_i64(1)), (0, Rational::from_i64(-1))]);
    assert_eq!(d.values, vec![expected]);
}

#[test]
fn s3_class_calculi_pass_full_suite() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let mut witness = false;
    for cc in &c.calculi {
        let rep = verify_tangent(&cc.tangent, &Check::ALL).unwrap();
        assert!(rep.all_passed(), "{:?}", rep);
        witness |= rep.unbraided_leibniz_witness.is_some();
    }
    assert!(witness);
}

#[test]
fn unstable_span_is_reported() {
    let g = group("S3");
    let pair = HopfPair::new(g.clone());
    let t = TangentSpace::from_spanning(&pair, CalculusSide::Functions, vec![x_g(&g, "(1,2)")], Provenance::User).unwrap();
    let StabilityCertificate::Unstable(why) = t.certificate() else { panic!("expected unstable") };
    assert!(why.starts_with("(1,2,3) |> x0"), "{why}");
    assert!(why.contains("(1,3)"), "{why}");
    let rep = verify_tangent(&t, &[Check::Stability, Check::Leibniz]).unwrap();
    assert!(!rep.all_passed());
    assert_eq!(rep.status(Check::Leibniz).unwrap().label(), "skipped");
    assert!(FirstOrderCalculus::new(t).is_err());
}

#[test]
fn zero_calculus_passes_vacuously() {
    let pair = HopfPair::new(group("S3"));
    let t = TangentSpace::<Rational>::zero(&pair, CalculusSide::Functions).unwrap();
    assert!(verify_tangent(&t, &Check::ALL).unwrap().all_passed());
}

#[test]
fn s3_group_algebra_families() {
    let g = group("S3");
    let c = classify_group_algebra(&g).unwrap();
    assert_eq!(c.families.iter().map(|f| f.degree).collect::<Vec<_>>(), vec![1, 2]);
    assert_eq!(c.block_dim_sum(), 5);
    let std = &c.families[1].instantiation;
    let s = g.parse_element("(1,2)").unwrap();
    let one = Cyclotomic::from_i64(1);
    assert_eq!(std.lambda_hat, HopfElement::from_terms(Side::Group, [(0, one.clone()), (s, one.clone())]));
    assert_eq!((std.rank, std.tangent.dim(), std.coirreducible), (1, 2, true));
    assert_eq!(c.families[0].instantiation.lambda_hat, HopfElement::basis(Side::Group, 0));

    // lambda-hat = e spans the whole isotypic block.
    let user = tangent_from_lambda(&c.pair, &c.table, 2, &HopfElement::basis(Side::Group, 0)).unwrap();
    assert_eq!(user.dim(), 4);
    for fam in &c.families {
        let rep = verify_tangent(&fam.instantiation.tangent, &Check::ALL).unwrap();
        assert!(rep.all_passed(), "{:?}", rep);
    }
}

#[test]
fn z2_group_algebra_derivative() {
    let g = group("Z2");
    let pair = HopfPair::new(g.clone());
    let table = character_table(&g).unwrap();
    let t = tangent_from_lambda(&pair, &table, 1, &HopfElement::basis(Side::Group, 0)).unwrap();
    assert_eq!(t.dim(), 1);
    let calc = FirstOrderCalculus::new(t.clone()).unwrap();
    let u = HopfElement::basis(Side::Group, 1);
    let d = calc.partial_derivative(&t.basis()[0], &u).unwrap();
    assert_eq!(d, u.scale(&Cyclotomic::from_i64(-2)));

    let killed = HopfElement::from_terms(Side::Group, [(0, Cyclotomic::from_i64(1)), (1, Cyclotomic::from_i64(1))]);
    assert!(matches!(tangent_from_lambda(&pair, &table, 1, &killed), Err(CalculusError::EmptyTangent(_))));
    assert_eq!(tangent_from_lambda(&pair, &table, 1, &HopfElement::zero(Side::Group)).unwrap_err(), CalculusError::ZeroLambda);
}

#[test]
fn group_algebra_brackets_vanish() {
    let c = classify_group_algebra(&group("S3")).unwrap();
    for fam in &c.families {
        let calc = FirstOrderCalculus::new(fam.instantiation.tangent.clone()).unwrap();
        for i in 0..calc.dim() {
            for j in 0..calc.dim() {
                assert!(calc.bracket_coords(i, j).iter().all(|v| v.is_zero()));
            }
        }
    }
}

#[test]
fn inner_tangents_reproduce_class_tangents() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let one = Rational::from_i64(1);
    for cc in &c.calculi {
        let members = g.conjugacy_classes().classes[cc.class].clone();
        let alpha_ii = class_function::<Rational>(members.iter().copied());
        let alpha_i = class_function::<Rational>(members.iter().copied().chain([0]));
        let t2 = inner_tangent(&c.pair, CalculusSide::Functions, &alpha_ii, InnerVariant::TypeII(one.clone())).unwrap();
        let t1 = inner_tangent(&c.pair, CalculusSide::Functions, &alpha_i, InnerVariant::TypeI).unwrap();
        assert_eq!(t1.subspace(), cc.tangent.subspace());
        assert_eq!(t2.subspace(), cc.tangent.subspace());
        for t in [t1, t2] {
            let rep = verify_tangent(&t, &[Check::Inner]).unwrap();
            assert_eq!(rep.status(Check::Inner), Some(&CheckStatus::Pass));
        }
    }
    let unit = c.pair.unit::<Rational>(Side::Function);
    let t = inner_tangent(&c.pair, CalculusSide::Functions, &unit, InnerVariant::TypeI).unwrap();
    assert_eq!(t.dim(), 5);
    let not_class = class_function::<Rational>([1]);
    assert!(matches!(
        inner_tangent(&c.pair, CalculusSide::Functions, &not_class, InnerVariant::TypeI),
        Err(CalculusError::NotAdInvariant(_))
    ));
}

#[test]
fn central_elements_regenerate_class_tangents() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    for cc in &c.calculi {
        let sum = class_sum::<Rational>(&c.pair, cc.class);
        let t = centrally_generated(&c.pair, CalculusSide::Functions, &sum, true).unwrap();
        assert_eq!(t.subspace(), cc.tangent.subspace());
        assert_eq!(central_intertwiner_check(&c.pair, CalculusSide::Functions, &sum).unwrap(), None);
    }
    let e = HopfElement::<Rational>::basis(Side::Group, 0);
    assert!(matches!(centrally_generated(&c.pair, CalculusSide::Functions, &e, true), Err(CalculusError::EmptyTangent(_))));
    let s = HopfElement::<Rational>::basis(Side::Group, 1);
    assert!(matches!(centrally_generated(&c.pair, CalculusSide::Functions, &s, true), Err(CalculusError::NotCentral(_))));
}

#[test]
fn central_function_matches_lambda_tangent() {
    let g = group("S3");
    let ga = classify_group_algebra(&g).unwrap();
    let fam = &ga.families[1];
    let lambda = &fam.instantiation.lambda_hat;
    let n = g.order();
    let cfun = HopfElement::from_terms(
        Side::Function,
        (0..n).map(|u| {
            (u, lambda.terms().fold(Cyclotomic::from_i64(0), |acc, (l, c)| acc + ga.table.value(&g, fam.row, g.mul(u, l)) * c.clone()))
        }),
    );
    let t = centrally_generated(&ga.pair, CalculusSide::GroupAlgebra, &cfun, false).unwrap();
    assert_eq!(t.subspace(), fam.instantiation.tangent.subspace());
}

#[test]
fn ideal_round_trip_and_mirror_laws() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let pair = &c.pair;
    for cc in &c.calculi {
        let m = ideal_from_tangent(&cc.tangent).unwrap();
        assert_eq!(m.dim() + cc.tangent.dim(), 5);
        let back = tangent_from_ideal(pair, &m).unwrap();
        assert_eq!(back.subspace(), cc.tangent.subspace());
    }
    let univ = TangentSpace::<Rational>::universal(pair, CalculusSide::Functions).unwrap();
    assert_eq!(ideal_from_tangent(&univ).unwrap().dim(), 0);

    let csum = class_sum::<Rational>(pair, 1);
    let zero = QuotientIdeal::new(CalculusSide::Functions, crate::field::Subspace::zero(6), Handedness::Right);
    assert_eq!(mirror_ideal(pair, &zero, &csum).unwrap().dim(), 5);
    let keps = ideal_from_tangent(&TangentSpace::<Rational>::zero(pair, CalculusSide::Functions).unwrap()).unwrap();
    let keps_r = QuotientIdeal::new(CalculusSide::Functions, keps.subspace.clone(), Handedness::Right);
    let lc = centrally_generated(pair, CalculusSide::Functions, &csum, true).unwrap();
    assert_eq!(mirror_ideal(pair, &keps_r, &csum).unwrap().subspace, ideal_from_tangent(&lc).unwrap().subspace);
    let ideals = right_class_ideals::<Rational>(pair).unwrap();
    assert_eq!(ideals.len(), 3);
    for m in &ideals {
        let once = mirror_ideal(pair, m, &csum).unwrap();
        let twice = mirror_ideal_left(pair, &once, &csum).unwrap();
        assert!(m.subspace.is_subspace_of(&twice.subspace));
    }
}

#[test]
fn meet_and_join() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let a = FirstOrderCalculus::new(c.calculi[0].tangent.clone()).unwrap();
    let b = FirstOrderCalculus::new(c.calculi[1].tangent.clone()).unwrap();
    assert_eq!(calculus_meet(&a, &b).unwrap().dim(), 0);
    let j = calculus_join(&a, &b).unwrap();
    assert_eq!(j.dim(), 5);
    assert_eq!(calculus_meet(&a, &a).unwrap().tangent().subspace(), a.tangent().subspace());
    assert!(verify_calculus(&j, &[Check::Leibniz, Check::Bracket, Check::Jacobi, Check::Surjectivity]).unwrap().all_passed());
}

#[test]
fn exterior_ranks() {
    let g = group("S3");
    let c = classify_functions(&g).unwrap();
    let three = class_calculus(&c, &g, "(1,2,3)");
    assert_eq!(exterior_rank2(&three).unwrap(), 1);
    let z4 = classify_functions(&group("Z4")).unwrap();
    for cc in &z4.calculi {
        assert_eq!(exterior_rank2(&FirstOrderCalculus::new(cc.tangent.clone()).unwrap()).unwrap(), 0);
    }
}

#[test]
fn reports_serialize() {
    let g = group("S3");
    let r = functions_report(&classify_functions(&g).unwrap(), &Check::ALL).unwrap();
    assert!(r.all_passed());
    assert_eq!(r.calculi.len(), 2);
    let r2 = group_algebra_report(&classify_group_algebra(&g).unwrap(), &Check::ALL).unwrap();
    assert_eq!(r2.calculi[1].parameter_space.as_deref(), Some("CP^1"));
    assert_eq!(r2.calculi[1].character_row.as_ref().unwrap(), &vec!["2".to_string(), "0".into(), "-1".into()]);
}
