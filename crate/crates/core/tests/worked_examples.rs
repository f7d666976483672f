//! Small hand-checked cases for every public operation.

use boolspace::counterexamples::{
    contraction_obstruction_witness, line_extension, IdealDescriptor, Predicate,
};
use boolspace::extension::{
    conv_extend, extend_contraction, extend_isometry, monotone_decompose, orthogonal_join,
    scalar_extension, uniqueness_certify, witt_solve, MonotoneTuple, WittInstance,
};
use boolspace::invariants::{
    alpha_by_definition, alpha_profile, brute_force_isometry, build_base, construct_isometry,
    decide_isometric, homogeneity_isometry,
};
use boolspace::metric::{
    check_map, conv_hull, convex_combine, decompose, distance, orthogonal_complement,
};
use boolspace::{
    Algebra, AlphaProfile, BooleanElement, Bits, ConvexCoefficients, Element, FinCof,
    FiniteSpace, MapKind, MapVerdict, PartialMap, Point,
};

fn b(s: &str) -> Bits {
    s.parse().unwrap()
}

fn fc(s: &str) -> FinCof {
    s.parse().unwrap()
}

fn pt(lits: &[&str]) -> Point {
    Point::parse(lits).unwrap()
}

fn space(points: &[&[&str]]) -> FiniteSpace {
    FiniteSpace::new(points.iter().map(|p| pt(p))).unwrap()
}

fn map(pairs: &[(&[&str], &[&str])], kind: MapKind) -> PartialMap {
    PartialMap::new(pairs.iter().map(|(x, y)| (pt(x), pt(y))), kind).unwrap()
}

#[test]
fn lattice_examples() {
    assert_eq!(b("110").meet(&b("011")), b("010"));
    for a in Bits::all(3) {
        assert!(a.symmetric_difference(&a).is_zero());
        assert!(a.join(&a.complement()).is_one());
    }
    assert_eq!(fc("fin{1,3}").join(&fc("cof{1,2}")), fc("cof{2}"));
    assert_ne!(fc("fin{4}"), fc("cof{4}"));
}

#[test]
fn sup_and_atoms() {
    let k3 = Algebra::finite(3).unwrap();
    let lits = ["100", "010", "001"].map(|s| k3.parse_element(s).unwrap());
    assert_eq!(k3.sup_family(&lits).unwrap(), k3.one());
    assert_eq!(k3.sup_family(&lits[..1]).unwrap(), lits[0]);
    let cof = Algebra::FiniteCofinite;
    let two = [Element::from(fc("fin{0}")), Element::from(fc("fin{2}"))];
    assert_eq!(cof.sup_family(&two).unwrap(), Element::from(fc("fin{0,2}")));

    let k2 = Algebra::finite(2).unwrap();
    let atoms = k2.atoms().unwrap();
    assert_eq!(atoms, vec![k2.parse_element("10").unwrap(), k2.parse_element("01").unwrap()]);
    assert_eq!(k2.sup_family(&atoms).unwrap(), k2.one());
    assert!(atoms[0].meet(&atoms[1]).unwrap().is_zero());
    assert!(cof.atoms().is_err());
}

#[test]
fn distance_examples() {
    assert_eq!(distance(&pt(&["10", "01"]), &pt(&["10", "01"])).unwrap(), b("00"));
    assert_eq!(distance(&pt(&["11"]), &pt(&["01"])).unwrap(), b("10"));
    assert_eq!(distance(&pt(&["10", "01"]), &pt(&["01", "01"])).unwrap(), b("11"));
}

#[test]
fn combination_examples() {
    let (zero, one) = (pt(&["00"]), pt(&["11"]));
    // weight e1 on 0 and e2 on 1
    let c = ConvexCoefficients::from_partition(&[b("10"), b("01")]).unwrap();
    assert_eq!(convex_combine(&c, &[zero.clone(), one.clone()]).unwrap(), pt(&["01"]));
    let unit = ConvexCoefficients::unit(1, 2, 2).unwrap();
    assert_eq!(convex_combine(&unit, &[zero, one.clone()]).unwrap(), one);
    let c2 = convex_combine(&c, &[pt(&["10", "00"]), pt(&["01", "01"])]).unwrap();
    assert_eq!(c2, pt(&["11", "01"]));
}

#[test]
fn hull_examples() {
    for k in 1..=4 {
        let s = FiniteSpace::new([Point::zero(k, 1), Point::new(vec![Bits::one(k)]).unwrap()]).unwrap();
        assert_eq!(conv_hull(&s).unwrap().len(), 1 << k);
    }
    let single = space(&[&["01", "10"]]);
    assert_eq!(conv_hull(&single).unwrap(), single);
    // the three generators show only two patterns on each atom, so the hull
    // has 2 × 2 points; subset enumeration of the hull agrees
    let s = space(&[&["00", "00"], &["10", "00"], &["01", "01"]]);
    let h = conv_hull(&s).unwrap();
    assert_eq!(h, space(&[&["00", "00"], &["10", "00"], &["01", "01"], &["11", "01"]]));
    assert_eq!(alpha_by_definition(h.points()), alpha_by_definition(s.points()));
}

#[test]
fn decompose_examples() {
    let s = space(&[&["00"], &["11"]]);
    let c = decompose(&pt(&["01"]), &s).unwrap();
    assert_eq!(c.selection(), &[0, 1]);
    for (j, p) in s.points().iter().enumerate() {
        assert_eq!(convex_combine(&decompose(p, &s).unwrap(), s.points()).unwrap(), *p);
        assert!(decompose(p, &s).unwrap().selection().iter().all(|&i| i <= j));
    }
}

#[test]
fn complement_examples() {
    let x = space(&[&["0", "0"], &["1", "0"], &["0", "1"], &["1", "1"]]).with_basepoint(&pt(&["0", "0"])).unwrap();
    let zero = space(&[&["0", "0"]]);
    assert_eq!(orthogonal_complement(&zero, &x).unwrap().points(), x.points());

    let line = space(&[&["00"], &["11"]]);
    let hull = conv_hull(&line).unwrap().with_basepoint(&pt(&["00"])).unwrap();
    let perp = orthogonal_complement(&hull, &hull).unwrap();
    assert_eq!(perp.points(), &[pt(&["00"])]);

    let plane = conv_hull(&space(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap().with_basepoint(&pt(&["0", "0"])).unwrap();
    let u = conv_hull(&space(&[&["0", "0"], &["1", "0"]])).unwrap().with_basepoint(&pt(&["0", "0"])).unwrap();
    let expected = conv_hull(&space(&[&["0", "0"], &["0", "1"]])).unwrap();
    assert_eq!(orthogonal_complement(&u, &plane).unwrap().points(), expected.points());
}

#[test]
fn map_checks() {
    let s = space(&[&["00"], &["10"], &["11"]]);
    assert_eq!(check_map(&PartialMap::identity(&s)), MapVerdict::Isometric);
    let constant = PartialMap::constant(&s, &pt(&["01"]));
    assert_eq!(check_map(&constant), MapVerdict::Contractive);
    let shift = b("01");
    let translate = PartialMap::new(
        Bits::all(2).map(|x| (Point::new(vec![x]).unwrap(), Point::new(vec![x.symmetric_difference(&shift)]).unwrap())),
        MapKind::Isometric,
    )
    .unwrap();
    assert_eq!(check_map(&translate), MapVerdict::Isometric);
}

#[test]
fn alpha_examples() {
    let two = space(&[&["00"], &["11"]]);
    let p = alpha_profile(&two);
    assert_eq!((p.rank(), p.get(1), p.get(2)), (1, b("11"), b("00")));

    let three = space(&[&["00"], &["10"], &["11"]]);
    let p = alpha_profile(&three);
    assert_eq!((p.get(1), p.get(2)), (b("11"), b("00")));
    assert_eq!(p, alpha_by_definition(three.points()));

    let plane = space(&[&["00", "00"], &["11", "00"], &["00", "11"]]);
    let p = alpha_profile(&plane);
    assert_eq!((p.get(1), p.get(2), p.get(3)), (b("11"), b("11"), b("00")));
    assert!(p.is_decreasing());
}

#[test]
fn base_examples() {
    let line = conv_hull(&space(&[&["0"], &["1"]])).unwrap().with_basepoint(&pt(&["0"])).unwrap();
    assert_eq!(build_base(&line).unwrap().points, vec![pt(&["1"])]);

    let plane = conv_hull(&space(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap().with_basepoint(&pt(&["0", "0"])).unwrap();
    let base = build_base(&plane).unwrap();
    let mut got = base.points.clone();
    got.sort();
    assert_eq!(got, vec![pt(&["0", "1"]), pt(&["1", "0"])]);

    let point = space(&[&["0"]]).with_basepoint(&pt(&["0"])).unwrap();
    assert!(build_base(&point).unwrap().points.is_empty());
}

#[test]
fn isometry_examples() {
    let full = conv_hull(&space(&[&["00"], &["11"]])).unwrap();
    let half = conv_hull(&space(&[&["00"], &["10"]])).unwrap();
    assert!(decide_isometric(&full, &full));
    assert!(!decide_isometric(&full, &half));
    assert_eq!(alpha_profile(&half).get(1), b("10"));
    assert!(brute_force_isometry(&full, &half, 12).unwrap().is_none());
    let found = brute_force_isometry(&full, &full, 12).unwrap().unwrap();
    assert_eq!(check_map(&found), MapVerdict::Isometric);

    let f = construct_isometry(&full, &full).unwrap();
    assert_eq!(check_map(&f), MapVerdict::Isometric);
    assert_eq!(f.image().unwrap(), full);
}

#[test]
fn homogeneity_examples() {
    let b2 = conv_hull(&space(&[&["00"], &["11"]])).unwrap();
    let x = pt(&["01"]);
    assert_eq!(homogeneity_isometry(&b2, &x, &x).unwrap(), PartialMap::identity(&b2));
    let phi = homogeneity_isometry(&b2, &pt(&["00"]), &pt(&["11"])).unwrap();
    for p in b2.points() {
        let complement = Point::new(vec![p.coords()[0].complement()]).unwrap();
        assert_eq!(phi.get(p), Some(&complement));
    }
}

#[test]
fn scalar_extension_examples() {
    let (zero, one) = (pt(&["00"]), pt(&["11"]));
    for x in Bits::all(2) {
        let p = Point::new(vec![x]).unwrap();
        let id = [(zero.clone(), b("00")), (one.clone(), b("11"))];
        assert_eq!(scalar_extension(&id, &p), x);
        let swap = [(zero.clone(), b("11")), (one.clone(), b("00"))];
        assert_eq!(scalar_extension(&swap, &p), x.complement());
        let constant = [(zero.clone(), b("10")), (one.clone(), b("10"))];
        assert_eq!(scalar_extension(&constant, &p), b("10"));
    }
    let f = map(&[(&["00"], &["11"]), (&["11"], &["00"])], MapKind::Isometric);
    assert_eq!(conv_extend(&f).unwrap().len(), 4);
}

#[test]
fn orthogonal_join_examples() {
    let plane = conv_hull(&space(&[&["0", "0"], &["1", "0"], &["0", "1"]])).unwrap().with_basepoint(&pt(&["0", "0"])).unwrap();
    let id = PartialMap::identity(&plane).with_kind(MapKind::Isometric);
    // U = X: the join is f itself
    assert_eq!(orthogonal_join(&plane, &plane, &id, &PartialMap::identity(&space(&[&["0", "0"]]))).unwrap(), id);

    let u = conv_hull(&space(&[&["0", "0"], &["1", "0"]])).unwrap().with_basepoint(&pt(&["0", "0"])).unwrap();
    let perp = orthogonal_complement(&u, &plane).unwrap();
    let joined = orthogonal_join(&plane, &u, &PartialMap::identity(&u), &PartialMap::identity(&perp)).unwrap();
    assert_eq!(joined, PartialMap::identity(&plane));
    assert_eq!(check_map(&joined), MapVerdict::Isometric);
}

#[test]
fn witt_examples() {
    let one = Bits::one(1);
    let profile = |levels: usize, atoms: usize| AlphaProfile::new(atoms, vec![Bits::one(atoms); levels]);
    // single atom, q = 3, p = 1
    let inst = WittInstance::new(profile(1, 1), profile(3, 1)).unwrap();
    assert_eq!(witt_solve(&inst).unwrap().values(), &[one, one]);
    // a = b: only the trivial profile
    let inst = WittInstance::new(profile(2, 1), profile(2, 1)).unwrap();
    assert_eq!(witt_solve(&inst).unwrap().rank(), 0);
    // U = {0}: the complement is everything
    let b_profile = AlphaProfile::new(2, vec![b("11"), b("10")]);
    let inst = WittInstance::new(AlphaProfile::new(2, vec![]), b_profile.clone()).unwrap();
    assert_eq!(witt_solve(&inst).unwrap(), b_profile);
}

#[test]
fn uniqueness_examples() {
    let inst = WittInstance::new(
        AlphaProfile::new(1, vec![Bits::one(1)]),
        AlphaProfile::new(1, vec![Bits::one(1); 3]),
    )
    .unwrap();
    let gens = boolspace::extension::cube_generators(3, 1);
    let residual = |p: &Point| inst.residual(p.coords());
    let zero = uniqueness_certify(&gens, &residual).unwrap().unwrap();
    assert_eq!(zero, Some(pt(&["1", "1", "0"])));
    let never = |_: &Point| Bits::one(1);
    assert_eq!(uniqueness_certify(&gens, &never).unwrap(), Ok(None));
    // f(y_d) = b̄_d ∨ a_1, here 0 ∨ 1
    assert!(inst.residual(gens[3].coords()).is_one());
}

#[test]
fn monotone_decomposition_examples() {
    let c = MonotoneTuple::new(vec![b("11"), b("10"), b("00")]).unwrap();
    let w = monotone_decompose(&c).unwrap();
    assert_eq!(w.weights(), vec![b("00"), b("01"), b("10"), b("00")]);
    let gens = boolspace::extension::cube_generators(3, 2);
    assert_eq!(convex_combine(&w, &gens).unwrap(), c.to_point());
    let y2 = MonotoneTuple::new(vec![b("11"), b("11"), b("00")]).unwrap();
    assert_eq!(monotone_decompose(&y2).unwrap().selection(), &[2, 2]);
    let zero = MonotoneTuple::new(vec![b("00"); 3]).unwrap();
    assert_eq!(monotone_decompose(&zero).unwrap().selection(), &[0, 0]);
}

#[test]
fn extension_examples() {
    let line = space(&[&["0"], &["1"]]);
    let f = map(&[(&["0"], &["1"])], MapKind::Isometric);
    let e = extend_isometry(&f, &line).unwrap();
    assert_eq!(e, map(&[(&["0"], &["1"]), (&["1"], &["0"])], MapKind::Isometric));

    let b2 = conv_hull(&space(&[&["00"], &["11"]])).unwrap();
    let swap = homogeneity_isometry(&b2, &pt(&["00"]), &pt(&["10"])).unwrap();
    assert_eq!(extend_isometry(&swap, &b2).unwrap(), swap);

    let constant = PartialMap::constant(&space(&[&["00"], &["10"]]), &pt(&["01"]));
    let c = extend_contraction(&constant, &b2).unwrap();
    assert!(c.pairs().all(|(_, y)| *y == pt(&["01"])));
    let iso_as_contraction = extend_contraction(&swap.clone().with_kind(MapKind::Contractive), &b2).unwrap();
    assert!(check_map(&iso_as_contraction).is_ok());
}

#[test]
fn finite_cofinite_examples() {
    let evens = IdealDescriptor::new(Predicate::Evens).unwrap();
    assert_eq!(contraction_obstruction_witness(&fc("fin{2}"), &evens), fc("fin{0}"));
    assert_eq!(contraction_obstruction_witness(&fc("cof{}"), &evens), fc("fin{1}"));
    assert_eq!(contraction_obstruction_witness(&fc("fin{}"), &evens), fc("fin{0}"));

    let id = [(b("00"), b("00")), (b("10"), b("10"))];
    assert!(line_extension(&id).unwrap().shift.is_zero());
    let shift = fc("fin{3}");
    let finite_sets = ["fin{}", "fin{0}", "fin{3,9}", "fin{1,2,3,4}"].map(|s| {
        let x = fc(s);
        let y = x.symmetric_difference(&shift);
        (x, y)
    });
    assert_eq!(line_extension(&finite_sets).unwrap().shift, shift);
}
