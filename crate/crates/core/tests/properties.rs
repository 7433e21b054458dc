use proptest::prelude::*;

use kodaira_core::catalog::{
    check_noether, growth_class, has_full_rule, instantiate, kodaira_dimension, plurigenus, sample_surfaces,
};
use kodaira_core::cobordism::{balance_blowups, h_cobordant};
use kodaira_core::constructions::{blow_up, curve_kod, product, threefold_plurigenus};
use kodaira_core::dsl::{parse, pretty_print, ConstructionExpr, SurfaceExpr};
use kodaira_core::invariants::signature_from_chern;
use kodaira_core::verifier::{
    dolgachev_grid, min_distinguishing_plurigenus, verify_theorem_a, verify_theorem_b, ExampleId,
};
use kodaira_core::{ChernTriple, Curve, SurfaceFamily, SurfaceModel};

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    prop::sample::select(dolgachev_grid(13))
}

fn family() -> impl Strategy<Value = SurfaceFamily> {
    use SurfaceFamily::*;
    prop_oneof![
        Just(ProjectivePlane),
        Just(RationalElliptic),
        Just(K3Elliptic),
        Just(Barlow),
        Just(Catanese),
        Just(Horikawa),
        Just(Sextic),
        coprime_pair().prop_map(|(p, q)| Dolgachev { p, q }),
        coprime_pair().prop_map(|(p, q)| HomotopyK3 { p, q }),
        (3u64..=20).prop_map(|n| EllipticMn { n }),
    ]
}

/// Pairs of families with equal geometric genus.
fn same_genus_pair() -> impl Strategy<Value = (SurfaceFamily, SurfaceFamily)> {
    use SurfaceFamily::*;
    let mut all = vec![ProjectivePlane, RationalElliptic, K3Elliptic, Barlow, Catanese, Horikawa, Sextic];
    for (p, q) in dolgachev_grid(9) {
        all.push(Dolgachev { p, q });
        all.push(HomotopyK3 { p, q });
    }
    all.extend((3..=20).map(|n| EllipticMn { n }));
    let p_g = |f: &SurfaceFamily| surface(*f).hodge.p_g();
    let pairs: Vec<_> =
        all.iter().flat_map(|a| all.iter().filter(move |b| p_g(a) == p_g(b)).map(move |b| (*a, *b))).collect();
    prop::sample::select(pairs)
}

fn surface(f: SurfaceFamily) -> SurfaceModel {
    instantiate(f).unwrap()
}

fn indefinite(s: &SurfaceModel) -> bool {
    s.intersection_form().unwrap().is_indefinite()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn blow_up_moves_chern_numbers_and_keeps_the_rest(f in family(), k in 0u64..=200, j in 0u64..=50) {
        let s = surface(f);
        let b = blow_up(&s, k).unwrap();
        prop_assert_eq!(b.chern.c1_sq, s.chern.c1_sq - k as i64);
        prop_assert_eq!(b.chern.c2, s.chern.c2 + k as i64);
        prop_assert_eq!(b.hodge, s.hodge);
        prop_assert_eq!(b.kod, s.kod);
        prop_assert!(check_noether(&b).is_ok());
        let form = b.intersection_form().unwrap();
        prop_assert_eq!(form.signature(), signature_from_chern(b.chern).unwrap());
        prop_assert_eq!(form.rank() as i64, b.chern.c2 - 2);
        // composition
        prop_assert_eq!(blow_up(&b, j).unwrap(), blow_up(&s, k + j).unwrap());
    }

    #[test]
    fn product_chern_triple_commutes_with_blow_up(f in family(), k in 0u64..=30, g in 0u64..=5) {
        let b = blow_up(&surface(f), k).unwrap();
        let x = product(&b, Curve::new(g)).unwrap();
        let (a, c) = (b.chern.c1_sq, b.chern.c2);
        let e = 2 - 2 * g as i64;
        prop_assert_eq!(x.chern3, ChernTriple { c1_cubed: 3 * e * a, c1c2: e * (a + c), c3: e * c });
        prop_assert_eq!(x.chern3, ChernTriple::of_product(b.chern, g).unwrap());
    }

    #[test]
    fn plurigenera_are_blow_up_invariant(f in family(), k in 1u64..=40) {
        let s = surface(f);
        let b = blow_up(&s, k).unwrap();
        for m in 1..=60 {
            prop_assert_eq!(plurigenus(&b, m), plurigenus(&s, m));
        }
    }

    #[test]
    fn blow_up_preserves_h_cobordism(f1 in family(), f2 in family(), j in 0u64..=20, k in 0u64..=20) {
        let a = blow_up(&surface(f1), j).unwrap();
        let b = blow_up(&surface(f2), j).unwrap();
        prop_assume!(indefinite(&a) && indefinite(&b));
        if h_cobordant(&a, &b).unwrap() {
            prop_assert!(h_cobordant(&blow_up(&a, k).unwrap(), &blow_up(&b, k).unwrap()).unwrap());
        }
    }

    #[test]
    fn balancing_produces_h_cobordant_pairs((f1, f2) in same_genus_pair(), k in 1u64..=20) {
        let (a, b) = (surface(f1), surface(f2));
        let (big, small) = if a.chern.c1_sq >= b.chern.c1_sq { (a, b) } else { (b, a) };
        let (x, y) = balance_blowups(&big, &small, k).unwrap();
        prop_assert!(h_cobordant(&x, &y).unwrap());
        prop_assert_eq!(x.chern, y.chern);
        prop_assert_eq!(y.blowups, k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn threefold_kod_is_additive_and_matches_growth(f in family(), g in 0u64..=4, k in 0u64..=5) {
        prop_assume!(has_full_rule(f));
        let s = blow_up(&surface(f), k).unwrap();
        let x = product(&s, Curve::new(g)).unwrap();
        prop_assert_eq!(x.kod, kodaira_dimension(&s).unwrap().checked_add(curve_kod(Curve::new(g))).unwrap());
        let values: Vec<u64> = (1..=60).map(|m| threefold_plurigenus(&x, m).unwrap()).collect();
        prop_assert_eq!(growth_class(&values).unwrap(), x.kod);
    }
}

#[test]
fn h_cobordism_is_an_equivalence_relation_on_the_sample() {
    let mut sample = Vec::new();
    for s in sample_surfaces().unwrap() {
        for k in 0..=20 {
            let b = blow_up(&s, k).unwrap();
            if indefinite(&b) {
                sample.push(b);
            }
        }
    }
    let n = sample.len();
    let rel: Vec<Vec<bool>> =
        sample.iter().map(|a| sample.iter().map(|b| h_cobordant(a, b).unwrap()).collect()).collect();
    for i in 0..n {
        assert!(rel[i][i]);
        for j in 0..n {
            assert_eq!(rel[i][j], rel[j][i]);
            if !rel[i][j] {
                continue;
            }
            assert!((0..n).all(|l| !rel[j][l] || rel[i][l]), "transitivity through {j}");
        }
    }
}

fn surface_expr() -> impl Strategy<Value = SurfaceExpr> {
    let leaf = family().prop_map(SurfaceExpr::family);
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), any::<u64>()).prop_map(|(c, k)| SurfaceExpr::blow_up(c, k)),
            (inner, any::<u64>(), any::<u64>()).prop_map(|(c, p, q)| SurfaceExpr::log_transform(c, p, q)),
        ]
    })
}

fn construction_expr() -> impl Strategy<Value = ConstructionExpr> {
    prop_oneof![
        surface_expr().prop_map(ConstructionExpr::Surface),
        (surface_expr(), any::<u64>()).prop_map(|(s, g)| ConstructionExpr::product(s, g)),
    ]
}

/// Inserts whitespace around every delimiter.
fn spaced(text: &str, pad: &str) -> String {
    let mut out = String::new();
    for c in text.chars() {
        if matches!(c, '(' | ')' | ',') {
            out.push_str(pad);
            out.push(c);
            out.push_str(pad);
        } else {
            out.push(c);
        }
    }
    format!("{pad}{out}{pad}")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn pretty_print_round_trips(e in construction_expr()) {
        let text = pretty_print(&e);
        let back = parse(&text).unwrap();
        prop_assert!(back.same_structure(&e), "{text}");
        prop_assert_eq!(pretty_print(&back), text);
    }

    #[test]
    fn whitespace_does_not_change_the_parse(e in construction_expr(), pad in "[ \t\n]{1,3}") {
        let text = pretty_print(&e);
        prop_assert!(parse(&spaced(&text, &pad)).unwrap().same_structure(&parse(&text).unwrap()));
    }

    #[test]
    fn error_spans_lie_inside_the_input(text in "[a-z_0-9(), é-]{0,40}") {
        if let Err(err) = parse(&text) {
            prop_assert!(err.span.start <= err.span.end && err.span.end <= text.len());
            prop_assert!(text.is_char_boundary(err.span.start) && text.is_char_boundary(err.span.end));
        }
    }

    #[test]
    fn evaluation_error_spans_lie_inside_the_input(e in construction_expr()) {
        let text = pretty_print(&e);
        if let Err(err) = kodaira_core::dsl::evaluate(&parse(&text).unwrap()) {
            prop_assert!(err.span.start <= err.span.end && err.span.end <= text.len());
        }
    }
}

#[test]
fn distinguishing_exponent_is_symmetric_on_the_grid() {
    let grid = dolgachev_grid(7);
    for g in [1, 2] {
        let models: Vec<_> = grid
            .iter()
            .map(|&(p, q)| product(&surface(SurfaceFamily::Dolgachev { p, q }), Curve::new(g)).unwrap())
            .collect();
        for x in &models {
            for y in &models {
                assert_eq!(
                    min_distinguishing_plurigenus(x, y, 40).unwrap(),
                    min_distinguishing_plurigenus(y, x, 40).unwrap()
                );
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for id in ExampleId::THEOREM_A {
        assert_eq!(verify_theorem_a(id, 6, 2), verify_theorem_a(id, 6, 2));
    }
    assert_eq!(verify_theorem_b(ExampleId::B3, 2, 1, 40), verify_theorem_b(ExampleId::B3, 2, 1, 40));
}
