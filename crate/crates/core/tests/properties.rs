use std::collections::BTreeSet;

use curvearr::geometry::{line_intersection, t_vector_from_lines, ProjectiveLine};
use curvearr::inequalities::{
    check_equal_degree, check_equal_degree_parametric, check_hirzebruch_classic, check_hirzebruch_improved,
    check_langer_lines, check_line_conic, check_line_conic_parametric, hirzebruch_classic_coefficient,
    hirzebruch_improved_coefficient, langer_coefficient,
};
use curvearr::orbifold::{
    alpha_interval, canonical_alpha, global_orbifold_euler_bound, lmy_lhs_bound, lmy_rhs, local_orbifold_euler,
    WeightVector,
};
use curvearr::search::{enumerate_tvectors, SearchMode};
use curvearr::{ArrangementClass, CatalogEntry, Rational};
use proptest::prelude::*;

fn rational_in_unit(den: i64) -> impl Strategy<Value = Rational> {
    (0..=den).prop_map(move |n| Rational::new(n, den))
}

/// A class satisfying the pair-count identity, with a nonempty alpha interval.
fn valid_class() -> impl Strategy<Value = ArrangementClass> {
    let modes = prop_oneof![
        (3u64..=12).prop_map(|k| SearchMode::Lines { k }),
        (2u64..=4, 2u64..=4).prop_map(|(d, k)| SearchMode::EqualDegree { d, k }),
        (0u64..=4, 1u64..=3).prop_map(|(l, k)| SearchMode::LineConic { l, k }),
    ];
    (modes, any::<prop::sample::Index>()).prop_filter_map("empty alpha interval", |(mode, idx)| {
        let comps = mode.components().ok()?;
        let total = curvearr::search::SearchSpec::new(mode).pair_total().ok()?;
        let ts = enumerate_tvectors(total, comps.total_count().max(2)).ok()?;
        let t = idx.get(&ts).clone();
        let class = ArrangementClass::new(comps, t);
        alpha_interval(&class).ok()?;
        Some(class)
    })
}

/// `k` lines with `t_r = 0` for `r > min(2k/3, k - 3)`, so every line inequality applies.
fn gated_line_class() -> impl Strategy<Value = ArrangementClass> {
    (6u64..=14, any::<prop::sample::Index>()).prop_map(|(k, idx)| {
        let cap = (2 * k / 3).min(k - 3);
        let ts = enumerate_tvectors(k * (k - 1) / 2, cap).unwrap();
        ArrangementClass::new(curvearr::ComponentSpec::lines(k).unwrap(), idx.get(&ts).clone())
    })
}

fn alpha_in(class: &ArrangementClass, num: u32, den: u32) -> Rational {
    let i = alpha_interval(class).unwrap();
    &i.lo + (&i.hi - &i.lo) * Rational::new(i64::from(num.min(den)), i64::from(den))
}

proptest! {
    #[test]
    fn bridging_identity(class in valid_class(), num in 0u32..=50, den in 1u32..=50) {
        let alpha = alpha_in(&class, num, den);
        let d = Rational::from(class.total_degree());
        let left = lmy_rhs(&class, &alpha) - lmy_lhs_bound(&class, &alpha).unwrap();
        let e = global_orbifold_euler_bound(&class, &alpha).unwrap().value;
        let right = Rational::from(3) * e - (&alpha * &d - Rational::from(3)).square();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn parametric_slack_is_scaled_lmy_gap(class in valid_class(), num in 0u32..=20, den in 1u32..=20) {
        let alpha = alpha_in(&class, num, den);
        let gap = lmy_rhs(&class, &alpha) - lmy_lhs_bound(&class, &alpha).unwrap();
        let reports = [
            check_line_conic_parametric(&class, &alpha).unwrap(),
            check_equal_degree_parametric(&class, &alpha).unwrap(),
        ];
        for r in reports.iter().filter(|r| r.applicable) {
            prop_assert_eq!(r.slack.clone().unwrap() * alpha.square(), gap.clone());
        }
    }

    #[test]
    fn canonical_alpha_reproduces_specialized_forms(class in valid_class()) {
        let alpha = canonical_alpha(&class);
        let lc = check_line_conic(&class);
        let lcp = check_line_conic_parametric(&class, &alpha).unwrap();
        prop_assert_eq!(lc.applicable, lcp.applicable);
        if lc.applicable {
            prop_assert_eq!(lc.slack, lcp.slack);
        }
        let ed = check_equal_degree(&class);
        let edp = check_equal_degree_parametric(&class, &alpha).unwrap();
        prop_assert_eq!(ed.applicable, edp.applicable);
        if ed.applicable {
            prop_assert_eq!(ed.slack, edp.slack);
        }
    }

    #[test]
    fn boundary_branches_agree(a_n in rational_in_unit(60), parts in prop::collection::vec(1u32..20, 1..6)) {
        // other weights split a_n proportionally, so a = 2 a_n
        let total: u32 = parts.iter().sum();
        let mut w: Vec<Rational> = parts
            .iter()
            .map(|&p| &a_n * Rational::new(i64::from(p), i64::from(total)))
            .collect();
        w.push(a_n.clone());
        let wv = WeightVector::new(w).unwrap();
        let a = wv.total();
        prop_assert_eq!(&a, &(Rational::from(2) * &a_n));
        let one = Rational::one();
        let exact_form = (&one - &a + &a_n) * (&one - &a_n);
        let bound_form = (&one - &a / Rational::from(2)).square();
        prop_assert_eq!(&exact_form, &bound_form);
        let v = local_orbifold_euler(&wv);
        prop_assert!(v.exact);
        prop_assert_eq!(v.value, exact_form);
    }

    #[test]
    fn heavy_points_have_zero_euler(ws in prop::collection::vec(rational_in_unit(12), 3..8)) {
        let wv = WeightVector::new(ws).unwrap();
        let v = local_orbifold_euler(&wv);
        if wv.total() > Rational::from(2) {
            prop_assert!(v.exact);
            prop_assert!(v.value.is_zero());
        } else {
            prop_assert!(!v.value.is_negative() && v.value <= Rational::one());
        }
    }

    #[test]
    fn exact_branch_monotone(ws in prop::collection::vec(rational_in_unit(24), 1..5), i in any::<prop::sample::Index>(), bump in 1i64..6) {
        let wv = WeightVector::new(ws).unwrap();
        let v0 = local_orbifold_euler(&wv);
        let mut raised = wv.weights().to_vec();
        let j = i.index(raised.len());
        raised[j] = (&raised[j] + Rational::new(bump, 24)).min(Rational::one());
        let wv1 = WeightVector::new(raised).unwrap();
        let v1 = local_orbifold_euler(&wv1);
        let two = Rational::from(2);
        let in_exact = |w: &WeightVector| w.total() <= two && &two * w.max() >= w.total();
        if in_exact(&wv) && in_exact(&wv1) {
            prop_assert!(v1.value <= v0.value);
        }
    }

    #[test]
    fn equal_degree_at_one_matches_langer(class in gated_line_class()) {
        let l = check_langer_lines(&class);
        let e = check_equal_degree(&class);
        prop_assert_eq!(l.applicable, e.applicable);
        if l.applicable {
            let k = Rational::from(class.components.total_count());
            prop_assert_eq!(l.slack, e.slack);
            prop_assert_eq!(l.lhs.unwrap() - &k, e.lhs.unwrap());
            prop_assert_eq!(l.rhs.unwrap() - &k, e.rhs.unwrap());
        }
    }

    #[test]
    fn chain_slack_ordering(class in gated_line_class()) {
        let l = check_langer_lines(&class);
        let i = check_hirzebruch_improved(&class);
        let c = check_hirzebruch_classic(&class);
        prop_assert!(l.applicable && i.applicable && c.applicable);
        prop_assert!(l.rhs >= i.rhs && i.rhs >= c.rhs);
        prop_assert!(c.lhs >= l.lhs);
        prop_assert!(c.slack >= i.slack && i.slack >= l.slack);
    }
}

#[test]
fn chain_coefficients() {
    for r in 5..=100 {
        assert!(langer_coefficient(r) >= hirzebruch_improved_coefficient(r), "r = {r}");
        assert!(hirzebruch_improved_coefficient(r) >= hirzebruch_classic_coefficient(r), "r = {r}");
    }
}

#[test]
fn catalog_satisfies_lmy_across_interval() {
    let mut entries = CatalogEntry::equality_list(3..=10);
    entries.extend((3..=12).map(CatalogEntry::GenericLines));
    for e in entries {
        let class = e.build().unwrap();
        for alpha in alpha_interval(&class).unwrap().sample(8) {
            assert!(lmy_lhs_bound(&class, &alpha).unwrap() <= lmy_rhs(&class, &alpha), "{e} at {alpha}");
        }
    }
}

fn small_line() -> impl Strategy<Value = ProjectiveLine> {
    (-20i64..=20, -20i64..=20, -20i64..=20)
        .prop_filter("zero", |&(a, b, c)| (a, b, c) != (0, 0, 0))
        .prop_map(|(a, b, c)| ProjectiveLine::new(a, b, c).unwrap())
}

proptest! {
    #[test]
    fn geometry_identity_and_incidence(raw in prop::collection::vec(small_line(), 2..12)) {
        let lines: Vec<_> = raw.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        prop_assume!(lines.len() >= 2);
        let class = t_vector_from_lines(&lines).unwrap();
        prop_assert!(class.validate_identity());
        for p in curvearr::geometry::intersection_points(&lines).unwrap() {
            let on: BTreeSet<usize> = (0..lines.len()).filter(|&i| lines[i].contains(&p.point)).collect();
            prop_assert_eq!(&on, &p.lines);
        }
    }

    #[test]
    fn intersection_symmetric(l1 in small_line(), l2 in small_line()) {
        prop_assume!(l1 != l2);
        let p = line_intersection(&l1, &l2).unwrap();
        prop_assert_eq!(&p, &line_intersection(&l2, &l1).unwrap());
        prop_assert!(l1.contains(&p) && l2.contains(&p));
    }

    #[test]
    fn canonicalization_idempotent(l in small_line(), scale in -7i64..=7) {
        prop_assume!(scale != 0);
        let [a, b, c] = l.coefficients().clone();
        let scaled = ProjectiveLine::new(a * scale, b * scale, c * scale).unwrap();
        prop_assert_eq!(&scaled, &l);
        let again = ProjectiveLine::from_coefficients(l.coefficients().clone()).unwrap();
        prop_assert_eq!(again, l);
    }
}
