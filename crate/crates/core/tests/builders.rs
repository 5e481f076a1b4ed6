mod common;

use common::{big, coker_2x2, random_word, rng};
use num_integer::Integer;
use proptest::prelude::*;
use tricomplex::arith::ratio;
use tricomplex::complexity::{lens_bounds, prism_bounds, product_bounds, sol_bounds_cf, sol_bounds_word};
use tricomplex::farey::{tree_path, FareyTriangle};
use tricomplex::psl2z::{classify, word_to_matrix, IntMatrix, Kind};
use tricomplex::triangulate::{
    build_layered_solid_torus, build_lens, build_sol, build_torus_product, homology, validate, GluingTable,
};

fn digit_sum(mut p: i64, mut q: i64) -> i64 {
    let mut s = 0;
    while q != 0 {
        s += p / q;
        (p, q) = (q, p % q);
    }
    s
}

#[test]
fn small_lens_spaces() {
    for (p, q, tets) in [
        (2, 1, 2),
        (3, 1, 2),
        (3, 2, 2),
        (4, 1, 1),
        (5, 1, 2),
        (5, 2, 1),
        (7, 2, 2),
        (8, 3, 2),
        (11, 3, 3),
    ] {
        let table = build_lens(&big(p), &big(q)).unwrap();
        let r = validate(&table).unwrap();
        assert_eq!(r.tetrahedra, tets, "L({p},{q})");
        assert!(r.closed && r.orientable && r.valid_edges);
        let h = homology(&table).unwrap();
        assert!(
            h.is(0, 1, &[]) && h.is(1, 0, &[p]) && h.is(2, 0, &[]) && h.is(3, 1, &[]),
            "L({p},{q}): {h}"
        );
    }
    assert!(build_lens(&big(5), &big(5)).is_err());
    assert!(build_lens(&big(6), &big(4)).is_err());
}

#[test]
fn layered_solid_tori_have_one_vertex_torus_boundary() {
    for p in 3..=40i64 {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let solid = build_layered_solid_torus(&big(p), &big(q)).unwrap();
            let r = validate(&solid.table).unwrap();
            assert_eq!(r.tetrahedra as i64, digit_sum(p, q) - 2, "LST({p},{q})");
            assert!(r.orientable && r.valid_edges);
            assert_eq!(r.boundary.len(), 1);
            assert!(r.boundary[0].is_one_vertex_torus());
            assert!(homology(&solid.table).unwrap().is(1, 1, &[]));
        }
    }
}

#[test]
fn products_over_long_geodesics() {
    let mut r = rng(31);
    for _ in 0..50 {
        let m = word_to_matrix(&random_word(&mut r, 30));
        let end = tricomplex::farey::act_triangle(&m, &FareyTriangle::base()).unwrap();
        let path = tree_path(&FareyTriangle::base(), &end);
        let product = build_torus_product(&path).unwrap();
        let report = validate(&product.table).unwrap();
        assert_eq!(report.tetrahedra, 6 + path.len() - 1);
        assert_eq!(product.top.triangle(), end);
        let h = homology(&product.table).unwrap();
        assert!(h.is(1, 2, &[]) && h.is(2, 1, &[]) && h.is(3, 0, &[]), "{h}");
        assert_eq!(
            product_bounds(&FareyTriangle::base(), &end).upper,
            Some(big(6 + path.len() as i64 - 1))
        );
    }
}

#[test]
fn sol_manifolds_with_negative_trace() {
    let mut r = rng(41);
    let mut seen = 0;
    while seen < 40 {
        let a = word_to_matrix(&random_word(&mut r, 24)).neg();
        if classify(&a).unwrap().kind != Kind::Anosov || a.trace() > big(0) {
            continue;
        }
        seen += 1;
        let table = build_sol(&a).unwrap();
        let report = validate(&table).unwrap();
        assert!(
            report.closed && report.orientable && report.valid_edges && report.euler == 0,
            "{a}"
        );
        let h = homology(&table).unwrap();
        let (free, torsion) = coker_2x2(&(&a.a - 1), &a.b, &a.c, &(&a.d - 1));
        assert_eq!(h.betti[1], 1 + free, "{a}");
        assert_eq!(h.torsion[1], torsion, "{a}");
    }
}

#[test]
fn built_tables_survive_text_and_json() {
    let tables = [
        build_lens(&big(17), &big(5)).unwrap(),
        build_sol(&IntMatrix::new(3, 2, 1, 1)).unwrap(),
    ];
    for t in tables {
        let text: GluingTable = t.to_string().parse().unwrap();
        assert_eq!(text, t);
        assert_eq!(GluingTable::from_json(&t.to_json()).unwrap(), t);
    }
}

#[test]
fn bounds_reports() {
    let r = lens_bounds(&big(7), &big(2)).unwrap();
    assert_eq!(r.proxy, ratio(digit_sum(7, 2), 1));
    assert!(lens_bounds(&big(6), &big(3)).is_err());
    assert!(prism_bounds(&big(3), &big(0)).is_err());
    let a = IntMatrix::new(2, 1, 1, 1);
    assert_eq!(sol_bounds_word(&a).unwrap().upper, Some(big(8)));
    let cf = sol_bounds_cf(&a.pow(3)).unwrap();
    assert_eq!(cf.power, 3);
    assert_eq!(cf.fixed_point_reading, big(6));
    assert!(sol_bounds_word(&IntMatrix::new(1, 1, 0, 1)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn lens_homology_by_construction(p in 4i64..400, q in 1i64..400) {
        prop_assume!(q < p && p.gcd(&q) == 1);
        let table = build_lens(&big(p), &big(q)).unwrap();
        prop_assert_eq!(table.len() as i64, digit_sum(p, q) - 3);
        prop_assert!(homology(&table).unwrap().is(1, 0, &[p]));
    }
}
