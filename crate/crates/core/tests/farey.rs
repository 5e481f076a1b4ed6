mod common;

use std::collections::HashSet;

use common::{big, random_word, rng, BfsTree};
use num_bigint::BigInt;
use rand::Rng;
use tricomplex::arith::{cf_of_rational, cf_of_surd, ratio, QuadraticSurd};
use tricomplex::farey::{
    act_triangle, connecting_anosov, cutting_sequence, line_distance, translation_length, tree_distance, tree_path,
    CutTarget, FareyLine, FareyTriangle, Side, Slope, TranslationMethod,
};
use tricomplex::psl2z::{classify, word_to_matrix, Kind};

fn bfs(radius: usize) -> BfsTree {
    BfsTree::new(radius)
}

#[test]
fn neighbours_are_symmetric_and_the_graph_is_a_tree() {
    let tree = bfs(8);
    // a trivalent tree has 1 + 3(2^r - 1) vertices within radius r
    assert_eq!(tree.order.len(), 1 + 3 * ((1 << 8) - 1));
    for t in &tree.order {
        let ns = t.neighbors();
        let distinct: HashSet<_> = ns.iter().collect();
        assert_eq!(distinct.len(), 3);
        for n in &ns {
            assert!(n.neighbors().contains(t));
            assert!(t.adjacency(n).is_some());
        }
    }
}

#[test]
fn tree_distance_matches_breadth_first_search() {
    let tree = bfs(7);
    let nodes = &tree.order;
    for a in nodes {
        for b in nodes {
            assert_eq!(tree_distance(a, b), tree.distance(a, b), "{a} {b}");
        }
    }
}

#[test]
fn tree_paths_are_geodesics() {
    let tree = bfs(6);
    let mut r = rng(3);
    for _ in 0..500 {
        let a = &tree.order[r.gen_range(0..tree.order.len())];
        let b = &tree.order[r.gen_range(0..tree.order.len())];
        let path = tree_path(a, b);
        assert_eq!(path.first(), Some(a));
        assert_eq!(path.last(), Some(b));
        assert_eq!(path.len() - 1, tree.distance(a, b));
        assert!(path.windows(2).all(|w| w[0].adjacency(&w[1]).is_some()));
    }
}

#[test]
fn distance_is_a_metric_and_invariant_under_the_action() {
    let tree = bfs(6);
    let mut r = rng(5);
    let pick = |r: &mut rand_chacha::ChaCha8Rng| tree.order[r.gen_range(0..tree.order.len())].clone();
    for _ in 0..500 {
        let (a, b, c) = (pick(&mut r), pick(&mut r), pick(&mut r));
        let (ab, bc, ac) = (tree_distance(&a, &b), tree_distance(&b, &c), tree_distance(&a, &c));
        assert_eq!(ab, tree_distance(&b, &a));
        assert!(ac <= ab + bc);
        assert_eq!(ab == 0, a == b);
        let m = word_to_matrix(&random_word(&mut r, 20));
        let (ma, mb) = (act_triangle(&m, &a).unwrap(), act_triangle(&m, &b).unwrap());
        assert_eq!(tree_distance(&ma, &mb), ab);
    }
}

#[test]
fn line_distance_matches_nearest_triangles() {
    // lines as sets of triangles within a BFS ball, distance by brute force
    let tree = bfs(7);
    let slopes: Vec<Slope> = ["inf", "0", "1", "1/2", "2/3", "-3/2", "5/3", "-1/4", "3/5"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let on = |s: &Slope| -> Vec<&FareyTriangle> { tree.order.iter().filter(|t| t.contains(s)).collect() };
    for x in &slopes {
        for y in &slopes {
            if x == y {
                continue;
            }
            let (xs, ys) = (on(x), on(y));
            let brute = xs
                .iter()
                .flat_map(|a| ys.iter().map(|b| tree.distance(a, b)))
                .min()
                .unwrap();
            let got = line_distance(&FareyLine::new(x.clone()), &FareyLine::new(y.clone())).unwrap();
            assert_eq!(got, brute, "{x} {y}");
            assert_eq!(
                got,
                line_distance(&FareyLine::new(y.clone()), &FareyLine::new(x.clone())).unwrap()
            );
        }
    }
}

#[test]
fn cutting_sequences_follow_expansion_digits() {
    for p in 1..=200i64 {
        for q in 1..=40i64 {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let r = ratio(p, q);
            let seq = cutting_sequence(&CutTarget::Rational(r.clone()), 1).unwrap();
            let digits: Vec<BigInt> = cf_of_rational(&r)
                .digits()
                .iter()
                .filter(|a| **a != big(0))
                .cloned()
                .collect();
            assert_eq!(seq.exponents(), digits);
            let first = if p >= q { Side::L } else { Side::R };
            assert_eq!(seq.runs[0].0, first);
            assert!(seq.runs.windows(2).all(|w| w[0].0 != w[1].0));
        }
    }
    for d in 2..=50i64 {
        let Ok(x) = QuadraticSurd::sqrt(d) else { continue };
        let seq = cutting_sequence(&CutTarget::Surd(x.clone()), 30).unwrap();
        assert_eq!(seq.exponents(), cf_of_surd(&x).unwrap().take(30));
    }
}

#[test]
fn three_translation_methods_agree() {
    let mut r = rng(17);
    let mut seen = 0;
    while seen < 200 {
        let m = word_to_matrix(&random_word(&mut r, 24));
        if classify(&m).unwrap().kind != Kind::Anosov {
            continue;
        }
        seen += 1;
        let values: Vec<BigInt> = TranslationMethod::ALL
            .iter()
            .map(|k| translation_length(&m, *k).unwrap())
            .collect();
        assert!(values.iter().all(|v| *v == values[0]), "{m}: {values:?}");
        for k in 2..=3u32 {
            assert_eq!(
                translation_length(&m.pow(k), TranslationMethod::Word).unwrap(),
                &values[0] * k
            );
        }
    }
}

#[test]
fn connecting_matrices_translate_by_the_distance() {
    let tree = bfs(6);
    let mut r = rng(23);
    let mut seen = 0;
    while seen < 100 {
        let a = &tree.order[r.gen_range(0..tree.order.len())];
        let b = &tree.order[r.gen_range(0..tree.order.len())];
        let d = tree_distance(a, b);
        if d < 2 {
            assert!(connecting_anosov(a, b).is_err());
            continue;
        }
        seen += 1;
        let m = connecting_anosov(a, b).unwrap();
        assert_eq!(act_triangle(&m, a).unwrap(), *b);
        assert_eq!(translation_length(&m, TranslationMethod::Word).unwrap(), big(d as i64));
    }
}
