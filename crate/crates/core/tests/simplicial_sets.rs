use nervekit::sset::{
    enumerate_maps, horn, poset_nerve, product, projections, simplex_boundary, standard_simplex, standard_simplex_labeled, FinitePoset,
    MapSearch, SimplicialSet,
};
use proptest::prelude::*;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A poset on `0..len` generated by pairs `a < b` with `a < b` as numbers.
fn poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=4).prop_flat_map(|len| {
        proptest::collection::vec((0..len, 0..len), 0..6).prop_map(move |pairs| {
            let pairs: Vec<(usize, usize)> = pairs.into_iter().filter(|(a, b)| a < b).collect();
            FinitePoset::from_relations(len, &pairs).unwrap()
        })
    })
}

fn small_set() -> impl Strategy<Value = SimplicialSet> {
    prop_oneof![
        (0usize..=2).prop_map(|n| standard_simplex(n, 2)),
        poset().prop_map(|p| poset_nerve(&p, 2)),
        Just(simplex_boundary(2, 2).set),
        Just(horn(2, 1, 2).set),
        Just(SimplicialSet::point(2)),
    ]
}

#[test]
fn simplex_level_sizes() {
    for n in 0..=4 {
        for d in 0..=4 {
            let x = standard_simplex(n, d);
            for k in 0..=d {
                assert_eq!(x.size(k), binomial(n + k + 1, k + 1), "Δ{n} level {k}");
            }
            assert!(x.validate().is_ok());
        }
    }
}

#[test]
fn subcomplexes_validate() {
    for n in 1..=3 {
        assert!(simplex_boundary(n, 3).set.validate().is_ok());
        for k in 0..=n {
            assert!(horn(n, k, 3).set.validate().is_ok());
        }
    }
}

#[test]
fn empty_set_is_valid() {
    let e = SimplicialSet::empty(3);
    assert!(e.validate().is_ok());
    assert!(enumerate_maps(&e, &standard_simplex(1, 3)).unwrap().len() == 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poset_nerves_validate(p in poset(), d in 0usize..=3) {
        prop_assert!(poset_nerve(&p, d).validate().is_ok());
    }

    /// Maps out of Δᵏ are the k-cells, by evaluation on the top cell.
    #[test]
    fn yoneda(p in poset(), k in 0usize..=2) {
        let x = poset_nerve(&p, 3);
        let simplex = standard_simplex_labeled(k, 3);
        let top = simplex.cell(k, &(0..=k).collect()).unwrap();
        let maps = enumerate_maps(&simplex.set, &x).unwrap();
        prop_assert_eq!(maps.len(), x.size(k));
        let mut hit = vec![false; x.size(k)];
        for m in &maps {
            let y = m.apply(k, top);
            prop_assert!(!hit[y]);
            hit[y] = true;
        }
    }

    #[test]
    fn products_multiply(x in small_set(), y in small_set()) {
        let p = product(&x, &y);
        prop_assert!(p.validate().is_ok());
        for n in 0..=2 {
            prop_assert_eq!(p.size(n), x.size(n) * y.size(n));
        }
        let (px, py) = projections(&x, &y);
        prop_assert!(px.validate(&p, &x).is_ok());
        prop_assert!(py.validate(&p, &y).is_ok());
    }

    #[test]
    fn enumeration_order_is_schedule_independent(a in small_set(), p in poset()) {
        let x = poset_nerve(&p, 2);
        let serial = MapSearch::new(&a, &x).images();
        let parallel = MapSearch::new(&a, &x).parallel(true).images();
        prop_assert_eq!(&serial, &parallel);
        prop_assert_eq!(serial, MapSearch::new(&a, &x).images());
    }
}
