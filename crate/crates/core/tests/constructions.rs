use nervekit::bisset::MarkedBisimplicialSet;
use nervekit::examples::{example, LIBRARY};
use nervekit::nerves::{binerve, binerve_marked, classifying_space, cls_diagram, comparison_map, hc_nerve, verify_theta};
use nervekit::sset::{poset_nerve, FinitePoset};
use nervekit::verify::{segal_check_on, segal_column_check};

#[test]
fn binerves_validate_and_transpose() {
    for name in LIBRARY {
        let rel = example(name, 2).unwrap();
        let b = binerve_marked(&rel, 2, 2).unwrap();
        let space = b.space();
        assert!(space.validate().is_ok(), "{name}");
        assert_eq!(space.transpose().diagonal(), space.diagonal(), "{name}");
        assert_eq!(space.transpose().transpose(), *space);
        for q in 0..=2 {
            assert!(space.row(q).validate().is_ok(), "{name} row {q}");
        }
        for p in 0..=2 {
            assert!(space.column(p).validate().is_ok(), "{name} column {p}");
        }
    }
}

/// Row `q` of the binerve is the nerve of the level-`q` category.
#[test]
fn binerve_rows_are_level_nerves() {
    for name in LIBRARY {
        let rel = example(name, 2).unwrap();
        let sc = rel.cat();
        let b = binerve(sc, 3, 2).unwrap();
        for q in 0..=2 {
            let cat = sc.level_category(q).unwrap();
            let row = b.space().row(q);
            let sizes: Vec<usize> = (0..=3).map(|p| row.size(p)).collect();
            // composable p-chains
            let mut expected = vec![cat.objects(), cat.morphisms()];
            for p in 2..=3 {
                let mut n = 0;
                let mut stack: Vec<Vec<usize>> = (0..cat.morphisms()).map(|m| vec![m]).collect();
                while let Some(ch) = stack.pop() {
                    if ch.len() == p {
                        n += 1;
                        continue;
                    }
                    let last = *ch.last().unwrap();
                    for m in 0..cat.morphisms() {
                        if cat.source(m) == cat.target(last) {
                            let mut next = ch.clone();
                            next.push(m);
                            stack.push(next);
                        }
                    }
                }
                expected.push(n);
            }
            assert_eq!(sizes, expected, "{name} row {q}");
        }
    }
}

#[test]
fn marked_diagonals_validate() {
    for name in LIBRARY {
        let rel = example(name, 3).unwrap();
        let b = binerve_marked(&rel, 2, 2).unwrap();
        let m: &MarkedBisimplicialSet = &b.marked;
        assert!(m.validate().is_ok(), "{name}");
        assert!(m.diag_plus().validate().is_ok(), "{name}");
        let hc = hc_nerve(rel.cat(), 3).unwrap();
        let cls = cls_diagram(&hc.marked(&rel), 1, 2).unwrap();
        assert!(cls.marked.validate().is_ok(), "{name}");
        assert!(cls.marked.diag_plus().validate().is_ok(), "{name}");
    }
}

#[test]
fn segal_conditions_hold() {
    for name in LIBRARY {
        let rel = example(name, 2).unwrap();
        let b = binerve(rel.cat(), 3, 2).unwrap();
        assert!(segal_check_on(b.space(), 3).passed(), "{name}");
        assert!(segal_column_check(&rel, 3, 2).unwrap().passed(), "{name}");
    }
}

#[test]
fn comparison_maps_validate() {
    for name in LIBRARY {
        let rel = example(name, 3).unwrap();
        let cm = comparison_map(rel.cat(), 3).unwrap();
        assert!(cm.map.validate(&cm.source, &cm.target.set).is_ok(), "{name}");
        assert_eq!(cm.source, classifying_space(rel.cat(), 3).unwrap());
    }
}

#[test]
fn theta_checks_pass_at_small_bidegree() {
    for name in LIBRARY {
        let rel = example(name, 3).unwrap();
        for (p, q) in [(1, 1), (2, 1), (1, 2)] {
            assert!(verify_theta(&rel, p, q).unwrap().passed(), "{name} ({p}, {q})");
        }
    }
}

/// For a discrete category the coherent nerve is the ordinary nerve.
#[test]
fn discrete_coherent_nerve_is_nerve() {
    for spec in ["discrete:poset01", "discrete:chain2", "poset:3:0<1,0<2", "discrete:antichain2"] {
        let rel = example(spec, 4).unwrap();
        let hc = hc_nerve(rel.cat(), 4).unwrap();
        let b = classifying_space(rel.cat(), 4).unwrap();
        assert_eq!(hc.set.sizes(), b.sizes(), "{spec}");
    }
    let chain = poset_nerve(&FinitePoset::chain(2), 4);
    let rel = example("discrete:chain2", 4).unwrap();
    assert_eq!(hc_nerve(rel.cat(), 4).unwrap().set.sizes(), chain.sizes());
}
