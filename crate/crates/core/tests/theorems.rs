//! Exhaustive theorem harnesses on small finite spaces.

use strongnear::connect::{
    between_theorem_check, closure_theorem_check, countable_criterion_check, delta_implies_connected,
    find_decomposition, find_strong_chain, image_preservation_check, verify_strong_chain, CriterionLink,
};
use strongnear::hyper::homeomorphism_theorem_check;
use strongnear::maps::{is_homeomorphism_witness, open_map_check_finite, spc_exhaustive};
use strongnear::proximity::{all_subsets, check_axioms, is_compatible, AxiomOptions};
use strongnear::spaces::enumerate_topologies;
use strongnear::{Decomposition, FiniteSpace, PointMap, PointSet, Space, StrongProximityKind};

fn io() -> StrongProximityKind {
    StrongProximityKind::interior_overlap()
}

fn topologies_up_to(n: usize) -> Vec<FiniteSpace> {
    (1..=n).flat_map(|k| enumerate_topologies(k).unwrap()).collect()
}

fn all_tables(n: usize, m: usize) -> Vec<Vec<usize>> {
    (0..m.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_tables(n, n)
        .into_iter()
        .filter(|t| (0..n).all(|i| t.contains(&i)))
        .collect()
}

fn nonempty_subsets(n: usize) -> Vec<PointSet> {
    PointSet::all_subsets(n).filter(|s| !s.is_empty()).collect()
}

#[test]
fn interior_overlap_is_compatible_and_passes_axioms() {
    for s in topologies_up_to(3) {
        assert!(is_compatible(&io(), &s).unwrap());
        let fam = all_subsets(&s).unwrap();
        assert!(check_axioms(&io(), &s, &fam, AxiomOptions::default()).all_passed());
    }
}

#[test]
fn spc_maps_are_open() {
    let spaces = topologies_up_to(2);
    let mut checked = 0;
    for x in &spaces {
        for y in &spaces {
            for t in all_tables(x.len(), y.len()) {
                let f = PointMap::Table { images: t };
                if spc_exhaustive(&f, &io(), x, &io(), y).unwrap().spc {
                    checked += 1;
                    assert!(open_map_check_finite(&f, x, y, x.opens()).unwrap().all_passed);
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn bijective_spe_maps_lift_to_hyper_homeomorphisms() {
    let spaces = topologies_up_to(2);
    for x in &spaces {
        for y in spaces.iter().filter(|y| y.len() == x.len()) {
            for t in permutations(x.len()) {
                let f = PointMap::Table { images: t };
                if spc_exhaustive(&f, &io(), x, &io(), y).unwrap().spe {
                    assert!(homeomorphism_theorem_check(x, y, io(), io(), &f).unwrap());
                }
            }
        }
    }
}

fn families(n: usize, max: usize) -> Vec<Vec<PointSet>> {
    let subs = nonempty_subsets(n);
    let mut out = vec![];
    let mut stack: Vec<(usize, Vec<PointSet>)> = vec![(0, vec![])];
    while let Some((start, fam)) = stack.pop() {
        if !fam.is_empty() {
            out.push(fam.clone());
        }
        if fam.len() < max {
            for (i, s) in subs.iter().enumerate().skip(start) {
                let mut next = fam.clone();
                next.push(*s);
                stack.push((i + 1, next));
            }
        }
    }
    out
}

#[test]
fn delta_connected_sets_are_connected() {
    for s in topologies_up_to(3) {
        for fam in families(s.len(), 3) {
            let target = s.union_all(fam.iter());
            if let Some(d) = find_decomposition(&io(), &s, &target, &fam, fam.len()).unwrap() {
                assert!(delta_implies_connected(&io(), &s, &target, &d).unwrap());
            }
        }
    }
}

#[test]
fn closures_and_in_between_sets_of_regular_open_decompositions() {
    let mut verified = 0;
    for s in topologies_up_to(3) {
        let regular: Vec<PointSet> = s.opens().iter().copied().filter(|o| s.is_regular_open(o)).collect();
        for fam in families(s.len(), 2) {
            if !fam.iter().all(|p| regular.contains(p)) {
                continue;
            }
            let a = s.union_all(fam.iter());
            let Some(d) = find_decomposition(&io(), &s, &a, &fam, fam.len()).unwrap() else {
                continue;
            };
            verified += 1;
            assert!(closure_theorem_check(&io(), &s, &d).unwrap());
            let cl = s.closure(&a);
            for g in s.subsets().filter(|g| a.is_subset(*g) && g.is_subset(cl)) {
                assert!(between_theorem_check(&io(), &s, &d, &g).unwrap(), "{s:?} {d:?} {g:?}");
            }
        }
    }
    assert!(verified > 0);
}

#[test]
fn relabelings_preserve_decompositions() {
    for x in topologies_up_to(3) {
        for y in topologies_up_to(3).iter().filter(|y| y.len() == x.len()) {
            for t in permutations(x.len()) {
                let f = PointMap::Table { images: t };
                if !is_homeomorphism_witness(&f, &x, y).unwrap() {
                    continue;
                }
                for fam in families(x.len(), 2) {
                    let target = x.union_all(fam.iter());
                    if let Some(d) = find_decomposition(&io(), &x, &target, &fam, fam.len()).unwrap() {
                        assert!(image_preservation_check(&f, &io(), &x, &io(), y, &target, &d).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn countable_criterion_on_a_path() {
    // Basis sets overlapping in a row: {a,b}, {b,c,d}, {d,e}.
    let s = FiniteSpace::from_labels(
        &["a", "b", "c", "d", "e"],
        &[&["a", "b"], &["b", "c", "d"], &["d", "e"]],
    )
    .unwrap();
    let ab = s.set_of(&["a", "b"]).unwrap();
    let bcd = s.set_of(&["b", "c", "d"]).unwrap();
    let de = s.set_of(&["d", "e"]).unwrap();
    let links = vec![
        CriterionLink {
            from_nbhd: ab,
            to_nbhd: bcd,
            piece: ab | bcd,
        },
        CriterionLink {
            from_nbhd: bcd,
            to_nbhd: de,
            piece: bcd | de,
        },
    ];
    let pts = [0, 2, 4];
    assert!(countable_criterion_check(&io(), &s, &pts, &links).unwrap());
    let bad = vec![
        links[0].clone(),
        CriterionLink {
            from_nbhd: bcd,
            to_nbhd: de,
            piece: bcd,
        },
    ];
    assert!(countable_criterion_check(&io(), &s, &pts, &bad).is_err());
    let one = FiniteSpace::discrete(1).unwrap();
    let full = one.full();
    let single = vec![CriterionLink {
        from_nbhd: full,
        to_nbhd: full,
        piece: full,
    }];
    assert!(countable_criterion_check(&io(), &one, &[0], &single).unwrap());
}

/// In a strongly connected space every open cover links any two points.
#[test]
fn strong_chains_exist_in_strongly_connected_spaces() {
    let mut chains = 0;
    for s in topologies_up_to(3) {
        let cands = nonempty_subsets(s.len());
        if find_decomposition(&io(), &s, &s.full(), &cands, 3).unwrap().is_none() {
            continue;
        }
        let opens: Vec<PointSet> = s.opens().iter().copied().filter(|o| !o.is_empty()).collect();
        let covers = families(s.len(), 3)
            .into_iter()
            .filter(|f| f.iter().all(|u| opens.contains(u)) && s.union_all(f.iter()) == s.full());
        for cover in covers {
            for a in 0..s.len() {
                for b in 0..s.len() {
                    let chain = find_strong_chain(&io(), &s, &cover, a, b).unwrap();
                    let chain = chain.unwrap_or_else(|| panic!("{s:?} {cover:?} {a} {b}"));
                    assert!(verify_strong_chain(&io(), &s, &cover, &chain));
                    chains += 1;
                }
            }
        }
    }
    assert!(chains > 0);
}

#[test]
fn single_piece_decomposition_needs_no_nearness() {
    let s = FiniteSpace::from_labels(&["a", "b"], &[&["a"]]).unwrap();
    let d = Decomposition::new(vec![s.full()]);
    assert!(delta_implies_connected(&io(), &s, &s.full(), &d).unwrap());
}
