//! Structural invariants exercised across the whole builtin catalog.

use regset::{
    build_even_tau, build_witness, exhaustive_witness_search, involution_profile,
    is_code_with_respect_to, list_normal_subgroups, perfect_code_transversal, regular_set_check,
    satisfies_sharp_condition, standard_catalog, strip_subgroup_part, CosetDecomposition,
    ElementSet, Group, ParameterTriple, SearchLimits, SearchVerdict, SharpConditionOutcome,
    Subgroup,
};

fn proper_normal_subgroups(group: &Group) -> Vec<Subgroup> {
    list_normal_subgroups(group, true).expect("catalog orders are under the bound")
}

#[test]
fn group_axioms_hold_for_every_catalog_table() {
    for entry in standard_catalog(24) {
        let g = &entry.group;
        let n = g.order();
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.mul(e, a), a, "{}: left identity", entry.name);
            assert_eq!(g.mul(a, e), a, "{}: right identity", entry.name);
            assert_eq!(g.mul(a, g.inv(a)), e, "{}: right inverse", entry.name);
            assert_eq!(g.mul(g.inv(a), a), e, "{}: left inverse", entry.name);
            assert_eq!(
                g.inv(g.inv(a)),
                a,
                "{}: inverse is an involution",
                entry.name
            );
            assert_eq!(n % g.element_order(a), 0, "{}: Lagrange", entry.name);
        }
        // Latin square, both directions.
        for a in 0..n {
            let mut row: Vec<usize> = (0..n).map(|b| g.mul(a, b)).collect();
            let mut col: Vec<usize> = (0..n).map(|b| g.mul(b, a)).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>(), "{}: row {a}", entry.name);
            assert_eq!(
                col,
                (0..n).collect::<Vec<_>>(),
                "{}: column {a}",
                entry.name
            );
        }
        // Full associativity scan; cheap at catalog orders.
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)), "{}", entry.name);
                }
            }
        }
    }
}

/// Independent subgroup predicate for the full-subset cross-check.
fn is_subgroup_brute(group: &Group, members: &[usize]) -> bool {
    members.contains(&group.identity())
        && members
            .iter()
            .all(|&a| members.iter().all(|&b| members.contains(&group.mul(a, b))))
}

fn is_normal_brute(group: &Group, members: &[usize]) -> bool {
    group.elements().all(|g| {
        members
            .iter()
            .all(|&h| members.contains(&group.conjugate(g, h)))
    })
}

#[test]
fn normal_subgroup_listing_matches_full_subset_scan() {
    for entry in standard_catalog(12) {
        let g = &entry.group;
        let n = g.order();
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if members.is_empty() || n % members.len() != 0 {
                continue;
            }
            if is_subgroup_brute(g, &members) && is_normal_brute(g, &members) {
                expected.push(members);
            }
        }
        expected.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));

        let listed: Vec<Vec<usize>> = list_normal_subgroups(g, false)
            .unwrap()
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        assert_eq!(listed, expected, "{}", entry.name);

        for subgroup in list_normal_subgroups(g, false).unwrap() {
            assert!(subgroup.is_normal(g));
        }
    }
}

#[test]
#[allow(clippy::needless_range_loop)] // i is a coset position, not a plain index
fn coset_structure_invariants_across_the_catalog() {
    for entry in standard_catalog(24) {
        let g = &entry.group;
        for h in proper_normal_subgroups(g) {
            let dec = CosetDecomposition::new(g, &h).unwrap();
            let s = dec.coset_count();
            let t = dec.self_inverse_count();
            let ell = dec.pair_count();
            assert_eq!(s, g.order() / h.order() - 1, "{}", entry.name);
            assert_eq!(s - t, 2 * ell, "{}: s - t is even", entry.name);

            // Partition and membership map agree.
            let mut covered = 0;
            for i in 0..=s {
                assert_eq!(dec.coset_members(i).len(), h.order());
                for &x in dec.coset_members(i) {
                    assert_eq!(dec.position_of(x), i);
                }
                covered += dec.coset_members(i).len();
            }
            assert_eq!(covered, g.order());

            // Sigma is an involution matching elementwise inversion, and has
            // the canonical piecewise shape.
            for i in 1..=s {
                assert_eq!(dec.sigma(dec.sigma(i)), i);
                let expected_sigma = if i <= t {
                    i
                } else if i <= t + ell {
                    i + ell
                } else {
                    i - ell
                };
                assert_eq!(dec.sigma(i), expected_sigma, "{}", entry.name);
                let mut inverted: Vec<usize> =
                    dec.coset_members(i).iter().map(|&x| g.inv(x)).collect();
                inverted.sort_unstable();
                assert_eq!(inverted, dec.coset_members(dec.sigma(i)));
            }

            // Involution counts: zero on paired cosets, even complement on
            // self-inverse ones, and consistent with the independent scan.
            let profile = involution_profile(g, &dec);
            for i in 1..=s {
                assert_eq!(profile[i], dec.involutions_in(i));
                if i > t {
                    assert_eq!(dec.involutions_in(i), 0, "{}", entry.name);
                } else {
                    assert_eq!((h.order() - dec.involutions_in(i)) % 2, 0);
                }
            }

            // Left cosets equal right cosets under normality.
            for i in 0..=s {
                let rep = dec.transversal()[i];
                let mut right: Vec<usize> = h.iter().map(|x| g.mul(x, rep)).collect();
                right.sort_unstable();
                assert_eq!(right, dec.coset_members(i), "{}", entry.name);
            }
        }
    }
}

#[test]
fn sharp_condition_transversal_and_coset_criterion_agree() {
    for entry in standard_catalog(24) {
        let g = &entry.group;
        for h in proper_normal_subgroups(g) {
            let sharp = satisfies_sharp_condition(g, &h).unwrap();
            let transversal = perfect_code_transversal(g, &h).unwrap();
            let dec = CosetDecomposition::new(g, &h).unwrap();
            let coset_criterion =
                (1..=dec.self_inverse_count()).all(|i| dec.involutions_in(i) >= 1);
            assert_eq!(
                sharp.holds(),
                transversal.is_some(),
                "{} H={:?}",
                entry.name,
                h.members()
            );
            assert_eq!(
                sharp.holds(),
                coset_criterion,
                "{} H={:?}",
                entry.name,
                h.members()
            );

            if let SharpConditionOutcome::Holds { witnesses } = &sharp {
                for &(rep, hh) in witnesses {
                    let gh = g.mul(rep, hh);
                    assert!(h.contains(g.mul(rep, rep)));
                    assert_eq!(g.mul(gh, gh), g.identity());
                }
            }
            if let Some(certificate) = &transversal {
                let y = certificate.transversal();
                assert!(y.contains(g.identity()));
                for e in y.iter() {
                    assert!(y.contains(g.inv(e)));
                }
                for i in 0..=dec.coset_count() {
                    let hits = dec
                        .coset_members(i)
                        .iter()
                        .filter(|&&x| y.contains(x))
                        .count();
                    assert_eq!(hits, 1);
                }
                assert!(is_code_with_respect_to(g, h.elements(), y, 1));
                // Scaling law for multiplicity-1 codes.
                assert_eq!(h.order() * y.len(), g.order());
            }
        }
    }
}

/// The even-tau construction meets its contract coset by coset, checked
/// directly against the decomposition rather than through the oracle:
/// X avoids H, meets every other coset in exactly tau elements, and is
/// inverse-closed.
#[test]
fn even_tau_counts_hold_per_coset_without_the_oracle() {
    for entry in standard_catalog(24) {
        let g = &entry.group;
        for h in proper_normal_subgroups(g) {
            let dec = CosetDecomposition::new(g, &h).unwrap();
            for tau in (2..=h.order()).step_by(2) {
                let x = build_even_tau(g, &h, tau).unwrap();
                let mut per_coset = vec![0usize; dec.coset_count() + 1];
                for &e in x.members() {
                    per_coset[dec.position_of(e)] += 1;
                    assert!(x.contains(g.inv(e)));
                    assert_ne!(e, g.identity());
                }
                assert_eq!(per_coset[0], 0, "{}: X meets H", entry.name);
                for (position, &count) in per_coset.iter().enumerate().skip(1) {
                    assert_eq!(count, tau, "{}: coset {position}", entry.name);
                }
            }
        }
    }
}

/// A (kappa, tau) witness exists exactly when a (0, tau) witness does, and
/// stripping the subgroup part of the former verifies as the latter.
#[test]
fn kappa_augmentation_is_an_equivalence() {
    for entry in standard_catalog(16) {
        let g = &entry.group;
        for h in proper_normal_subgroups(g) {
            for (kappa, tau) in ParameterTriple::valid_pairs(h.order()) {
                let with_kappa = build_witness(g, &h, kappa, tau).unwrap();
                let zero_kappa = build_witness(g, &h, 0, tau).unwrap();
                assert_eq!(
                    with_kappa.is_some(),
                    zero_kappa.is_some(),
                    "{} H={:?} ({kappa},{tau})",
                    entry.name,
                    h.members()
                );
                let Some(certificate) = with_kappa else {
                    continue;
                };
                let stripped = strip_subgroup_part(g, &h, certificate.connection_set());
                let report = regular_set_check(g, stripped.elements(), h.elements()).unwrap();
                assert!(report.passed);
                assert_eq!((report.kappa, report.tau), (Some(0), Some(tau)));
            }
        }
    }
}

/// At order <= 12 the exhaustive search and the construction agree on
/// every admissible pair, even tau included (the odd-tau half is also part
/// of the acceptance suite).
#[test]
fn search_and_construction_agree_on_every_admissible_pair() {
    let limits = SearchLimits::default();
    for entry in standard_catalog(12) {
        let g = &entry.group;
        for h in proper_normal_subgroups(g) {
            for (kappa, tau) in ParameterTriple::valid_pairs(h.order()) {
                let constructed = build_witness(g, &h, kappa, tau).unwrap().is_some();
                let searched = matches!(
                    exhaustive_witness_search(g, &h, kappa, tau, &limits).unwrap(),
                    SearchVerdict::Found(_)
                );
                assert_eq!(
                    constructed,
                    searched,
                    "{} H={:?} ({kappa},{tau})",
                    entry.name,
                    h.members()
                );
            }
        }
    }
}

#[test]
fn oracle_verdict_only_depends_on_the_edge_set() {
    let catalog = standard_catalog(8);
    let entry = catalog
        .iter()
        .find(|entry| entry.name == "cyclic:6")
        .unwrap();
    let g = &entry.group;
    let r = ElementSet::new(g.order(), [0, 3]).unwrap();
    let x = ElementSet::new(g.order(), [1, 5]).unwrap();
    let first = regular_set_check(g, &x, &r).unwrap();
    // Rebuilding the same set from its members must not change anything.
    let rebuilt = ElementSet::new(g.order(), x.members().iter().copied()).unwrap();
    let second = regular_set_check(g, &rebuilt, &r).unwrap();
    assert_eq!(first, second);
}

#[test]
fn whole_group_regular_set_is_vacuously_regular() {
    for entry in standard_catalog(8) {
        let g = &entry.group;
        let everything = ElementSet::full(g.order());
        let x = ElementSet::new(g.order(), g.elements().filter(|&e| e != g.identity())).unwrap();
        let report = regular_set_check(g, &x, &everything).unwrap();
        assert!(report.passed);
        assert_eq!(report.kappa, Some(x.len()));
        assert_eq!(report.tau, None);
    }
}
