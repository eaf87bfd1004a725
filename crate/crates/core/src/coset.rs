use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// The left cosets of a proper non-trivial normal subgroup H, with the
/// structure the constructions rely on: the coset-inversion pairing sigma and
/// the per-coset involution counts.
///
/// Position 0 always denotes H itself (its transversal entry is the
/// identity). The non-trivial cosets occupy positions 1..=s in canonical
/// order: the self-inverse cosets come first (positions 1..=t), then the
/// paired cosets, each pair split as (t+j, t+j+ell) with the smaller
/// representative in the first half. Consequently
/// `sigma(i) = i` for i <= t, `sigma(i) = i + ell` for t < i <= t + ell, and
/// `sigma(i) = i - ell` above that.
///
/// Sigma and the involution counts are only meaningful on positions 1..=s;
/// position 0 is bookkept separately (its stored involution count is the
/// number of involutions inside H, which the kappa-augmentation needs).
#[derive(Debug, Clone)]
pub struct CosetDecomposition {
    transversal: Vec<usize>,
    coset_of: Vec<usize>,
    cosets: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    self_inverse: usize,
    pairs: usize,
    involution_count: Vec<usize>,
    discovery_position: Vec<usize>,
}

impl CosetDecomposition {
    /// Decomposes G into left cosets of H.
    ///
    /// Fails with `TrivialOrFull` unless 1 < |H| < |G| and with `NotNormal`
    /// (including a conjugation witness) unless H is normal; normality is
    /// what makes the elementwise inverse of a left coset another left coset.
    pub fn new(group: &Group, subgroup: &Subgroup) -> Result<Self> {
        if !subgroup.is_proper_nontrivial(group) {
            return Err(Error::TrivialOrFull);
        }
        if let Some((g, h, conjugate)) = subgroup.normality_witness(group) {
            return Err(Error::NotNormal { g, h, conjugate });
        }

        let n = group.order();
        let identity = group.identity();

        // Discovery pass: H first, then the remaining cosets by ascending
        // minimum element. Scanning elements in index order makes each
        // discovery representative the coset minimum.
        let mut coset_of = vec![usize::MAX; n];
        for h in subgroup.iter() {
            coset_of[h] = 0;
        }
        let mut cosets: Vec<Vec<usize>> = vec![subgroup.members().to_vec()];
        let mut reps: Vec<usize> = vec![identity];
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = cosets.len();
            let mut members: Vec<usize> = subgroup.iter().map(|h| group.mul(g, h)).collect();
            members.sort_unstable();
            for &m in &members {
                coset_of[m] = id;
            }
            reps.push(g);
            cosets.push(members);
        }
        let s = cosets.len() - 1;

        // Pairing in discovery indexing: the coset holding the inverse of a
        // representative is the elementwise inverse of its coset.
        let sigma_discovery: Vec<usize> = (0..=s).map(|i| coset_of[group.inv(reps[i])]).collect();

        let self_inverse_ids: Vec<usize> = (1..=s).filter(|&i| sigma_discovery[i] == i).collect();
        let t = self_inverse_ids.len();
        debug_assert_eq!((s - t) % 2, 0);
        let ell = (s - t) / 2;
        let mut pair_ids: Vec<(usize, usize)> = (1..=s)
            .filter(|&i| sigma_discovery[i] > i)
            .map(|i| (i, sigma_discovery[i]))
            .collect();
        // Discovery ids are ordered by representative, so sorting by the
        // first id orders pairs by their smaller representative.
        pair_ids.sort_unstable();

        // Canonical order: self-inverse cosets, then pair fronts, then pair
        // backs in matching order.
        let mut canonical_of_discovery = vec![usize::MAX; s + 1];
        canonical_of_discovery[0] = 0;
        for (pos, &id) in self_inverse_ids.iter().enumerate() {
            canonical_of_discovery[id] = 1 + pos;
        }
        for (j, &(front, back)) in pair_ids.iter().enumerate() {
            canonical_of_discovery[front] = t + 1 + j;
            canonical_of_discovery[back] = t + 1 + j + ell;
        }

        let mut transversal = vec![usize::MAX; s + 1];
        let mut ordered_cosets: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
        let mut discovery_position = vec![usize::MAX; s + 1];
        for discovery in 0..=s {
            let canonical = canonical_of_discovery[discovery];
            transversal[canonical] = reps[discovery];
            ordered_cosets[canonical] = std::mem::take(&mut cosets[discovery]);
            discovery_position[canonical] = discovery;
        }
        for slot in coset_of.iter_mut() {
            *slot = canonical_of_discovery[*slot];
        }
        let sigma: Vec<usize> = (0..=s)
            .map(|i| {
                if i == 0 || i <= t {
                    i
                } else if i <= t + ell {
                    i + ell
                } else {
                    i - ell
                }
            })
            .collect();
        let involution_count: Vec<usize> = ordered_cosets
            .iter()
            .map(|members| members.iter().filter(|&&x| group.is_involution(x)).count())
            .collect();

        let decomposition = Self {
            transversal,
            coset_of,
            cosets: ordered_cosets,
            sigma,
            self_inverse: t,
            pairs: ell,
            involution_count,
            discovery_position,
        };
        decomposition.check_structure(group);
        Ok(decomposition)
    }

    fn check_structure(&self, group: &Group) {
        // Structural sanity on every construction; cheap relative to the
        // decomposition itself.
        for i in 1..=self.coset_count() {
            debug_assert_eq!(self.sigma(self.sigma(i)), i);
            let inverse_set: Vec<usize> = {
                let mut inv: Vec<usize> = self.cosets[i].iter().map(|&x| group.inv(x)).collect();
                inv.sort_unstable();
                inv
            };
            debug_assert_eq!(inverse_set, self.cosets[self.sigma(i)]);
            if i > self.self_inverse {
                debug_assert_eq!(self.involution_count[i], 0);
            } else {
                debug_assert_eq!((self.cosets[i].len() - self.involution_count[i]) % 2, 0);
            }
        }
    }

    /// Number of non-trivial cosets (s).
    pub fn coset_count(&self) -> usize {
        self.cosets.len() - 1
    }

    /// Canonically ordered representatives; entry 0 is the identity, entry i
    /// (i >= 1) is the minimum element of its coset.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// Members of the coset at a canonical position, ascending.
    pub fn coset_members(&self, position: usize) -> &[usize] {
        &self.cosets[position]
    }

    /// Canonical position of the coset containing `element`.
    pub fn position_of(&self, element: usize) -> usize {
        self.coset_of[element]
    }

    /// The coset-inversion pairing; `sigma(0) = 0`.
    pub fn sigma(&self, position: usize) -> usize {
        self.sigma[position]
    }

    /// Number of self-inverse non-trivial cosets (t).
    pub fn self_inverse_count(&self) -> usize {
        self.self_inverse
    }

    /// Number of inverse-paired coset pairs (ell = (s-t)/2).
    pub fn pair_count(&self) -> usize {
        self.pairs
    }

    /// Involutions in the coset at `position`; for position 0 this counts
    /// the involutions inside H itself.
    pub fn involutions_in(&self, position: usize) -> usize {
        self.involution_count[position]
    }

    /// Position the coset had in discovery order (H first, then ascending
    /// minimum element), for error messages that cite pre-canonical indices.
    pub fn discovery_position(&self, position: usize) -> usize {
        self.discovery_position[position]
    }
}

/// Recomputes the involution profile of a decomposition from scratch by
/// scanning every group element through `position_of`; entry 0 counts the
/// involutions inside H. Deliberately a different code path from the one
/// used during construction so the two can be cross-checked.
pub fn involution_profile(group: &Group, decomposition: &CosetDecomposition) -> Vec<usize> {
    let mut profile = vec![0; decomposition.coset_count() + 1];
    for x in group.elements() {
        if group.is_involution(x) {
            profile[decomposition.position_of(x)] += 1;
        }
    }
    profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GroupFamily;

    fn decompose(family: GroupFamily, members: &[usize]) -> (Group, Subgroup, CosetDecomposition) {
        let group = family.build().unwrap();
        let subgroup = Subgroup::new(&group, members.iter().copied()).unwrap();
        let dec = CosetDecomposition::new(&group, &subgroup).unwrap();
        (group, subgroup, dec)
    }

    #[test]
    fn paired_cosets_in_cyclic_six() {
        let (_, _, dec) = decompose(GroupFamily::Cyclic(6), &[0, 3]);
        assert_eq!(dec.coset_count(), 2);
        assert_eq!(dec.transversal(), &[0, 1, 2]);
        assert_eq!(dec.self_inverse_count(), 0);
        assert_eq!(dec.pair_count(), 1);
        assert_eq!(dec.sigma(1), 2);
        assert_eq!(dec.sigma(2), 1);
        assert_eq!(dec.coset_members(1), &[1, 4]);
        assert_eq!(dec.coset_members(2), &[2, 5]);
        assert_eq!(dec.involutions_in(1), 0);
        assert_eq!(dec.involutions_in(2), 0);
    }

    #[test]
    fn self_inverse_coset_without_involutions_in_cyclic_four() {
        let (_, _, dec) = decompose(GroupFamily::Cyclic(4), &[0, 2]);
        assert_eq!(dec.coset_count(), 1);
        assert_eq!(dec.coset_members(1), &[1, 3]);
        assert_eq!(dec.sigma(1), 1);
        assert_eq!(dec.self_inverse_count(), 1);
        assert_eq!(dec.pair_count(), 0);
        assert_eq!(dec.involutions_in(1), 0);
    }

    #[test]
    fn klein_group_coset_is_all_involutions() {
        let (_, _, dec) = decompose(GroupFamily::ElementaryAbelian(2, 2), &[0, 1]);
        assert_eq!(dec.coset_count(), 1);
        assert_eq!(dec.self_inverse_count(), 1);
        assert_eq!(dec.involutions_in(1), 2);
    }

    #[test]
    fn transposition_coset_of_the_alternating_subgroup() {
        let (group, _, dec) = decompose(GroupFamily::Symmetric(3), &[0, 3, 4]);
        assert_eq!(dec.coset_count(), 1);
        assert_eq!(dec.involutions_in(1), 3);
        assert_eq!(involution_profile(&group, &dec), vec![0, 3]);
    }

    #[test]
    fn quaternion_center_cosets_have_no_involutions() {
        let (group, _, dec) = decompose(GroupFamily::Quaternion, &[0, 1]);
        assert_eq!(dec.coset_count(), 3);
        for i in 1..=3 {
            assert_eq!(dec.involutions_in(i), 0);
        }
        // The unique involution -1 lies in H itself.
        assert_eq!(dec.involutions_in(0), 1);
        assert_eq!(involution_profile(&group, &dec), vec![1, 0, 0, 0]);
    }

    #[test]
    fn rejects_trivial_full_and_non_normal() {
        let group = GroupFamily::Symmetric(3).build().unwrap();
        let trivial = Subgroup::new(&group, [0]).unwrap();
        assert_eq!(
            CosetDecomposition::new(&group, &trivial).unwrap_err(),
            Error::TrivialOrFull
        );
        let full = Subgroup::new(&group, 0..6).unwrap();
        assert_eq!(
            CosetDecomposition::new(&group, &full).unwrap_err(),
            Error::TrivialOrFull
        );
        let skew = Subgroup::new(&group, [0, 1]).unwrap();
        assert!(matches!(
            CosetDecomposition::new(&group, &skew).unwrap_err(),
            Error::NotNormal { .. }
        ));
    }

    #[test]
    fn cosets_partition_the_group() {
        for (family, members) in [
            (GroupFamily::Cyclic(12), vec![0, 4, 8]),
            (GroupFamily::Dihedral(4), vec![0, 1, 2, 3]),
            (GroupFamily::Symmetric(4), vec![0, 7, 16, 23]),
        ] {
            let group = family.build().unwrap();
            let subgroup = Subgroup::new(&group, members).unwrap();
            let dec = CosetDecomposition::new(&group, &subgroup).unwrap();
            let mut seen = vec![false; group.order()];
            let mut total = 0;
            for i in 0..=dec.coset_count() {
                assert_eq!(dec.coset_members(i).len(), subgroup.order());
                for &x in dec.coset_members(i) {
                    assert!(!seen[x]);
                    seen[x] = true;
                    assert_eq!(dec.position_of(x), i);
                    total += 1;
                }
            }
            assert_eq!(total, group.order());
        }
    }

    #[test]
    fn left_cosets_equal_right_cosets_for_normal_subgroups() {
        let group = GroupFamily::Dihedral(4).build().unwrap();
        let subgroup = Subgroup::new(&group, [0, 2]).unwrap(); // center of D4
        let dec = CosetDecomposition::new(&group, &subgroup).unwrap();
        for i in 0..=dec.coset_count() {
            let rep = dec.transversal()[i];
            let mut right: Vec<usize> = subgroup.iter().map(|h| group.mul(h, rep)).collect();
            right.sort_unstable();
            assert_eq!(right, dec.coset_members(i));
        }
    }
}
