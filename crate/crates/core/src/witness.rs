use crate::code::{perfect_code_transversal, PerfectCodeCertificate};
use crate::coset::CosetDecomposition;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::oracle::regular_set_check;
use crate::set::ElementSet;

/// An inverse-closed subset of G \ {1}: the connection set of a simple
/// undirected Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    set: ElementSet,
}

impl ConnectionSet {
    pub fn new(group: &Group, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = ElementSet::new(group.order(), members)?;
        if set.contains(group.identity()) {
            return Err(Error::NotAConnectionSet {
                reason: format!("contains the identity element {}", group.identity()),
            });
        }
        if let Some(x) = set.iter().find(|&x| !set.contains(group.inv(x))) {
            return Err(Error::NotAConnectionSet {
                reason: format!(
                    "element {x} present but its inverse {} is not",
                    group.inv(x)
                ),
            });
        }
        Ok(Self { set })
    }

    pub fn elements(&self) -> &ElementSet {
        &self.set
    }

    pub fn members(&self) -> &[usize] {
        self.set.members()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }
}

/// The admissible parameter range for a subgroup of the given order:
/// 0 <= kappa <= |H|-1, 1 <= tau <= |H|, and gcd(2,|H|-1) divides kappa.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterTriple {
    pub kappa: usize,
    pub tau: usize,
    pub subgroup_order: usize,
}

impl ParameterTriple {
    pub fn new(kappa: usize, tau: usize, subgroup_order: usize) -> Result<Self> {
        if kappa >= subgroup_order {
            return Err(Error::KappaOutOfRange {
                kappa,
                max: subgroup_order - 1,
            });
        }
        if tau < 1 || tau > subgroup_order {
            return Err(Error::TauOutOfRange {
                tau,
                subgroup_order,
            });
        }
        if subgroup_order % 2 == 1 && kappa % 2 == 1 {
            return Err(Error::GcdViolation { kappa });
        }
        Ok(Self {
            kappa,
            tau,
            subgroup_order,
        })
    }

    /// Every admissible (kappa, tau) pair for this subgroup order, kappa
    /// ascending then tau ascending.
    pub fn valid_pairs(subgroup_order: usize) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for kappa in 0..subgroup_order {
            if subgroup_order % 2 == 1 && kappa % 2 == 1 {
                continue;
            }
            for tau in 1..=subgroup_order {
                pairs.push((kappa, tau));
            }
        }
        pairs
    }
}

/// A verified (kappa, tau) witness: in Cay(G, X) every vertex of R has
/// exactly kappa neighbors in R and every outside vertex exactly tau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSetCertificate {
    connection: ConnectionSet,
    regular_set: ElementSet,
    kappa: usize,
    tau: usize,
}

impl RegularSetCertificate {
    /// Verifies X against R and records the observed parameters. Rejects
    /// empty or full R, whose parameters are not both defined.
    pub fn new(group: &Group, connection: ConnectionSet, regular_set: ElementSet) -> Result<Self> {
        let report = regular_set_check(group, connection.elements(), &regular_set)?;
        if !report.passed {
            let violation = report
                .first_violation
                .expect("failed check has a violation");
            return Err(Error::NotAWitness {
                reason: format!(
                    "element {} has {} neighbors in R, expected {}",
                    violation.element, violation.observed, violation.expected
                ),
            });
        }
        match (report.kappa, report.tau) {
            (Some(kappa), Some(tau)) => Ok(Self {
                connection,
                regular_set,
                kappa,
                tau,
            }),
            _ => Err(Error::NotAWitness {
                reason: "R is empty or the whole group; parameters are not both defined".into(),
            }),
        }
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.connection
    }

    pub fn regular_set(&self) -> &ElementSet {
        &self.regular_set
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn tau(&self) -> usize {
        self.tau
    }
}

/// Picks an inverse-closed subset of the given size from a self-inverse
/// coset slice. `exclude` removes one involution from consideration (used
/// when a transversal element was already taken from the coset).
///
/// Selection is deterministic: involutions smallest-first; inverse pairs by
/// the smallest unused x with x < x^-1, then its inverse.
fn select_inverse_closed(
    group: &Group,
    members: &[usize],
    target: usize,
    exclude: Option<usize>,
) -> Vec<usize> {
    debug_assert_eq!(target % 2, 0, "selection target must be even");
    let involutions: Vec<usize> = members
        .iter()
        .copied()
        .filter(|&x| Some(x) != exclude && group.is_involution(x))
        .collect();
    let available = involutions.len();

    let (involutions_taken, pairs_needed) = if available >= target {
        (target, 0)
    } else if (target - available).is_multiple_of(2) {
        (available, (target - available) / 2)
    } else {
        // target even and target - available odd force available odd, so
        // there is an involution to drop.
        assert!(available >= 1, "parity forces an involution here");
        (available - 1, (target + 1 - available) / 2)
    };

    let mut picked: Vec<usize> = involutions[..involutions_taken].to_vec();
    let mut pairs = 0;
    for &x in members {
        if pairs == pairs_needed {
            break;
        }
        if Some(x) == exclude || group.is_involution(x) {
            continue;
        }
        let inv = group.inv(x);
        if x < inv {
            debug_assert!(Some(inv) != exclude);
            picked.push(x);
            picked.push(inv);
            pairs += 1;
        }
    }
    assert_eq!(
        pairs, pairs_needed,
        "coset cannot supply the required inverse pairs"
    );
    picked
}

/// Builds a connection set X with X ∩ H = ∅ and |X ∩ gH| = tau for every
/// coset outside H, witnessing H as a (0, tau)-regular set; always possible
/// for even tau.
///
/// Per coset: self-inverse cosets get an inverse-closed selection of size
/// tau (involutions first, then inverse pairs, dropping one involution when
/// parity demands); the front coset of each pair gets its tau smallest
/// elements and the back coset mirrors them under inversion.
pub fn build_even_tau(group: &Group, subgroup: &Subgroup, tau: usize) -> Result<ConnectionSet> {
    if tau < 1 || tau > subgroup.order() {
        return Err(Error::TauOutOfRange {
            tau,
            subgroup_order: subgroup.order(),
        });
    }
    if tau % 2 == 1 {
        return Err(Error::TauOdd { tau });
    }
    let dec = CosetDecomposition::new(group, subgroup)?;
    let mut members = Vec::new();
    let t = dec.self_inverse_count();
    let ell = dec.pair_count();
    for i in 1..=t {
        members.extend(select_inverse_closed(
            group,
            dec.coset_members(i),
            tau,
            None,
        ));
    }
    for j in 0..ell {
        let front = &dec.coset_members(t + 1 + j)[..tau];
        debug_assert!(
            front.iter().all(|&x| !group.is_involution(x)),
            "paired cosets contain no involutions"
        );
        members.extend_from_slice(front);
        members.extend(front.iter().map(|&x| group.inv(x)));
    }
    finish_connection_set(group, subgroup, members, 0, tau)
}

/// Builds a (0, tau) witness for odd tau if H is a perfect code of G, and
/// proves nonexistence otherwise (an inverse-closed subset of odd size in an
/// involution-free self-inverse coset is impossible).
///
/// Each coset gets its transversal element plus an inverse-closed selection
/// of tau - 1 further elements. Every output is re-verified against the
/// definition before being returned; a failure there is reported as an
/// internal defect, never returned silently.
pub fn build_zero_tau_odd(
    group: &Group,
    subgroup: &Subgroup,
    tau: usize,
) -> Result<Option<ConnectionSet>> {
    if tau < 1 || tau > subgroup.order() {
        return Err(Error::TauOutOfRange {
            tau,
            subgroup_order: subgroup.order(),
        });
    }
    if tau.is_multiple_of(2) {
        return Err(Error::TauEven { tau });
    }
    let dec = CosetDecomposition::new(group, subgroup)?;
    let certificate = match perfect_code_transversal(group, subgroup)? {
        Some(certificate) => certificate,
        None => return Ok(None),
    };
    let t = dec.self_inverse_count();
    let ell = dec.pair_count();
    let mut members = Vec::new();
    for i in 1..=t {
        let coset = dec.coset_members(i);
        let y = coset
            .iter()
            .copied()
            .find(|&x| certificate.transversal().contains(x))
            .expect("transversal has one element per coset");
        members.push(y);
        members.extend(select_inverse_closed(group, coset, tau - 1, Some(y)));
    }
    for j in 0..ell {
        // The pair-front transversal element is the least coset member, so
        // the front block is simply the tau smallest elements.
        let front = &dec.coset_members(t + 1 + j)[..tau];
        debug_assert!(certificate.transversal().contains(front[0]));
        members.extend_from_slice(front);
        members.extend(front.iter().map(|&x| group.inv(x)));
    }
    finish_connection_set(group, subgroup, members, 0, tau).map(Some)
}

/// Validates a freshly constructed member list and re-verifies it with the
/// definition-level oracle before handing it out.
fn finish_connection_set(
    group: &Group,
    subgroup: &Subgroup,
    members: Vec<usize>,
    kappa: usize,
    tau: usize,
) -> Result<ConnectionSet> {
    let connection = ConnectionSet::new(group, members).map_err(|err| Error::InternalDefect {
        context: format!("constructed set is not a connection set: {err}"),
    })?;
    let report =
        regular_set_check(group, connection.elements(), subgroup.elements()).map_err(|err| {
            Error::InternalDefect {
                context: format!("constructed set failed the oracle precondition: {err}"),
            }
        })?;
    if !report.passed || report.kappa != Some(kappa) || report.tau != Some(tau) {
        return Err(Error::InternalDefect {
            context: format!(
                "constructed set verifies as (kappa={:?}, tau={:?}) instead of ({kappa}, {tau}); X = {:?}",
                report.kappa,
                report.tau,
                connection.members()
            ),
        });
    }
    Ok(connection)
}

/// Augments a (0, tau) connection set Y with an inverse-closed Z of kappa
/// elements inside H \ {1}, yielding a (kappa, tau) witness X = Y ∪ Z.
///
/// With m the number of elements of H of order greater than 2 (always
/// even): if m >= kappa, Z takes kappa/2 inverse pairs (plus one involution
/// when kappa is odd); otherwise all m/2 pairs plus kappa - m involutions.
pub fn augment_kappa(
    group: &Group,
    subgroup: &Subgroup,
    base: &ConnectionSet,
    kappa: usize,
) -> Result<ConnectionSet> {
    if let Some(shared) = base
        .members()
        .iter()
        .copied()
        .find(|&y| subgroup.contains(y))
    {
        return Err(Error::YIntersectsH { element: shared });
    }
    if kappa >= subgroup.order() {
        return Err(Error::KappaOutOfRange {
            kappa,
            max: subgroup.order() - 1,
        });
    }
    if subgroup.order() % 2 == 1 && kappa % 2 == 1 {
        return Err(Error::GcdViolation { kappa });
    }

    let identity = group.identity();
    let tall: Vec<usize> = subgroup
        .iter()
        .filter(|&h| h != identity && !group.is_involution(h))
        .collect();
    let m = tall.len();
    assert_eq!(m % 2, 0, "elements of order > 2 pair up under inversion");
    let involutions: Vec<usize> = subgroup
        .iter()
        .filter(|&h| group.is_involution(h))
        .collect();

    let (pairs_needed, involutions_needed) = if m >= kappa {
        (kappa / 2, kappa % 2)
    } else {
        (m / 2, kappa - m)
    };
    let mut z: Vec<usize> = involutions[..involutions_needed].to_vec();
    let mut pairs = 0;
    for &x in &tall {
        if pairs == pairs_needed {
            break;
        }
        if x < group.inv(x) {
            z.push(x);
            z.push(group.inv(x));
            pairs += 1;
        }
    }
    assert_eq!(pairs, pairs_needed, "H cannot supply the required pairs");

    let members: Vec<usize> = base.members().iter().copied().chain(z).collect();
    ConnectionSet::new(group, members).map_err(|err| Error::InternalDefect {
        context: format!("kappa augmentation broke inverse closure: {err}"),
    })
}

/// Removes the subgroup part of a witness: Y = X \ H. Inverse closure
/// survives because H is itself inverse-closed, so a (kappa, tau) witness
/// becomes a (0, tau) witness.
pub fn strip_subgroup_part(group: &Group, subgroup: &Subgroup, x: &ConnectionSet) -> ConnectionSet {
    let members = x
        .members()
        .iter()
        .copied()
        .filter(|&e| !subgroup.contains(e));
    ConnectionSet::new(group, members).expect("difference with a subgroup stays inverse-closed")
}

/// Recovers a perfect-code transversal from a (0, tau) witness with odd tau.
///
/// The witness is oracle-checked first (`NotAWitness` otherwise). X is split
/// into blocks X_i = X ∩ a_i H; blocks over self-inverse cosets are
/// themselves inverse-closed of odd size and therefore contain an
/// involution, of which the least is taken; for paired cosets the least
/// element of the front block is taken and its inverse serves the back.
pub fn extract_perfect_code(
    group: &Group,
    subgroup: &Subgroup,
    x: &ConnectionSet,
    tau: usize,
) -> Result<PerfectCodeCertificate> {
    if tau.is_multiple_of(2) {
        return Err(Error::TauEven { tau });
    }
    let report = regular_set_check(group, x.elements(), subgroup.elements())?;
    if !report.passed || report.kappa != Some(0) || report.tau != Some(tau) {
        return Err(Error::NotAWitness {
            reason: format!(
                "X does not witness H as a (0, {tau})-regular set (observed kappa={:?}, tau={:?})",
                report.kappa, report.tau
            ),
        });
    }
    let dec = CosetDecomposition::new(group, subgroup)?;
    let t = dec.self_inverse_count();
    let ell = dec.pair_count();
    let mut members = vec![group.identity()];
    for i in 1..=t {
        let y = dec
            .coset_members(i)
            .iter()
            .copied()
            .find(|&e| x.contains(e) && group.is_involution(e));
        // An inverse-closed block of odd cardinality pairs its
        // non-involutions, so an involution must remain.
        let y = y.expect("odd self-inverse block contains an involution");
        members.push(y);
    }
    for j in 0..ell {
        let y = dec
            .coset_members(t + 1 + j)
            .iter()
            .copied()
            .find(|&e| x.contains(e))
            .expect("front block is non-empty");
        members.push(y);
        members.push(group.inv(y));
    }
    let transversal = ElementSet::new(group.order(), members)?;
    PerfectCodeCertificate::new(group, subgroup, transversal).map_err(|err| Error::InternalDefect {
        context: format!("extracted transversal failed validation: {err}"),
    })
}

/// Decides whether H is a (kappa, tau)-regular set of G and constructs a
/// verified witness when it is.
///
/// For even tau a witness always exists. For odd tau a witness exists
/// exactly when H is a perfect code of G; `Ok(None)` is a proof of
/// nonexistence, not a failure to find one. Every returned certificate has
/// been confirmed by the definition-level oracle.
pub fn build_witness(
    group: &Group,
    subgroup: &Subgroup,
    kappa: usize,
    tau: usize,
) -> Result<Option<RegularSetCertificate>> {
    if !subgroup.is_proper_nontrivial(group) {
        return Err(Error::TrivialOrFull);
    }
    if let Some((g, h, conjugate)) = subgroup.normality_witness(group) {
        return Err(Error::NotNormal { g, h, conjugate });
    }
    ParameterTriple::new(kappa, tau, subgroup.order())?;

    let base = if tau.is_multiple_of(2) {
        build_even_tau(group, subgroup, tau)?
    } else {
        match build_zero_tau_odd(group, subgroup, tau)? {
            Some(base) => base,
            None => return Ok(None),
        }
    };
    let connection = augment_kappa(group, subgroup, &base, kappa)?;
    let certificate = RegularSetCertificate::new(group, connection, subgroup.elements().clone())
        .map_err(|err| Error::InternalDefect {
            context: format!("constructed witness failed the oracle: {err}"),
        })?;
    if certificate.kappa() != kappa || certificate.tau() != tau {
        return Err(Error::InternalDefect {
            context: format!(
                "witness verified as ({}, {}) but ({kappa}, {tau}) was requested",
                certificate.kappa(),
                certificate.tau()
            ),
        });
    }
    Ok(Some(certificate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GroupFamily;

    fn setup(family: GroupFamily, members: &[usize]) -> (Group, Subgroup) {
        let group = family.build().unwrap();
        let subgroup = Subgroup::new(&group, members.iter().copied()).unwrap();
        (group, subgroup)
    }

    /// Definition-level neighbor count, written independently of the oracle
    /// module: the number of x in X with g*x landing in R.
    fn neighbors_in(group: &Group, x: &[usize], r: &[usize], g: usize) -> usize {
        x.iter().filter(|&&e| r.contains(&group.mul(g, e))).count()
    }

    #[test]
    fn even_tau_on_paired_cosets() {
        let (z6, h) = setup(GroupFamily::Cyclic(6), &[0, 3]);
        let x = build_even_tau(&z6, &h, 2).unwrap();
        assert_eq!(x.members(), &[1, 2, 4, 5]);
        for g in 0..6 {
            let expected = if [0, 3].contains(&g) { 0 } else { 2 };
            assert_eq!(neighbors_in(&z6, x.members(), &[0, 3], g), expected);
        }
    }

    #[test]
    fn even_tau_pairs_up_a_self_inverse_coset() {
        let (z4, h) = setup(GroupFamily::Cyclic(4), &[0, 2]);
        let x = build_even_tau(&z4, &h, 2).unwrap();
        assert_eq!(x.members(), &[1, 3]);
    }

    #[test]
    fn even_tau_prefers_involutions() {
        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let x = build_even_tau(&s3, &h, 2).unwrap();
        // The two least transpositions.
        assert_eq!(x.members(), &[1, 2]);
    }

    #[test]
    fn even_tau_rejects_bad_parameters() {
        let (z6, h) = setup(GroupFamily::Cyclic(6), &[0, 3]);
        assert_eq!(
            build_even_tau(&z6, &h, 1).unwrap_err(),
            Error::TauOdd { tau: 1 }
        );
        assert_eq!(
            build_even_tau(&z6, &h, 4).unwrap_err(),
            Error::TauOutOfRange {
                tau: 4,
                subgroup_order: 2
            }
        );
    }

    #[test]
    fn odd_tau_witness_for_the_alternating_subgroup() {
        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let x = build_zero_tau_odd(&s3, &h, 1).unwrap().unwrap();
        assert_eq!(x.members(), &[1]);
        // Each transposition times (23) lands in the alternating subgroup.
        for g in [1, 2, 5] {
            assert_eq!(neighbors_in(&s3, x.members(), &[0, 3, 4], g), 1);
        }
    }

    #[test]
    fn odd_tau_nonexistence_in_cyclic_four() {
        let (z4, h) = setup(GroupFamily::Cyclic(4), &[0, 2]);
        assert_eq!(build_zero_tau_odd(&z4, &h, 1).unwrap(), None);
    }

    #[test]
    fn odd_tau_six_cycle_witness() {
        let (z6, h) = setup(GroupFamily::Cyclic(6), &[0, 3]);
        let x = build_zero_tau_odd(&z6, &h, 1).unwrap().unwrap();
        assert_eq!(x.members(), &[1, 5]);
    }

    #[test]
    fn odd_tau_three_in_an_involution_rich_group() {
        let (ea, h) = setup(GroupFamily::ElementaryAbelian(2, 3), &[0, 1, 2, 3]);
        let x = build_zero_tau_odd(&ea, &h, 3).unwrap().unwrap();
        assert_eq!(x.len(), 3);
        for g in 0..8 {
            let expected = if g < 4 { 0 } else { 3 };
            assert_eq!(neighbors_in(&ea, x.members(), &[0, 1, 2, 3], g), expected);
        }
    }

    #[test]
    fn kappa_augmentation_examples() {
        let (z4, h) = setup(GroupFamily::Cyclic(4), &[0, 2]);
        let y = ConnectionSet::new(&z4, [1, 3]).unwrap();
        assert_eq!(augment_kappa(&z4, &h, &y, 0).unwrap().members(), &[1, 3]);
        let x = augment_kappa(&z4, &h, &y, 1).unwrap();
        assert_eq!(x.members(), &[1, 2, 3]);

        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let y = ConnectionSet::new(&s3, [1, 2]).unwrap();
        let x = augment_kappa(&s3, &h, &y, 2).unwrap();
        // The two mutually inverse 3-cycles join.
        assert_eq!(x.members(), &[1, 2, 3, 4]);
    }

    #[test]
    fn kappa_augmentation_rejects_bad_inputs() {
        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let y = ConnectionSet::new(&s3, [1, 2]).unwrap();
        assert_eq!(
            augment_kappa(&s3, &h, &y, 1).unwrap_err(),
            Error::GcdViolation { kappa: 1 }
        );
        assert_eq!(
            augment_kappa(&s3, &h, &y, 3).unwrap_err(),
            Error::KappaOutOfRange { kappa: 3, max: 2 }
        );
        let overlapping = ConnectionSet::new(&s3, [1, 2, 3, 4]).unwrap();
        assert_eq!(
            augment_kappa(&s3, &h, &overlapping, 2).unwrap_err(),
            Error::YIntersectsH { element: 3 }
        );
    }

    #[test]
    fn stripping_returns_the_subgroup_free_part() {
        let (z4, h) = setup(GroupFamily::Cyclic(4), &[0, 2]);
        let x = ConnectionSet::new(&z4, [1, 2, 3]).unwrap();
        assert_eq!(strip_subgroup_part(&z4, &h, &x).members(), &[1, 3]);
        let y = ConnectionSet::new(&z4, [1, 3]).unwrap();
        assert_eq!(strip_subgroup_part(&z4, &h, &y).members(), &[1, 3]);

        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let x = ConnectionSet::new(&s3, [1, 2, 3, 4]).unwrap();
        assert_eq!(strip_subgroup_part(&s3, &h, &x).members(), &[1, 2]);
    }

    #[test]
    fn extraction_recovers_transversals() {
        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        let x = ConnectionSet::new(&s3, [1]).unwrap();
        let cert = extract_perfect_code(&s3, &h, &x, 1).unwrap();
        assert_eq!(cert.members(), &[0, 1]);

        let all_transpositions = ConnectionSet::new(&s3, [1, 2, 5]).unwrap();
        let cert = extract_perfect_code(&s3, &h, &all_transpositions, 3).unwrap();
        assert_eq!(cert.members(), &[0, 1]);

        let (z6, h) = setup(GroupFamily::Cyclic(6), &[0, 3]);
        let x = ConnectionSet::new(&z6, [1, 5]).unwrap();
        let cert = extract_perfect_code(&z6, &h, &x, 1).unwrap();
        assert_eq!(cert.members(), &[0, 1, 5]);
    }

    #[test]
    fn extraction_demands_a_witness() {
        let (z6, h) = setup(GroupFamily::Cyclic(6), &[0, 3]);
        // {1,2,4,5} witnesses (0,2), not (0,1).
        let x = ConnectionSet::new(&z6, [1, 2, 4, 5]).unwrap();
        assert!(matches!(
            extract_perfect_code(&z6, &h, &x, 1),
            Err(Error::NotAWitness { .. })
        ));
        let x = ConnectionSet::new(&z6, [1, 5]).unwrap();
        assert_eq!(
            extract_perfect_code(&z6, &h, &x, 2).unwrap_err(),
            Error::TauEven { tau: 2 }
        );
        // {2,4} is itself a (0,1) witness; extraction picks 4 from the front
        // coset {1,4} and mirrors it.
        let x = ConnectionSet::new(&z6, [2, 4]).unwrap();
        let cert = extract_perfect_code(&z6, &h, &x, 1).unwrap();
        assert_eq!(cert.members(), &[0, 2, 4]);
    }

    #[test]
    fn dispatch_examples() {
        let (s3, h) = setup(GroupFamily::Symmetric(3), &[0, 3, 4]);
        assert_eq!(
            build_witness(&s3, &h, 1, 1).unwrap_err(),
            Error::GcdViolation { kappa: 1 }
        );

        let (z4, h) = setup(GroupFamily::Cyclic(4), &[0, 2]);
        let cert = build_witness(&z4, &h, 1, 2).unwrap().unwrap();
        assert_eq!(cert.connection_set().members(), &[1, 2, 3]);
        assert_eq!((cert.kappa(), cert.tau()), (1, 2));
        assert_eq!(build_witness(&z4, &h, 1, 1).unwrap(), None);
    }

    #[test]
    fn dispatch_validates_the_subgroup() {
        let s3 = GroupFamily::Symmetric(3).build().unwrap();
        let trivial = Subgroup::new(&s3, [0]).unwrap();
        assert_eq!(
            build_witness(&s3, &trivial, 0, 1).unwrap_err(),
            Error::TrivialOrFull
        );
        let skew = Subgroup::new(&s3, [0, 1]).unwrap();
        assert!(matches!(
            build_witness(&s3, &skew, 0, 1).unwrap_err(),
            Error::NotNormal { .. }
        ));
    }

    #[test]
    fn round_trip_strip_preserves_the_outside_part() {
        let (z12, h) = setup(GroupFamily::Cyclic(12), &[0, 4, 8]);
        for (kappa, tau) in ParameterTriple::valid_pairs(3) {
            let cert = build_witness(&z12, &h, kappa, tau).unwrap().unwrap();
            let x = cert.connection_set();
            assert_eq!(
                x.members().iter().filter(|&&e| h.contains(e)).count(),
                kappa
            );
            let stripped = strip_subgroup_part(&z12, &h, x);
            let report = regular_set_check(&z12, stripped.elements(), h.elements()).unwrap();
            assert!(report.passed);
            assert_eq!((report.kappa, report.tau), (Some(0), Some(tau)));
        }
    }
}
