use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};
use crate::set::ElementSet;
use crate::witness::ConnectionSet;

/// One element whose neighbor count into R differs from the count
/// established by the least element of its stratum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub element: usize,
    pub expected: usize,
    pub observed: usize,
}

/// Result of a definition-level regular-set check: for each vertex g the
/// number of neighbors g*x landing in R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    /// |gX ∩ R| for every g, indexed by element.
    pub observed_counts: Vec<usize>,
    pub first_violation: Option<Violation>,
    /// Common count on R when the check passes; None when R is empty (the
    /// inside condition is vacuous).
    pub kappa: Option<usize>,
    /// Common count off R when the check passes; None when R = G (the
    /// outside condition is vacuous; any X passes with kappa = |X|).
    pub tau: Option<usize>,
}

/// True iff the identity is absent and x in X implies x^-1 in X.
pub fn is_inverse_closed(group: &Group, set: &ElementSet) -> bool {
    !set.contains(group.identity()) && set.iter().all(|x| set.contains(group.inv(x)))
}

fn require_connection_set(group: &Group, set: &ElementSet) -> Result<()> {
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
    Ok(())
}

/// Counts |gX ∩ R| for every vertex g of Cay(G, X) and reports whether the
/// counts are constant on R and constant off R. R may be any subset of G;
/// the regular-set definition is purely graph-theoretic.
pub fn regular_set_check(
    group: &Group,
    connection: &ElementSet,
    subset: &ElementSet,
) -> Result<VerificationReport> {
    require_connection_set(group, connection)?;
    let counts: Vec<usize> = group
        .elements()
        .map(|g| {
            connection
                .iter()
                .filter(|&x| subset.contains(group.mul(g, x)))
                .count()
        })
        .collect();

    let kappa_reference = subset.iter().next().map(|r| counts[r]);
    let tau_reference = group
        .elements()
        .find(|&g| !subset.contains(g))
        .map(|g| counts[g]);

    let mut first_violation = None;
    for g in group.elements() {
        let expected = if subset.contains(g) {
            kappa_reference
        } else {
            tau_reference
        }
        .expect("reference exists for any occupied stratum");
        if counts[g] != expected {
            first_violation = Some(Violation {
                element: g,
                expected,
                observed: counts[g],
            });
            break;
        }
    }

    let passed = first_violation.is_none();
    Ok(VerificationReport {
        passed,
        observed_counts: counts,
        first_violation,
        kappa: if passed { kappa_reference } else { None },
        tau: if passed { tau_reference } else { None },
    })
}

/// Limits on the exhaustive witness search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Hard cap on the number of inversion-orbits (the search space is
    /// 2^orbits before pruning).
    pub orbit_bound: usize,
    /// Optional cap on visited search nodes; exceeding it yields the
    /// `BudgetExhausted` verdict, which is "unknown", never "nonexistent".
    pub budget: Option<u64>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            orbit_bound: 24,
            budget: None,
        }
    }
}

/// Verdict of the exhaustive search. `Nonexistent` is only returned after
/// the whole (pruned) space has been covered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict {
    Found(ConnectionSet),
    Nonexistent,
    BudgetExhausted { nodes_visited: u64 },
}

/// Number of inversion-orbits {x, x^-1} of the non-identity elements; the
/// atomic unit of inverse-closed subset enumeration.
pub fn inversion_orbit_count(group: &Group) -> usize {
    inversion_orbits(group).len()
}

fn inversion_orbits(group: &Group) -> Vec<Vec<usize>> {
    let mut orbits = Vec::new();
    let mut seen = vec![false; group.order()];
    seen[group.identity()] = true;
    for x in group.elements() {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let inv = group.inv(x);
        if inv == x {
            orbits.push(vec![x]);
        } else {
            seen[inv] = true;
            orbits.push(vec![x, inv]);
        }
    }
    orbits
}

/// Exhaustively searches for an inverse-closed, identity-free X making H a
/// (kappa, tau)-regular set of Cay(G, X).
///
/// Enumeration is by inversion-orbit, which guarantees inverse-closure by
/// construction and halves the exponent. Candidates are pruned by the
/// per-coset cardinality conditions |X ∩ H| = kappa and |X ∩ gH| = tau,
/// which are necessary (and for a subgroup R sufficient) because the
/// neighbor count of g is |X ∩ g^-1 H|. Orbits are grouped into connected
/// blocks of cosets and sorted by smallest member, inclusion is tried before
/// exclusion, and the first complete candidate that passes
/// [`regular_set_check`] is returned, independent of any scheduling.
///
/// H may be any subgroup; normality is not required at definition level.
pub fn exhaustive_witness_search(
    group: &Group,
    subgroup: &Subgroup,
    kappa: usize,
    tau: usize,
    limits: &SearchLimits,
) -> Result<SearchVerdict> {
    let orbits = inversion_orbits(group);
    if orbits.len() > limits.orbit_bound {
        return Err(Error::SearchSpaceTooLarge {
            orbits: orbits.len(),
            bound: limits.orbit_bound,
        });
    }

    // Left cosets of H in discovery order; coset 0 is H itself.
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut coset_count = 0;
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        for h in subgroup.iter() {
            coset_of[group.mul(g, h)] = coset_count;
        }
        coset_count += 1;
    }
    let targets: Vec<usize> = (0..coset_count)
        .map(|c| {
            if c == coset_of[group.identity()] {
                kappa
            } else {
                tau
            }
        })
        .collect();

    // Union-find over cosets linked by an orbit, so that counts can be
    // checked exactly as soon as the last orbit of a block is decided.
    let mut parent: Vec<usize> = (0..coset_count).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for orbit in &orbits {
        let a = find(&mut parent, coset_of[orbit[0]]);
        let b = find(&mut parent, coset_of[*orbit.last().unwrap()]);
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let block_of_orbit: Vec<usize> = orbits
        .iter()
        .map(|orbit| find(&mut parent, coset_of[orbit[0]]))
        .collect();
    let block_of_coset: Vec<usize> = (0..coset_count).map(|c| find(&mut parent, c)).collect();

    // Sort orbits by (block key, smallest member); the block key is the
    // smallest member over the whole block so blocks appear in element
    // order.
    let mut block_key = vec![usize::MAX; coset_count];
    for (i, orbit) in orbits.iter().enumerate() {
        let b = block_of_orbit[i];
        block_key[b] = block_key[b].min(orbit[0]);
    }
    let mut order: Vec<usize> = (0..orbits.len()).collect();
    order.sort_by_key(|&i| (block_key[block_of_orbit[i]], orbits[i][0]));
    let orbits: Vec<Vec<usize>> = order.iter().map(|&i| orbits[i].clone()).collect();
    let last_of_block: Vec<bool> = {
        let mut last = vec![false; orbits.len()];
        for i in 0..orbits.len() {
            let b = block_of_orbit[order[i]];
            if i + 1 == orbits.len() || block_of_orbit[order[i + 1]] != b {
                last[i] = true;
            }
        }
        last
    };

    struct Dfs<'a> {
        group: &'a Group,
        subgroup: &'a Subgroup,
        orbits: &'a [Vec<usize>],
        last_of_block: &'a [bool],
        coset_of: &'a [usize],
        block_of_coset: &'a [usize],
        block_of_orbit: &'a [usize],
        targets: &'a [usize],
        counts: Vec<usize>,
        chosen: Vec<usize>,
        nodes: u64,
        budget: Option<u64>,
    }

    enum Outcome {
        Found(Vec<usize>),
        Exhausted,
        OverBudget,
    }

    impl Dfs<'_> {
        fn run(&mut self, depth: usize) -> Result<Outcome> {
            self.nodes += 1;
            if let Some(budget) = self.budget {
                if self.nodes > budget {
                    return Ok(Outcome::OverBudget);
                }
            }
            if depth == self.orbits.len() {
                if self.counts.iter().zip(self.targets).all(|(c, t)| c == t) {
                    let candidate =
                        ElementSet::new(self.group.order(), self.chosen.iter().copied())?;
                    let report =
                        regular_set_check(self.group, &candidate, self.subgroup.elements())?;
                    if report.passed {
                        return Ok(Outcome::Found(self.chosen.clone()));
                    }
                }
                return Ok(Outcome::Exhausted);
            }

            let orbit = &self.orbits[depth];
            // Include first: among candidates this prefers those containing
            // the smallest elements.
            let fits = if orbit.len() == 1 {
                let c = self.coset_of[orbit[0]];
                self.counts[c] < self.targets[c]
            } else {
                let c0 = self.coset_of[orbit[0]];
                let c1 = self.coset_of[orbit[1]];
                if c0 == c1 {
                    self.counts[c0] + 2 <= self.targets[c0]
                } else {
                    self.counts[c0] < self.targets[c0] && self.counts[c1] < self.targets[c1]
                }
            };
            if fits {
                for &x in orbit {
                    self.counts[self.coset_of[x]] += 1;
                }
                self.chosen.extend(orbit.iter().copied());
                if self.block_complete(depth) {
                    match self.run(depth + 1)? {
                        Outcome::Exhausted => {}
                        other => return Ok(other),
                    }
                }
                for &x in orbit {
                    self.counts[self.coset_of[x]] -= 1;
                }
                self.chosen.truncate(self.chosen.len() - orbit.len());
            }
            if self.block_complete(depth) {
                self.run(depth + 1)
            } else {
                Ok(Outcome::Exhausted)
            }
        }

        /// When `depth` closes a block, its cosets must have hit their
        /// targets exactly.
        fn block_complete(&self, depth: usize) -> bool {
            if !self.last_of_block[depth] {
                return true;
            }
            let block = self.block_of_orbit[depth];
            (0..self.targets.len())
                .filter(|&c| self.block_of_coset[c] == block)
                .all(|c| self.counts[c] == self.targets[c])
        }
    }

    // Re-map block ids after sorting: block_of_orbit was indexed by the
    // original orbit index, so rebuild it in sorted order.
    let block_of_orbit_sorted: Vec<usize> = order.iter().map(|&i| block_of_orbit[i]).collect();

    let mut dfs = Dfs {
        group,
        subgroup,
        orbits: &orbits,
        last_of_block: &last_of_block,
        coset_of: &coset_of,
        block_of_coset: &block_of_coset,
        block_of_orbit: &block_of_orbit_sorted,
        targets: &targets,
        counts: vec![0; coset_count],
        chosen: Vec::new(),
        nodes: 0,
        budget: limits.budget,
    };
    match dfs.run(0)? {
        Outcome::Found(members) => {
            let connection = ConnectionSet::new(group, members)?;
            Ok(SearchVerdict::Found(connection))
        }
        Outcome::Exhausted => Ok(SearchVerdict::Nonexistent),
        Outcome::OverBudget => Ok(SearchVerdict::BudgetExhausted {
            nodes_visited: dfs.nodes,
        }),
    }
}
