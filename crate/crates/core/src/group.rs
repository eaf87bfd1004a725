use std::collections::HashSet;

use crate::error::{Axis, Error, Result};
use crate::set::ElementSet;

/// Default cap on the group order accepted by [`list_normal_subgroups`].
pub const DEFAULT_SUBGROUP_ENUMERATION_BOUND: usize = 64;

/// A finite group given concretely by its multiplication table.
///
/// Elements are the indices `0..order`. The table is validated at
/// construction: it must be a Latin square with a two-sided identity and
/// two-sided inverses. The full associativity scan is O(n^3) and therefore
/// opt-in; the builtin families skip it because their tables are associative
/// by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Group {
    /// Builds a group from explicit table rows; `table[a][b]` is the index of
    /// the product `a*b`. The identity is auto-detected, so external tables
    /// need not place it at index 0.
    pub fn from_table(rows: Vec<Vec<usize>>, check_associativity: bool) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::ParseText {
                    what: "group table",
                    line: r + 1,
                    reason: format!("row {} has {} entries, expected {}", r, row.len(), order),
                });
            }
            for (c, &value) in row.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value,
                        order,
                    });
                }
                table.push(value);
            }
        }

        // Latin-square scan before anything structural: rows, then columns.
        let mut seen = vec![usize::MAX; order];
        for r in 0..order {
            for c in 0..order {
                let v = table[r * order + c];
                if seen[v] == r {
                    return Err(Error::NotLatinSquare {
                        axis: Axis::Row,
                        index: r,
                        value: v,
                    });
                }
                seen[v] = r;
            }
        }
        let mut seen = vec![usize::MAX; order];
        for c in 0..order {
            for r in 0..order {
                let v = table[r * order + c];
                if seen[v] == c {
                    return Err(Error::NotLatinSquare {
                        axis: Axis::Column,
                        index: c,
                        value: v,
                    });
                }
                seen[v] = c;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] == a && table[a * order + e] == a))
            .ok_or(Error::NoIdentity)?;

        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a * order + b] == identity && table[b * order + a] == identity);
            inverse[a] = inv.ok_or(Error::MissingInverse { element: a })?;
        }

        if check_associativity {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b];
                    for c in 0..order {
                        let bc = table[b * order + c];
                        if table[ab * order + c] != table[a * order + bc] {
                            return Err(Error::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }

        Ok(Self {
            order,
            table,
            identity,
            inverse,
            labels: None,
        })
    }

    /// Parses the plain-text table format: first non-comment line holds the
    /// order n, the next n lines hold n whitespace-separated indices each.
    /// `#` starts a comment running to end of line.
    pub fn from_table_text(text: &str, check_associativity: bool) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                None
            } else {
                Some((i + 1, line))
            }
        });
        let (header_line, header) = lines.next().ok_or(Error::ParseText {
            what: "group table",
            line: 1,
            reason: "empty input".into(),
        })?;
        let order: usize = header.parse().map_err(|_| Error::ParseText {
            what: "group table",
            line: header_line,
            reason: format!("expected the group order, found {header:?}"),
        })?;
        let mut rows = Vec::with_capacity(order);
        for _ in 0..order {
            let (line_no, line) = lines.next().ok_or(Error::ParseText {
                what: "group table",
                line: header_line,
                reason: format!("expected {order} table rows but the input ended early"),
            })?;
            let row = parse_fields(line, "group table", line_no)?;
            rows.push(row);
        }
        if let Some((line_no, line)) = lines.next() {
            return Err(Error::ParseText {
                what: "group table",
                line: line_no,
                reason: format!("unexpected trailing content {line:?}"),
            });
        }
        Self::from_table(rows, check_associativity)
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product of two elements.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugate `g * h * g^-1`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of an element; falls back to the index itself.
    pub fn label(&self, index: usize) -> String {
        match &self.labels {
            Some(labels) => labels[index].clone(),
            None => index.to_string(),
        }
    }

    /// Smallest k >= 1 with g^k = identity.
    ///
    /// Panics if `g` is out of range.
    pub fn element_order(&self, g: usize) -> usize {
        assert!(g < self.order, "element index out of range");
        let mut power = g;
        let mut k = 1;
        while power != self.identity {
            power = self.mul(power, g);
            k += 1;
        }
        k
    }

    /// True iff g is a non-identity element with g*g = identity.
    pub fn is_involution(&self, g: usize) -> bool {
        assert!(g < self.order, "element index out of range");
        g != self.identity && self.mul(g, g) == self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }
}

/// A validated subgroup: contains the identity and is closed under the parent
/// product and under inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    set: ElementSet,
}

impl Subgroup {
    /// Validates `members` as a subgroup of `group`.
    pub fn new(group: &Group, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set = ElementSet::new(group.order(), members)?;
        if !set.contains(group.identity()) {
            return Err(Error::MissingIdentity);
        }
        for a in set.iter() {
            for b in set.iter() {
                let product = group.mul(a, b);
                if !set.contains(product) {
                    return Err(Error::NotClosed { a, b, product });
                }
            }
            // Inverse closure follows from product closure in a finite group,
            // but the invariant is cheap to state directly.
            debug_assert!(set.contains(group.inv(a)));
        }
        debug_assert_eq!(group.order() % set.len(), 0, "Lagrange violation");
        Ok(Self { set })
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.set.contains(index)
    }

    pub fn members(&self) -> &[usize] {
        self.set.members()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }

    pub fn elements(&self) -> &ElementSet {
        &self.set
    }

    /// True iff 1 < |H| < |G|.
    pub fn is_proper_nontrivial(&self, group: &Group) -> bool {
        self.order() > 1 && self.order() < group.order()
    }

    /// Some (g, h, g*h*g^-1) with the conjugate outside the subgroup, or None
    /// if the subgroup is normal.
    pub fn normality_witness(&self, group: &Group) -> Option<(usize, usize, usize)> {
        for g in group.elements() {
            for h in self.iter() {
                let conjugate = group.conjugate(g, h);
                if !self.contains(conjugate) {
                    return Some((g, h, conjugate));
                }
            }
        }
        None
    }

    /// True iff g*h*g^-1 stays in the subgroup for all g in G, h in H.
    pub fn is_normal(&self, group: &Group) -> bool {
        self.normality_witness(group).is_none()
    }
}

/// Closure of a generating set: the smallest subgroup containing `gens`.
pub(crate) fn generated_subgroup(group: &Group, gens: &[usize]) -> ElementSet {
    let mut set = ElementSet::empty(group.order());
    set.insert(group.identity());
    let mut worklist = vec![group.identity()];
    let mut cursor = 0;
    while cursor < worklist.len() {
        let x = worklist[cursor];
        cursor += 1;
        for &g in gens {
            let p = group.mul(x, g);
            if !set.contains(p) {
                set.insert(p);
                worklist.push(p);
            }
        }
    }
    set
}

/// All normal subgroups of `group`, found by breadth-first closure over
/// generated subgroups (every subgroup of a group of order n is generated by
/// at most log2(n) elements, so adding one generator at a time reaches all of
/// them). With `proper_nontrivial_only`, {1} and G are excluded.
///
/// Uses the default order bound of [`DEFAULT_SUBGROUP_ENUMERATION_BOUND`].
pub fn list_normal_subgroups(group: &Group, proper_nontrivial_only: bool) -> Result<Vec<Subgroup>> {
    list_normal_subgroups_with_bound(
        group,
        proper_nontrivial_only,
        DEFAULT_SUBGROUP_ENUMERATION_BOUND,
    )
}

/// [`list_normal_subgroups`] with an explicit order bound.
pub fn list_normal_subgroups_with_bound(
    group: &Group,
    proper_nontrivial_only: bool,
    bound: usize,
) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::OrderBoundExceeded {
            order: group.order(),
            bound,
        });
    }

    let trivial = generated_subgroup(group, &[]);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    seen.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for subgroup in &frontier {
            for gen in group.elements().filter(|&g| !subgroup.contains(g)) {
                let mut gens: Vec<usize> = subgroup.members().to_vec();
                gens.push(gen);
                let closed = generated_subgroup(group, &gens);
                if seen.insert(closed.clone()) {
                    next.push(closed);
                }
            }
        }
        frontier = next;
    }

    let mut normal: Vec<Subgroup> = Vec::new();
    for set in seen {
        let subgroup = Subgroup { set };
        if proper_nontrivial_only && !subgroup.is_proper_nontrivial(group) {
            continue;
        }
        if subgroup.is_normal(group) {
            normal.push(subgroup);
        }
    }
    normal.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    Ok(normal)
}

/// Parses one line of whitespace- or comma-separated element indices; `#`
/// comments run to end of line. This is both the subgroup file format and the
/// inline index-list argument format.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.extend(parse_fields(&line.replace(',', " "), "index list", i + 1)?);
    }
    Ok(out)
}

fn parse_fields(line: &str, what: &'static str, line_no: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|field| {
            field.parse().map_err(|_| Error::ParseText {
                what,
                line: line_no,
                reason: format!("{field:?} is not a valid element index"),
            })
        })
        .collect()
}
