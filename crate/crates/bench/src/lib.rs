//! Shared instance builders for the benchmark targets.

use regset::{Group, GroupFamily, Subgroup};

/// Dihedral group of order 24 with its rotation subgroup of order 12: the
/// largest catalog-style instance, with both self-inverse and paired cosets
/// among its other subgroups.
pub fn dihedral_12_with_rotations() -> (Group, Subgroup) {
    let group = GroupFamily::Dihedral(12).build().expect("builtin family");
    let rotations = Subgroup::new(&group, 0..12).expect("rotations form a subgroup");
    (group, rotations)
}

/// Symmetric group on four points with its alternating subgroup.
pub fn symmetric_4_with_alternating() -> (Group, Subgroup) {
    let group = GroupFamily::Symmetric(4).build().expect("builtin family");
    let members: Vec<usize> = group
        .elements()
        .filter(|&x| {
            let order = group.element_order(x);
            order == 1 || order == 3 || (order == 2 && is_double_transposition(&group, x))
        })
        .collect();
    let subgroup = Subgroup::new(&group, members).expect("even permutations form a subgroup");
    (group, subgroup)
}

fn is_double_transposition(group: &Group, x: usize) -> bool {
    // Among the involutions of S4, double transpositions have centralizer
    // order 8 and transpositions order 4.
    let centralizer = group
        .elements()
        .filter(|&g| group.conjugate(g, x) == x)
        .count();
    centralizer == 8
}

/// Elementary abelian group of order 8 with a hyperplane subgroup; every
/// non-identity element is an involution, which stresses the orbit
/// enumeration differently from the cyclic cases.
pub fn elementary_abelian_8_with_hyperplane() -> (Group, Subgroup) {
    let group = GroupFamily::ElementaryAbelian(2, 3)
        .build()
        .expect("builtin family");
    let subgroup = Subgroup::new(&group, 0..4).expect("hyperplane");
    (group, subgroup)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_are_normal_subgroups() {
        let (g, h) = dihedral_12_with_rotations();
        assert!(h.is_normal(&g));
        let (g, h) = symmetric_4_with_alternating();
        assert_eq!(h.order(), 12);
        assert!(h.is_normal(&g));
        let (g, h) = elementary_abelian_8_with_hyperplane();
        assert!(h.is_normal(&g));
    }
}
