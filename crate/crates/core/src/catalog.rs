use crate::family::GroupFamily;
use crate::group::Group;

/// One catalog group together with the family expression that rebuilds it.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: Group,
}

/// The builtin test catalog: cyclic groups of order 2..=24, dihedral groups
/// up to order 24, the symmetric groups on 3 and 4 points, the alternating
/// group on 4 points, the quaternion group, elementary abelian 2-groups up
/// to order 16, and the products Z2 x Z4 and Z2 x Z6, filtered to
/// `max_order` and returned in a fixed order.
pub fn standard_catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut families: Vec<GroupFamily> = Vec::new();
    families.extend((2..=24).map(GroupFamily::Cyclic));
    families.extend((3..=12).map(GroupFamily::Dihedral));
    families.push(GroupFamily::Symmetric(3));
    families.push(GroupFamily::Symmetric(4));
    families.push(GroupFamily::Alternating(4));
    families.push(GroupFamily::Quaternion);
    families.extend((2..=4).map(|k| GroupFamily::ElementaryAbelian(2, k)));
    families.push(GroupFamily::Product(vec![
        GroupFamily::Cyclic(2),
        GroupFamily::Cyclic(4),
    ]));
    families.push(GroupFamily::Product(vec![
        GroupFamily::Cyclic(2),
        GroupFamily::Cyclic(6),
    ]));

    families
        .into_iter()
        .filter(|family| family.order().expect("catalog parameters are valid") <= max_order)
        .map(|family| CatalogEntry {
            name: family.to_string(),
            group: family.build().expect("catalog groups build"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_respects_the_order_filter() {
        let small = standard_catalog(6);
        assert!(small.iter().all(|entry| entry.group.order() <= 6));
        assert!(small.iter().any(|entry| entry.name == "cyclic:6"));
        assert!(small.iter().any(|entry| entry.name == "dihedral:3"));
        assert!(!small.iter().any(|entry| entry.name == "quaternion"));
    }

    #[test]
    fn full_catalog_composition() {
        let full = standard_catalog(24);
        assert_eq!(
            full.iter()
                .filter(|e| e.name.starts_with("cyclic:"))
                .count(),
            23
        );
        assert_eq!(
            full.iter()
                .filter(|e| e.name.starts_with("dihedral:"))
                .count(),
            10
        );
        assert!(full.iter().any(|e| e.name == "symmetric:4"));
        assert!(full.iter().any(|e| e.name == "product:cyclic:2,cyclic:6"));
        for entry in &full {
            assert!(entry.group.order() <= 24);
        }
    }
}
