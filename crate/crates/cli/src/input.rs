use std::fs;

use regset::{parse_index_list, Group, GroupFamily};

/// A group resolved from a `--group` argument, remembering the expression string
/// so it can be echoed into certificates.
pub struct ResolvedGroup {
    pub expression: String,
    pub group: Group,
}

/// Resolves `family:params` expressions or `@path` table files.
pub fn resolve_group(spec: &str, check_associativity: bool) -> Result<ResolvedGroup, String> {
    let group = if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|err| format!("cannot read {path}: {err}"))?;
        Group::from_table_text(&text, check_associativity).map_err(|err| err.to_string())?
    } else {
        let family: GroupFamily = spec.parse().map_err(|err| format!("{err}"))?;
        family.build().map_err(|err| err.to_string())?
    };
    Ok(ResolvedGroup {
        expression: spec.to_string(),
        group,
    })
}

/// Resolves a comma/whitespace-separated index list or an `@path` file
/// holding one.
pub fn resolve_indices(arg: &str) -> Result<Vec<usize>, String> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|err| format!("cannot read {path}: {err}"))?
    } else {
        arg.to_string()
    };
    parse_index_list(&text).map_err(|err| err.to_string())
}

/// Joins element labels for a `#`-comment echo line, if the group has any.
pub fn label_echo(group: &Group, indices: &[usize]) -> Option<String> {
    group.labels()?;
    let labels: Vec<String> = indices.iter().map(|&i| group.label(i)).collect();
    Some(labels.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs_resolve() {
        let resolved = resolve_group("cyclic:6", false).unwrap();
        assert_eq!(resolved.group.order(), 6);
        assert!(resolve_group("cyclic:x", false).is_err());
        assert!(resolve_group("@/no/such/file", false).is_err());
    }

    #[test]
    fn inline_indices_resolve() {
        assert_eq!(resolve_indices("0,2").unwrap(), vec![0, 2]);
        assert_eq!(resolve_indices("0 2 4").unwrap(), vec![0, 2, 4]);
        assert!(resolve_indices("0,two").is_err());
    }
}
