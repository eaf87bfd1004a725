use serde::{Deserialize, Serialize};

use crate::input::label_echo;
use regset::Group;

/// The plain-text certificate a successful `construct` emits: a fixed field
/// order so documents are diffable, with `#` comment lines carrying label
/// echoes that parsers ignore.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub group: String,
    pub subgroup: Vec<usize>,
    pub kappa: usize,
    pub tau: usize,
    pub witness: Vec<usize>,
    pub verdict: String,
    pub tool: String,
}

fn join(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl CertificateDocument {
    pub fn render(&self, group: &Group) -> String {
        let mut out = String::new();
        out.push_str(&format!("group: {}\n", self.group));
        out.push_str(&format!("subgroup: {}\n", join(&self.subgroup)));
        if let Some(echo) = label_echo(group, &self.subgroup) {
            out.push_str(&format!("# subgroup labels: {echo}\n"));
        }
        out.push_str(&format!("kappa: {}\n", self.kappa));
        out.push_str(&format!("tau: {}\n", self.tau));
        out.push_str(&format!("witness: {}\n", join(&self.witness)));
        if let Some(echo) = label_echo(group, &self.witness) {
            out.push_str(&format!("# witness labels: {echo}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out.push_str(&format!("tool: {}\n", self.tool));
        out
    }

    /// Parses a rendered document; `#` comments and blank lines are ignored.
    #[cfg_attr(not(test), allow(dead_code))]
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut group = None;
        let mut subgroup = None;
        let mut kappa = None;
        let mut tau = None;
        let mut witness = None;
        let mut verdict = None;
        let mut tool = None;
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| format!("malformed certificate line {line:?}"))?;
            let value = value.trim();
            let indices = || -> Result<Vec<usize>, String> {
                value
                    .split_whitespace()
                    .map(|f| f.parse().map_err(|_| format!("bad index {f:?} in {key}")))
                    .collect()
            };
            match key.trim() {
                "group" => group = Some(value.to_string()),
                "subgroup" => subgroup = Some(indices()?),
                "kappa" => kappa = Some(value.parse().map_err(|_| "bad kappa".to_string())?),
                "tau" => tau = Some(value.parse().map_err(|_| "bad tau".to_string())?),
                "witness" => witness = Some(indices()?),
                "verdict" => verdict = Some(value.to_string()),
                "tool" => tool = Some(value.to_string()),
                other => return Err(format!("unknown certificate field {other:?}")),
            }
        }
        Ok(Self {
            group: group.ok_or("missing field: group")?,
            subgroup: subgroup.ok_or("missing field: subgroup")?,
            kappa: kappa.ok_or("missing field: kappa")?,
            tau: tau.ok_or("missing field: tau")?,
            witness: witness.ok_or("missing field: witness")?,
            verdict: verdict.ok_or("missing field: verdict")?,
            tool: tool.ok_or("missing field: tool")?,
        })
    }
}
