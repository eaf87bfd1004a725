use serde::Serialize;

use crate::cert::CertificateDocument;
use crate::input::{label_echo, resolve_group, resolve_indices, ResolvedGroup};
use regset::{
    build_witness, exhaustive_witness_search, inversion_orbit_count, list_normal_subgroups,
    perfect_code_transversal, regular_set_check, satisfies_sharp_condition, standard_catalog,
    ElementSet, Group, ParameterTriple, SearchLimits, SearchVerdict, SharpConditionOutcome,
    Subgroup,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

fn tool_version() -> String {
    format!("regset {}", env!("CARGO_PKG_VERSION"))
}

fn join_commas(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn subgroup_from_arg(group: &Group, arg: &str) -> Result<Subgroup, String> {
    let indices = resolve_indices(arg)?;
    Subgroup::new(group, indices).map_err(|err| err.to_string())
}

#[derive(Serialize)]
struct CertificateRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    document: &'a CertificateDocument,
}

#[derive(Serialize)]
struct NonexistenceRecord<'a> {
    record: &'static str,
    group: &'a str,
    subgroup: &'a [usize],
    kappa: usize,
    tau: usize,
    failing_g: usize,
}

pub fn construct(
    group_spec: &str,
    subgroup_arg: &str,
    kappa: usize,
    tau: usize,
    records: bool,
    check_associativity: bool,
) -> Result<u8, String> {
    let ResolvedGroup { expression, group } = resolve_group(group_spec, check_associativity)?;
    let subgroup = subgroup_from_arg(&group, subgroup_arg)?;
    match build_witness(&group, &subgroup, kappa, tau).map_err(|err| err.to_string())? {
        Some(certificate) => {
            let document = CertificateDocument {
                group: expression,
                subgroup: subgroup.members().to_vec(),
                kappa: certificate.kappa(),
                tau: certificate.tau(),
                witness: certificate.connection_set().members().to_vec(),
                verdict: "pass".into(),
                tool: tool_version(),
            };
            if records {
                let record = CertificateRecord {
                    record: "certificate",
                    document: &document,
                };
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                print!("{}", document.render(&group));
            }
            Ok(EXIT_OK)
        }
        None => {
            // Odd tau without a perfect code: report the condition-# witness.
            let failing = match satisfies_sharp_condition(&group, &subgroup)
                .map_err(|err| err.to_string())?
            {
                SharpConditionOutcome::Fails { failing } => failing,
                SharpConditionOutcome::Holds { .. } => {
                    return Err(
                        "internal defect: nonexistence reported while condition # holds"
                            .to_string(),
                    )
                }
            };
            if records {
                let record = NonexistenceRecord {
                    record: "nonexistence",
                    group: &expression,
                    subgroup: subgroup.members(),
                    kappa,
                    tau,
                    failing_g: failing,
                };
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                println!("verdict: nonexistent");
                println!(
                    "reason: tau={tau} is odd and H is not a perfect code of G; \
                     condition # fails at g={failing} (no h in H makes (g*h)^2 = 1)"
                );
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    record: &'static str,
    group: &'a str,
    x: &'a [usize],
    r: &'a [usize],
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<(usize, usize, usize)>,
}

pub fn verify(
    group_spec: &str,
    x_arg: &str,
    r_arg: &str,
    records: bool,
    check_associativity: bool,
) -> Result<u8, String> {
    let ResolvedGroup { expression, group } = resolve_group(group_spec, check_associativity)?;
    let x =
        ElementSet::new(group.order(), resolve_indices(x_arg)?).map_err(|err| err.to_string())?;
    let r =
        ElementSet::new(group.order(), resolve_indices(r_arg)?).map_err(|err| err.to_string())?;
    let report = regular_set_check(&group, &x, &r).map_err(|err| err.to_string())?;

    let fmt = |v: Option<usize>| v.map_or("n/a".to_string(), |v| v.to_string());
    if records {
        let record = VerifyRecord {
            record: "verification",
            group: &expression,
            x: x.members(),
            r: r.members(),
            verdict: if report.passed { "pass" } else { "fail" },
            kappa: report.kappa,
            tau: report.tau,
            violation: report
                .first_violation
                .map(|v| (v.element, v.expected, v.observed)),
        };
        println!("{}", serde_json::to_string(&record).unwrap());
    } else if report.passed {
        println!(
            "pass (kappa={}, tau={})",
            fmt(report.kappa),
            fmt(report.tau)
        );
    } else {
        let violation = report
            .first_violation
            .expect("failed check has a violation");
        println!(
            "fail: element {} has {} neighbors in R, expected {}",
            violation.element, violation.observed, violation.expected
        );
    }
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

#[derive(Serialize)]
struct CheckCodeRecord<'a> {
    record: &'static str,
    group: &'a str,
    subgroup: &'a [usize],
    perfect_code: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    transversal: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_g: Option<usize>,
}

pub fn check_code(
    group_spec: &str,
    subgroup_arg: &str,
    records: bool,
    check_associativity: bool,
) -> Result<u8, String> {
    let ResolvedGroup { expression, group } = resolve_group(group_spec, check_associativity)?;
    let subgroup = subgroup_from_arg(&group, subgroup_arg)?;
    // The sharp-condition scan decides the verdict and names the failing g;
    // the transversal construction supplies Y on success.
    let sharp = satisfies_sharp_condition(&group, &subgroup).map_err(|err| err.to_string())?;
    match sharp {
        SharpConditionOutcome::Holds { .. } => {
            let certificate = perfect_code_transversal(&group, &subgroup)
                .map_err(|err| err.to_string())?
                .ok_or("internal defect: condition # holds but no transversal was built")?;
            if records {
                let record = CheckCodeRecord {
                    record: "perfect-code",
                    group: &expression,
                    subgroup: subgroup.members(),
                    perfect_code: true,
                    transversal: Some(certificate.members().to_vec()),
                    failing_g: None,
                };
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                println!("perfect code: yes");
                println!(
                    "transversal: {}",
                    certificate
                        .members()
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
                if let Some(echo) = label_echo(&group, certificate.members()) {
                    println!("# transversal labels: {echo}");
                }
            }
            Ok(EXIT_OK)
        }
        SharpConditionOutcome::Fails { failing } => {
            if records {
                let record = CheckCodeRecord {
                    record: "perfect-code",
                    group: &expression,
                    subgroup: subgroup.members(),
                    perfect_code: false,
                    transversal: None,
                    failing_g: Some(failing),
                };
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                println!("perfect code: no");
                println!("failing g: {failing}");
                if let Some(echo) = label_echo(&group, &[failing]) {
                    println!("# failing label: {echo}");
                }
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

#[derive(Serialize)]
struct InstanceRecord<'a> {
    record: &'static str,
    group: &'a str,
    subgroup: &'a [usize],
    kappa: usize,
    tau: usize,
    witness: bool,
    oracle: &'a str,
    search: &'a str,
}

pub fn enumerate(max_order: usize, exhaustive_bound: usize, records: bool) -> Result<u8, String> {
    let mut instances = 0u64;
    let mut disagreements = 0u64;

    for entry in standard_catalog(max_order) {
        let group = &entry.group;
        let subgroups = list_normal_subgroups(group, true).map_err(|err| err.to_string())?;
        let searchable = inversion_orbit_count(group) <= exhaustive_bound;
        let limits = SearchLimits {
            orbit_bound: exhaustive_bound,
            budget: None,
        };

        for subgroup in subgroups {
            let h = join_commas(subgroup.members());
            match satisfies_sharp_condition(group, &subgroup).map_err(|err| err.to_string())? {
                SharpConditionOutcome::Holds { .. } => {
                    let transversal = perfect_code_transversal(group, &subgroup)
                        .map_err(|err| err.to_string())?
                        .ok_or("internal defect: condition # holds without a transversal")?;
                    let line = format!(
                        "code: group={} H={} perfect_code=yes transversal={}",
                        entry.name,
                        h,
                        join_commas(transversal.members())
                    );
                    emit_code_line(
                        records,
                        &entry.name,
                        &subgroup,
                        Some(transversal.members()),
                        None,
                        &line,
                    );
                }
                SharpConditionOutcome::Fails { failing } => {
                    let line = format!(
                        "code: group={} H={} perfect_code=no failing_g={failing}",
                        entry.name, h
                    );
                    emit_code_line(records, &entry.name, &subgroup, None, Some(failing), &line);
                }
            }

            for (kappa, tau) in ParameterTriple::valid_pairs(subgroup.order()) {
                instances += 1;
                let (witness_found, oracle) = match build_witness(group, &subgroup, kappa, tau) {
                    Ok(Some(certificate)) => {
                        let report = regular_set_check(
                            group,
                            certificate.connection_set().elements(),
                            subgroup.elements(),
                        )
                        .map_err(|err| err.to_string())?;
                        let exact =
                            report.passed && report.kappa == Some(kappa) && report.tau == Some(tau);
                        (true, if exact { "pass" } else { "fail" })
                    }
                    Ok(None) => (false, "n/a"),
                    Err(err) => {
                        eprintln!(
                            "construction error at group={} H={} kappa={kappa} tau={tau}: {err}",
                            entry.name, h
                        );
                        (false, "error")
                    }
                };

                let search = if !searchable {
                    "skipped"
                } else {
                    match exhaustive_witness_search(group, &subgroup, kappa, tau, &limits)
                        .map_err(|err| err.to_string())?
                    {
                        SearchVerdict::Found(_) => "found",
                        SearchVerdict::Nonexistent => "none",
                        SearchVerdict::BudgetExhausted { .. } => "unknown",
                    }
                };

                let disagrees = (witness_found && oracle != "pass")
                    || (witness_found && search == "none")
                    || (!witness_found && oracle == "error")
                    || (!witness_found && search == "found");
                if disagrees {
                    disagreements += 1;
                }

                if records {
                    let record = InstanceRecord {
                        record: "instance",
                        group: &entry.name,
                        subgroup: subgroup.members(),
                        kappa,
                        tau,
                        witness: witness_found,
                        oracle,
                        search,
                    };
                    println!("{}", serde_json::to_string(&record).unwrap());
                } else {
                    println!(
                        "group={} H={} kappa={kappa} tau={tau} witness={} oracle={oracle} search={search}",
                        entry.name,
                        h,
                        if witness_found { "yes" } else { "no" },
                    );
                }
            }
        }
    }

    if records {
        println!(
            "{}",
            serde_json::to_string(&serde_json::json!({
                "record": "summary",
                "instances": instances,
                "disagreements": disagreements,
            }))
            .unwrap()
        );
    } else {
        println!("summary: instances={instances} disagreements={disagreements}");
    }
    Ok(if disagreements > 0 {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
struct CodeRecord<'a> {
    record: &'static str,
    group: &'a str,
    subgroup: &'a [usize],
    perfect_code: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    transversal: Option<&'a [usize]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_g: Option<usize>,
}

fn emit_code_line(
    records: bool,
    group_name: &str,
    subgroup: &Subgroup,
    transversal: Option<&[usize]>,
    failing_g: Option<usize>,
    text_line: &str,
) {
    if records {
        let record = CodeRecord {
            record: "code",
            group: group_name,
            subgroup: subgroup.members(),
            perfect_code: transversal.is_some(),
            transversal,
            failing_g,
        };
        println!("{}", serde_json::to_string(&record).unwrap());
    } else {
        println!("{text_line}");
    }
}
