//! One function per subcommand, plus the shared output helpers.

use std::path::Path;

use serde_json::json;

use sti_core::canon::canonical_form;
use sti_core::families::{star, FamilySpec};
use sti_core::graph6::{from_graph6, to_graph6};
use sti_core::metrics::{analysis_record, classify};
use sti_core::search::{
    enumerate_trees, find_generalized_sti, find_generalized_sti_in, verify_catalog, Catalog,
    SearchConfig, VerificationReport,
};
use sti_core::theorems::{check_product, check_tree};

use crate::{input, CliError, Command, Emit, FamilyCommand, Outcome};

pub fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Analyze {
            graphs,
            input,
            emit,
        } => analyze(&graphs, input.as_deref(), emit),
        Command::Family { emit, family } => construct_family(&family, emit),
        Command::Product {
            graphs,
            input,
            emit,
        } => product(&graphs, input.as_deref(), emit),
        Command::Search {
            max_n,
            bipartite_only,
            k,
            jobs,
            verify,
            emit,
        } => search(max_n, bipartite_only, k, jobs, verify, emit),
        Command::Verify {
            graphs,
            input,
            k,
            emit,
        } => verify(&graphs, input.as_deref(), k, emit),
        Command::Trees { max_n, emit } => trees(max_n, emit),
    }
}

fn analyze(inline: &[String], path: Option<&Path>, emit: Emit) -> Result<Outcome, CliError> {
    let source = input::source(inline, path)?;
    let graphs = input::read_graphs(&source)?;
    match emit {
        Emit::Json => {
            for g in &graphs {
                let record = analysis_record(g)?;
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            }
        }
        Emit::Graph6 => {
            for g in &graphs {
                println!("{}", canonical_form(g).as_str());
            }
        }
        Emit::Table => {
            let mut rows = Vec::new();
            for g in &graphs {
                let r = analysis_record(g)?;
                rows.push(vec![
                    to_graph6(g),
                    r.n.to_string(),
                    r.m.to_string(),
                    join_u64(&r.imbalances),
                    opt(r.k),
                    r.generalized_sti.to_string(),
                    r.transmission_regular.to_string(),
                    r.bipartite.to_string(),
                    r.twin_free.to_string(),
                    opt(r.girth),
                    r.diameter.to_string(),
                ]);
            }
            print_table(
                &[
                    "graph6",
                    "n",
                    "m",
                    "imbalances",
                    "k",
                    "generalized_sti",
                    "transmission_regular",
                    "bipartite",
                    "twin_free",
                    "girth",
                    "diameter",
                ],
                &rows,
            );
        }
    }
    Ok(Outcome::Clean)
}

fn construct_family(command: &FamilyCommand, emit: Emit) -> Result<Outcome, CliError> {
    let (name, parameters, spec) = family_spec(command)?;
    let member = spec.build()?;
    let predicted = spec.predicted_k();
    let verdict = classify(&member)?;
    let agrees = predicted.map(|p| verdict.k == Some(p));
    match emit {
        Emit::Graph6 => println!("{}", to_graph6(&member)),
        Emit::Json => println!(
            "{}",
            json!({
                "family": name,
                "parameters": parameters,
                "graph6": to_graph6(&member),
                "n": member.order(),
                "m": member.edge_count(),
                "predicted_k": predicted,
                "k": verdict.k,
                "imbalances": verdict.imbalances,
                "generalized_sti": verdict.is_generalized_sti,
                "prediction_agrees": agrees,
            })
        ),
        Emit::Table => print_table(
            &["field", "value"],
            &[
                vec!["family".to_string(), name.to_string()],
                vec!["parameters".to_string(), parameters.to_string()],
                vec!["graph6".to_string(), to_graph6(&member)],
                vec!["n".to_string(), member.order().to_string()],
                vec!["m".to_string(), member.edge_count().to_string()],
                vec!["predicted_k".to_string(), opt(predicted)],
                vec!["k".to_string(), opt(verdict.k)],
                vec!["imbalances".to_string(), join_u64(&verdict.imbalances)],
                vec![
                    "generalized_sti".to_string(),
                    verdict.is_generalized_sti.to_string(),
                ],
                vec!["prediction_agrees".to_string(), opt(agrees)],
            ],
        ),
    }
    if agrees == Some(false) {
        eprintln!(
            "theorem witness: {name} member predicted uniform imbalance {} but classified as {:?}",
            predicted.expect("agrees is Some"),
            verdict.k
        );
        return Ok(Outcome::WitnessFound);
    }
    Ok(Outcome::Clean)
}

fn family_spec(
    command: &FamilyCommand,
) -> Result<(&'static str, serde_json::Value, FamilySpec), CliError> {
    Ok(match *command {
        FamilyCommand::CompleteBipartite { p, q } => (
            "complete-bipartite",
            json!({ "p": p, "q": q }),
            FamilySpec::CompleteBipartite { p, q },
        ),
        FamilyCommand::Star { m } => ("star", json!({ "m": m }), FamilySpec::Star { m }),
        FamilyCommand::Path { m } => ("path", json!({ "m": m }), FamilySpec::Path { m }),
        FamilyCommand::Cycle { m } => ("cycle", json!({ "m": m }), FamilySpec::Cycle { m }),
        FamilyCommand::Gamma { p, q } => {
            ("gamma", json!({ "p": p, "q": q }), FamilySpec::Gamma { p, q })
        }
        FamilyCommand::H { p, q } => {
            ("h", json!({ "p": p, "q": q }), FamilySpec::HGraph { p, q })
        }
        FamilyCommand::G { n, r } => {
            ("g", json!({ "n": n, "r": r }), FamilySpec::GGraph { n, r })
        }
        FamilyCommand::AlternatingWheel { m } => (
            "alternating-wheel",
            json!({ "m": m }),
            FamilySpec::AlternatingWheel { m },
        ),
        FamilyCommand::Amalgamation {
            ref operand,
            root,
            copies,
        } => {
            let g = from_graph6(operand.trim())
                .map_err(|e| CliError::Usage(format!("--operand: {e}")))?;
            (
                "amalgamation",
                json!({ "operand": operand.trim(), "root": root, "copies": copies }),
                FamilySpec::Amalgamation {
                    operand: g,
                    root,
                    copies,
                },
            )
        }
    })
}

fn product(inline: &[String], path: Option<&Path>, emit: Emit) -> Result<Outcome, CliError> {
    let source = input::source(inline, path)?;
    let graphs = input::read_graphs(&source)?;
    let [g, h] = graphs.as_slice() else {
        return Err(CliError::Usage(format!(
            "product needs exactly two graphs, got {}",
            graphs.len()
        )));
    };
    let verdict = check_product(g, h)?;
    match emit {
        Emit::Json => println!("{}", verdict.to_json_line()),
        Emit::Graph6 => println!("{}", to_graph6(&g.cartesian_product(h)?)),
        Emit::Table => {
            let mut rows = vec![
                vec!["theorem".to_string(), verdict.theorem_id.as_str().to_string()],
                vec!["graph6".to_string(), verdict.graph6.clone()],
                vec!["holds".to_string(), verdict.holds.to_string()],
                vec![
                    "witness".to_string(),
                    verdict.witness.clone().unwrap_or_else(|| "-".to_string()),
                ],
            ];
            for (key, value) in &verdict.details {
                rows.push(vec![key.clone(), value.to_string()]);
            }
            print_table(&["field", "value"], &rows);
        }
    }
    if verdict.holds {
        Ok(Outcome::Clean)
    } else {
        eprintln!(
            "theorem witness: {}",
            verdict.witness.as_deref().unwrap_or("product check failed")
        );
        Ok(Outcome::WitnessFound)
    }
}

fn search(
    max_n: usize,
    bipartite_only: bool,
    k: Option<u64>,
    jobs: Option<usize>,
    verify: bool,
    emit: Emit,
) -> Result<Outcome, CliError> {
    if let Some(jobs) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot use {jobs} worker thread(s): {e}")))?;
    }
    let config = SearchConfig {
        max_n,
        bipartite_only,
        k_filter: k,
    };
    let catalog = find_generalized_sti(&config)?;
    print_catalog(&catalog, emit);
    if !verify {
        return Ok(Outcome::Clean);
    }
    let report = verify_catalog(&catalog);
    print_report(&report, emit);
    report_outcome(&report)
}

fn verify(
    inline: &[String],
    path: Option<&Path>,
    k: Option<u64>,
    emit: Emit,
) -> Result<Outcome, CliError> {
    let source = input::source(inline, path)?;
    let provenance = input::describe(&source);
    let graphs = input::read_graphs(&source)?;
    let total = graphs.len();
    let config = SearchConfig {
        k_filter: k,
        ..SearchConfig::default()
    };
    let catalog = find_generalized_sti_in(graphs.into_iter().map(Ok), provenance, &config)?;
    eprintln!(
        "{} of {} input graph(s) carry a uniform imbalance",
        catalog.len(),
        total
    );
    let report = verify_catalog(&catalog);
    print_report(&report, emit);
    report_outcome(&report)
}

fn trees(max_n: usize, emit: Emit) -> Result<Outcome, CliError> {
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for n in 1..=max_n {
        let mut count = 0usize;
        let mut uniform = Vec::new();
        for tree in enumerate_trees(n)? {
            count += 1;
            let verdict = check_tree(&tree)?;
            if !verdict.holds {
                witnesses.push(format!(
                    "order {n}, {}: {}",
                    verdict.graph6,
                    verdict.witness.as_deref().unwrap_or("check failed")
                ));
            }
            if classify(&tree)?.is_generalized_sti {
                uniform.push(canonical_form(&tree).into_string());
            }
        }
        let expected_stars = if n >= 3 {
            vec![canonical_form(&star(n - 1)?).into_string()]
        } else {
            Vec::new()
        };
        let stars_only = uniform == expected_stars;
        if !stars_only {
            witnesses.push(format!(
                "order {n}: uniform-imbalance trees {uniform:?} differ from the star list"
            ));
        }
        rows.push((n, count, uniform, stars_only));
    }
    match emit {
        Emit::Json => {
            for (n, count, uniform, stars_only) in &rows {
                println!(
                    "{}",
                    json!({
                        "n": n,
                        "trees": count,
                        "uniform_members": uniform,
                        "stars_only": stars_only,
                    })
                );
            }
        }
        Emit::Graph6 => {
            for (_, _, uniform, _) in &rows {
                for member in uniform {
                    println!("{member}");
                }
            }
        }
        Emit::Table => {
            let rendered: Vec<Vec<String>> = rows
                .iter()
                .map(|(n, count, uniform, stars_only)| {
                    vec![
                        n.to_string(),
                        count.to_string(),
                        if uniform.is_empty() {
                            "-".to_string()
                        } else {
                            uniform.join(",")
                        },
                        stars_only.to_string(),
                    ]
                })
                .collect();
            print_table(&["n", "trees", "uniform_members", "stars_only"], &rendered);
        }
    }
    if witnesses.is_empty() {
        Ok(Outcome::Clean)
    } else {
        for witness in &witnesses {
            eprintln!("theorem witness: {witness}");
        }
        Ok(Outcome::WitnessFound)
    }
}

fn print_catalog(catalog: &Catalog, emit: Emit) {
    match emit {
        Emit::Json => print!("{}", catalog.to_json_lines()),
        Emit::Graph6 => {
            for entry in catalog.entries() {
                println!("{}", entry.graph6);
            }
        }
        Emit::Table => {
            let rows: Vec<Vec<String>> = catalog
                .entries()
                .map(|e| {
                    vec![
                        e.graph6.clone(),
                        e.n.to_string(),
                        e.m.to_string(),
                        e.k.to_string(),
                        opt(e.girth),
                        e.diameter.to_string(),
                        e.min_degree.to_string(),
                        e.two_connected.to_string(),
                        e.two_edge_connected.to_string(),
                    ]
                })
                .collect();
            print_table(
                &[
                    "graph6",
                    "n",
                    "m",
                    "k",
                    "girth",
                    "diameter",
                    "min_degree",
                    "two_connected",
                    "two_edge_connected",
                ],
                &rows,
            );
        }
    }
}

fn print_report(report: &VerificationReport, emit: Emit) {
    match emit {
        Emit::Json | Emit::Graph6 => println!("{}", report.to_json()),
        Emit::Table => {
            let mut rows = vec![
                vec!["provenance".to_string(), report.provenance.clone()],
                vec!["entries".to_string(), report.entries.to_string()],
                vec!["checks_run".to_string(), report.checks_run.to_string()],
            ];
            for (check, passes) in &report.pass_counts {
                rows.push(vec![format!("passes[{check}]"), passes.to_string()]);
            }
            rows.push(vec![
                "witnesses".to_string(),
                report.witnesses.len().to_string(),
            ]);
            rows.push(vec![
                "acyclic_exceptions".to_string(),
                report.acyclic_exceptions.to_string(),
            ]);
            rows.push(vec![
                "girth_counterexample_candidates".to_string(),
                report.girth_counterexample_candidates.to_string(),
            ]);
            rows.push(vec![
                "order_bound_equalities".to_string(),
                report.order_bound_equalities.to_string(),
            ]);
            print_table(&["field", "value"], &rows);
        }
    }
}

fn report_outcome(report: &VerificationReport) -> Result<Outcome, CliError> {
    if report.girth_counterexample_candidates > 0 {
        eprintln!(
            "POSSIBLE COUNTEREXAMPLE: {} cyclic graph(s) with uniform imbalance 1 whose girth \
             is not 4; inspect the girth_conjecture records before anything else",
            report.girth_counterexample_candidates
        );
    }
    for witness in &report.witnesses {
        eprintln!(
            "theorem witness [{}] {}: {}",
            witness.check, witness.graph6, witness.witness
        );
    }
    if report.clean() && report.girth_counterexample_candidates == 0 {
        Ok(Outcome::Clean)
    } else {
        Ok(Outcome::WitnessFound)
    }
}

fn print_table(header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let render = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:<width$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    println!("{}", render(&header));
    for row in rows {
        println!("{}", render(row));
    }
}

fn join_u64(values: &[u64]) -> String {
    if values.is_empty() {
        return "-".to_string();
    }
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn opt<T: ToString>(value: Option<T>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}
