//! Graph sources shared by the subcommands: inline literals, files, stdin.

use std::fs::File;
use std::io::{self, BufReader};
use std::path::Path;

use sti_core::graph::Graph;
use sti_core::graph6::from_graph6;
use sti_core::search::ingest_graph6;

use crate::CliError;

/// Where the graphs of one invocation come from.
pub enum Source<'a> {
    Inline(&'a [String]),
    File(&'a Path),
    Stdin,
}

/// Picks the input source, rejecting invocations with no graphs at all.
/// Inline literals and `--input` are mutually exclusive (enforced by the
/// argument parser); `-` names standard input.
pub fn source<'a>(inline: &'a [String], input: Option<&'a Path>) -> Result<Source<'a>, CliError> {
    match input {
        Some(path) if path.as_os_str() == "-" => Ok(Source::Stdin),
        Some(path) => Ok(Source::File(path)),
        None if inline.is_empty() => Err(CliError::Usage(
            "no graphs given; pass graph6 literals or --input <PATH>".to_string(),
        )),
        None => Ok(Source::Inline(inline)),
    }
}

/// Short description of the source, used as catalog provenance.
pub fn describe(source: &Source) -> String {
    match source {
        Source::Inline(literals) => format!("{} inline graph6 literal(s)", literals.len()),
        Source::File(path) => format!("graph6 lines from {}", path.display()),
        Source::Stdin => "graph6 lines from standard input".to_string(),
    }
}

/// Reads every graph from the source, preserving input order.
pub fn read_graphs(source: &Source) -> Result<Vec<Graph>, CliError> {
    match source {
        Source::Inline(literals) => literals
            .iter()
            .enumerate()
            .map(|(index, literal)| {
                from_graph6(literal.trim()).map_err(|e| {
                    CliError::Usage(format!("graph argument {}: {e}", index + 1))
                })
            })
            .collect(),
        Source::File(path) => {
            let file = File::open(path).map_err(|e| {
                CliError::Usage(format!("cannot open {}: {e}", path.display()))
            })?;
            Ok(ingest_graph6(BufReader::new(file)).collect::<sti_core::Result<_>>()?)
        }
        Source::Stdin => Ok(ingest_graph6(io::stdin().lock()).collect::<sti_core::Result<_>>()?),
    }
}
