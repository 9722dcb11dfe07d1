//! Streaming graph6 ingestion: one graph per line, with parse failures
//! reported by 1-based line number. Blank lines are skipped so files with
//! trailing newlines or spacing round-trip cleanly.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::from_graph6;

/// Iterator over the graphs encoded line-by-line in a reader.
pub struct Graph6Lines<R> {
    reader: R,
    line_number: usize,
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            let mut line = String::new();
            self.line_number += 1;
            match self.reader.read_line(&mut line) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(Error::from(e).at_line(self.line_number))),
            }
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            return Some(from_graph6(trimmed).map_err(|e| e.at_line(self.line_number)));
        }
    }
}

/// Streams graphs from graph6 lines. The caller decides whether the stream
/// is isomorphism-free; downstream catalogs deduplicate by canonical form
/// regardless.
pub fn ingest_graph6<R: BufRead>(reader: R) -> Graph6Lines<R> {
    Graph6Lines {
        reader,
        line_number: 0,
    }
}
