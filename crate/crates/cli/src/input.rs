use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use maxmult::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One graph per line.
    Graph6,
    /// A vertex count line followed by `u v` lines; one graph per input.
    Edgelist,
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

/// Parses every graph of `text`, paired with the 1-based line it starts on.
pub fn parse_graphs(text: &str, format: Format) -> Vec<(usize, Result<Graph, GraphError>)> {
    match format {
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, Graph::parse_graph6(l)))
            .collect(),
        Format::Edgelist if text.trim().is_empty() => Vec::new(),
        Format::Edgelist => vec![(1, Graph::parse_edge_list(text))],
    }
}
