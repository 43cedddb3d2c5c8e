//! Graphviz export.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::Result;
use crate::graph::Graph;
use crate::set_label::{sumset, Labeling};

/// Renders `g` in DOT. With a labeling, vertices show their set and
/// mono-indexed edges are drawn bold red.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>) -> Result<String> {
    if let Some(l) = labeling {
        l.check_total(g)?;
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labeling {
            Some(l) => writeln!(out, "  {v} [label=\"{v}\\n{}\"];", l.at(v)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        let mono = labeling.is_some_and(|l| sumset(l.at(u), l.at(v)).is_singleton());
        if mono {
            writeln!(out, "  {u} -- {v} [color=red, penwidth=2];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

pub fn export_dot(g: &Graph, labeling: Option<&Labeling>, path: &Path) -> Result<()> {
    std::fs::write(path, to_dot(g, labeling)?)?;
    Ok(())
}
