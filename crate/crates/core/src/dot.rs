//! Graphviz output for structure spaces.

use std::fmt::Write;

use crate::subset::ElemSet;
use crate::topology::{PointSet, StructureSpace, TopologyError};

fn ideal_label(ideal: ElemSet, labels: Option<&[String]>) -> String {
    let names: Vec<String> = ideal
        .iter()
        .map(|e| match labels.and_then(|l| l.get(e)) {
            Some(name) => name.clone(),
            None => e.to_string(),
        })
        .collect();
    format!("{{{}}}", names.join(","))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the specialization order, one node `p<i>` per point.
pub fn specialization_dot(space: &StructureSpace, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph specialization {\n");
    for (i, &p) in space.points().iter().enumerate() {
        writeln!(out, "    p{i} [label=\"{}\"];", escape(&ideal_label(p, labels))).unwrap();
    }
    for (p, q) in space.specialization_covers() {
        writeln!(out, "    p{p} -> p{q};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of the closed sets under inclusion, smaller set at the tail.
pub fn closed_lattice_dot(space: &StructureSpace) -> Result<String, TopologyError> {
    let closed = space.closed_sets()?;
    let mut out = String::from("digraph closed_sets {\n");
    let name = |c: PointSet| format!("c{}", c.bits());
    for &c in &closed {
        let members: Vec<String> = c.iter().map(|i| format!("p{i}")).collect();
        writeln!(out, "    {} [label=\"{{{}}}\"];", name(c), members.join(",")).unwrap();
    }
    for &a in &closed {
        for &b in &closed {
            if a.is_proper_subset(b) && !closed.iter().any(|m| a.is_proper_subset(*m) && m.is_proper_subset(b)) {
                writeln!(out, "    {} -> {};", name(a), name(b)).unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
