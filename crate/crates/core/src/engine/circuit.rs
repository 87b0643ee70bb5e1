//! Hierholzer circuit extraction and cycle emission.

use crate::alphabet::{Alphabet, Letter};
use crate::class::WordClass;
use crate::error::{Error, Result};
use crate::word::Word;

use super::audit::{eulerian_check, ExistenceReport};
use super::digraph::{build_digraph, TransitionDigraph};

/// Tie-breaking rule recorded on every emitted cycle.
pub const EDGE_RULE: &str = "smallest-start-vertex, smallest-unused-edge";

/// Edge indices of a closed walk, in traversal order.
pub type Circuit = Vec<usize>;

/// Euler circuit starting at the smallest vertex with an out-edge and always
/// leaving along the smallest unused edge.
pub fn hierholzer(g: &TransitionDigraph) -> Result<Circuit> {
    if !eulerian_check(g).verdict {
        return Err(Error::NotEulerian);
    }
    let start = (0..g.vertex_count())
        .find(|&v| g.out_degree(v) > 0)
        .ok_or(Error::NotEulerian)?;

    let edges = g.edges();
    let mut cursor: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.out_range(v).start)
        .collect();
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut circuit = Vec::with_capacity(edges.len());
    while let Some(&(v, via)) = stack.last() {
        if cursor[v] < g.out_range(v).end {
            let e = cursor[v];
            cursor[v] += 1;
            stack.push((edges[e].to, Some(e)));
        } else {
            stack.pop();
            if let Some(e) = via {
                circuit.push(e);
            }
        }
    }
    circuit.reverse();
    Ok(circuit)
}

/// A universal cycle: `letters[i..i+n]` (cyclically) runs through the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UCycle {
    pub letters: Vec<Letter>,
    pub class: String,
    pub n: usize,
    pub start_vertex: Word,
    pub edge_rule: &'static str,
    pub engine_version: &'static str,
}

impl UCycle {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.letters)
    }

    /// Rotates to the lexicographically least rotation.
    pub fn canonicalize(&mut self) {
        let shift = least_rotation(&self.letters);
        self.letters.rotate_left(shift);
        self.start_vertex = self
            .letters
            .iter()
            .cycle()
            .take(self.n - 1)
            .copied()
            .collect();
    }
}

/// Start index of the lexicographically least rotation (two-pointer
/// minimum-expression scan, linear time).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let len = s.len();
    let (mut i, mut j, mut k) = (0, 1, 0);
    while i < len && j < len && k < len {
        let (a, b) = (&s[(i + k) % len], &s[(j + k) % len]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// Reads the cycle off a circuit: letter `i` is the first letter of edge `i`.
pub fn emit_cycle(circuit: &[usize], g: &TransitionDigraph) -> Result<UCycle> {
    let edges = g.edges();
    if circuit.len() != edges.len() || circuit.is_empty() {
        return Err(Error::MalformedCircuit(format!(
            "{} edges in circuit, {} in digraph",
            circuit.len(),
            edges.len()
        )));
    }
    let mut used = vec![false; edges.len()];
    for (i, &e) in circuit.iter().enumerate() {
        let edge = edges
            .get(e)
            .ok_or_else(|| Error::MalformedCircuit(format!("edge index {e} out of range")))?;
        if std::mem::replace(&mut used[e], true) {
            return Err(Error::MalformedCircuit(format!("edge {e} traversed twice")));
        }
        let next = &edges[circuit[(i + 1) % circuit.len()]];
        if edge.to != next.from {
            return Err(Error::MalformedCircuit(format!(
                "step {i} ends at vertex {} but the next edge leaves vertex {}",
                edge.to, next.from
            )));
        }
    }

    Ok(UCycle {
        letters: circuit
            .iter()
            .map(|&e| Letter(g.head_letter(&edges[e])))
            .collect(),
        class: g.class_label().to_string(),
        n: g.n(),
        start_vertex: g.vertex(edges[circuit[0]].from),
        edge_rule: EDGE_RULE,
        engine_version: env!("CARGO_PKG_VERSION"),
    })
}

/// Outcome of running the whole pipeline on a class.
#[derive(Debug, Clone)]
pub enum Generation {
    Cycle(UCycle, ExistenceReport),
    NoCycle(ExistenceReport),
}

/// Builds the digraph, audits it and, when Eulerian, emits a U-cycle.
pub fn generate(class: &WordClass) -> Result<Generation> {
    let g = build_digraph(class)?;
    let report = eulerian_check(&g);
    if !report.verdict {
        return Ok(Generation::NoCycle(report));
    }
    let circuit = hierholzer(&g)?;
    Ok(Generation::Cycle(emit_cycle(&circuit, &g)?, report))
}
