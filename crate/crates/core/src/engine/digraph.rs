use crate::alphabet::Alphabet;
use crate::class::{for_each_member, WordClass};
use crate::error::{Error, Result};
use crate::word::{decode, Word};

/// A class member viewed as an edge from its prefix window to its suffix window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    /// Base-`k` code of the `n`-letter member.
    pub label: u64,
    pub from: usize,
    pub to: usize,
}

/// Vertices are the `(n-1)`-letter windows touched by some member; each
/// member contributes one edge. Edges are stored sorted by label, which
/// groups them by source vertex (compressed sparse rows).
#[derive(Debug, Clone)]
pub struct TransitionDigraph {
    n: usize,
    alphabet: Alphabet,
    class_label: String,
    vertices: Vec<u64>,
    edges: Vec<Edge>,
    out_start: Vec<usize>,
    in_degree: Vec<usize>,
}

/// Builds the transition digraph of `class`. Empty classes give an empty digraph.
pub fn build_digraph(class: &WordClass) -> Result<TransitionDigraph> {
    let n = class.n();
    if n < 2 {
        return Err(Error::WordTooShort(n));
    }
    class.check_cap()?;
    let k = class.k() as u64;
    let window_space = (class.space_size() / k as u128) as u64;

    let mut labels = Vec::new();
    for_each_member(class, |code, _| labels.push(code))?;

    // Dense window -> vertex index map; windows are numbered in code order.
    let mut index = vec![u32::MAX; window_space as usize];
    for &label in &labels {
        index[(label / k) as usize] = 0;
        index[(label % window_space) as usize] = 0;
    }
    let mut vertices = Vec::new();
    for (code, slot) in index.iter_mut().enumerate() {
        if *slot == 0 {
            *slot = vertices.len() as u32;
            vertices.push(code as u64);
        }
    }

    let mut out_start = vec![0usize; vertices.len() + 1];
    let mut in_degree = vec![0usize; vertices.len()];
    let edges: Vec<Edge> = labels
        .iter()
        .map(|&label| {
            let from = index[(label / k) as usize] as usize;
            let to = index[(label % window_space) as usize] as usize;
            out_start[from + 1] += 1;
            in_degree[to] += 1;
            Edge { label, from, to }
        })
        .collect();
    for v in 0..vertices.len() {
        out_start[v + 1] += out_start[v];
    }

    Ok(TransitionDigraph {
        n,
        alphabet: class.alphabet().clone(),
        class_label: class.label(),
        vertices,
        edges,
        out_start,
        in_degree,
    })
}

impl TransitionDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.alphabet.size()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn class_label(&self) -> &str {
        &self.class_label
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Out-edges of `v`, sorted by label.
    pub fn out_edges(&self, v: usize) -> &[Edge] {
        &self.edges[self.out_start[v]..self.out_start[v + 1]]
    }

    pub(crate) fn out_range(&self, v: usize) -> std::ops::Range<usize> {
        self.out_start[v]..self.out_start[v + 1]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_start[v + 1] - self.out_start[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_degree[v]
    }

    pub fn vertex(&self, v: usize) -> Word {
        decode(self.vertices[v], self.n - 1, self.k())
    }

    pub fn vertex_index(&self, window: &[crate::Letter]) -> Option<usize> {
        if window.len() + 1 != self.n || window.iter().any(|l| l.index() >= self.k()) {
            return None;
        }
        self.vertices
            .binary_search(&crate::word::encode(window, self.k()))
            .ok()
    }

    pub fn edge_word(&self, e: &Edge) -> Word {
        decode(e.label, self.n, self.k())
    }

    /// First letter of an edge label, as a letter index.
    pub(crate) fn head_letter(&self, e: &Edge) -> u8 {
        (e.label / self.window_space()) as u8
    }

    fn window_space(&self) -> u64 {
        (self.k() as u64).pow(self.n as u32 - 1)
    }
}
