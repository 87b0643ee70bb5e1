//! Eulerian audit: degree balance plus weak connectivity.

use crate::word::Word;

use super::digraph::TransitionDigraph;

/// Component census entries list at most this many edge labels.
pub const CENSUS_EDGE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: Word,
    pub in_degree: usize,
    pub out_degree: usize,
}

/// Why a digraph failed the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    EmptyClass,
    DegreeImbalance,
    Disconnected,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::EmptyClass => "empty_class",
            Reason::DegreeImbalance => "degree_imbalance",
            Reason::Disconnected => "disconnected",
        }
    }
}

/// Weak components of a digraph, numbered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Components containing at least one edge.
    pub count: usize,
    pub component_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCensus {
    pub id: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Lexicographically first edge labels, capped at [`CENSUS_EDGE_LIMIT`].
    pub edges: Vec<Word>,
}

impl ComponentCensus {
    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.edge_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    pub verdict: bool,
    pub reasons: Vec<Reason>,
    pub degree_violations: Vec<DegreeViolation>,
    pub nontrivial_component_count: usize,
    pub edge_count: usize,
    pub components: Vec<ComponentCensus>,
}

/// Vertices whose in-degree differs from their out-degree.
pub fn degree_audit(g: &TransitionDigraph) -> Vec<DegreeViolation> {
    (0..g.vertex_count())
        .filter(|&v| g.in_degree(v) != g.out_degree(v))
        .map(|v| DegreeViolation {
            vertex: g.vertex(v),
            in_degree: g.in_degree(v),
            out_degree: g.out_degree(v),
        })
        .collect()
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Components of the underlying undirected graph.
pub fn weak_components(g: &TransitionDigraph) -> Components {
    let vn = g.vertex_count();
    let mut parent: Vec<usize> = (0..vn).collect();
    for e in g.edges() {
        let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }

    let mut id_of_root = vec![usize::MAX; vn];
    let mut component_of = vec![0; vn];
    let mut next = 0;
    for (v, slot) in component_of.iter_mut().enumerate() {
        let root = find(&mut parent, v);
        if id_of_root[root] == usize::MAX {
            id_of_root[root] = next;
            next += 1;
        }
        *slot = id_of_root[root];
    }

    let mut has_edge = vec![false; next];
    for e in g.edges() {
        has_edge[component_of[e.from]] = true;
    }
    Components {
        count: has_edge.iter().filter(|&&h| h).count(),
        component_of,
    }
}

fn census(g: &TransitionDigraph, components: &Components) -> Vec<ComponentCensus> {
    let ids = components.component_of.iter().max().map_or(0, |m| m + 1);
    let mut out: Vec<ComponentCensus> = (0..ids)
        .map(|id| ComponentCensus {
            id,
            vertex_count: 0,
            edge_count: 0,
            edges: Vec::new(),
        })
        .collect();
    for &c in &components.component_of {
        out[c].vertex_count += 1;
    }
    for e in g.edges() {
        let entry = &mut out[components.component_of[e.from]];
        entry.edge_count += 1;
        if entry.edges.len() < CENSUS_EDGE_LIMIT {
            entry.edges.push(g.edge_word(e));
        }
    }
    out.retain(|c| c.edge_count > 0);
    out
}

/// A digraph has an Euler circuit iff it is balanced, has at most one weak
/// component with edges, and (for a U-cycle to mean anything) has an edge.
pub fn eulerian_check(g: &TransitionDigraph) -> ExistenceReport {
    let degree_violations = degree_audit(g);
    let components = weak_components(g);
    let mut reasons = Vec::new();
    if g.edge_count() == 0 {
        reasons.push(Reason::EmptyClass);
    }
    if !degree_violations.is_empty() {
        reasons.push(Reason::DegreeImbalance);
    }
    if components.count > 1 {
        reasons.push(Reason::Disconnected);
    }
    ExistenceReport {
        verdict: reasons.is_empty(),
        reasons,
        degree_violations,
        nontrivial_component_count: components.count,
        edge_count: g.edge_count(),
        components: census(g, &components),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::{make_class, ClassKind, ClassSpec};
    use crate::engine::build_digraph;

    fn graph(spec: ClassSpec) -> TransitionDigraph {
        build_digraph(&make_class(&spec).unwrap()).unwrap()
    }

    #[test]
    fn degree_audit_examples() {
        assert!(degree_audit(&graph(ClassSpec::new(ClassKind::Noninjective, 4).k(3))).is_empty());
        let odd = graph(ClassSpec::new(ClassKind::Alternating, 5).alternation(2, 1));
        let violations = degree_audit(&odd);
        assert!(!violations.is_empty());
        for v in &violations {
            assert!(matches!((v.in_degree, v.out_degree), (1, 2) | (2, 1)));
        }
        assert!(degree_audit(&graph(ClassSpec::new(ClassKind::Injective, 4).k(3))).is_empty());
    }

    #[test]
    fn illegal_rankings_of_three_split_off_a_three_cycle() {
        let g = graph(ClassSpec::new(ClassKind::IllegalRanking, 3));
        let components = weak_components(&g);
        assert!(components.count >= 2);
        let report = eulerian_check(&g);
        let names: Vec<Vec<String>> = report
            .components
            .iter()
            .map(|c| c.edges.iter().map(|w| g.alphabet().render(w)).collect())
            .collect();
        assert!(names.contains(&vec!["112".into(), "121".into(), "211".into()]));
        assert!(!report.verdict);
        assert!(report.reasons.contains(&Reason::Disconnected));
    }

    #[test]
    fn permutations_of_three_are_disconnected() {
        let g = graph(ClassSpec::new(ClassKind::Injective, 3).k(3));
        assert!(weak_components(&g).count >= 2);
    }

    #[test]
    fn binary_de_bruijn_graph_is_connected() {
        let g = graph(ClassSpec::new(ClassKind::AllWords, 3).k(2));
        let c = weak_components(&g);
        assert_eq!(c.count, 1);
        assert_eq!(c.component_of, [0, 0, 0, 0]);
        assert!(eulerian_check(&g).verdict);
    }

    #[test]
    fn eulerian_check_examples() {
        assert!(eulerian_check(&graph(ClassSpec::new(ClassKind::Noninjective, 3).k(3))).verdict);
        let r = eulerian_check(&graph(ClassSpec::new(ClassKind::Nonsurjective, 3).k(2)));
        assert!(!r.verdict);
        assert_eq!(r.edge_count, 2);
        assert_eq!(r.nontrivial_component_count, 2);
        assert!(r.degree_violations.is_empty());
        assert!(r
            .components
            .iter()
            .all(|c| c.is_complete() && c.edge_count == 1));
    }

    #[test]
    fn empty_class_is_its_own_reason() {
        let r = eulerian_check(&graph(ClassSpec::new(ClassKind::Injective, 4).k(3)));
        assert!(!r.verdict);
        assert_eq!(r.reasons, [Reason::EmptyClass]);
        assert_eq!(r.edge_count, 0);
        assert_eq!(r.nontrivial_component_count, 0);
    }
}
