//! Undirected simple graphs, edge-list ingestion, BFS distance fields and
//! connected components.
//!
//! Every measure in this crate works on a [`Graph`]: an immutable adjacency
//! structure with dense internal IDs `0..node_count` and the external string
//! labels they were read from. Internal IDs are assigned in label order (see
//! [`compare_labels`]), so two edge lists describing the same labelled graph
//! produce identical `Graph`s regardless of line order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Marker stored in [`DistanceField::dist`] for nodes outside the source's
/// component.
pub const UNREACHABLE: u32 = u32::MAX;

/// Orders node labels, numerically when both parse as integers.
///
/// Integer labels sort before non-integer ones so the relation stays a total
/// order on mixed label sets.
pub fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i128>(), b.parse::<i128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

/// Immutable undirected simple graph in compressed adjacency form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
}

impl Graph {
    /// Builds a graph from labelled edges. Self-loops are dropped, duplicate
    /// edges collapse, and `isolated` adds labels that carry no edge.
    pub fn from_labeled_edges<'a, I, J>(edges: I, isolated: J) -> Graph
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
        J: IntoIterator<Item = &'a str>,
    {
        let edges: Vec<(&str, &str)> = edges.into_iter().collect();
        let mut labels: Vec<&str> = edges
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(isolated)
            .collect();
        labels.sort_by(|a, b| compare_labels(a, b));
        labels.dedup();

        let index: HashMap<&str, NodeId> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let pairs = edges.iter().map(|(a, b)| (index[a], index[b]));
        let owned = labels.into_iter().map(str::to_owned).collect();
        Graph::build(owned, pairs)
    }

    /// Builds a graph on `node_count` nodes labelled `"0"`, `"1"`, ... from
    /// internal-ID edges.
    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Graph {
        let labels = (0..node_count).map(|i| i.to_string()).collect();
        Graph::build(labels, edges)
    }

    fn build(labels: Vec<String>, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Graph {
        let n = labels.len();
        let mut adj: Vec<BTreeSet<NodeId>> = vec![BTreeSet::new(); n];
        for (a, b) in edges {
            assert!(a < n && b < n, "edge ({a}, {b}) out of range for {n} nodes");
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut neighbors = Vec::new();
        for set in adj {
            neighbors.extend(set);
            offsets.push(neighbors.len());
        }
        Graph {
            labels,
            offsets,
            neighbors,
        }
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Sorted neighbor list of `node`.
    pub fn neighbors(&self, node: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[node]..self.offsets[node + 1]]
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.offsets[node + 1] - self.offsets[node]
    }

    pub fn has_edge(&self, a: NodeId, b: NodeId) -> bool {
        self.neighbors(a).binary_search(&b).is_ok()
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Internal ID carrying `label`.
    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.labels
            .binary_search_by(|probe| compare_labels(probe, label))
            .ok()
    }

    /// Each undirected edge once, as `(low, high)` internal IDs.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count()).flat_map(move |a| {
            self.neighbors(a)
                .iter()
                .copied()
                .filter(move |&b| a < b)
                .map(move |b| (a, b))
        })
    }

    /// Maps labels to internal IDs, failing on the first unknown label.
    pub fn resolve_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<NodeId>> {
        labels
            .iter()
            .map(|l| {
                self.node_id(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_owned()))
            })
            .collect()
    }

    fn check_node(&self, node: NodeId) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count(),
            })
        }
    }
}

/// Result of reading an edge list: the graph plus counters for input the
/// reader had to discard.
#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub duplicate_edges: usize,
}

/// Reads a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` or `%` are skipped; every other
/// line must hold exactly two labels.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<ParsedEdgeList> {
    let mut raw: Vec<(String, String)> = Vec::new();
    let mut loop_labels: Vec<String> = Vec::new();
    let mut self_loops_dropped = 0;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::Parse {
                line: idx + 1,
                message: format!("expected 2 node labels, found {}", tokens.len()),
            });
        };
        if a == b {
            self_loops_dropped += 1;
            loop_labels.push(a.to_owned());
        } else {
            raw.push((a.to_owned(), b.to_owned()));
        }
    }

    let distinct: BTreeSet<(&str, &str)> = raw
        .iter()
        .map(|(a, b)| match compare_labels(a, b) {
            Ordering::Greater => (b.as_str(), a.as_str()),
            _ => (a.as_str(), b.as_str()),
        })
        .collect();
    let duplicate_edges = raw.len() - distinct.len();
    let graph = Graph::from_labeled_edges(distinct, loop_labels.iter().map(String::as_str));

    Ok(ParsedEdgeList {
        graph,
        self_loops_dropped,
        duplicate_edges,
    })
}

pub fn parse_edge_list_str(text: &str) -> Result<ParsedEdgeList> {
    parse_edge_list(text.as_bytes())
}

/// Hop distances from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    pub source: NodeId,
    /// Hop distance per node, [`UNREACHABLE`] outside the source's component.
    pub dist: Vec<u32>,
    /// Largest finite distance (eccentricity within the component).
    pub d_max: u32,
    /// Number of nodes at exactly distance `r`, for `r = 0..=d_max`.
    pub shell_counts: Vec<usize>,
}

impl DistanceField {
    pub fn distance(&self, node: NodeId) -> Option<u32> {
        match self.dist[node] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Size of the source's connected component.
    pub fn reachable(&self) -> usize {
        self.shell_counts.iter().sum()
    }

    /// Number of nodes within distance `r` of the source, itself included.
    pub fn ball_size(&self, r: u32) -> usize {
        let end = (r as usize + 1).min(self.shell_counts.len());
        self.shell_counts[..end].iter().sum()
    }

    /// Sum of distances to every reachable node.
    pub fn distance_sum(&self) -> u64 {
        self.shell_counts
            .iter()
            .enumerate()
            .map(|(r, &c)| r as u64 * c as u64)
            .sum()
    }
}

pub fn bfs_distances(g: &Graph, source: NodeId) -> Result<DistanceField> {
    g.check_node(source)?;
    let mut dist = vec![UNREACHABLE; g.node_count()];
    let mut shell_counts = vec![1usize];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;

    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = next;
                if shell_counts.len() <= next as usize {
                    shell_counts.push(0);
                }
                shell_counts[next as usize] += 1;
                queue.push_back(v);
            }
        }
    }

    Ok(DistanceField {
        source,
        dist,
        d_max: (shell_counts.len() - 1) as u32,
        shell_counts,
    })
}

/// BFS from every node, in parallel. Index `i` holds the field of source `i`.
pub fn all_distance_fields(g: &Graph) -> Vec<DistanceField> {
    (0..g.node_count())
        .into_par_iter()
        .map(|s| bfs_distances(g, s).expect("source in range"))
        .collect()
}

/// Largest eccentricity over all nodes; 0 for graphs without edges.
pub fn diameter(g: &Graph) -> u32 {
    (0..g.node_count())
        .into_par_iter()
        .map(|s| bfs_distances(g, s).expect("source in range").d_max)
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    /// Component index per node. Components are numbered in order of their
    /// smallest internal ID.
    pub component_id: Vec<usize>,
    pub component_sizes: Vec<usize>,
}

impl ComponentMap {
    pub fn len(&self) -> usize {
        self.component_sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.component_sizes.is_empty()
    }

    /// Index of the largest component, the lowest-numbered one on ties.
    pub fn largest(&self) -> Option<usize> {
        self.component_sizes
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
    }

    pub fn members(&self, component: usize) -> Vec<NodeId> {
        self.component_id
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == component)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn connected_components(g: &Graph) -> ComponentMap {
    let n = g.node_count();
    let mut component_id = vec![usize::MAX; n];
    let mut component_sizes = Vec::new();
    let mut stack = Vec::new();

    for start in 0..n {
        if component_id[start] != usize::MAX {
            continue;
        }
        let id = component_sizes.len();
        component_id[start] = id;
        stack.push(start);
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in g.neighbors(u) {
                if component_id[v] == usize::MAX {
                    component_id[v] = id;
                    stack.push(v);
                }
            }
        }
        component_sizes.push(size);
    }

    ComponentMap {
        component_id,
        component_sizes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    fn id(g: &Graph, label: &str) -> NodeId {
        g.node_id(label).unwrap()
    }

    #[test]
    fn parses_path() {
        let p = parse_edge_list_str("1 2\n2 3\n").unwrap();
        assert_eq!(p.graph.node_count(), 3);
        assert_eq!(p.graph.edge_count(), 2);
    }

    #[test]
    fn collapses_duplicates_and_drops_self_loops() {
        let p = parse_edge_list_str("a b\nb a\na a\n").unwrap();
        assert_eq!(p.graph.node_count(), 2);
        assert_eq!(p.graph.edge_count(), 1);
        assert_eq!(p.self_loops_dropped, 1);
        assert_eq!(p.duplicate_edges, 1);
    }

    #[test]
    fn comments_blank_lines_and_crlf() {
        let p = parse_edge_list_str("% konect header\r\n# note\r\n\r\n1\t2\r\n  2   3  \r\n").unwrap();
        assert_eq!(p.graph.node_count(), 3);
        assert_eq!(p.graph.edge_count(), 2);
    }

    #[test]
    fn malformed_line_reports_line_number() {
        match parse_edge_list_str("1 2\n# c\n3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_edge_list_str("1 2 3\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let p = parse_edge_list_str("").unwrap();
        assert!(p.graph.is_empty());
        assert!(connected_components(&p.graph).is_empty());
    }

    #[test]
    fn labels_sorted_numerically() {
        let g = parse_edge_list_str("10 9\n9 2\n").unwrap().graph;
        assert_eq!(g.labels(), ["2", "9", "10"]);
        assert_eq!(g.node_id("10"), Some(2));
        assert_eq!(g.node_id("11"), None);
    }

    #[test]
    fn kite_fixture_shape() {
        let g = fixtures::kite();
        assert_eq!(g.node_count(), 10);
        assert_eq!(g.edge_count(), 18);
    }

    #[test]
    fn kite_bfs_from_node_7() {
        let g = fixtures::kite();
        let f = bfs_distances(&g, id(&g, "7")).unwrap();
        for l in ["1", "2", "3", "4", "5", "6"] {
            assert_eq!(f.distance(id(&g, l)), Some(1));
        }
        assert_eq!(f.distance(id(&g, "8")), Some(2));
        assert_eq!(f.distance(id(&g, "9")), Some(3));
        assert_eq!(f.distance(id(&g, "10")), Some(4));
        assert_eq!(f.d_max, 4);
        assert_eq!(f.shell_counts, [1, 6, 1, 1, 1]);
        assert_eq!(f.distance_sum(), 15);
    }

    #[test]
    fn isolated_node_field() {
        let g = Graph::from_edges(1, []);
        let f = bfs_distances(&g, 0).unwrap();
        assert_eq!(f.d_max, 0);
        assert_eq!(f.shell_counts, [1]);
    }

    #[test]
    fn cycle_shells() {
        let g = fixtures::cycle(5);
        for s in 0..5 {
            let f = bfs_distances(&g, s).unwrap();
            assert_eq!(f.shell_counts, [1, 2, 2]);
            assert_eq!(f.d_max, 2);
        }
    }

    #[test]
    fn source_out_of_range() {
        let g = fixtures::cycle(3);
        assert!(matches!(
            bfs_distances(&g, 3),
            Err(Error::NodeOutOfRange { node: 3, node_count: 3 })
        ));
    }

    #[test]
    fn unreachable_nodes_are_marked() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]);
        let f = bfs_distances(&g, 0).unwrap();
        assert_eq!(f.dist, [0, 1, UNREACHABLE, UNREACHABLE]);
        assert_eq!(f.d_max, 1);
        assert_eq!(f.reachable(), 2);
    }

    #[test]
    fn components() {
        let kite = connected_components(&fixtures::kite());
        assert_eq!(kite.component_sizes, [10]);

        let two = connected_components(&Graph::from_edges(4, [(0, 1), (2, 3)]));
        assert_eq!(two.component_sizes, [2, 2]);
        assert_eq!(two.component_id, [0, 0, 1, 1]);
        assert_eq!(two.largest(), Some(0));
    }

    pub(crate) fn arb_graph(max_nodes: usize) -> impl Strategy<Value = Graph> {
        (1..=max_nodes).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..=n * 2)
                .prop_map(move |edges| Graph::from_edges(n, edges))
        })
    }

    proptest! {
        #[test]
        fn distances_symmetric_and_lipschitz(g in arb_graph(14)) {
            let fields = all_distance_fields(&g);
            let comps = connected_components(&g);
            for (s, f) in fields.iter().enumerate() {
                prop_assert_eq!(f.dist[s], 0);
                prop_assert_eq!(f.reachable(), comps.component_sizes[comps.component_id[s]]);
                for (t, &d) in f.dist.iter().enumerate() {
                    prop_assert_eq!(d, fields[t].dist[s]);
                }
                for (u, v) in g.edges() {
                    if f.dist[u] != UNREACHABLE {
                        prop_assert!(f.dist[u].abs_diff(f.dist[v]) <= 1);
                    }
                }
            }
        }

        #[test]
        fn parse_ignores_line_order(edges in proptest::collection::vec((0u8..12, 0u8..12), 0..40), seed in any::<u64>()) {
            let text: Vec<String> = edges.iter().map(|(a, b)| format!("n{a} n{b}")).collect();
            let mut shuffled = text.clone();
            let len = shuffled.len();
            if len > 1 {
                let mut state = seed;
                for i in (1..len).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    shuffled.swap(i, (state >> 33) as usize % (i + 1));
                }
            }
            let a = parse_edge_list_str(&text.join("\n")).unwrap().graph;
            let b = parse_edge_list_str(&shuffled.join("\n")).unwrap().graph;
            prop_assert_eq!(a, b);
        }
    }
}
