//! Immutable directed graphs in compressed sparse row form.

use alloc::vec::Vec;

use crate::{Error, Result};

/// Node ids are the contiguous range `0..n`.
pub type Node = usize;

/// A directed graph with a set (not multiset) of arcs.
///
/// Both successor and predecessor lists are stored, sorted, so that
/// measures that pull along incoming arcs do not need a transposed copy.
/// Loops are kept; they never affect distances but count towards degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    succ_offsets: Vec<usize>,
    succ: Vec<Node>,
    pred_offsets: Vec<usize>,
    pred: Vec<Node>,
    loops: usize,
}

impl Graph {
    /// A graph with `n` nodes and no arcs.
    pub fn empty(n: usize) -> Self {
        Self {
            succ_offsets: alloc::vec![0; n + 1],
            succ: Vec::new(),
            pred_offsets: alloc::vec![0; n + 1],
            pred: Vec::new(),
            loops: 0,
        }
    }

    /// Builds a graph on `n` nodes. Duplicate arcs collapse into one.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Node, Node)>,
    {
        let mut arcs: Vec<(Node, Node)> = arcs.into_iter().collect();
        if let Some(node) = arcs.iter().flat_map(|&(u, v)| [u, v]).find(|&x| x >= n) {
            return Err(Error::NodeOutOfRange { node, n });
        }
        arcs.sort_unstable();
        arcs.dedup();
        Ok(Self::from_sorted_unique(n, &arcs))
    }

    fn from_sorted_unique(n: usize, arcs: &[(Node, Node)]) -> Self {
        let mut succ_offsets = alloc::vec![0usize; n + 1];
        let mut pred_offsets = alloc::vec![0usize; n + 1];
        let mut loops = 0;
        for &(u, v) in arcs {
            succ_offsets[u + 1] += 1;
            pred_offsets[v + 1] += 1;
            if u == v {
                loops += 1;
            }
        }
        for i in 0..n {
            succ_offsets[i + 1] += succ_offsets[i];
            pred_offsets[i + 1] += pred_offsets[i];
        }
        let succ = arcs.iter().map(|&(_, v)| v).collect();
        // Arcs sorted by (source, target) fill each predecessor list in
        // increasing source order.
        let mut pred = alloc::vec![0; arcs.len()];
        let mut cursor = pred_offsets.clone();
        for &(u, v) in arcs {
            pred[cursor[v]] = u;
            cursor[v] += 1;
        }
        Self {
            succ_offsets,
            succ,
            pred_offsets,
            pred,
            loops,
        }
    }

    #[inline]
    pub fn num_nodes(&self) -> usize {
        self.succ_offsets.len() - 1
    }

    #[inline]
    pub fn num_arcs(&self) -> usize {
        self.succ.len()
    }

    /// Number of loops `x → x` in the arc set.
    pub fn num_loops(&self) -> usize {
        self.loops
    }

    #[inline]
    pub fn successors(&self, x: Node) -> &[Node] {
        &self.succ[self.succ_offsets[x]..self.succ_offsets[x + 1]]
    }

    #[inline]
    pub fn predecessors(&self, x: Node) -> &[Node] {
        &self.pred[self.pred_offsets[x]..self.pred_offsets[x + 1]]
    }

    #[inline]
    pub fn outdegree(&self, x: Node) -> usize {
        self.succ_offsets[x + 1] - self.succ_offsets[x]
    }

    #[inline]
    pub fn indegree(&self, x: Node) -> usize {
        self.pred_offsets[x + 1] - self.pred_offsets[x]
    }

    pub fn has_arc(&self, x: Node, y: Node) -> bool {
        self.successors(x).binary_search(&y).is_ok()
    }

    /// All arcs, sorted by `(source, target)`.
    pub fn arcs(&self) -> impl Iterator<Item = (Node, Node)> + '_ {
        (0..self.num_nodes()).flat_map(move |u| self.successors(u).iter().map(move |&v| (u, v)))
    }

    pub fn check_node(&self, x: Node) -> Result<()> {
        if x < self.num_nodes() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node: x,
                n: self.num_nodes(),
            })
        }
    }

    /// The graph with every arc reversed.
    pub fn transpose(&self) -> Self {
        Self {
            succ_offsets: self.pred_offsets.clone(),
            succ: self.pred.clone(),
            pred_offsets: self.succ_offsets.clone(),
            pred: self.succ.clone(),
            loops: self.loops,
        }
    }

    /// A copy of this graph with the arc `x → y` added.
    pub fn with_arc(&self, x: Node, y: Node) -> Result<Self> {
        self.check_node(x)?;
        self.check_node(y)?;
        Self::from_arcs(self.num_nodes(), self.arcs().chain(core::iter::once((x, y))))
    }

    /// Whether `x → y` implies `y → x` for every arc.
    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    /// Applies a node relabeling: node `x` becomes `perm[x]`.
    pub fn permute(&self, perm: &[Node]) -> Result<Self> {
        if perm.len() != self.num_nodes() {
            return Err(Error::InvalidParameter(alloc::format!(
                "permutation of length {} for {} nodes",
                perm.len(),
                self.num_nodes()
            )));
        }
        Self::from_arcs(self.num_nodes(), self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subgraph induced by `nodes` (sorted and deduplicated first); node
    /// `i` of the result is the `i`-th smallest id. Returns the ids too.
    pub fn induced_subgraph(&self, nodes: &[Node]) -> Result<(Self, Vec<Node>)> {
        let mut ids: Vec<Node> = nodes.to_vec();
        ids.sort_unstable();
        ids.dedup();
        for &x in &ids {
            self.check_node(x)?;
        }
        let local = |x: Node| ids.binary_search(&x).ok();
        let mut arcs = Vec::new();
        for (i, &u) in ids.iter().enumerate() {
            arcs.extend(self.successors(u).iter().filter_map(|&v| local(v).map(|j| (i, j))));
        }
        Ok((Self::from_arcs(ids.len(), arcs)?, ids))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_arcs_collapse() {
        let g = Graph::from_arcs(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.num_arcs(), 1);
        assert_eq!(g.successors(0), &[1]);
        assert_eq!(g.predecessors(1), &[0]);
    }

    #[test]
    fn out_of_range_arc_is_rejected() {
        assert_eq!(
            Graph::from_arcs(2, [(0, 2)]),
            Err(Error::NodeOutOfRange { node: 2, n: 2 })
        );
    }

    #[test]
    fn successor_and_predecessor_lists_agree() {
        let g = Graph::from_arcs(4, [(0, 1), (2, 1), (1, 3), (3, 0), (3, 3)]).unwrap();
        for x in 0..4 {
            for &y in g.successors(x) {
                assert!(g.predecessors(y).contains(&x));
            }
            for &y in g.predecessors(x) {
                assert!(g.successors(y).contains(&x));
            }
        }
        assert_eq!(g.num_loops(), 1);
        assert_eq!(g.indegree(3), 2);
        assert_eq!(g.outdegree(3), 2);
    }

    #[test]
    fn transpose_reverses_and_is_involutive() {
        let g = Graph::from_arcs(2, [(0, 1)]).unwrap();
        let t = g.transpose();
        assert_eq!(t.arcs().collect::<Vec<_>>(), alloc::vec![(1, 0)]);
        assert_eq!(t.transpose(), g);

        let sym = Graph::from_arcs(3, [(0, 1), (1, 0), (1, 2), (2, 1)]).unwrap();
        assert!(sym.is_symmetric());
        assert_eq!(sym.transpose(), sym);

        assert_eq!(Graph::empty(0).transpose(), Graph::empty(0));
    }

    #[test]
    fn with_arc_adds_exactly_one_arc() {
        let g = Graph::from_arcs(3, [(0, 1)]).unwrap();
        let h = g.with_arc(2, 1).unwrap();
        assert_eq!(h.num_arcs(), 2);
        assert!(h.has_arc(2, 1));
        assert!(g.with_arc(3, 0).is_err());
    }
}
