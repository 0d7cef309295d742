//! Strongly and weakly connected components.

use alloc::vec::Vec;

use crate::{Graph, Node};

/// A partition of the node set into components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    component: Vec<usize>,
    members: Vec<Vec<Node>>,
    terminal: Vec<bool>,
}

impl Partition {
    pub fn num_components(&self) -> usize {
        self.members.len()
    }

    pub fn component_of(&self, x: Node) -> usize {
        self.component[x]
    }

    /// Members of a component, in increasing order.
    pub fn members(&self, c: usize) -> &[Node] {
        &self.members[c]
    }

    /// Whether no arc leaves the component. Always true for weak components.
    pub fn is_terminal(&self, c: usize) -> bool {
        self.terminal[c]
    }

    /// Per-node component ids.
    pub fn labels(&self) -> &[usize] {
        &self.component
    }

    fn from_labels(g: &Graph, component: Vec<usize>, count: usize) -> Self {
        let mut members = alloc::vec![Vec::new(); count];
        for (x, &c) in component.iter().enumerate() {
            members[c].push(x);
        }
        let mut terminal = alloc::vec![true; count];
        for (u, v) in g.arcs() {
            if component[u] != component[v] {
                terminal[component[u]] = false;
            }
        }
        Self {
            component,
            members,
            terminal,
        }
    }
}

/// Strongly connected components (iterative Tarjan).
///
/// Components are numbered in the order Tarjan's algorithm closes them,
/// which is a reverse topological order of the condensation.
pub fn strongly_connected_components(g: &Graph) -> Partition {
    const NONE: usize = usize::MAX;
    let n = g.num_nodes();
    let mut index = alloc::vec![NONE; n];
    let mut low = alloc::vec![0usize; n];
    let mut on_stack = alloc::vec![false; n];
    let mut stack: Vec<Node> = Vec::new();
    let mut component = alloc::vec![NONE; n];
    let mut count = 0;
    let mut next_index = 0;
    // (node, position of the next successor to examine)
    let mut call: Vec<(Node, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(u, pos)) = call.last() {
            let succ = g.successors(u);
            if pos < succ.len() {
                let v = succ[pos];
                if let Some(top) = call.last_mut() {
                    top.1 += 1;
                }
                if index[v] == NONE {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    component[w] = count;
                    if w == u {
                        break;
                    }
                }
                count += 1;
            }
        }
    }
    Partition::from_labels(g, component, count)
}

/// Weakly connected components, numbered by their smallest node.
pub fn weakly_connected_components(g: &Graph) -> Partition {
    let n = g.num_nodes();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.arcs() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut label = alloc::vec![usize::MAX; n];
    let mut component = alloc::vec![0; n];
    let mut count = 0;
    for x in 0..n {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        component[x] = label[r];
    }
    Partition::from_labels(g, component, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_cycle_is_one_terminal_component() {
        let g = Graph::from_arcs(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let scc = strongly_connected_components(&g);
        assert_eq!(scc.num_components(), 1);
        assert!(scc.is_terminal(0));
    }

    #[test]
    fn single_arc_has_two_strong_one_weak() {
        let g = Graph::from_arcs(2, [(0, 1)]).unwrap();
        let scc = strongly_connected_components(&g);
        assert_eq!(scc.num_components(), 2);
        assert!(scc.is_terminal(scc.component_of(1)));
        assert!(!scc.is_terminal(scc.component_of(0)));
        assert_eq!(weakly_connected_components(&g).num_components(), 1);
    }

    #[test]
    fn clique_plus_cycle() {
        let g = crate::axioms::gen_s(4, 5).unwrap();
        let scc = strongly_connected_components(&g);
        let wcc = weakly_connected_components(&g);
        assert_eq!(scc.num_components(), 2);
        assert_eq!(wcc.num_components(), 2);
        assert!((0..2).all(|c| scc.is_terminal(c)));
    }

    #[test]
    fn strong_partition_refines_weak() {
        let g = Graph::from_arcs(7, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 5), (5, 4), (6, 6)]).unwrap();
        let scc = strongly_connected_components(&g);
        let wcc = weakly_connected_components(&g);
        assert_eq!(scc.num_components(), 4);
        assert_eq!(wcc.num_components(), 3);
        for (u, v) in (0..7).flat_map(|u| (0..7).map(move |v| (u, v))) {
            if scc.component_of(u) == scc.component_of(v) {
                assert_eq!(wcc.component_of(u), wcc.component_of(v));
            }
        }
    }
}
