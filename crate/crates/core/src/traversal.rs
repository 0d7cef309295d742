//! Breadth-first distances, reachability counts and the negative
//! neighborhood function.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::components::weakly_connected_components;
use crate::{Graph, Node, Result};

const UNREACHABLE: u32 = u32::MAX;

/// Which arcs a visit follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Along arcs: from `source` towards the nodes it reaches.
    Forward,
    /// Against arcs: towards `source` from the nodes that reach it.
    Backward,
}

/// Shortest-path lengths from one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    source: Node,
    dist: Vec<u32>,
}

impl DistanceRow {
    pub fn source(&self) -> Node {
        self.source
    }

    /// `None` when the node is unreachable.
    pub fn get(&self, y: Node) -> Option<u32> {
        match self.dist[y] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Option<u32>> + '_ {
        (0..self.dist.len()).map(move |y| self.get(y))
    }
}

/// Reusable BFS state, so that sweeping every node allocates once.
pub struct Bfs {
    dist: Vec<u32>,
    queue: VecDeque<Node>,
    visited: Vec<Node>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Self {
            dist: alloc::vec![UNREACHABLE; n],
            queue: VecDeque::new(),
            visited: Vec::new(),
        }
    }

    /// Runs a visit and returns the visited nodes in BFS order.
    ///
    /// Distances of the returned nodes are available through
    /// [`distance`](Self::distance) until the next call.
    pub fn run(&mut self, g: &Graph, source: Node, direction: Direction) -> &[Node] {
        for &v in &self.visited {
            self.dist[v] = UNREACHABLE;
        }
        self.visited.clear();
        self.dist[source] = 0;
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            self.visited.push(u);
            let next = self.dist[u] + 1;
            let neighbors = match direction {
                Direction::Forward => g.successors(u),
                Direction::Backward => g.predecessors(u),
            };
            for &v in neighbors {
                if self.dist[v] == UNREACHABLE {
                    self.dist[v] = next;
                    self.queue.push_back(v);
                }
            }
        }
        &self.visited
    }

    #[inline]
    pub fn distance(&self, y: Node) -> Option<u32> {
        match self.dist[y] {
            UNREACHABLE => None,
            d => Some(d),
        }
    }
}

/// `d(source, y)` for every `y`.
pub fn bfs_distances(g: &Graph, source: Node) -> Result<DistanceRow> {
    distance_row(g, source, Direction::Forward)
}

/// `d(y, target)` for every `y`, i.e. a visit of the transpose.
pub fn distances_to(g: &Graph, target: Node) -> Result<DistanceRow> {
    distance_row(g, target, Direction::Backward)
}

fn distance_row(g: &Graph, source: Node, direction: Direction) -> Result<DistanceRow> {
    g.check_node(source)?;
    let mut bfs = Bfs::new(g.num_nodes());
    bfs.run(g, source, direction);
    Ok(DistanceRow {
        source,
        dist: bfs.dist,
    })
}

/// Number of nodes at each distance from `x` against arc direction:
/// entry `t` counts `{y : d(y, x) = t}`. Entry 0 is always 1.
pub fn coreach_profile(g: &Graph, x: Node) -> Result<Vec<usize>> {
    g.check_node(x)?;
    let mut bfs = Bfs::new(g.num_nodes());
    Ok(profile_with(&mut bfs, g, x))
}

pub(crate) fn profile_with(bfs: &mut Bfs, g: &Graph, x: Node) -> Vec<usize> {
    let order = bfs.run(g, x, Direction::Backward);
    let last = *order.last().expect("visit contains the source");
    let depth = bfs.distance(last).unwrap_or(0) as usize;
    let mut counts = alloc::vec![0usize; depth + 1];
    for &y in bfs.visited.iter() {
        counts[bfs.dist[y] as usize] += 1;
    }
    counts
}

/// `|{y : d(y, x) < ∞}|`, counting `x` itself.
pub fn coreachable_count(g: &Graph, x: Node) -> Result<usize> {
    g.check_node(x)?;
    let mut bfs = Bfs::new(g.num_nodes());
    Ok(bfs.run(g, x, Direction::Backward).len())
}

/// Size of the weakly connected component of `x`.
pub fn weakly_reachable_count(g: &Graph, x: Node) -> Result<usize> {
    g.check_node(x)?;
    let wcc = weakly_connected_components(g);
    Ok(wcc.members(wcc.component_of(x)).len())
}

/// `N⁻(x, t) = |{y : d(y, x) ≤ t}|`.
pub fn neighborhood_function(g: &Graph, x: Node, t: usize) -> Result<usize> {
    let profile = coreach_profile(g, x)?;
    Ok(profile.iter().take(t + 1).sum())
}
