//! Betweenness: `b(x) = Σ σ_yz(x) / σ_yz` over ordered pairs `(y, z)` of
//! nodes other than `x` with `σ_yz ≠ 0`.

use alloc::vec::Vec;

use crate::exact::{self, Rational};
use crate::traversal::{Bfs, Direction};
use crate::{par, Error, Graph, Measure, Result, ScoreVector};

/// Largest graph on which [`betweenness`] first tries exact arithmetic.
pub const EXACT_CAP: usize = 1024;
/// Largest graph accepted by [`betweenness_bruteforce`].
pub const BRUTEFORCE_CAP: usize = 64;
/// Sources whose dependencies are computed before they are summed.
const CHUNK: usize = 256;

/// Shortest-path counts and dependencies from one source.
#[derive(Clone, Debug, PartialEq)]
pub struct PathCounts {
    pub source: usize,
    /// `σ[y]`: shortest paths from the source to `y` (0 if unreachable).
    pub sigma: Vec<f64>,
    /// `d(source, y)`, `None` if unreachable.
    pub dist: Vec<Option<u32>>,
    /// `δ[y] = Σ_z σ_{source,z}(y) / σ_{source,z}`.
    pub delta: Vec<f64>,
}

impl PathCounts {
    pub fn from_source(g: &Graph, source: usize) -> Result<Self> {
        g.check_node(source)?;
        let n = g.num_nodes();
        let mut bfs = Bfs::new(n);
        let (sigma, delta) = dependencies_f64(&mut bfs, g, source);
        let dist = (0..n).map(|y| bfs.distance(y)).collect();
        Ok(Self {
            source,
            sigma,
            dist,
            delta,
        })
    }
}

fn on_dag(bfs: &Bfs, u: usize, v: usize) -> bool {
    matches!((bfs.distance(u), bfs.distance(v)), (Some(a), Some(b)) if b == a + 1)
}

fn dependencies_f64(bfs: &mut Bfs, g: &Graph, s: usize) -> (Vec<f64>, Vec<f64>) {
    let n = g.num_nodes();
    let order: Vec<usize> = bfs.run(g, s, Direction::Forward).to_vec();
    let mut sigma = alloc::vec![0.0; n];
    sigma[s] = 1.0;
    for &u in &order {
        for &v in g.successors(u) {
            if on_dag(bfs, u, v) {
                sigma[v] += sigma[u];
            }
        }
    }
    let mut delta = alloc::vec![0.0; n];
    for &w in order.iter().rev() {
        for &v in g.predecessors(w) {
            if on_dag(bfs, v, w) {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
        }
    }
    (sigma, delta)
}

fn dependencies_exact(bfs: &mut Bfs, g: &Graph, s: usize) -> Result<Vec<Rational>> {
    let n = g.num_nodes();
    let order: Vec<usize> = bfs.run(g, s, Direction::Forward).to_vec();
    let mut sigma = alloc::vec![0u128; n];
    sigma[s] = 1;
    for &u in &order {
        for &v in g.successors(u) {
            if on_dag(bfs, u, v) {
                sigma[v] = sigma[v].checked_add(sigma[u]).ok_or(Error::Overflow)?;
            }
        }
    }
    let as_int = |c: u128| i128::try_from(c).map_err(|_| Error::Overflow);
    let mut delta = alloc::vec![exact::int(0); n];
    for &w in order.iter().rev() {
        let carried = exact::add(&exact::int(1), &delta[w])?;
        let sw = as_int(sigma[w])?;
        for &v in g.predecessors(w) {
            if on_dag(bfs, v, w) {
                let share = exact::mul(&exact::frac(as_int(sigma[v])?, sw), &carried)?;
                delta[v] = exact::add(&delta[v], &share)?;
            }
        }
    }
    Ok(delta)
}

/// Betweenness in exact arithmetic, by dependency accumulation.
pub fn betweenness_exact(g: &Graph) -> Result<Vec<Rational>> {
    let n = g.num_nodes();
    let mut bfs = Bfs::new(n);
    let mut total = alloc::vec![exact::int(0); n];
    for s in 0..n {
        let delta = dependencies_exact(&mut bfs, g, s)?;
        for x in (0..n).filter(|&x| x != s) {
            total[x] = exact::add(&total[x], &delta[x])?;
        }
    }
    Ok(total)
}

fn betweenness_f64(g: &Graph) -> Vec<f64> {
    let n = g.num_nodes();
    let mut total = alloc::vec![0.0; n];
    for start in (0..n).step_by(CHUNK) {
        let len = CHUNK.min(n - start);
        let chunk = par::map_nodes(len, |i| {
            let mut bfs = Bfs::new(n);
            dependencies_f64(&mut bfs, g, start + i).1
        });
        // Summed in source order, whatever the scheduling.
        for (i, delta) in chunk.iter().enumerate() {
            for x in (0..n).filter(|&x| x != start + i) {
                total[x] += delta[x];
            }
        }
    }
    total
}

/// Betweenness centrality.
///
/// Graphs with at most [`EXACT_CAP`] nodes are computed exactly and then
/// rounded, falling back to floating point if path counts overflow.
pub fn betweenness(g: &Graph) -> ScoreVector {
    let scores = if g.num_nodes() <= EXACT_CAP {
        match betweenness_exact(g) {
            Ok(exact) => exact.iter().map(exact::to_f64).collect(),
            Err(_) => betweenness_f64(g),
        }
    } else {
        betweenness_f64(g)
    };
    ScoreVector::raw(Measure::Betweenness, scores)
}

/// Betweenness by walking every shortest path of every ordered pair.
///
/// Exponential in the worst case; limited to [`BRUTEFORCE_CAP`] nodes.
pub fn betweenness_bruteforce(g: &Graph) -> Result<Vec<Rational>> {
    let n = g.num_nodes();
    if n > BRUTEFORCE_CAP {
        return Err(Error::TooLarge {
            n,
            cap: BRUTEFORCE_CAP,
        });
    }
    let mut total = alloc::vec![exact::int(0); n];
    let mut from = Bfs::new(n);
    let mut path = Vec::new();
    for y in 0..n {
        from.run(g, y, Direction::Forward);
        for z in (0..n).filter(|&z| z != y) {
            let Some(target) = from.distance(z) else { continue };
            // Depth-first walk of the shortest-path DAG from y to z.
            let mut through = alloc::vec![0i128; n];
            let mut paths = 0i128;
            let mut stack = alloc::vec![(y, 0usize)];
            path.clear();
            path.push(y);
            while let Some(&(u, next)) = stack.last() {
                if u == z {
                    paths += 1;
                    for &x in &path[1..path.len() - 1] {
                        through[x] += 1;
                    }
                    stack.pop();
                    path.pop();
                    continue;
                }
                let succ = g.successors(u);
                let du = from.distance(u).unwrap();
                let step = succ[next..]
                    .iter()
                    .position(|&v| du < target && from.distance(v) == Some(du + 1));
                match step {
                    Some(i) => {
                        let v = succ[next + i];
                        stack.last_mut().unwrap().1 = next + i + 1;
                        stack.push((v, 0));
                        path.push(v);
                    }
                    None => {
                        stack.pop();
                        path.pop();
                    }
                }
            }
            for x in 0..n {
                if through[x] > 0 {
                    total[x] = exact::add(&total[x], &exact::frac(through[x], paths))?;
                }
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{gen_d, gen_s};
    use crate::exact::int;

    #[test]
    fn directed_four_cycle() {
        let g = Graph::from_arcs(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        assert_eq!(betweenness(&g).scores, [3.0; 4]);
        assert_eq!(betweenness_bruteforce(&g).unwrap(), [int(3); 4]);
    }

    #[test]
    fn symmetric_star() {
        let q = 5;
        let g = Graph::from_arcs(q + 1, (1..=q).flat_map(|i| [(0, i), (i, 0)])).unwrap();
        let b = betweenness_bruteforce(&g).unwrap();
        assert_eq!(b[0], int((q * (q - 1)) as i128));
        assert!(b[1..].iter().all(|v| *v == int(0)));
        assert_eq!(betweenness(&g).get(0), (q * (q - 1)) as f64);
    }

    #[test]
    fn split_paths_share_the_credit() {
        // 0 → {1, 2} → 3: nodes 1 and 2 each carry half of the pair (0, 3).
        let g = Graph::from_arcs(4, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let b = betweenness_exact(&g).unwrap();
        assert_eq!(b, [int(0), exact::frac(1, 2), exact::frac(1, 2), int(0)]);
        assert_eq!(betweenness_bruteforce(&g).unwrap(), b);
        let counts = PathCounts::from_source(&g, 0).unwrap();
        assert_eq!(counts.sigma, [1.0, 1.0, 1.0, 2.0]);
        assert_eq!(counts.dist[3], Some(2));
    }

    #[test]
    fn clique_plus_cycle_and_bridged() {
        let (k, p) = (5, 7);
        let b = betweenness_exact(&gen_s(k, p).unwrap()).unwrap();
        assert_eq!(b[0], int(0));
        assert_eq!(b[k], int(15));
        let b = betweenness_exact(&gen_d(k, p).unwrap()).unwrap();
        assert_eq!(b[0], int(56));
        assert_eq!(b[k], int(2 * 5 * 6 + 15));
        assert_eq!(b[1], int(0));
    }

    #[test]
    fn float_and_exact_paths_agree() {
        let g = gen_d(6, 9).unwrap();
        let exact: Vec<f64> = betweenness_exact(&g).unwrap().iter().map(exact::to_f64).collect();
        let float = betweenness_f64(&g);
        for (a, b) in exact.iter().zip(&float) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn bruteforce_cap() {
        assert!(matches!(
            betweenness_bruteforce(&Graph::empty(65)),
            Err(Error::TooLarge { n: 65, cap: 64 })
        ));
    }
}
