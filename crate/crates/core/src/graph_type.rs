//! Dynkin and extended Dynkin recognition of the underlying graph of a quiver.

use std::fmt;

use crate::quiver::Quiver;

/// `Ã_n` is the cycle on `n+1` vertices and `D̃_n` has `n+1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphType {
    A(usize),
    ATilde(usize),
    D(usize),
    E6,
    E7,
    E8,
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    Other,
}

impl GraphType {
    pub fn is_dynkin(self) -> bool {
        matches!(
            self,
            GraphType::A(_) | GraphType::D(_) | GraphType::E6 | GraphType::E7 | GraphType::E8
        )
    }

    pub fn is_extended_dynkin(self) -> bool {
        matches!(
            self,
            GraphType::ATilde(_)
                | GraphType::DTilde(_)
                | GraphType::E6Tilde
                | GraphType::E7Tilde
                | GraphType::E8Tilde
        )
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphType::A(n) => write!(f, "A_{n}"),
            GraphType::ATilde(n) => write!(f, "Ã_{n}"),
            GraphType::D(n) => write!(f, "D_{n}"),
            GraphType::E6 => f.write_str("E6"),
            GraphType::E7 => f.write_str("E7"),
            GraphType::E8 => f.write_str("E8"),
            GraphType::DTilde(n) => write!(f, "D̃_{n}"),
            GraphType::E6Tilde => f.write_str("Ẽ6"),
            GraphType::E7Tilde => f.write_str("Ẽ7"),
            GraphType::E8Tilde => f.write_str("Ẽ8"),
            GraphType::Other => f.write_str("other"),
        }
    }
}

/// Classifies the underlying undirected multigraph of `q`.
pub fn classify_graph(q: &Quiver) -> GraphType {
    let n = q.vertex_count();
    let m = q.arrow_count();
    if n == 0 || !q.is_connected() || q.has_loops() {
        return GraphType::Other;
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for a in q.arrows() {
        adj[a.source.0].push(a.target.0);
        adj[a.target.0].push(a.source.0);
    }
    if q.has_parallel_arrows() || has_antiparallel(q) {
        // the only multigraph in the list is the double edge
        return if n == 2 && m == 2 {
            GraphType::ATilde(1)
        } else {
            GraphType::Other
        };
    }
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    if m == n {
        return if deg.iter().all(|&d| d == 2) {
            GraphType::ATilde(n - 1)
        } else {
            GraphType::Other
        };
    }
    if m + 1 != n {
        return GraphType::Other;
    }
    let branches: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branches.as_slice() {
        [] => GraphType::A(n),
        [c] => {
            let mut legs: Vec<usize> = adj[*c].iter().map(|&u| leg_length(&adj, *c, u)).collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, 1, 1] => GraphType::DTilde(4),
                [1, 1, k] => GraphType::D(k + 3),
                [1, 2, 2] => GraphType::E6,
                [1, 2, 3] => GraphType::E7,
                [1, 2, 4] => GraphType::E8,
                [2, 2, 2] => GraphType::E6Tilde,
                [1, 3, 3] => GraphType::E7Tilde,
                [1, 2, 5] => GraphType::E8Tilde,
                _ => GraphType::Other,
            }
        }
        [x, y] if deg[*x] == 3 && deg[*y] == 3 => {
            let leaves = |c: usize| adj[c].iter().filter(|&&u| deg[u] == 1).count();
            if leaves(*x) == 2 && leaves(*y) == 2 {
                GraphType::DTilde(n - 1)
            } else {
                GraphType::Other
            }
        }
        _ => GraphType::Other,
    }
}

fn has_antiparallel(q: &Quiver) -> bool {
    let mut seen = std::collections::BTreeSet::new();
    q.arrows().iter().any(|a| {
        let key = (a.source.min(a.target), a.source.max(a.target));
        !seen.insert(key)
    })
}

/// Number of vertices on the branch starting at `first`, walking away from `hub`
/// while degrees stay at 2; `usize::MAX` if another branch vertex is reached.
fn leg_length(adj: &[Vec<usize>], hub: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (hub, first, 1);
    loop {
        match adj[cur].len() {
            1 => return len,
            2 => {
                let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                prev = cur;
                cur = next;
                len += 1;
            }
            _ => return usize::MAX,
        }
    }
}
