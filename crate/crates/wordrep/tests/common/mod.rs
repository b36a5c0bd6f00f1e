//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the search, canonisation or propagation code it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use wordrep_core::Graph;

pub fn graph_a() -> Graph {
    Graph::from_edges(
        7,
        [(1, 2), (1, 3), (1, 6), (2, 4), (2, 5), (3, 7), (4, 7), (5, 7), (6, 7), (3, 4), (4, 5), (5, 6)],
    )
    .unwrap()
}

pub fn graph_m() -> Graph {
    Graph::from_edges(4, [(1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
}

/// Outer 5-cycle 1..5, spokes i–(i+5), inner pentagram.
pub fn petersen() -> Graph {
    Graph::from_edges(
        10,
        [
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 10),
            (6, 8),
            (8, 10),
            (10, 7),
            (7, 9),
            (9, 6),
        ],
    )
    .unwrap()
}

/// All pairs `(u, v)`, `u < v`, on `n` vertices.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

/// Every labelled graph on `1..=n`.
pub fn all_labelled(n: usize) -> Vec<Graph> {
    let pairs = all_pairs(n);
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

pub fn adjacency_matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n + 1]; n + 1];
    for &(u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Isomorphism invariant: the lexicographically smallest row-major
/// adjacency string over all relabellings.
pub fn naive_certificate(g: &Graph) -> Vec<bool> {
    let m = adjacency_matrix(g);
    let n = g.n();
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut s = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    s.push(m[p[i]][p[j]]);
                }
            }
            s
        })
        .min()
        .unwrap()
}

/// Directed cycles by repeatedly deleting sources.
pub fn naive_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut alive: BTreeSet<usize> = (1..=n).collect();
    loop {
        let source = alive.iter().copied().find(|&v| !arcs.iter().any(|&(a, b)| b == v && alive.contains(&a)));
        match source {
            Some(v) => {
                alive.remove(&v);
            }
            None => return alive.is_empty(),
        }
    }
}

/// Semi-transitivity straight from the definition: acyclic, and for every
/// directed path `v1 … vk` with `k >= 4` either `v1 → vk` is absent or
/// `vi → vj` is present for all `i < j`.
pub fn naive_semi_transitive(n: usize, arcs: &[(usize, usize)]) -> bool {
    if !naive_acyclic(n, arcs) {
        return false;
    }
    let mut a = vec![vec![false; n + 1]; n + 1];
    for &(x, y) in arcs {
        a[x][y] = true;
    }
    fn paths(a: &[Vec<bool>], path: &mut Vec<usize>, ok: &mut bool) {
        if !*ok {
            return;
        }
        let k = path.len();
        if k >= 4 && a[path[0]][path[k - 1]] {
            for i in 0..k {
                for j in i + 1..k {
                    if !a[path[i]][path[j]] {
                        *ok = false;
                        return;
                    }
                }
            }
        }
        let last = path[k - 1];
        for w in 1..a.len() {
            if a[last][w] && !path.contains(&w) {
                path.push(w);
                paths(a, path, ok);
                path.pop();
            }
        }
    }
    let mut ok = true;
    for v in 1..=n {
        paths(&a, &mut vec![v], &mut ok);
    }
    ok
}

/// Arcs of the total orientation where bit `i` of `mask` reverses edge `i`.
pub fn arcs_of_mask(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    g.edges().iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }).collect()
}

pub fn naive_count(g: &Graph) -> u64 {
    (0..1u64 << g.edge_count()).filter(|&m| naive_semi_transitive(g.n(), &arcs_of_mask(g, m))).count() as u64
}

/// Naive 4-cycle scan over ordered quadruples, normalised to smallest vertex
/// first and smaller cycle-neighbour second.
pub fn naive_four_cycles(g: &Graph) -> BTreeSet<[usize; 4]> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    let q = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| q[i] != q[j]));
                    if !distinct || !(0..4).all(|i| g.has_edge(q[i], q[(i + 1) % 4])) {
                        continue;
                    }
                    let s = (0..4).min_by_key(|&i| q[i]).unwrap();
                    let fwd = [q[s], q[(s + 1) % 4], q[(s + 2) % 4], q[(s + 3) % 4]];
                    let canon = if fwd[1] < fwd[3] { fwd } else { [fwd[0], fwd[3], fwd[2], fwd[1]] };
                    out.insert(canon);
                }
            }
        }
    }
    out
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Every word with each of `1..=n` occurring exactly `k` times.
pub fn all_uniform_words(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&c| c == 0) {
            out.push(cur.clone());
            return;
        }
        for x in 0..left.len() {
            if left[x] > 0 {
                left[x] -= 1;
                cur.push(x + 1);
                go(left, cur, out);
                cur.pop();
                left[x] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![k; n], &mut Vec::new(), &mut out);
    out
}

/// Alternation straight from the definition.
pub fn naive_alternates(w: &[usize], x: usize, y: usize) -> bool {
    let sub: Vec<usize> = w.iter().copied().filter(|&l| l == x || l == y).collect();
    sub.windows(2).all(|p| p[0] != p[1])
}

pub fn naive_word_graph_matches(w: &[usize], g: &Graph) -> bool {
    all_pairs(g.n()).into_iter().all(|(x, y)| naive_alternates(w, x, y) == g.has_edge(x, y))
}
