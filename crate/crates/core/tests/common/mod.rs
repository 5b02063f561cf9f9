//! Naive reference implementations shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use chibound::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// Every labelled graph on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn code(g: &Graph, perm: &[usize], pairs: &[(usize, usize)]) -> u64 {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| g.has_edge(perm[i], perm[j]))
        .fold(0, |m, (b, _)| m | 1 << b)
}

/// Least edge code over all relabellings; equal iff isomorphic.
pub fn brute_canon(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let pairs = pairs(g.order());
    perms.iter().map(|p| code(g, p, &pairs)).min().unwrap_or(0)
}

pub fn brute_omega(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n)
                .all(|i| s >> i & 1 == 0 || (i + 1..n).all(|j| s >> j & 1 == 0 || g.has_edge(i, j)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every set partition of `0..n` as a restricted growth string.
pub fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(n: usize, cur: &mut Vec<u8>, next: u8, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=next {
            cur.push(c);
            go(n, cur, if c == next { next + 1 } else { next }, out);
            cur.pop();
        }
    }
    go(n, &mut cur, 0, &mut out);
    out
}

pub fn is_proper(g: &Graph, colors: &[u8]) -> bool {
    g.edges().all(|(u, v)| colors[u] != colors[v])
}

pub fn brute_chi(g: &Graph, partitions: &[Vec<u8>]) -> usize {
    partitions
        .iter()
        .filter(|p| is_proper(g, p))
        .map(|p| p.iter().map(|&c| c as usize + 1).max().unwrap_or(0))
        .min()
        .unwrap_or(0)
}

/// Number of proper colorings with colors drawn from `0..k`.
pub fn raw_coloring_count(g: &Graph, k: usize) -> usize {
    let n = g.order();
    let mut colors = vec![0u8; n];
    let mut count = 0;
    loop {
        if is_proper(g, &colors) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            colors[i] += 1;
            if (colors[i] as usize) < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Subset-and-bijection search for an induced copy of `pattern`.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    let (n, k) = (host.order(), pattern.order());
    if k > n {
        return false;
    }
    let perms = permutations(k);
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let verts: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            perms.iter().any(|p| {
                (0..k).all(|i| {
                    (i + 1..k)
                        .all(|j| pattern.has_edge(i, j) == host.has_edge(verts[p[i]], verts[p[j]]))
                })
            })
        })
}

/// All unlabelled graphs on at most `n_max` vertices from the library generator.
pub fn graphs_up_to(n_max: usize) -> Vec<Graph> {
    (1..=n_max)
        .flat_map(|n| chibound::enumerate::all_graphs(n).unwrap())
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Unlabelled graph count by Burnside's lemma over cycle types of `S_n`.
pub fn burnside(n: u64) -> u128 {
    fn parts(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            parts(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut types = Vec::new();
    parts(n, n, &mut Vec::new(), &mut types);
    let fact = |m: u64| (1..=m as u128).product::<u128>();
    let mut total = 0u128;
    for t in types {
        let mut mult: HashMap<u64, u64> = HashMap::new();
        for &k in &t {
            *mult.entry(k).or_default() += 1;
        }
        let class_size = fact(n)
            / mult
                .iter()
                .map(|(&k, &m)| (k as u128).pow(m as u32) * fact(m))
                .product::<u128>();
        let mut orbits = 0u64;
        for (i, &a) in t.iter().enumerate() {
            orbits += a / 2;
            for &b in &t[i + 1..] {
                orbits += gcd(a, b);
            }
        }
        total += class_size << orbits;
    }
    total / fact(n)
}
