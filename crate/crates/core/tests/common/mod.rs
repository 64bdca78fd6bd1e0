#![allow(dead_code)]

use moplex_core::generators::{all_labeled, connected_unlabeled};
use moplex_core::Graph;

/// Every labeled graph on 1..=max_n vertices.
pub fn labeled_upto(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| all_labeled(n).expect("within corpus limit"))
}

/// One connected graph per isomorphism class on 1..=max_n vertices.
pub fn connected_upto(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| connected_unlabeled(n).expect("within corpus limit"))
        .collect()
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Whether `x` reaches `y` inside the vertex mask `within`.
pub fn reaches(g: &Graph, within: u64, x: usize, y: usize) -> bool {
    let mut seen = 1u64 << x;
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        if v == y {
            return true;
        }
        for w in 0..g.vertex_count() {
            if within >> w & 1 == 1 && seen >> w & 1 == 0 && g.has_edge(v, w) {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    false
}

pub fn closed_mask(g: &Graph, v: usize) -> u64 {
    (0..g.vertex_count())
        .filter(|&w| w == v || g.has_edge(v, w))
        .fold(0, |m, w| m | 1 << w)
}

pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}
