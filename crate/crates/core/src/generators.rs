//! Standard graph families, the three 2-moplex gadget constructions, and
//! deterministic test corpora.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::classes::clique_bipartition;
use crate::moplex::moplexes;
use crate::orderings::{is_umbrella_free, VertexOrdering};
use crate::set::VertexSet;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `C_n` for `n ≥ 3`; smaller `n` gives the path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, edges).expect("valid cycle")
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("valid complete graph")
}

/// `K_{1,m}`: center 0, leaves `1..=m`.
pub fn star(m: usize) -> Graph {
    Graph::from_edges(m + 1, (1..=m).map(|i| (0, i))).expect("valid star")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Embed,
    MaxCut,
    Gi,
}

/// A gadget graph together with the role of each of its vertices.
///
/// Original vertices are named `v<id>`; the remaining names are
/// construction-specific (`u`, `w`, `a1`, `b1`, `a*`, `b*`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetOutput {
    pub kind: GadgetKind,
    pub graph: Graph,
    pub roles: BTreeMap<String, usize>,
}

impl GadgetOutput {
    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.get(name).copied()
    }

    /// Ids of the original vertices, indexed by original id.
    pub fn originals(&self) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = self
            .roles
            .iter()
            .filter_map(|(name, &id)| original_index(name).map(|v| (v, id)))
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, id)| id).collect()
    }

    /// See [`check_gadget`].
    pub fn check(&self, input: &Graph) -> Result<()> {
        check_gadget(self.kind, &self.graph, &self.roles, input)
    }
}

fn original_index(name: &str) -> Option<usize> {
    name.strip_prefix('v')?.parse().ok()
}

/// Checks a gadget against the input it was built from: the role map is a
/// bijection onto `V(graph)`, the original vertices carry the input edges
/// (plus the two side cliques for [`GadgetKind::Gi`]), and the gadget is
/// connected with moplexes exactly `{u}` and `{w}`, cobipartite for the
/// Max-Cut and isomorphism gadgets.
pub fn check_gadget(
    kind: GadgetKind,
    graph: &Graph,
    roles: &BTreeMap<String, usize>,
    input: &Graph,
) -> Result<()> {
    let n = graph.vertex_count();
    let mut seen = VertexSet::empty(n);
    for (name, &id) in roles {
        if id >= n {
            return Err(Error::Violation(format!("role {name} maps to missing vertex {id}")));
        }
        if seen.contains(id) {
            return Err(Error::Violation(format!("vertex {id} has two roles")));
        }
        seen.insert(id);
    }
    if seen.len() != n {
        return Err(Error::Violation(format!(
            "role map covers {} of {n} vertices",
            seen.len()
        )));
    }
    let m = input.vertex_count();
    let mut ids = Vec::with_capacity(m);
    for v in 0..m {
        match roles.get(&format!("v{v}")) {
            Some(&id) => ids.push(id),
            None => return Err(Error::Violation(format!("original vertex {v} has no role"))),
        }
    }
    if roles.keys().filter_map(|k| original_index(k)).any(|v| v >= m) {
        return Err(Error::Violation("role map names extra original vertices".into()));
    }
    let (u, w) = match (roles.get("u"), roles.get("w")) {
        (Some(&u), Some(&w)) => (u, w),
        _ => return Err(Error::Violation("role map lacks u or w".into())),
    };
    for x in 0..m {
        for y in x + 1..m {
            let same_side = graph.has_edge(u, ids[x]) == graph.has_edge(u, ids[y]);
            let expected = input.has_edge(x, y) || (kind == GadgetKind::Gi && same_side);
            if expected != graph.has_edge(ids[x], ids[y]) {
                return Err(Error::Violation(format!(
                    "original pair {x},{y} has the wrong adjacency"
                )));
            }
        }
    }
    if !graph.is_connected() {
        return Err(Error::Violation("gadget is disconnected".into()));
    }
    let found: Vec<VertexSet> = moplexes(graph).into_iter().map(|m| m.vertices).collect();
    let expected = vec![VertexSet::singleton(n, u.min(w)), VertexSet::singleton(n, u.max(w))];
    if found != expected {
        return Err(Error::Violation(format!(
            "gadget moplexes are {found:?}, expected {{u}} and {{w}}"
        )));
    }
    if kind != GadgetKind::Embed && clique_bipartition(graph).is_none() {
        return Err(Error::Violation("gadget is not cobipartite".into()));
    }
    Ok(())
}

struct Builder {
    edges: Vec<(usize, usize)>,
    roles: BTreeMap<String, usize>,
    next: usize,
}

impl Builder {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        Builder {
            edges: g.edges().collect(),
            roles: (0..n).map(|v| (format!("v{v}"), v)).collect(),
            next: n,
        }
    }

    fn add(&mut self, role: String) -> usize {
        let id = self.next;
        self.next += 1;
        self.roles.insert(role, id);
        id
    }

    fn join(&mut self, xs: &[usize], ys: &[usize]) {
        for &x in xs {
            for &y in ys {
                self.edges.push((x.min(y), x.max(y)));
            }
        }
    }

    fn clique(&mut self, xs: &[usize]) {
        for (i, &x) in xs.iter().enumerate() {
            for &y in &xs[i + 1..] {
                self.edges.push((x.min(y), x.max(y)));
            }
        }
    }

    fn finish(self, kind: GadgetKind) -> GadgetOutput {
        let unique: BTreeSet<(usize, usize)> = self.edges.into_iter().collect();
        let graph = Graph::from_edges(self.next, unique).expect("gadget edges are valid");
        GadgetOutput {
            kind,
            graph,
            roles: self.roles,
        }
    }
}

/// Embeds `g` as an induced subgraph of a connected graph whose only
/// moplexes are `{u}` and `{w}`.
///
/// With `v_1..v_n` the vertices in `sigma` order, adds cliques
/// `{u, a_1..a_n}` and `{w, b_1..b_n}`, and edges `a_i v_j` and `v_i b_j`
/// for `i ≤ j`.
pub fn embed_in_2moplex(g: &Graph, sigma: &VertexOrdering) -> Result<GadgetOutput> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if sigma.len() != n {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} vertices, graph has {n}",
            sigma.len()
        )));
    }
    if let Some(v) = is_umbrella_free(g, sigma) {
        return Err(Error::Umbrella { x: v.x, y: v.y, z: v.z });
    }
    let mut b = Builder::new(g);
    let a: Vec<usize> = (1..=n).map(|i| b.add(format!("a{i}"))).collect();
    let bs: Vec<usize> = (1..=n).map(|i| b.add(format!("b{i}"))).collect();
    let u = b.add("u".into());
    let w = b.add("w".into());
    let v = sigma.sequence();
    for i in 0..n {
        b.join(&[a[i]], &v[i..]);
        b.join(&v[..=i], &[bs[i]]);
    }
    b.clique(&[&a[..], &[u]].concat());
    b.clique(&[&bs[..], &[w]].concat());
    Ok(b.finish(GadgetKind::Embed))
}

fn check_clique_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    g.check_set(a)?;
    g.check_set(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::InvalidPartition("both sides must be non-empty".into()));
    }
    if a.intersects(b) || (a | b) != g.vertices() {
        return Err(Error::InvalidPartition("sides must partition the vertex set".into()));
    }
    Ok(())
}

/// Cobipartite gadget for the Max-Cut reduction: copies `A′` of `A` and
/// `B′` of `B`, cliques `{u} ∪ A ∪ A′` and `{w} ∪ B ∪ B′`, with `a*` joined
/// to `B ∪ B′` and `b*` joined to `A ∪ A′`.
pub fn maxcut_gadget(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<GadgetOutput> {
    check_clique_partition(g, a, b)?;
    if !g.is_clique(a) || !g.is_clique(b) {
        return Err(Error::InvalidPartition("sides must be cliques".into()));
    }
    let mut bl = Builder::new(g);
    let a_copy: Vec<usize> = (1..=a.len())
        .map(|i| bl.add(if i == 1 { "a*".into() } else { format!("a'{i}") }))
        .collect();
    let b_copy: Vec<usize> = (1..=b.len())
        .map(|i| bl.add(if i == 1 { "b*".into() } else { format!("b'{i}") }))
        .collect();
    let u = bl.add("u".into());
    let w = bl.add("w".into());
    let a_side = [a.to_vec(), a_copy.clone(), vec![u]].concat();
    let b_side = [b.to_vec(), b_copy.clone(), vec![w]].concat();
    bl.clique(&a_side);
    bl.clique(&b_side);
    bl.join(&[a_copy[0]], &[b.to_vec(), b_copy.clone()].concat());
    bl.join(&[b_copy[0]], &[a.to_vec(), a_copy].concat());
    Ok(bl.finish(GadgetKind::MaxCut))
}

/// Cobipartite gadget for the isomorphism reduction: makes both colour
/// classes of the connected bipartite `g` into cliques, with `u` joined to `A`
/// and `w` joined to `B`.
pub fn gi_gadget(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<GadgetOutput> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_clique_partition(g, a, b)?;
    if !g.is_independent_set(a) || !g.is_independent_set(b) {
        return Err(Error::InvalidPartition("sides must be independent".into()));
    }
    let mut bl = Builder::new(g);
    let u = bl.add("u".into());
    let w = bl.add("w".into());
    bl.clique(&[a.to_vec(), vec![u]].concat());
    bl.clique(&[b.to_vec(), vec![w]].concat());
    Ok(bl.finish(GadgetKind::Gi))
}

/// Largest `n` accepted by [`CorpusKind::AllLabeled`].
pub const ALL_LABELED_MAX: usize = 7;
/// Largest `n` accepted by [`CorpusKind::ConnectedUnlabeled`].
pub const CONNECTED_UNLABELED_MAX: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub enum CorpusKind {
    /// Every graph on vertex set `0..n`, in edge-mask order.
    AllLabeled { n: usize },
    /// One representative per isomorphism class of connected graphs on `n`
    /// vertices.
    ConnectedUnlabeled { n: usize },
    /// `G(n, p)` samples.
    Random { n: usize, p: f64, seed: u64, count: usize },
    Paths { n: usize },
    Cycles { n: usize },
    Stars { m: usize },
    /// Two cliques whose cross adjacency is nested.
    CochainRandom { n: usize, seed: u64, count: usize },
    /// Two cliques with random cross edges.
    CobipartiteRandom { n: usize, p: f64, seed: u64, count: usize },
    /// Connected bipartite graphs: a random spanning tree across a random
    /// bipartition plus random cross edges.
    BipartiteConnectedRandom { n: usize, p: f64, seed: u64, count: usize },
}

pub type GraphStream = Box<dyn Iterator<Item = Graph>>;

pub fn corpus(kind: &CorpusKind) -> Result<GraphStream> {
    Ok(match *kind {
        CorpusKind::AllLabeled { n } => Box::new(all_labeled(n)?),
        CorpusKind::ConnectedUnlabeled { n } => Box::new(connected_unlabeled(n)?.into_iter()),
        CorpusKind::Random { n, p, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).map(move |_| random_graph(&mut rng, n, p)))
        }
        CorpusKind::Paths { n } => Box::new(std::iter::once(path(n))),
        CorpusKind::Cycles { n } => Box::new(std::iter::once(cycle(n))),
        CorpusKind::Stars { m } => Box::new(std::iter::once(star(m))),
        CorpusKind::CochainRandom { n, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).map(move |_| random_cochain(&mut rng, n).0))
        }
        CorpusKind::CobipartiteRandom { n, p, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).map(move |_| random_cobipartite(&mut rng, n, p).0))
        }
        CorpusKind::BipartiteConnectedRandom { n, p, seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Box::new((0..count).map(move |_| random_connected_bipartite(&mut rng, n, p).0))
        }
    })
}

/// Every labeled graph on `n ≤ 7` vertices.
pub fn all_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > ALL_LABELED_MAX {
        return Err(Error::ResourceLimit {
            what: "all-labeled corpus vertex count",
            n,
            max: ALL_LABELED_MAX,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    Graph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e),
    )
    .expect("valid edges")
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_split<R: Rng>(rng: &mut R, n: usize) -> (VertexSet, VertexSet) {
    let a = VertexSet::from_vertices(n, (0..n).filter(|_| rng.random_bool(0.5)));
    let b = a.complement();
    (a, b)
}

/// A cochain graph on cliques `X`, `Y`: each `x ∈ X` gets a threshold and is
/// adjacent to the first that many vertices of `Y`.
pub fn random_cochain<R: Rng>(rng: &mut R, n: usize) -> (Graph, VertexSet, VertexSet) {
    let (x, y) = random_split(rng, n);
    let ys = y.to_vec();
    let mut g = Graph::empty(n);
    for side in [&x, &y] {
        let vs = side.to_vec();
        for (i, &p) in vs.iter().enumerate() {
            for &q in &vs[i + 1..] {
                g.add_edge(p, q);
            }
        }
    }
    for p in &x {
        let t = rng.random_range(0..=ys.len());
        for &q in &ys[..t] {
            g.add_edge(p, q);
        }
    }
    (g, x, y)
}

/// Two random cliques `A`, `B` with each cross pair present with
/// probability `p`.
pub fn random_cobipartite<R: Rng>(rng: &mut R, n: usize, p: f64) -> (Graph, VertexSet, VertexSet) {
    let (a, b) = random_split(rng, n);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let same = a.contains(u) == a.contains(v);
            if same || rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    (g, a, b)
}

/// A connected bipartite graph on `n ≥ 2` vertices with both sides non-empty.
pub fn random_connected_bipartite<R: Rng>(
    rng: &mut R,
    n: usize,
    p: f64,
) -> (Graph, VertexSet, VertexSet) {
    assert!(n >= 2, "a connected bipartite graph with two sides needs two vertices");
    let mut side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
    side[0] = false;
    if side.iter().all(|&s| !s) {
        side[rng.random_range(1..n)] = true;
    }
    let mut g = Graph::empty(n);
    // Attach vertices one by one to an opposite-side vertex already placed,
    // placing the two sides alternately so that one always exists.
    let (mut left, mut right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| !side[v]);
    let mut placed_left = vec![left.remove(0)];
    let mut placed_right = vec![right.remove(0)];
    let anchor = placed_left[0];
    g.add_edge(anchor, placed_right[0]);
    for v in left {
        let t = placed_right[rng.random_range(0..placed_right.len())];
        g.add_edge(v, t);
        placed_left.push(v);
    }
    for v in right {
        let t = placed_left[rng.random_range(0..placed_left.len())];
        g.add_edge(v, t);
        placed_right.push(v);
    }
    for &l in &placed_left {
        for &r in &placed_right {
            if rng.random_bool(p) {
                g.add_edge(l, r);
            }
        }
    }
    let a = VertexSet::from_vertices(n, placed_left);
    let b = a.complement();
    (g, a, b)
}

/// Representatives of the isomorphism classes of connected graphs on `n ≤ 8`
/// vertices, grown one vertex at a time from `K_1` and deduplicated by
/// canonical form.
pub fn connected_unlabeled(n: usize) -> Result<Vec<Graph>> {
    if n > CONNECTED_UNLABELED_MAX {
        return Err(Error::ResourceLimit {
            what: "connected unlabeled corpus vertex count",
            n,
            max: CONNECTED_UNLABELED_MAX,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u64..1 << k {
                let mut h = Graph::from_adjacency(
                    (0..=k)
                        .map(|v| {
                            let mut row = VertexSet::empty(k + 1);
                            if v < k {
                                for w in g.adj(v) {
                                    row.insert(w);
                                }
                            }
                            row
                        })
                        .collect(),
                )
                .expect("symmetric adjacency");
                for v in (0..k).filter(|v| mask >> v & 1 == 1) {
                    h.add_edge(v, k);
                }
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Lexicographically smallest upper-triangle adjacency code over the vertex
/// orders compatible with the color-refinement partition. Equal codes mean
/// isomorphic graphs. Requires `n ≤ 11`.
pub fn canonical_code(g: &Graph) -> (usize, u64) {
    let n = g.vertex_count();
    assert!(n * n.saturating_sub(1) / 2 <= 64, "canonical code supports n ≤ 11");
    let colors = refine_colors(g);
    let mut slots: Vec<usize> = colors.clone();
    slots.sort_unstable();
    let mut search = CanonSearch {
        g,
        colors: &colors,
        slots: &slots,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    search.run(0);
    (n, search.best.expect("at least one order").1)
}

/// Stable coloring by iterated neighbor-color multisets; colors are ranks of
/// labeling-independent signatures.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.adj(v).iter().map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| rank[s]).collect();
        let before = colors.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        colors = next;
        if after == before {
            return colors;
        }
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    slots: &'a [usize],
    order: Vec<usize>,
    used: Vec<bool>,
    /// Best (bit length, code) found so far.
    best: Option<(u32, u64)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, code: u64) {
        let p = self.order.len();
        let n = self.slots.len();
        let bits = (p * p.saturating_sub(1) / 2) as u32;
        if let Some((total, best)) = self.best {
            let prefix = if total == 0 { 0 } else { best >> (total - bits) };
            if code > prefix {
                return;
            }
        }
        if p == n {
            if self.best.is_none_or(|(_, b)| code < b) {
                self.best = Some((bits, code));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colors[v] != self.slots[p] {
                continue;
            }
            let mut c = code;
            for &q in &self.order {
                c = c << 1 | self.g.has_edge(v, q) as u64;
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(c);
            self.order.pop();
            self.used[v] = false;
        }
    }
}
