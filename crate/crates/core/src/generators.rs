//! Named graphs, random girth-5 graphs, and exhaustive small-graph
//! enumeration.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry;

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("static construction is a simple graph")
}

/// Path on `n >= 1` vertices, `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Precondition("a path needs at least one vertex".into()));
    }
    Ok(build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()))
}

/// Cycle on `n >= 3` vertices in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition("a cycle needs at least 3 vertices".into()));
    }
    Ok(build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()))
}

/// Star on `n >= 2` vertices: center 0 joined to `1..n`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Precondition("a star needs at least 2 vertices".into()));
    }
    Ok(build(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()))
}

/// Generalized Petersen graph: outer cycle `0..k`, spokes `i ~ k + i`,
/// inner edges `k + i ~ k + (i + step) mod k`.
pub fn generalized_petersen(k: usize, step: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((i, k + i));
        edges.push((k + i, k + (i + step) % k));
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    build(2 * k, &edges)
}

/// Hamiltonian cycle `0..n` plus chords `i ~ i + pattern[i mod len]`.
pub fn lcf(n: usize, pattern: &[isize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        let j = (i as isize + pattern[i % pattern.len()]).rem_euclid(n as isize) as usize;
        edges.push((i, j));
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    build(n, &edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

/// The Petersen graph as the Kneser graph K(5, 2): 2-subsets of a 5-set,
/// adjacent when disjoint.
pub fn kneser_petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                edges.push((i, j));
            }
        }
    }
    build(10, &edges)
}

pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}

pub fn desargues() -> Graph {
    generalized_petersen(10, 3)
}

pub fn pappus() -> Graph {
    lcf(18, &[5, 7, -7, 7, -7, -5])
}

pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7])
}

pub fn tutte_coxeter() -> Graph {
    lcf(30, &[-13, -9, 7, -7, 9, 13])
}

/// The (4,5)-cage on 19 vertices.
pub fn robertson() -> Graph {
    lcf(19, &[8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4])
}

/// Hoffman–Singleton graph from five pentagons `P_h` and five pentagrams
/// `Q_i`: `P_h[j] ~ P_h[j+1]`, `Q_i[j] ~ Q_i[j+2]`, `P_h[j] ~ Q_i[h i + j]`
/// (indices mod 5). `P_h[j]` is vertex `5h + j`, `Q_i[j]` is `25 + 5i + j`.
pub fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
            for i in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    build(50, &edges)
}

/// Random tree on `n` vertices with maximum degree at most `max_degree`:
/// vertex `i` attaches to a uniform earlier vertex with spare degree.
pub fn random_tree(n: usize, max_degree: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n == 0 || (n > 2 && max_degree < 2) || (n == 2 && max_degree < 1) {
        return Err(Error::Precondition(format!(
            "no tree on {n} vertices with max degree {max_degree}"
        )));
    }
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let open: Vec<usize> = (0..i).filter(|&u| degree[u] < max_degree).collect();
        let &u = open.choose(rng).expect("a path always leaves an open vertex");
        degree[u] += 1;
        degree[i] += 1;
        edges.push((u, i));
    }
    Graph::from_edges(n, &edges)
}

/// Random connected graph with girth at least 5 and maximum degree at most
/// `max_degree`: a random tree, then random non-edges `uv` with
/// `dist(u, v) >= 4` added while degrees allow, until a full pass over the
/// shuffled candidates adds nothing or the attempt budget runs out.
pub fn random_girth5(n: usize, max_degree: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree(n, max_degree, &mut rng)?;
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    let mut g = tree;
    let mut budget = 20 * n * n;
    loop {
        let mut candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v) && g.degree(u) < max_degree && g.degree(v) < max_degree)
            .collect();
        candidates.shuffle(&mut rng);
        let mut added = false;
        for (u, v) in candidates {
            if budget == 0 {
                return Ok(g);
            }
            budget -= 1;
            if g.degree(u) >= max_degree || g.degree(v) >= max_degree {
                continue;
            }
            if g.distances(u)[v].is_none_or(|d| d >= 4) {
                edges.push((u, v));
                g = Graph::from_edges(n, &edges)?;
                added = true;
            }
        }
        if !added {
            return Ok(g);
        }
    }
}

/// All connected graphs on `n` vertices with girth at least 5, one per
/// isomorphism class. Edge sets are enumerated in lexicographic order and
/// cut as soon as an edge would close a cycle shorter than 5.
pub fn connected_girth5_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut reps: Vec<(Vec<usize>, Graph)> = Vec::new();
    let mut chosen = Vec::new();
    enumerate_edges(n, &pairs, 0, &mut chosen, &mut reps);
    reps.into_iter().map(|(_, g)| g).collect()
}

fn enumerate_edges(
    n: usize,
    pairs: &[(usize, usize)],
    next: usize,
    chosen: &mut Vec<(usize, usize)>,
    reps: &mut Vec<(Vec<usize>, Graph)>,
) {
    let g = build(n, chosen);
    if next == pairs.len() {
        if g.is_connected() {
            let key = invariant_key(&g);
            let known = reps
                .iter()
                .filter(|(k, _)| *k == key)
                .any(|(_, h)| symmetry::find_isomorphism(&g, h).ok().flatten().is_some());
            if !known {
                reps.push((key, g));
            }
        }
        return;
    }
    enumerate_edges(n, pairs, next + 1, chosen, reps);
    let (u, v) = pairs[next];
    if g.distances(u)[v].is_none_or(|d| d >= 4) {
        chosen.push((u, v));
        enumerate_edges(n, pairs, next + 1, chosen, reps);
        chosen.pop();
    }
}

fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut key = vec![g.edge_count()];
    let mut local: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            around.sort_unstable();
            (g.degree(v), around)
        })
        .collect();
    local.sort_unstable();
    for (d, around) in local {
        key.push(d);
        key.extend(around);
        key.push(usize::MAX);
    }
    key
}

/// Graph families the CLI can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Path,
    Cycle,
    Star,
    RandomTree,
    Petersen,
    Heawood,
    HoffmanSingleton,
    Dodecahedron,
    Pappus,
    Desargues,
    Robertson,
    McGee,
    TutteCoxeter,
    RandomGirth5,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 14] = [
        GeneratorKind::Path,
        GeneratorKind::Cycle,
        GeneratorKind::Star,
        GeneratorKind::RandomTree,
        GeneratorKind::Petersen,
        GeneratorKind::Heawood,
        GeneratorKind::HoffmanSingleton,
        GeneratorKind::Dodecahedron,
        GeneratorKind::Pappus,
        GeneratorKind::Desargues,
        GeneratorKind::Robertson,
        GeneratorKind::McGee,
        GeneratorKind::TutteCoxeter,
        GeneratorKind::RandomGirth5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Path => "path",
            GeneratorKind::Cycle => "cycle",
            GeneratorKind::Star => "star",
            GeneratorKind::RandomTree => "random_tree",
            GeneratorKind::Petersen => "petersen",
            GeneratorKind::Heawood => "heawood",
            GeneratorKind::HoffmanSingleton => "hoffman_singleton",
            GeneratorKind::Dodecahedron => "dodecahedron",
            GeneratorKind::Pappus => "pappus",
            GeneratorKind::Desargues => "desargues",
            GeneratorKind::Robertson => "robertson",
            GeneratorKind::McGee => "mcgee",
            GeneratorKind::TutteCoxeter => "tutte_coxeter",
            GeneratorKind::RandomGirth5 => "random_girth5",
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown graph kind `{s}`"))
    }
}

/// What to generate. `n` is the vertex count for sized families and `d`
/// the degree bound for random ones; named graphs ignore both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub d: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn named(kind: GeneratorKind) -> Self {
        GeneratorSpec {
            kind,
            n: 0,
            d: 0,
            seed: 0,
        }
    }
}

/// Deterministic in `(kind, n, d, seed)`.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let GeneratorSpec { kind, n, d, seed } = *spec;
    match kind {
        GeneratorKind::Path => path(n),
        GeneratorKind::Cycle => cycle(n),
        GeneratorKind::Star => star(n),
        GeneratorKind::RandomTree => random_tree(n, d, &mut ChaCha8Rng::seed_from_u64(seed)),
        GeneratorKind::Petersen => Ok(petersen()),
        GeneratorKind::Heawood => Ok(heawood()),
        GeneratorKind::HoffmanSingleton => Ok(hoffman_singleton()),
        GeneratorKind::Dodecahedron => Ok(dodecahedron()),
        GeneratorKind::Pappus => Ok(pappus()),
        GeneratorKind::Desargues => Ok(desargues()),
        GeneratorKind::Robertson => Ok(robertson()),
        GeneratorKind::McGee => Ok(mcgee()),
        GeneratorKind::TutteCoxeter => Ok(tutte_coxeter()),
        GeneratorKind::RandomGirth5 => random_girth5(n, d, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(g: &Graph) -> (usize, usize, usize, bool, Option<usize>, usize) {
        (
            g.n(),
            g.edge_count(),
            g.max_degree(),
            g.is_regular(),
            g.girth(),
            g.diameter().unwrap(),
        )
    }

    #[test]
    fn named_graph_profiles() {
        assert_eq!(profile(&petersen()), (10, 15, 3, true, Some(5), 2));
        assert_eq!(profile(&kneser_petersen()), (10, 15, 3, true, Some(5), 2));
        assert_eq!(profile(&heawood()), (14, 21, 3, true, Some(6), 3));
        assert_eq!(profile(&dodecahedron()), (20, 30, 3, true, Some(5), 5));
        assert_eq!(profile(&desargues()), (20, 30, 3, true, Some(6), 5));
        assert_eq!(profile(&pappus()), (18, 27, 3, true, Some(6), 4));
        assert_eq!(profile(&mcgee()), (24, 36, 3, true, Some(7), 4));
        assert_eq!(profile(&tutte_coxeter()), (30, 45, 3, true, Some(8), 4));
        assert_eq!(profile(&robertson()), (19, 38, 4, true, Some(5), 3));
        assert_eq!(profile(&hoffman_singleton()), (50, 175, 7, true, Some(5), 2));
    }

    #[test]
    fn random_girth5_contract() {
        for seed in 0..20 {
            let g = random_girth5(20, 4, seed).unwrap();
            assert!(g.is_connected());
            assert!(g.has_girth_at_least_five());
            assert!(g.max_degree() <= 4);
            assert_eq!(g, random_girth5(20, 4, seed).unwrap());
        }
    }

    #[test]
    fn random_tree_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..30 {
            let t = random_tree(n, 3, &mut rng).unwrap();
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected() && t.max_degree() <= 3);
        }
        assert!(random_tree(5, 1, &mut rng).is_err());
    }

    #[test]
    fn small_girth5_census() {
        // Trees on n vertices: 1, 1, 1, 2, 3, 6, 11; plus C5 (n = 5), C6 and
        // C5 with a pendant (n = 6).
        let counts: Vec<usize> = (1..=6).map(|n| connected_girth5_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 8]);
    }

    #[test]
    fn kinds_parse_by_name() {
        for k in GeneratorKind::ALL {
            assert_eq!(k.name().parse::<GeneratorKind>(), Ok(k));
        }
        assert!("k4".parse::<GeneratorKind>().is_err());
    }

    #[test]
    fn invalid_sizes_are_rejected() {
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(star(1).is_err());
    }
}
