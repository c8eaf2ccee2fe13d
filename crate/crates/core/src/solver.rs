//! Colorings with at most `max_degree + 1` colors for connected graphs of
//! girth at least 5 other than the 6-cycle.
//!
//! [`solve`] inspects the graph and picks one construction:
//!
//! 1. paths and cycles: a fixed pattern;
//! 2. a vertex of less than maximum degree: greedy from that vertex;
//! 3. a geodesic `w x1 x2 x3` with `x3` adjacent to some `x` at distance at
//!    least 3 from `w`: greedy with two vertices of color `max_degree + 1`,
//!    told apart by their neighborhood color multisets;
//! 4. maximum degree at least 4 and diameter 3: greedy with a marked vertex
//!    `z1` at level 1 whose child `z2` repeats the root's color;
//! 5. maximum degree at least 4 and diameter 2 (a Moore graph): recurse on
//!    the graph with a closed neighborhood removed;
//! 6. cubic graphs with two neighbors of a common vertex that no
//!    automorphism exchanges: greedy with both neighbors colored 1;
//!    otherwise the graph is the Petersen or Heawood graph and a stored
//!    coloring is transported onto it.
//!
//! Every construction is checked by the exact verifier before it returns.

use std::fmt;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::greedy::{greedy_extend, Choice, Overrides};
use crate::symmetry;
use crate::tree::{BfsTree, TreeDirectives};
use crate::Color;

/// Which construction produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    PathOrCycle,
    Nonregular,
    Geodesic,
    DiameterThree,
    MooreRecursive,
    DissimilarNeighbors,
    Special,
    SixCycle,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::PathOrCycle => "path_or_cycle",
            Branch::Nonregular => "nonregular",
            Branch::Geodesic => "geodesic",
            Branch::DiameterThree => "diameter_three",
            Branch::MooreRecursive => "moore_recursive",
            Branch::DissimilarNeighbors => "dissimilar_neighbors",
            Branch::Special => "special",
            Branch::SixCycle => "c6_extension",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The tree a greedy construction ran on and how many leading vertices of
/// its order the construction fixes directly; [`symmetry::fixed_propagation`]
/// started from that prefix certifies the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub tree: BfsTree,
    pub prefix_len: usize,
}

impl Certificate {
    pub fn prefix(&self) -> &[usize] {
        &self.tree.order()[..self.prefix_len]
    }
}

/// A certified coloring and, for tree-based constructions, its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub coloring: Coloring,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub coloring: Coloring,
    /// Number of distinct colors.
    pub colors_used: usize,
    pub branch: Branch,
    pub certified: bool,
    pub certificate: Option<Certificate>,
}

impl SolveResult {
    /// Header line `c branch=<name> colors=<k> certified=<0|1>` followed by
    /// the coloring.
    pub fn to_text(&self) -> String {
        format!(
            "c branch={} colors={} certified={}\n{}",
            self.branch,
            self.colors_used,
            u8::from(self.certified),
            self.coloring.to_text()
        )
    }
}

/// Path `w x1 x2 x3` of a breadth-first tree from `w` (each `xi` at
/// distance `i`) with `x3` adjacent to `x` at distance at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeodesicConfig {
    pub w: usize,
    pub x1: usize,
    pub x2: usize,
    pub x3: usize,
    pub x: usize,
}

/// Root `w` of eccentricity 3 and three paths `w z1 z2 z3`, `w x1 x2 z3`,
/// `w y1 y2 z3` through distinct middle vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiameterThreeConfig {
    pub w: usize,
    pub x1: usize,
    pub x2: usize,
    pub y1: usize,
    pub y2: usize,
    pub z1: usize,
    pub z2: usize,
    pub z3: usize,
}

fn delta(g: &Graph) -> Color {
    g.max_degree() as Color
}

fn is_six_cycle(g: &Graph) -> bool {
    g.n() == 6 && g.min_degree() == 2 && g.max_degree() == 2 && g.is_connected()
}

fn certify(g: &Graph, coloring: &Coloring, bound: Color) -> Result<()> {
    coloring
        .check_total_proper(g)
        .map_err(|e| Error::Internal(format!("construction is not proper: {e}")))?;
    if coloring.max_color().unwrap_or(0) > bound {
        return Err(Error::Internal(format!("construction uses a color above {bound}")));
    }
    if !symmetry::is_distinguishing(g, coloring)?.distinguishing {
        return Err(Error::Internal("construction is not distinguishing".into()));
    }
    Ok(())
}

/// Colors `g` with at most `max_degree + 1` colors.
pub fn solve(g: &Graph) -> Result<SolveResult> {
    if g.n() == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    g.require_connected_girth_five()?;
    if is_six_cycle(g) {
        return Err(Error::IsSixCycle);
    }
    let d = g.max_degree();
    let (branch, built) = if d <= 2 {
        (Branch::PathOrCycle, color_path_or_cycle(g)?)
    } else if let Some(w) = (0..g.n()).find(|&v| g.degree(v) < d) {
        (Branch::Nonregular, color_nonregular(g, w)?)
    } else if let Some(cfg) = find_geodesic_config(g) {
        (Branch::Geodesic, color_geodesic(g, &cfg)?)
    } else {
        let diameter = g.diameter()?;
        if d >= 4 && diameter == 3 {
            let cfg = find_diameter_three_config(g)
                .ok_or_else(|| Error::Internal("diameter 3 without a three-path configuration".into()))?;
            (Branch::DiameterThree, color_diameter_three(g, &cfg)?)
        } else if d >= 4 {
            (Branch::MooreRecursive, color_moore_recursive(g, 0)?)
        } else {
            match find_dissimilar_neighbors(g)? {
                Some((w, x1, y1)) => (Branch::DissimilarNeighbors, color_dissimilar_neighbors(g, w, x1, y1)?),
                None => {
                    if g.n() > 14 {
                        return Err(Error::Internal(format!(
                            "cubic arc-transitive case reached with {} > 14 vertices",
                            g.n()
                        )));
                    }
                    (Branch::Special, color_special(g)?)
                }
            }
        }
    };
    finish(branch, built, delta(g) + 1)
}

fn finish(branch: Branch, built: Construction, bound: Color) -> Result<SolveResult> {
    if built.coloring.max_color().unwrap_or(0) > bound {
        return Err(Error::Internal(format!("{branch} used a color above {bound}")));
    }
    Ok(SolveResult {
        colors_used: built.coloring.distinct_colors(),
        coloring: built.coloring,
        branch,
        certified: true,
        certificate: built.certificate,
    })
}

/// The 6-cycle, colored `1, 2, 3, 1, 2, 4` around the cycle.
pub fn solve_c6_extension(g: &Graph) -> Result<SolveResult> {
    if !is_six_cycle(g) {
        return Err(Error::NotSixCycle);
    }
    let walk = walk_from(g, 0);
    let mut coloring = Coloring::uncolored(6);
    for (&v, c) in walk.iter().zip([1, 2, 3, 1, 2, 4]) {
        coloring.set(v, c);
    }
    certify(g, &coloring, 4)?;
    finish(
        Branch::SixCycle,
        Construction {
            coloring,
            certificate: None,
        },
        4,
    )
}

/// Vertices met walking from `start`, always to the least unvisited neighbor.
fn walk_from(g: &Graph, start: usize) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut walk = vec![start];
    seen[start] = true;
    let mut at = start;
    while let Some(&next) = g.neighbors(at).iter().find(|&&u| !seen[u]) {
        seen[next] = true;
        walk.push(next);
        at = next;
    }
    walk
}

/// Paths: one end 1, then 2 and 3 alternating. Cycles of length at least 5
/// (not 6): `1, 2, 3, 1, 2`, then 3 and 2 alternating.
pub fn color_path_or_cycle(g: &Graph) -> Result<Construction> {
    if g.n() == 0 || !g.is_connected() || g.max_degree() > 2 {
        return Err(Error::Precondition("not a path or cycle".into()));
    }
    let is_cycle = g.min_degree() == 2;
    if is_cycle {
        if g.n() < 5 {
            return Err(Error::GirthTooSmall { girth: g.n() });
        }
        if g.n() == 6 {
            return Err(Error::IsSixCycle);
        }
    }
    let start = if is_cycle {
        0
    } else {
        (0..g.n()).find(|&v| g.degree(v) <= 1).unwrap_or(0)
    };
    let walk = walk_from(g, start);
    let mut coloring = Coloring::uncolored(g.n());
    for (i, &v) in walk.iter().enumerate() {
        let c = if is_cycle {
            match i {
                0..=4 => [1, 2, 3, 1, 2][i],
                _ if i % 2 == 1 => 3,
                _ => 2,
            }
        } else if i == 0 {
            1
        } else if i % 2 == 1 {
            2
        } else {
            3
        };
        coloring.set(v, c);
    }
    certify(g, &coloring, 3)?;
    Ok(Construction {
        coloring,
        certificate: None,
    })
}

fn rooted(n: usize, w: usize, color: Color) -> Coloring {
    let mut c = Coloring::uncolored(n);
    c.set(w, color);
    c
}

/// Root `w` of degree below the maximum takes `max_degree + 1`; the rest is
/// greedy. No other vertex of low degree can take that color.
pub fn color_nonregular(g: &Graph, w: usize) -> Result<Construction> {
    g.check_vertex(w)?;
    g.require_connected_girth_five()?;
    let top = delta(g) + 1;
    if g.degree(w) >= g.max_degree() {
        return Err(Error::Precondition(format!("vertex {w} has maximum degree")));
    }
    let tree = BfsTree::plain(g, w)?;
    let run = greedy_extend(g, &tree, &rooted(g.n(), w, top), &Overrides::new(), top)?;
    certify(g, &run.coloring, top)?;
    Ok(Construction {
        coloring: run.coloring,
        certificate: Some(Certificate { tree, prefix_len: 1 }),
    })
}

/// First geodesic configuration: roots by ascending id, then `x3` at
/// distance 3 by ascending id with a neighbor `x` at distance at least 3,
/// then the least such `x`, least `x2`, least `x1`.
pub fn find_geodesic_config(g: &Graph) -> Option<GeodesicConfig> {
    (0..g.n()).find_map(|w| geodesic_config_at(g, w))
}

fn geodesic_config_at(g: &Graph, w: usize) -> Option<GeodesicConfig> {
    let dist = g.distances(w);
    let at = |v: usize| dist[v].unwrap_or(usize::MAX);
    let x3 = (0..g.n()).find(|&v| at(v) == 3 && g.neighbors(v).iter().any(|&u| at(u) >= 3))?;
    let x = *g.neighbors(x3).iter().find(|&&u| at(u) >= 3)?;
    let x2 = *g.neighbors(x3).iter().find(|&&u| at(u) == 2)?;
    let x1 = *g.neighbors(x2).iter().find(|&&u| at(u) == 1)?;
    Some(GeodesicConfig { w, x1, x2, x3, x })
}

fn neighborhood_multiset_with(g: &Graph, coloring: &Coloring, center: usize, v: usize, c: Color) -> Option<Vec<Color>> {
    let mut m = Vec::with_capacity(g.degree(center));
    for &u in g.neighbors(center) {
        m.push(if u == v { c } else { coloring.get(u)? });
    }
    m.sort_unstable();
    Some(m)
}

/// Chooser that colors its vertex so the color multiset on `N(a)` differs
/// from the one on `N(b)`, preferring colors other than `avoid`.
fn differentiate(
    a: usize,
    b: usize,
    avoid: Option<Color>,
    min_candidates: usize,
) -> impl Fn(&Choice<'_>) -> Result<Color> {
    move |ch: &Choice<'_>| {
        if ch.candidates.len() < min_candidates {
            return Err(Error::Internal(format!(
                "vertex {} has {} legal colors, expected at least {min_candidates}",
                ch.vertex,
                ch.candidates.len()
            )));
        }
        let reference = neighborhood_multiset_with(ch.graph, ch.coloring, b, ch.vertex, 0)
            .filter(|_| !ch.graph.has_edge(b, ch.vertex))
            .ok_or_else(|| Error::Internal(format!("neighborhood of {b} not colored in time")))?;
        let preferred = ch.candidates.iter().filter(|&&c| Some(c) != avoid);
        let fallback = ch.candidates.iter().filter(|&&c| Some(c) == avoid);
        for &c in preferred.chain(fallback) {
            let m = neighborhood_multiset_with(ch.graph, ch.coloring, a, ch.vertex, c)
                .ok_or_else(|| Error::Internal(format!("neighborhood of {a} not colored in time")))?;
            if m != reference {
                return Ok(c);
            }
        }
        Err(Error::Internal(format!(
            "no color of vertex {} separates {a} from {b}",
            ch.vertex
        )))
    }
}

fn check_geodesic(g: &Graph, cfg: &GeodesicConfig) -> Result<Vec<usize>> {
    let dist: Vec<usize> = g
        .distances(cfg.w)
        .into_iter()
        .map(|d| d.unwrap_or(usize::MAX))
        .collect();
    let GeodesicConfig { w, x1, x2, x3, x } = *cfg;
    for v in [w, x1, x2, x3, x] {
        g.check_vertex(v)?;
    }
    let ok = g.has_edge(w, x1)
        && g.has_edge(x1, x2)
        && g.has_edge(x2, x3)
        && g.has_edge(x3, x)
        && dist[x2] == 2
        && dist[x3] == 3
        && dist[x] >= 3;
    if !ok {
        return Err(Error::Precondition("invalid geodesic configuration".into()));
    }
    Ok(dist)
}

/// Root `w` and `x2` take `max_degree + 1`, `x1` and the second child `y1`
/// of the root take 1, and `x3` (last child of `x2`, after every level-3
/// neighbor of `x2` is attached to it) is chosen so `N(x2)` and `N(w)` carry
/// different color multisets.
pub fn color_geodesic(g: &Graph, cfg: &GeodesicConfig) -> Result<Construction> {
    g.require_connected_girth_five()?;
    if g.max_degree() < 3 {
        return Err(Error::Precondition("maximum degree below 3".into()));
    }
    let dist = check_geodesic(g, cfg)?;
    let GeodesicConfig { w, x1, x2, x3, .. } = *cfg;
    let top = delta(g) + 1;
    let y1 = *g
        .neighbors(w)
        .iter()
        .find(|&&u| u != x1)
        .ok_or_else(|| Error::Precondition("root needs two neighbors".into()))?;
    let mut directives = TreeDirectives::new()
        .position(x1, 0)
        .position(y1, 1)
        .parent(x2, x1)
        .position(x2, 0);
    for &u in g.neighbors(x2).iter().filter(|&&u| dist[u] == 3) {
        directives = directives.parent(u, x2);
    }
    directives = directives.last(x3);
    let tree = BfsTree::new(g, w, &directives)?;

    let mut overrides = Overrides::new();
    overrides.force(x1, 1).force(y1, 1).force(x2, top);
    overrides.choose(x3, differentiate(x2, w, None, 2));
    let run = greedy_extend(g, &tree, &rooted(g.n(), w, top), &overrides, top)?;
    certify(g, &run.coloring, top)?;
    let prefix_len = tree.position(x2) + 1;
    Ok(Construction {
        coloring: run.coloring,
        certificate: Some(Certificate { tree, prefix_len }),
    })
}

/// First diameter-3 configuration: a root `w` of eccentricity 3 from which
/// no level-3 vertex has a neighbor outside level 2; `z3` the least level-3
/// vertex, and `z2`, `x2`, `y2` its three least neighbors with their
/// parents `z1`, `x1`, `y1`.
pub fn find_diameter_three_config(g: &Graph) -> Option<DiameterThreeConfig> {
    if g.max_degree() < 4 {
        return None;
    }
    (0..g.n()).find_map(|w| {
        let dist = g.distances(w);
        let at = |v: usize| dist[v].unwrap_or(usize::MAX);
        let level3: Vec<usize> = (0..g.n()).filter(|&v| at(v) == 3).collect();
        if level3.is_empty() || (0..g.n()).any(|v| at(v) > 3) {
            return None;
        }
        if level3.iter().any(|&v| g.neighbors(v).iter().any(|&u| at(u) != 2)) {
            return None;
        }
        let z3 = level3[0];
        let up = |v: usize| g.neighbors(v).iter().copied().find(|&u| at(u) == 1);
        let around = g.neighbors(z3);
        if around.len() < 3 {
            return None;
        }
        let (z2, x2, y2) = (around[0], around[1], around[2]);
        Some(DiameterThreeConfig {
            w,
            x1: up(x2)?,
            x2,
            y1: up(y2)?,
            y2,
            z1: up(z2)?,
            z2,
            z3,
        })
    })
}

fn check_diameter_three(g: &Graph, cfg: &DiameterThreeConfig) -> Result<Vec<usize>> {
    let DiameterThreeConfig {
        w,
        x1,
        x2,
        y1,
        y2,
        z1,
        z2,
        z3,
    } = *cfg;
    for v in [w, x1, x2, y1, y2, z1, z2, z3] {
        g.check_vertex(v)?;
    }
    let dist: Vec<usize> = g.distances(w).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect();
    let mut middle = [x1, x2, y1, y2, z1, z2];
    middle.sort_unstable();
    let distinct = middle.windows(2).all(|p| p[0] != p[1]);
    let paths = [(z1, z2), (x1, x2), (y1, y2)]
        .iter()
        .all(|&(a, b)| g.has_edge(w, a) && g.has_edge(a, b) && g.has_edge(b, z3) && dist[b] == 2);
    let shallow = dist.iter().all(|&d| d <= 3) && dist[z3] == 3;
    let level3_ok = (0..g.n())
        .filter(|&v| dist[v] == 3)
        .all(|v| g.neighbors(v).iter().all(|&u| dist[u] == 2));
    if !(distinct && paths && shallow && level3_ok) {
        return Err(Error::Precondition("invalid diameter-3 configuration".into()));
    }
    Ok(dist)
}

/// Root `w` takes 1, `x1` and `z1` take `max_degree + 1`, `z2` takes 1 and
/// is the only child of `z1` or `x1` allowed color 1, `x2` and `y2` both
/// take 3, and `z3` (last child of `z2`) is chosen so `N(z2)` and `N(w)`
/// carry different color multisets, avoiding `max_degree + 1` if it can.
pub fn color_diameter_three(g: &Graph, cfg: &DiameterThreeConfig) -> Result<Construction> {
    g.require_connected_girth_five()?;
    if g.max_degree() < 4 {
        return Err(Error::Precondition("maximum degree below 4".into()));
    }
    if g.diameter()? != 3 {
        return Err(Error::Precondition("diameter is not 3".into()));
    }
    let dist = check_diameter_three(g, cfg)?;
    let DiameterThreeConfig {
        w,
        x1,
        x2,
        y1,
        y2,
        z1,
        z2,
        z3,
    } = *cfg;
    let top = delta(g) + 1;
    let below = |p: usize| -> Vec<usize> { g.neighbors(p).iter().copied().filter(|&u| dist[u] == 2).collect() };
    let first_x = below(x1)
        .into_iter()
        .find(|&u| u != x2 && !g.has_edge(u, y2))
        .ok_or_else(|| Error::Internal("no child of x1 avoids y2".into()))?;
    let first_y = below(y1)
        .into_iter()
        .find(|&u| u != y2 && !g.has_edge(u, z2))
        .ok_or_else(|| Error::Internal("no child of y1 avoids z2".into()))?;

    let mut directives = TreeDirectives::new()
        .position(x1, 0)
        .position(y1, 1)
        .position(z1, 2)
        .position(first_x, 0)
        .position(x2, 1)
        .position(first_y, 0)
        .position(y2, 1)
        .position(z2, 0);
    for &u in g.neighbors(z2).iter().filter(|&&u| dist[u] == 3) {
        directives = directives.parent(u, z2);
    }
    directives = directives.last(z3);
    let tree = BfsTree::new(g, w, &directives)?;

    let mut overrides = Overrides::new();
    overrides
        .force(x1, top)
        .force(z1, top)
        .force(z2, 1)
        .force(x2, 3)
        .force(y2, 3);
    for u in below(x1) {
        overrides.forbid(u, [1]);
    }
    for u in below(z1).into_iter().filter(|&u| u != z2) {
        overrides.forbid(u, [1]);
    }
    // A child of y1 adjacent to z2 may otherwise take 1 by the neighborhood
    // rule and block z2.
    for u in below(y1).into_iter().filter(|&u| g.has_edge(u, z2)) {
        overrides.forbid(u, [1]);
    }
    overrides.choose(z3, differentiate(z2, w, Some(top), 2));
    let run = greedy_extend(g, &tree, &rooted(g.n(), w, 1), &overrides, top)?;
    certify(g, &run.coloring, top)?;
    let prefix_len = 1 + g.degree(w);
    Ok(Construction {
        coloring: run.coloring,
        certificate: Some(Certificate { tree, prefix_len }),
    })
}

/// Moore graphs of degree at least 4: color the graph left after deleting
/// `w` and its neighbors with at most `max_degree` colors (recursively),
/// give every neighbor of `w` color `max_degree + 1` and `w` color 1.
pub fn color_moore_recursive(g: &Graph, w: usize) -> Result<Construction> {
    g.check_vertex(w)?;
    g.require_connected_girth_five()?;
    let d = g.max_degree();
    if d < 4 || !g.is_regular() || g.diameter()? != 2 || g.n() != d * d + 1 {
        return Err(Error::Precondition("not a Moore graph of degree at least 4".into()));
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&v| v != w && !g.has_edge(w, v)).collect();
    let (rest, map) = g.induced_subgraph(&keep);
    if !rest.is_connected() || !rest.is_regular() || rest.max_degree() != d - 1 {
        return Err(Error::Internal(
            "remainder of a Moore graph is not connected and regular".into(),
        ));
    }
    let inner = solve(&rest)?;
    let top = d as Color + 1;
    let mut coloring = Coloring::uncolored(g.n());
    for (i, &v) in map.iter().enumerate() {
        coloring.set(v, inner.coloring.get(i).expect("solve returns total colorings"));
    }
    for &u in g.neighbors(w) {
        coloring.set(u, top);
    }
    coloring.set(w, 1);
    certify(g, &coloring, top)?;
    Ok(Construction {
        coloring,
        certificate: None,
    })
}

/// First `(w, x1, y1)` with `x1 < y1` neighbors of `w` in different
/// automorphism orbits, scanning `w` then `x1` then `y1` ascending.
pub fn find_dissimilar_neighbors(g: &Graph) -> Result<Option<(usize, usize, usize)>> {
    let orbit = symmetry::orbits(g, None)?;
    for w in 0..g.n() {
        let around = g.neighbors(w);
        for (i, &x1) in around.iter().enumerate() {
            if let Some(&y1) = around[i + 1..].iter().find(|&&y1| orbit[y1] != orbit[x1]) {
                return Ok(Some((w, x1, y1)));
            }
        }
    }
    Ok(None)
}

/// Root `w` takes `max_degree + 1`, its first two children `x1`, `y1` (no
/// automorphism maps one to the other) both take 1; the rest is greedy.
pub fn color_dissimilar_neighbors(g: &Graph, w: usize, x1: usize, y1: usize) -> Result<Construction> {
    for v in [w, x1, y1] {
        g.check_vertex(v)?;
    }
    g.require_connected_girth_five()?;
    if x1 == y1 || !g.has_edge(w, x1) || !g.has_edge(w, y1) {
        return Err(Error::Precondition("x1 and y1 must be distinct neighbors of w".into()));
    }
    if symmetry::exists_automorphism_mapping(g, x1, y1)? {
        return Err(Error::Precondition(format!("an automorphism maps {x1} to {y1}")));
    }
    let top = delta(g) + 1;
    let tree = BfsTree::new(g, w, &TreeDirectives::new().position(x1, 0).position(y1, 1))?;
    let mut overrides = Overrides::new();
    overrides.force(x1, 1).force(y1, 1);
    let run = greedy_extend(g, &tree, &rooted(g.n(), w, top), &overrides, top)?;
    certify(g, &run.coloring, top)?;
    let prefix_len = 1 + g.degree(w);
    Ok(Construction {
        coloring: run.coloring,
        certificate: Some(Certificate { tree, prefix_len }),
    })
}

/// The Petersen graph drawn as a 9-cycle `v1..v9` with chords `v1v5`,
/// `v4v8`, `v7v2` and a hub `v10` on `v3, v6, v9`, with its stored
/// distinguishing 4-coloring.
pub fn stored_petersen() -> (Graph, Coloring) {
    let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
    edges.extend([(0, 4), (3, 7), (6, 1), (9, 2), (9, 5), (9, 8)]);
    let g = Graph::from_edges(10, &edges).expect("static graph");
    (g, Coloring::from_colors(vec![2, 1, 2, 4, 3, 2, 4, 2, 3, 1]))
}

/// The Heawood graph as a 14-cycle `v1..v14` with chords `v_i v_{i+5}` for
/// even `i` (indices mod 14), with its stored distinguishing 4-coloring.
pub fn stored_heawood() -> (Graph, Coloring) {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (2..=14).step_by(2) {
        edges.push(((i - 1) % 14, (i + 4) % 14));
    }
    let g = Graph::from_edges(14, &edges).expect("static graph");
    (g, Coloring::from_colors(vec![2, 3, 2, 3, 2, 1, 2, 1, 4, 3, 2, 1, 2, 4]))
}

/// Transports a stored coloring onto a graph isomorphic to the Petersen or
/// Heawood graph.
pub fn color_special(g: &Graph) -> Result<Construction> {
    for (model, stored) in [stored_petersen(), stored_heawood()] {
        if g.n() != model.n() {
            continue;
        }
        if let Some(map) = symmetry::find_isomorphism(&model, g)? {
            let coloring = stored.pull_back(map.inverse().images());
            certify(g, &coloring, 4)?;
            return Ok(Construction {
                coloring,
                certificate: None,
            });
        }
    }
    Err(Error::Precondition(
        "graph is neither the Petersen nor the Heawood graph".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, dodecahedron, heawood, mcgee, pappus, path, petersen, star};

    fn colors(c: &Construction) -> Vec<Color> {
        c.coloring.to_vec().unwrap()
    }

    #[test]
    fn paths_and_cycles() {
        assert_eq!(
            colors(&color_path_or_cycle(&path(5).unwrap()).unwrap()),
            vec![1, 2, 3, 2, 3]
        );
        assert_eq!(
            colors(&color_path_or_cycle(&cycle(7).unwrap()).unwrap()),
            vec![1, 2, 3, 1, 2, 3, 2]
        );
        assert_eq!(colors(&color_path_or_cycle(&path(1).unwrap()).unwrap()), vec![1]);
        assert_eq!(colors(&color_path_or_cycle(&path(2).unwrap()).unwrap()), vec![1, 2]);
        assert_eq!(color_path_or_cycle(&cycle(6).unwrap()), Err(Error::IsSixCycle));
        assert_eq!(
            color_path_or_cycle(&cycle(4).unwrap()),
            Err(Error::GirthTooSmall { girth: 4 })
        );
    }

    #[test]
    fn six_cycle_entry_point() {
        let r = solve_c6_extension(&cycle(6).unwrap()).unwrap();
        assert_eq!(r.colors_used, 4);
        assert_eq!(r.coloring.to_vec().unwrap(), vec![1, 2, 3, 1, 2, 4]);
        assert_eq!(solve_c6_extension(&cycle(5).unwrap()), Err(Error::NotSixCycle));
        assert_eq!(solve(&cycle(6).unwrap()), Err(Error::IsSixCycle));
        let relabeled = cycle(6).unwrap().relabel(&[3, 0, 5, 1, 4, 2]);
        assert!(solve_c6_extension(&relabeled).unwrap().certified);
    }

    #[test]
    fn nonregular_traces() {
        // Star rooted at leaf 1: leaf 4, center 1, other leaves 2, 3.
        let k13 = star(4).unwrap();
        assert_eq!(colors(&color_nonregular(&k13, 1).unwrap()), vec![1, 4, 2, 3]);
        assert_eq!(
            colors(&color_nonregular(&path(4).unwrap(), 0).unwrap()),
            vec![3, 1, 2, 1]
        );
        assert!(matches!(color_nonregular(&k13, 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn dispatch_small_cases() {
        let r = solve(&star(4).unwrap()).unwrap();
        assert_eq!((r.branch, r.colors_used), (Branch::Nonregular, 4));
        let r = solve(&cycle(5).unwrap()).unwrap();
        assert_eq!((r.branch, r.colors_used), (Branch::PathOrCycle, 3));
        let r = solve(&petersen()).unwrap();
        assert_eq!((r.branch, r.colors_used), (Branch::Special, 4));
        let r = solve(&heawood()).unwrap();
        assert_eq!((r.branch, r.colors_used), (Branch::Special, 4));
    }

    #[test]
    fn geodesic_configurations() {
        assert_eq!(find_geodesic_config(&petersen()), None);
        for g in [dodecahedron(), pappus()] {
            let cfg = find_geodesic_config(&g).unwrap();
            let built = color_geodesic(&g, &cfg).unwrap();
            assert_eq!(built.coloring.distinct_colors(), 4);
        }
    }

    #[test]
    fn dissimilar_neighbors_spider() {
        // Center 0 with a leg of length 1 (vertex 1) and of length 2 (2 - 3).
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        assert_eq!(
            colors(&color_dissimilar_neighbors(&g, 0, 1, 2).unwrap()),
            vec![3, 1, 1, 2]
        );
        assert!(matches!(
            color_dissimilar_neighbors(&path(3).unwrap(), 1, 0, 2),
            Err(Error::Precondition(_))
        ));
        let d = dodecahedron();
        let (a, b) = (d.neighbors(0)[0], d.neighbors(0)[1]);
        assert!(matches!(
            color_dissimilar_neighbors(&d, 0, a, b),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn special_rejects_other_graphs() {
        assert!(matches!(color_special(&mcgee()), Err(Error::Precondition(_))));
        assert!(color_special(&petersen()).is_ok());
    }

    #[test]
    fn result_header() {
        let r = solve(&cycle(5).unwrap()).unwrap();
        assert!(r
            .to_text()
            .starts_with("c branch=path_or_cycle colors=3 certified=1\nv 1 1\n"));
    }

    fn all_geodesic_configs(g: &Graph) -> Vec<GeodesicConfig> {
        let mut out = Vec::new();
        for w in 0..g.n() {
            let dist: Vec<usize> = g.distances(w).into_iter().map(|d| d.unwrap()).collect();
            for x3 in (0..g.n()).filter(|&v| dist[v] == 3) {
                for &x in g.neighbors(x3).iter().filter(|&&u| dist[u] >= 3) {
                    for &x2 in g.neighbors(x3).iter().filter(|&&u| dist[u] == 2) {
                        let x1 = *g.neighbors(x2).iter().find(|&&u| dist[u] == 1).unwrap();
                        out.push(GeodesicConfig { w, x1, x2, x3, x });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn every_geodesic_configuration_succeeds() {
        use crate::generators::{desargues, random_girth5, robertson};
        let mut graphs = vec![dodecahedron(), pappus(), desargues(), robertson()];
        graphs.extend((0..20).map(|seed| random_girth5(24, 4, seed).unwrap()));
        for g in graphs.iter().filter(|g| g.max_degree() >= 3) {
            for cfg in all_geodesic_configs(g) {
                let built = color_geodesic(g, &cfg).unwrap_or_else(|e| panic!("{cfg:?}: {e}"));
                let cert = built.certificate.unwrap();
                let fixed = symmetry::fixed_propagation(g, &cert.tree, &built.coloring, cert.prefix()).unwrap();
                assert!(fixed.iter().all(|&f| f), "{cfg:?}");
            }
        }
    }

    #[test]
    fn every_diameter_three_configuration_succeeds() {
        use crate::generators::robertson;
        let g = robertson();
        let mut tried = 0;
        for w in 0..g.n() {
            let dist: Vec<usize> = g.distances(w).into_iter().map(|d| d.unwrap()).collect();
            for z3 in (0..g.n()).filter(|&v| dist[v] == 3) {
                let around: Vec<usize> = g.neighbors(z3).iter().copied().filter(|&u| dist[u] == 2).collect();
                for &z2 in &around {
                    for &x2 in &around {
                        for &y2 in &around {
                            if z2 == x2 || z2 == y2 || x2 == y2 {
                                continue;
                            }
                            let up = |v: usize| *g.neighbors(v).iter().find(|&&u| dist[u] == 1).unwrap();
                            let cfg = DiameterThreeConfig {
                                w,
                                x1: up(x2),
                                x2,
                                y1: up(y2),
                                y2,
                                z1: up(z2),
                                z2,
                                z3,
                            };
                            match color_diameter_three(&g, &cfg) {
                                Ok(built) => {
                                    tried += 1;
                                    let cert = built.certificate.unwrap();
                                    let fixed =
                                        symmetry::fixed_propagation(&g, &cert.tree, &built.coloring, cert.prefix())
                                            .unwrap();
                                    assert!(fixed.iter().all(|&f| f), "{cfg:?}");
                                }
                                Err(Error::Precondition(_)) => {}
                                Err(e) => panic!("{cfg:?}: {e}"),
                            }
                        }
                    }
                }
            }
        }
        assert!(tried > 0);
    }
}
