//! Automorphisms, isomorphisms, distinguishing checks, fixedness
//! propagation along a spanning tree, and a brute-force oracle for the
//! distinguishing chromatic number.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;
use crate::search::{Cells, Matcher};
use crate::tree::BfsTree;
use crate::Color;

/// Default largest graph the exact searches accept.
pub const DEFAULT_SEARCH_BOUND: usize = 128;

/// Largest graph accepted by [`exact_chi_d`].
pub const EXACT_CHI_D_BOUND: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_vertices: DEFAULT_SEARCH_BOUND,
        }
    }
}

impl SearchConfig {
    fn admit(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_vertices {
            Err(Error::SearchBound {
                n: g.n(),
                bound: self.max_vertices,
            })
        } else {
            Ok(())
        }
    }
}

/// Outcome of [`is_distinguishing`]. `witness` is present exactly when the
/// coloring is not distinguishing, and is then the lexicographically least
/// non-identity color-preserving automorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub distinguishing: bool,
    pub witness: Option<Permutation>,
}

/// Generators of an automorphism group and its exact order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub generators: Vec<Permutation>,
    pub order: BigUint,
}

fn initial_cells(g: &Graph, coloring: Option<&Coloring>) -> Result<Cells> {
    match coloring {
        None => Ok(vec![0; g.n()]),
        Some(c) => {
            if c.len() != g.n() {
                return Err(Error::SizeMismatch {
                    expected: g.n(),
                    found: c.len(),
                });
            }
            let colors = c.to_vec()?;
            let mut distinct = colors.clone();
            distinct.sort_unstable();
            distinct.dedup();
            Ok(colors
                .iter()
                .map(|c| distinct.binary_search(c).expect("present") as u32)
                .collect())
        }
    }
}

fn check_witness(g: &Graph, coloring: Option<&Coloring>, p: &Permutation) -> Result<()> {
    if p.is_automorphism(g) && coloring.is_none_or(|c| p.preserves(c)) {
        Ok(())
    } else {
        Err(Error::Internal(
            "search returned a map that is not a color-preserving automorphism".into(),
        ))
    }
}

/// The automorphism group of `g`, or of the colored graph when a total
/// coloring is given.
pub fn automorphisms(g: &Graph, coloring: Option<&Coloring>) -> Result<AutomorphismGroup> {
    automorphisms_with(g, coloring, SearchConfig::default())
}

pub fn automorphisms_with(g: &Graph, coloring: Option<&Coloring>, config: SearchConfig) -> Result<AutomorphismGroup> {
    config.admit(g)?;
    let cells = initial_cells(g, coloring)?;
    let (generators, orbits) = Matcher::automorphisms(g).group(cells);
    for p in &generators {
        check_witness(g, coloring, p)?;
    }
    let order = orbits
        .iter()
        .fold(BigUint::from(1u32), |acc, &k| acc * BigUint::from(k));
    Ok(AutomorphismGroup { generators, order })
}

/// Orbit id per vertex (the least vertex of its orbit).
pub fn orbits(g: &Graph, coloring: Option<&Coloring>) -> Result<Vec<usize>> {
    let group = automorphisms(g, coloring)?;
    let mut rep: Vec<usize> = (0..g.n()).collect();
    fn find(rep: &mut [usize], v: usize) -> usize {
        let mut r = v;
        while rep[r] != r {
            r = rep[r];
        }
        rep[v] = r;
        r
    }
    for p in &group.generators {
        for v in 0..g.n() {
            let (a, b) = (find(&mut rep, v), find(&mut rep, p.apply(v)));
            let (lo, hi) = (a.min(b), a.max(b));
            rep[hi] = lo;
        }
    }
    Ok((0..g.n()).map(|v| find(&mut rep, v)).collect())
}

/// Whether the only color-preserving automorphism is the identity.
pub fn is_distinguishing(g: &Graph, coloring: &Coloring) -> Result<SymmetryVerdict> {
    is_distinguishing_with(g, coloring, SearchConfig::default())
}

pub fn is_distinguishing_with(g: &Graph, coloring: &Coloring, config: SearchConfig) -> Result<SymmetryVerdict> {
    config.admit(g)?;
    coloring.check_total_proper(g)?;
    let cells = initial_cells(g, Some(coloring))?;
    let matcher = Matcher::automorphisms(g);
    if matcher.nontrivial(cells.clone()).is_none() {
        return Ok(SymmetryVerdict {
            distinguishing: true,
            witness: None,
        });
    }
    let witness = matcher
        .least_nontrivial(&cells)
        .ok_or_else(|| Error::Internal("non-trivial group without a least element".into()))?;
    check_witness(g, Some(coloring), &witness)?;
    Ok(SymmetryVerdict {
        distinguishing: false,
        witness: Some(witness),
    })
}

/// Whether some automorphism of `g` sends `u` to `v`.
pub fn exists_automorphism_mapping(g: &Graph, u: usize, v: usize) -> Result<bool> {
    SearchConfig::default().admit(g)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let m = Matcher::automorphisms(g);
    let (mut l, mut r) = (vec![0; g.n()], vec![0; g.n()]);
    m.individualize(&mut l, u);
    m.individualize(&mut r, v);
    match m.extend(l, r) {
        Some(p) => {
            check_witness(g, None, &p)?;
            Ok(true)
        }
        None => Ok(false),
    }
}

/// Whether the automorphism group has a single orbit.
pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(orbits(g, None)?.iter().all(|&r| r == 0))
}

/// An isomorphism `g -> h` (vertex `v` of `g` maps to `p.apply(v)` in `h`).
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Result<Option<Permutation>> {
    let config = SearchConfig::default();
    config.admit(g)?;
    config.admit(h)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let found = Matcher::new(g, h).extend(vec![0; g.n()], vec![0; h.n()]);
    if let Some(p) = &found {
        if !p.is_isomorphism(g, h) {
            return Err(Error::Internal("search returned a non-isomorphism".into()));
        }
    }
    Ok(found)
}

/// Vertices fixed by every color-preserving automorphism.
pub fn fixed_vertices(g: &Graph, coloring: &Coloring) -> Result<Vec<bool>> {
    let orbit = orbits(g, Some(coloring))?;
    let mut size = vec![0usize; g.n()];
    for &r in &orbit {
        size[r] += 1;
    }
    Ok(orbit.iter().map(|&r| size[r] == 1).collect())
}

/// Certifies fixed vertices by local reasoning, starting from a set of
/// vertices assumed fixed (a prefix of the tree order).
///
/// For each certified vertex `x`, every automorphism that fixes the
/// certified set permutes the uncertified neighbors of `x`. Among them:
/// one with a certified neighbor `z != x` is the unique common neighbor of
/// `x` and `z` (no 4-cycles), hence fixed; after that, one whose color is
/// unique among those still uncertified is fixed. Rounds repeat until
/// nothing changes.
///
/// If every vertex ends up certified and the prefix really is fixed, the
/// coloring is distinguishing.
pub fn fixed_propagation(g: &Graph, tree: &BfsTree, coloring: &Coloring, fixed_prefix: &[usize]) -> Result<Vec<bool>> {
    coloring.check_total_proper(g)?;
    if let Some(girth) = g.girth().filter(|&l| l < 5) {
        return Err(Error::GirthTooSmall { girth });
    }
    let order = tree.order();
    if order.len() != g.n() || fixed_prefix.len() > order.len() {
        return Err(Error::NotPrefix);
    }
    let mut in_prefix = vec![false; g.n()];
    for &v in fixed_prefix {
        g.check_vertex(v)?;
        in_prefix[v] = true;
    }
    if order[..fixed_prefix.len()].iter().any(|&v| !in_prefix[v]) {
        return Err(Error::NotPrefix);
    }
    let mut certified = in_prefix;
    let mut changed = true;
    while changed {
        changed = false;
        for &x in order {
            if !certified[x] {
                continue;
            }
            let open: Vec<usize> = g.neighbors(x).iter().copied().filter(|&y| !certified[y]).collect();
            if open.is_empty() {
                continue;
            }
            let mut rest = Vec::with_capacity(open.len());
            for y in open {
                if g.neighbors(y).iter().any(|&z| z != x && certified[z]) {
                    certified[y] = true;
                    changed = true;
                } else {
                    rest.push(y);
                }
            }
            let mut counts: BTreeMap<Color, usize> = BTreeMap::new();
            for &y in &rest {
                *counts.entry(coloring.get(y).unwrap_or_default()).or_default() += 1;
            }
            for &y in &rest {
                if counts[&coloring.get(y).unwrap_or_default()] == 1 {
                    certified[y] = true;
                    changed = true;
                }
            }
        }
    }
    Ok(certified)
}

/// Smallest number of colors in a proper distinguishing coloring, by
/// exhaustive enumeration. Only for graphs on at most
/// [`EXACT_CHI_D_BOUND`] vertices.
pub fn exact_chi_d(g: &Graph) -> Result<Color> {
    if g.n() > EXACT_CHI_D_BOUND {
        return Err(Error::SearchBound {
            n: g.n(),
            bound: EXACT_CHI_D_BOUND,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let matcher = Matcher::automorphisms(g);
    let mut colors = vec![0 as Color; g.n()];
    for k in 1..=g.n() as Color {
        if search_distinguishing(g, &matcher, k, 0, 0, &mut colors) {
            return Ok(k);
        }
    }
    Err(Error::Internal("no distinguishing coloring with n colors".into()))
}

/// Enumerates proper colorings with colors `1..=k` up to renaming colors
/// (each new color is one more than the largest used so far).
fn search_distinguishing(g: &Graph, m: &Matcher<'_>, k: Color, v: usize, used: Color, colors: &mut Vec<Color>) -> bool {
    if v == g.n() {
        return m.nontrivial(colors.clone()).is_none();
    }
    for c in 1..=k.min(used + 1) {
        if g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if search_distinguishing(g, m, k, v + 1, used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, heawood, kneser_petersen, path, petersen, star};

    fn order(g: &Graph, c: Option<&Coloring>) -> u64 {
        automorphisms(g, c).unwrap().order.try_into().unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(order(&cycle(5).unwrap(), None), 10);
        assert_eq!(order(&petersen(), None), 120);
        assert_eq!(order(&heawood(), None), 336);
        assert_eq!(order(&star(5).unwrap(), None), 24);
        assert_eq!(order(&path(1).unwrap(), None), 1);
    }

    #[test]
    fn cycle_with_period_two_is_not_distinguishing() {
        let g = cycle(6).unwrap();
        let v = is_distinguishing(&g, &Coloring::from_colors(vec![1, 2, 1, 2, 1, 2])).unwrap();
        assert!(!v.distinguishing);
        // The reflection through vertex 0 fixes 0, so it is lexicographically
        // below the rotations by two and four.
        let witness = v.witness.unwrap();
        assert_eq!(witness.images(), &[0, 5, 4, 3, 2, 1]);
        let rotation = Permutation::from_images(vec![2, 3, 4, 5, 0, 1]).unwrap();
        assert!(rotation.is_automorphism(&g) && witness < rotation);
    }

    #[test]
    fn color_values_do_not_collide_with_individualized_cells() {
        let g = Graph::empty(2);
        let verdict = is_distinguishing(&g, &Coloring::from_colors(vec![2, 2])).unwrap();
        assert_eq!(verdict.witness.unwrap().images(), &[1, 0]);
    }

    #[test]
    fn path_endpoint_swap() {
        let g = path(3).unwrap();
        let v = is_distinguishing(&g, &Coloring::from_colors(vec![1, 2, 1])).unwrap();
        assert_eq!(v.witness.unwrap().images(), &[2, 1, 0]);
        assert!(
            is_distinguishing(&g, &Coloring::from_colors(vec![1, 2, 3]))
                .unwrap()
                .distinguishing
        );
    }

    #[test]
    fn distinguishing_requires_total_proper() {
        let g = path(3).unwrap();
        assert!(matches!(
            is_distinguishing(&g, &Coloring::from_colors(vec![1, 1, 2])),
            Err(Error::Improper { .. })
        ));
        let mut partial = Coloring::uncolored(3);
        partial.set(0, 1);
        assert!(matches!(is_distinguishing(&g, &partial), Err(Error::Partial { .. })));
    }

    #[test]
    fn similarity_queries() {
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| exists_automorphism_mapping(&c5, 0, v).unwrap()));
        let p4 = path(4).unwrap();
        assert!(!exists_automorphism_mapping(&p4, 0, 1).unwrap());
        assert!(exists_automorphism_mapping(&p4, 0, 3).unwrap());
        let pg = petersen();
        assert!((0..10).all(|v| exists_automorphism_mapping(&pg, 3, v).unwrap()));
    }

    #[test]
    fn vertex_transitivity() {
        assert!(is_vertex_transitive(&petersen()).unwrap());
        assert!(is_vertex_transitive(&heawood()).unwrap());
        assert!(!is_vertex_transitive(&path(3).unwrap()).unwrap());
    }

    #[test]
    fn isomorphisms() {
        let p = find_isomorphism(&petersen(), &kneser_petersen()).unwrap().unwrap();
        assert!(p.is_isomorphism(&petersen(), &kneser_petersen()));
        assert_eq!(find_isomorphism(&petersen(), &heawood()).unwrap(), None);
        assert_eq!(find_isomorphism(&cycle(6).unwrap(), &path(6).unwrap()).unwrap(), None);
    }

    #[test]
    fn search_bound_is_enforced() {
        let big = cycle(200).unwrap();
        assert_eq!(
            automorphisms(&big, None),
            Err(Error::SearchBound { n: 200, bound: 128 })
        );
        let wide = SearchConfig { max_vertices: 256 };
        assert_eq!(
            automorphisms_with(&big, None, wide).unwrap().order,
            BigUint::from(400u32)
        );
    }

    #[test]
    fn propagation_examples() {
        let k13 = star(4).unwrap();
        let t = BfsTree::plain(&k13, 0).unwrap();
        let c = Coloring::from_colors(vec![4, 1, 2, 3]);
        assert!(fixed_propagation(&k13, &t, &c, &[0]).unwrap().iter().all(|&b| b));

        let c6 = cycle(6).unwrap();
        for root in 0..6 {
            let t = BfsTree::plain(&c6, root).unwrap();
            let c = Coloring::from_colors(vec![1, 2, 1, 2, 1, 2]);
            let cert = fixed_propagation(&c6, &t, &c, &[root]).unwrap();
            assert_eq!(cert.iter().filter(|&&b| b).count(), 1);
        }
    }

    #[test]
    fn propagation_rejects_non_prefix() {
        let g = path(3).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let c = Coloring::from_colors(vec![1, 2, 3]);
        assert_eq!(fixed_propagation(&g, &t, &c, &[1]), Err(Error::NotPrefix));
    }

    #[test]
    fn fixed_vertices_of_a_symmetric_path() {
        let g = path(5).unwrap();
        let fixed = fixed_vertices(&g, &Coloring::from_colors(vec![1, 2, 3, 2, 1])).unwrap();
        assert_eq!(fixed, vec![false, false, true, false, false]);
    }

    #[test]
    fn exact_values() {
        assert_eq!(exact_chi_d(&star(4).unwrap()), Ok(4));
        assert_eq!(exact_chi_d(&cycle(6).unwrap()), Ok(4));
        assert_eq!(exact_chi_d(&cycle(5).unwrap()), Ok(3));
        assert_eq!(exact_chi_d(&path(2).unwrap()), Ok(2));
        assert_eq!(exact_chi_d(&path(1).unwrap()), Ok(1));
        assert!(matches!(
            exact_chi_d(&cycle(11).unwrap()),
            Err(Error::SearchBound { .. })
        ));
    }
}
