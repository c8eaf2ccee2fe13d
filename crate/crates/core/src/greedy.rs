//! Greedy extension of a prefix coloring along a breadth-first order, and
//! the two max-degree + 2 constructions built on it.
//!
//! Each uncolored vertex `v`, taken in tree order, gets the smallest color
//! missing from
//!
//! * its colored neighborhood, when some colored neighbor is not its parent
//!   ([`Rule::Neighborhood`]), or
//! * its parent and already-colored siblings otherwise ([`Rule::Siblings`]).
//!
//! [`Overrides`] adjust individual vertices (forced colors, forbidden colors,
//! restricted lists, or a caller-decided choice) without changing the order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::coloring::{Coloring, ListAssignment};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry;
use crate::tree::BfsTree;
use crate::Color;

/// How a vertex received its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Part of the supplied prefix.
    Prefix,
    /// Avoided the colors on its colored neighborhood.
    Neighborhood,
    /// Avoided the colors on its parent and colored siblings.
    Siblings,
    /// Took a forced color.
    Forced,
    /// Took the color returned by a chooser.
    Chosen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    /// A forbidden set or list restriction was in effect.
    pub restricted: bool,
}

/// Input to a [`Chooser`]: the vertex being colored, its legal colors in
/// ascending order, and the coloring so far.
pub struct Choice<'c> {
    pub graph: &'c Graph,
    pub tree: &'c BfsTree,
    pub vertex: usize,
    pub candidates: &'c [Color],
    pub coloring: &'c Coloring,
}

pub type Chooser<'a> = Box<dyn Fn(&Choice<'_>) -> Result<Color> + 'a>;

#[derive(Default)]
struct VertexOverride<'a> {
    force: Option<Color>,
    forbid: BTreeSet<Color>,
    allowed: Option<BTreeSet<Color>>,
    choose: Option<Chooser<'a>>,
}

/// Per-vertex modifications of the greedy rules.
#[derive(Default)]
pub struct Overrides<'a> {
    entries: BTreeMap<usize, VertexOverride<'a>>,
}

impl fmt::Debug for Overrides<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (v, o) in &self.entries {
            map.entry(v, &(o.force, &o.forbid, &o.allowed, o.choose.is_some()));
        }
        map.finish()
    }
}

impl<'a> Overrides<'a> {
    pub fn new() -> Self {
        Self::default()
    }

    fn entry(&mut self, v: usize) -> &mut VertexOverride<'a> {
        self.entries.entry(v).or_default()
    }

    pub fn force(&mut self, v: usize, color: Color) -> &mut Self {
        self.entry(v).force = Some(color);
        self
    }

    pub fn forbid(&mut self, v: usize, colors: impl IntoIterator<Item = Color>) -> &mut Self {
        self.entry(v).forbid.extend(colors);
        self
    }

    /// Only colors from `colors` may be used on `v`.
    pub fn restrict(&mut self, v: usize, colors: impl IntoIterator<Item = Color>) -> &mut Self {
        self.entry(v).allowed = Some(colors.into_iter().collect());
        self
    }

    /// Let `chooser` pick `v`'s color among its legal colors.
    pub fn choose(&mut self, v: usize, chooser: impl Fn(&Choice<'_>) -> Result<Color> + 'a) -> &mut Self {
        self.entry(v).choose = Some(Box::new(chooser));
        self
    }

    pub fn forced(&self, v: usize) -> Option<Color> {
        self.entries.get(&v).and_then(|o| o.force)
    }
}

/// A greedy run: the coloring and how each vertex got its color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyColoring {
    pub coloring: Coloring,
    pub steps: Vec<Step>,
}

/// Number of leading entries of `tree.order()` colored in `prefix`, or an
/// error when the colored set is not such a prefix.
pub fn prefix_len(tree: &BfsTree, prefix: &Coloring) -> Result<usize> {
    let len = tree.order().iter().take_while(|&&v| prefix.get(v).is_some()).count();
    if len == 0 || prefix.colored_count() != len {
        return Err(Error::NotPrefix);
    }
    Ok(len)
}

/// Extends `prefix` to a total proper coloring with colors up to `palette`.
pub fn greedy_extend(
    g: &Graph,
    tree: &BfsTree,
    prefix: &Coloring,
    overrides: &Overrides<'_>,
    palette: Color,
) -> Result<GreedyColoring> {
    if prefix.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: prefix.len(),
        });
    }
    let start = prefix_len(tree, prefix)?;
    prefix.check_proper(g)?;
    let mut coloring = prefix.clone();
    let mut steps = vec![
        Step {
            rule: Rule::Prefix,
            restricted: false
        };
        g.n()
    ];
    for &v in &tree.order()[..start] {
        if overrides.entries.contains_key(&v) {
            return Err(Error::Precondition(format!("override on prefix vertex {v}")));
        }
    }

    for &v in &tree.order()[start..] {
        let parent = tree.parent(v);
        let neighbor_colors: BTreeSet<Color> = g.neighbors(v).iter().filter_map(|&u| coloring.get(u)).collect();
        let over = overrides.entries.get(&v);

        if let Some(color) = over.and_then(|o| o.force) {
            if color > palette {
                return Err(Error::PaletteExhausted {
                    vertex: v,
                    bound: palette,
                });
            }
            if let Some(&u) = g.neighbors(v).iter().find(|&&u| coloring.get(u) == Some(color)) {
                return Err(Error::Improper {
                    vertex: v,
                    neighbor: u,
                    color,
                });
            }
            coloring.set(v, color);
            steps[v] = Step {
                rule: Rule::Forced,
                restricted: false,
            };
            continue;
        }

        let permitted =
            |c: Color| over.is_none_or(|o| !o.forbid.contains(&c) && o.allowed.as_ref().is_none_or(|a| a.contains(&c)));
        let restricted = over.is_some_and(|o| !o.forbid.is_empty() || o.allowed.is_some());

        if let Some(choose) = over.and_then(|o| o.choose.as_ref()) {
            let candidates: Vec<Color> = (1..=palette)
                .filter(|c| !neighbor_colors.contains(c) && permitted(*c))
                .collect();
            let color = choose(&Choice {
                graph: g,
                tree,
                vertex: v,
                candidates: &candidates,
                coloring: &coloring,
            })?;
            if !candidates.contains(&color) {
                return Err(Error::Internal(format!(
                    "chooser returned illegal color {color} for vertex {v}"
                )));
            }
            coloring.set(v, color);
            steps[v] = Step {
                rule: Rule::Chosen,
                restricted,
            };
            continue;
        }

        let has_other_colored = g
            .neighbors(v)
            .iter()
            .any(|&u| Some(u) != parent && coloring.get(u).is_some());
        let (rule, avoid) = if has_other_colored {
            (Rule::Neighborhood, neighbor_colors)
        } else {
            let family: BTreeSet<Color> = parent
                .into_iter()
                .chain(tree.siblings(v))
                .filter_map(|u| coloring.get(u))
                .collect();
            (Rule::Siblings, family)
        };
        let color = (1..=palette)
            .find(|c| !avoid.contains(c) && permitted(*c))
            .ok_or(Error::PaletteExhausted {
                vertex: v,
                bound: palette,
            })?;
        coloring.set(v, color);
        steps[v] = Step { rule, restricted };
    }
    debug_assert!(coloring.check_total_proper(g).is_ok());
    Ok(GreedyColoring { coloring, steps })
}

/// Checks the color bounds every unmodified greedy step obeys outside the
/// root's closed neighborhood: a neighborhood-rule vertex uses at most
/// `max_degree + 1`, and uses exactly that only when all its neighbors were
/// colored with distinct colors; a sibling-rule vertex uses at most
/// `max_degree`.
pub fn check_color_bounds(g: &Graph, tree: &BfsTree, run: &GreedyColoring) -> Result<(), String> {
    let delta = g.max_degree() as Color;
    let root = tree.root();
    for &v in tree.order() {
        if v == root || g.has_edge(root, v) {
            continue;
        }
        let step = run.steps[v];
        if step.restricted {
            continue;
        }
        let color = run.coloring.get(v).ok_or_else(|| format!("vertex {v} uncolored"))?;
        match step.rule {
            Rule::Neighborhood => {
                if color > delta + 1 {
                    return Err(format!(
                        "vertex {v} took {color} > max degree + 1 by the neighborhood rule"
                    ));
                }
                if color == delta + 1 {
                    let before: Vec<usize> = g
                        .neighbors(v)
                        .iter()
                        .copied()
                        .filter(|&u| tree.position(u) < tree.position(v))
                        .collect();
                    let distinct: BTreeSet<Color> = before.iter().filter_map(|&u| run.coloring.get(u)).collect();
                    if before.len() != g.degree(v) || distinct.len() != before.len() {
                        return Err(format!(
                            "vertex {v} took max degree + 1 without a fully and distinctly colored neighborhood"
                        ));
                    }
                }
            }
            Rule::Siblings if color > delta => {
                return Err(format!("vertex {v} took {color} > max degree by the sibling rule"));
            }
            _ => {}
        }
    }
    Ok(())
}

/// Colors the root `w` with `max_degree + 2` and everything else greedily;
/// the result is certified distinguishing before it is returned.
pub fn color_delta_plus_2(g: &Graph, w: usize) -> Result<Coloring> {
    Ok(delta_plus_2_run(g, w)?.1.coloring)
}

/// [`color_delta_plus_2`], also returning the tree it was built on.
pub fn delta_plus_2_run(g: &Graph, w: usize) -> Result<(BfsTree, GreedyColoring)> {
    g.check_vertex(w)?;
    g.require_connected_girth_five()?;
    let top = g.max_degree() as Color + 2;
    let tree = BfsTree::plain(g, w)?;
    let mut prefix = Coloring::uncolored(g.n());
    prefix.set(w, top);
    let run = greedy_extend(g, &tree, &prefix, &Overrides::new(), top)?;
    certify(g, &run.coloring)?;
    Ok((tree, run))
}

/// Colors from per-vertex lists of at least `max_degree + 2` colors.
///
/// Vertex 0 takes the largest color `a` of its list; `a` is then removed from
/// every other list and the rest is colored greedily, "smallest" meaning
/// the first remaining list color. With every list equal to
/// `1..=max_degree + 2` this is exactly [`color_delta_plus_2`] at vertex 0.
pub fn list_color_delta_plus_2(g: &Graph, lists: &ListAssignment) -> Result<Coloring> {
    if lists.len() != g.n() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            found: lists.len(),
        });
    }
    if g.n() == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    g.require_connected_girth_five()?;
    let required = g.max_degree() + 2;
    if let Some(v) = (0..g.n()).find(|&v| lists.list(v).len() < required) {
        return Err(Error::UndersizedList {
            vertex: v,
            size: lists.list(v).len(),
            required,
        });
    }
    let w = 0;
    let alpha = *lists.list(w).last().expect("lists are non-empty");
    let palette = (0..g.n())
        .filter_map(|v| lists.list(v).last().copied())
        .max()
        .unwrap_or(alpha);
    let tree = BfsTree::plain(g, w)?;
    let mut prefix = Coloring::uncolored(g.n());
    prefix.set(w, alpha);
    let mut overrides = Overrides::new();
    for v in (0..g.n()).filter(|&v| v != w) {
        overrides.restrict(v, lists.list(v).iter().copied().filter(|&c| c != alpha));
    }
    let run = greedy_extend(g, &tree, &prefix, &overrides, palette)?;
    certify(g, &run.coloring)?;
    Ok(run.coloring)
}

fn certify(g: &Graph, coloring: &Coloring) -> Result<()> {
    let verdict = symmetry::is_distinguishing(g, coloring)?;
    if verdict.distinguishing {
        Ok(())
    } else {
        Err(Error::Internal("greedy construction is not distinguishing".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, petersen, star};
    use crate::tree::TreeDirectives;

    fn rooted_prefix(n: usize, root: usize, color: Color) -> Coloring {
        let mut c = Coloring::uncolored(n);
        c.set(root, color);
        c
    }

    #[test]
    fn star_leaves_take_sibling_rule() {
        let g = star(4).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let run = greedy_extend(&g, &t, &rooted_prefix(4, 0, 4), &Overrides::new(), 5).unwrap();
        assert_eq!(run.coloring.to_vec().unwrap(), vec![4, 1, 2, 3]);
        assert!(run.steps[1..].iter().all(|s| s.rule == Rule::Siblings));
    }

    #[test]
    fn path_from_an_end() {
        let g = path(3).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let run = greedy_extend(&g, &t, &rooted_prefix(3, 0, 3), &Overrides::new(), 4).unwrap();
        assert_eq!(run.coloring.to_vec().unwrap(), vec![3, 1, 2]);
    }

    #[test]
    fn five_cycle_hand_trace() {
        // w = 0 with children a = 1, b = 4; u = 2 under a, v = 3 under b.
        let g = cycle(5).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let run = greedy_extend(&g, &t, &rooted_prefix(5, 0, 3), &Overrides::new(), 5).unwrap();
        let c = run.coloring.to_vec().unwrap();
        assert_eq!((c[1], c[4], c[2], c[3]), (1, 2, 2, 1));
        assert_eq!(run.steps[2].rule, Rule::Siblings);
        assert_eq!(run.steps[3].rule, Rule::Neighborhood);
    }

    #[test]
    fn forced_color_must_be_proper() {
        let g = path(3).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let mut o = Overrides::new();
        o.force(1, 3);
        assert!(matches!(
            greedy_extend(&g, &t, &rooted_prefix(3, 0, 3), &o, 4),
            Err(Error::Improper {
                vertex: 1,
                neighbor: 0,
                color: 3
            })
        ));
    }

    #[test]
    fn palette_exhaustion_is_reported() {
        let g = star(4).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        assert!(matches!(
            greedy_extend(&g, &t, &rooted_prefix(4, 0, 1), &Overrides::new(), 3),
            Err(Error::PaletteExhausted { vertex: 3, bound: 3 })
        ));
    }

    #[test]
    fn prefix_must_follow_tree_order() {
        let g = path(3).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        assert_eq!(
            greedy_extend(&g, &t, &rooted_prefix(3, 2, 1), &Overrides::new(), 4),
            Err(Error::NotPrefix)
        );
        assert_eq!(
            greedy_extend(&g, &t, &Coloring::uncolored(3), &Overrides::new(), 4),
            Err(Error::NotPrefix)
        );
    }

    #[test]
    fn forbid_and_choose() {
        let g = star(4).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let mut o = Overrides::new();
        o.forbid(1, [1, 2])
            .choose(3, |c: &Choice<'_>| Ok(*c.candidates.last().unwrap()));
        let run = greedy_extend(&g, &t, &rooted_prefix(4, 0, 4), &o, 5).unwrap();
        assert_eq!(run.coloring.to_vec().unwrap(), vec![4, 3, 1, 5]);
        assert!(run.steps[1].restricted);
        assert_eq!(run.steps[3].rule, Rule::Chosen);
    }

    #[test]
    fn chooser_returning_illegal_color_is_internal() {
        let g = path(2).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        let mut o = Overrides::new();
        o.choose(1, |_: &Choice<'_>| Ok(1));
        assert!(greedy_extend(&g, &t, &rooted_prefix(2, 0, 1), &o, 3)
            .unwrap_err()
            .is_internal());
    }

    #[test]
    fn delta_plus_2_examples() {
        assert_eq!(
            color_delta_plus_2(&path(3).unwrap(), 0).unwrap().to_vec().unwrap(),
            vec![4, 1, 2]
        );
        assert_eq!(
            color_delta_plus_2(&star(4).unwrap(), 0).unwrap().to_vec().unwrap(),
            vec![5, 1, 2, 3]
        );
        let c = color_delta_plus_2(&petersen(), 0).unwrap();
        assert_eq!(c.max_color(), Some(5));
        assert!(symmetry::is_distinguishing(&petersen(), &c).unwrap().distinguishing);
    }

    #[test]
    fn delta_plus_2_rejects_short_cycles() {
        let c4 = cycle(4).unwrap();
        assert_eq!(color_delta_plus_2(&c4, 0), Err(Error::GirthTooSmall { girth: 4 }));
    }

    #[test]
    fn full_lists_reduce_to_delta_plus_2() {
        let g = petersen();
        let lists = ListAssignment::uniform(10, 5);
        assert_eq!(
            list_color_delta_plus_2(&g, &lists).unwrap(),
            color_delta_plus_2(&g, 0).unwrap()
        );
    }

    #[test]
    fn list_coloring_on_a_path() {
        let g = path(3).unwrap();
        let lists = ListAssignment::new(vec![vec![5, 6, 7, 8]; 3]).unwrap();
        // Root 0 takes 8; the rest choose from {5, 6, 7}.
        assert_eq!(
            list_color_delta_plus_2(&g, &lists).unwrap().to_vec().unwrap(),
            vec![8, 5, 6]
        );
        let short = ListAssignment::new(vec![vec![5, 6, 7]; 3]).unwrap();
        assert_eq!(
            list_color_delta_plus_2(&g, &short),
            Err(Error::UndersizedList {
                vertex: 0,
                size: 3,
                required: 4
            })
        );
        let single = ListAssignment::new(vec![vec![5], vec![5, 6, 7, 8], vec![5, 6, 7, 8]]).unwrap();
        assert!(matches!(
            list_color_delta_plus_2(&g, &single),
            Err(Error::UndersizedList { vertex: 0, .. })
        ));
    }

    #[test]
    fn greedy_bounds_on_petersen_trees() {
        let g = petersen();
        for root in 0..10 {
            let t = BfsTree::new(&g, root, &TreeDirectives::new()).unwrap();
            let run = greedy_extend(&g, &t, &rooted_prefix(10, root, 5), &Overrides::new(), 5).unwrap();
            check_color_bounds(&g, &t, &run).unwrap();
        }
    }
}
