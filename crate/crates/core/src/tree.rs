//! Breadth-first spanning trees with controllable sibling order and parent
//! choice.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A breadth-first spanning tree together with its visitation order.
///
/// `order` lists the root, then each level in turn; within a level the
/// vertices are grouped by parent, parents taken in their own order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    order: Vec<usize>,
    position: Vec<usize>,
    children: Vec<Vec<usize>>,
}

/// Shape requests applied while building a [`BfsTree`].
///
/// Positions are 0-based slots among the parent's children; a vertex may
/// be given either a position or the last slot, not both.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TreeDirectives {
    parents: BTreeMap<usize, usize>,
    positions: BTreeMap<usize, usize>,
    last: Vec<usize>,
}

impl TreeDirectives {
    pub fn new() -> Self {
        Self::default()
    }

    /// Attach `child` to `parent`, which must be a neighbor one level up.
    pub fn parent(mut self, child: usize, parent: usize) -> Self {
        self.parents.insert(child, parent);
        self
    }

    /// Put `child` in slot `position` among its parent's children.
    pub fn position(mut self, child: usize, position: usize) -> Self {
        self.positions.insert(child, position);
        self
    }

    /// Make `child` the last child of its parent.
    pub fn last(mut self, child: usize) -> Self {
        if !self.last.contains(&child) {
            self.last.push(child);
        }
        self
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty() && self.positions.is_empty() && self.last.is_empty()
    }
}

impl BfsTree {
    /// Builds the tree rooted at `root`.
    ///
    /// Without directives a vertex hangs from its first neighbor (in tree
    /// order) on the level above, and siblings are sorted by vertex id.
    pub fn new(g: &Graph, root: usize, directives: &TreeDirectives) -> Result<Self> {
        g.check_vertex(root)?;
        let n = g.n();
        let dist = g.distances(root);
        let mut level = Vec::with_capacity(n);
        for d in &dist {
            level.push(d.ok_or(Error::Disconnected)?);
        }
        for (&child, &parent) in &directives.parents {
            g.check_vertex(child)?;
            g.check_vertex(parent)?;
            if !g.has_edge(child, parent) || level[child] != level[parent] + 1 {
                return Err(Error::Constraint(format!(
                    "vertex {child} cannot hang from {parent}: not a neighbor one level up"
                )));
            }
        }
        for &v in directives.positions.keys().chain(&directives.last) {
            g.check_vertex(v)?;
            if v == root {
                return Err(Error::Constraint("the root has no parent to order under".into()));
            }
        }
        if let Some(v) = directives.last.iter().find(|v| directives.positions.contains_key(v)) {
            return Err(Error::Constraint(format!(
                "vertex {v} has both a position and last-child request"
            )));
        }

        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut position = vec![usize::MAX; n];
        position[root] = 0;
        let mut frontier = vec![root];
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next: Vec<usize> = (0..n).filter(|&v| level[v] == depth + 1).collect();
            for &v in &next {
                let p = match directives.parents.get(&v) {
                    Some(&p) => p,
                    None => *g
                        .neighbors(v)
                        .iter()
                        .filter(|&&u| level[u] == depth)
                        .min_by_key(|&&u| position[u])
                        .expect("a vertex at positive depth has a neighbor one level up"),
                };
                parent[v] = Some(p);
                children[p].push(v);
            }
            next.clear();
            for &p in &frontier {
                let arranged = arrange_children(p, &children[p], directives)?;
                for &c in &arranged {
                    position[c] = order.len();
                    order.push(c);
                    next.push(c);
                }
                children[p] = arranged;
            }
            frontier = next;
            depth += 1;
        }
        Ok(BfsTree {
            root,
            parent,
            level,
            order,
            position,
            children,
        })
    }

    /// The tree with no directives.
    pub fn plain(g: &Graph, root: usize) -> Result<Self> {
        Self::new(g, root, &TreeDirectives::default())
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// Vertices in visitation order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Index of `v` in [`Self::order`].
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Other children of `v`'s parent; empty for the root.
    pub fn siblings(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let family: &[usize] = match self.parent[v] {
            Some(p) => &self.children[p],
            None => &[],
        };
        family.iter().copied().filter(move |&u| u != v)
    }

    /// Number of vertices on each level, starting with the root's.
    pub fn level_sizes(&self) -> Vec<usize> {
        let depth = self.level.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; depth + 1];
        for &l in &self.level {
            sizes[l] += 1;
        }
        sizes
    }

    /// Re-checks every structural invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        if self.order.len() != g.n() || self.order.first() != Some(&self.root) {
            return fail("order does not start at the root or misses vertices".into());
        }
        let mut seen = vec![false; g.n()];
        for (i, &v) in self.order.iter().enumerate() {
            if seen[v] || self.position[v] != i {
                return fail(format!("vertex {v} misplaced in order"));
            }
            seen[v] = true;
            if i > 0 && self.level[self.order[i - 1]] > self.level[v] {
                return fail("order is not level-monotone".into());
            }
            match self.parent[v] {
                None if v != self.root => return fail(format!("vertex {v} has no parent")),
                Some(p) => {
                    if !g.has_edge(p, v) || self.level[v] != self.level[p] + 1 || self.position[p] >= i {
                        return fail(format!("bad parent {p} for vertex {v}"));
                    }
                }
                None => {}
            }
        }
        // Children of one parent are consecutive, parents in their own order.
        let mut expected = Vec::with_capacity(g.n());
        expected.push(self.root);
        let mut i = 0;
        while i < expected.len() {
            expected.extend_from_slice(&self.children[expected[i]]);
            i += 1;
        }
        if expected != self.order {
            return fail("order is not grouped by parent".into());
        }
        Ok(())
    }
}

fn arrange_children(p: usize, kids: &[usize], directives: &TreeDirectives) -> Result<Vec<usize>> {
    let len = kids.len();
    let mut slots: Vec<Option<usize>> = vec![None; len];
    let mut placed = vec![false; len];
    for (i, &c) in kids.iter().enumerate() {
        if let Some(&pos) = directives.positions.get(&c) {
            if pos >= len || slots[pos].is_some() {
                return Err(Error::Constraint(format!(
                    "cannot place vertex {c} at slot {pos} among the {len} children of {p}"
                )));
            }
            slots[pos] = Some(c);
            placed[i] = true;
        }
    }
    for (i, &c) in kids.iter().enumerate() {
        if directives.last.contains(&c) {
            if slots[len - 1].is_some() {
                return Err(Error::Constraint(format!("two vertices claim the last slot under {p}")));
            }
            slots[len - 1] = Some(c);
            placed[i] = true;
        }
    }
    let mut rest: Vec<usize> = kids.iter().zip(&placed).filter(|(_, &p)| !p).map(|(&c, _)| c).collect();
    rest.sort_unstable();
    let mut rest = rest.into_iter();
    Ok(slots
        .into_iter()
        .map(|s| s.or_else(|| rest.next()).expect("slot count matches"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, petersen, star};

    #[test]
    fn star_from_center() {
        let t = BfsTree::plain(&star(4).unwrap(), 0).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 3]);
        assert_eq!(t.order(), &[0, 1, 2, 3]);
    }

    #[test]
    fn petersen_levels_from_every_root() {
        let g = petersen();
        for r in 0..10 {
            let t = BfsTree::plain(&g, r).unwrap();
            assert_eq!(t.level_sizes(), vec![1, 3, 6]);
            t.validate(&g).unwrap();
        }
    }

    #[test]
    fn five_cycle_levels() {
        let g = cycle(5).unwrap();
        let t = BfsTree::plain(&g, 0).unwrap();
        assert_eq!(t.level_sizes(), vec![1, 2, 2]);
        assert_eq!(t.order(), &[0, 1, 4, 2, 3]);
    }

    #[test]
    fn positions_and_last_child() {
        let g = star(5).unwrap();
        let d = TreeDirectives::new().position(3, 0).last(1);
        let t = BfsTree::new(&g, 0, &d).unwrap();
        assert_eq!(t.children(0), &[3, 2, 4, 1]);
        t.validate(&g).unwrap();
    }

    #[test]
    fn parent_reassignment_regroups_order() {
        // 6-cycle rooted at 0: vertex 3 naturally hangs from 2.
        let g = cycle(6).unwrap();
        let t = BfsTree::new(&g, 0, &TreeDirectives::new().parent(3, 4)).unwrap();
        assert_eq!(t.parent(3), Some(4));
        assert_eq!(t.order(), &[0, 1, 5, 2, 4, 3]);
        t.validate(&g).unwrap();
    }

    #[test]
    fn infeasible_directives_are_rejected() {
        let g = cycle(6).unwrap();
        assert!(matches!(
            BfsTree::new(&g, 0, &TreeDirectives::new().parent(3, 1)),
            Err(Error::Constraint(_))
        ));
        assert!(matches!(
            BfsTree::new(&g, 0, &TreeDirectives::new().position(1, 5)),
            Err(Error::Constraint(_))
        ));
        assert!(matches!(
            BfsTree::new(&g, 0, &TreeDirectives::new().last(1).last(5)),
            Err(Error::Constraint(_))
        ));
    }
}
