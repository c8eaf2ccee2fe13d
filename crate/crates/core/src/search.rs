//! Backtracking search for color-preserving isomorphisms.
//!
//! Both sides carry a vertex coloring (the "cells"). Each search node
//! refines the two colorings in lockstep by neighbor-color signatures; a
//! mismatch in the signature multisets prunes the node. When a cell still
//! holds several vertices, its least left vertex is individualized against
//! every right vertex of the matching cell in ascending order. Refinement is
//! invariant under isomorphism, so no solution is ever pruned, and the
//! fixed branching order makes every answer deterministic.

use crate::graph::Graph;
use crate::permutation::Permutation;

pub(crate) type Cells = Vec<u32>;

pub(crate) struct Matcher<'a> {
    left: &'a Graph,
    right: &'a Graph,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(left: &'a Graph, right: &'a Graph) -> Self {
        debug_assert_eq!(left.n(), right.n());
        Matcher { left, right }
    }

    pub(crate) fn automorphisms(g: &'a Graph) -> Self {
        Matcher { left: g, right: g }
    }

    fn n(&self) -> usize {
        self.left.n()
    }

    /// Refines both sides to a stable partition. Cell ids become ranks of
    /// signatures, identical on both sides. Returns false on a mismatch.
    pub(crate) fn refine_pair(&self, l: &mut Cells, r: &mut Cells) -> bool {
        let mut classes = 0usize;
        loop {
            let ls = signatures(self.left, l);
            let rs = signatures(self.right, r);
            let mut sorted: Vec<&(u32, Vec<u32>)> = ls.iter().collect();
            sorted.sort_unstable();
            let mut rsorted: Vec<&(u32, Vec<u32>)> = rs.iter().collect();
            rsorted.sort_unstable();
            if sorted != rsorted {
                return false;
            }
            sorted.dedup();
            let rank = |sig: &(u32, Vec<u32>)| sorted.binary_search(&sig).expect("present") as u32;
            for (v, sig) in ls.iter().enumerate() {
                l[v] = rank(sig);
            }
            for (v, sig) in rs.iter().enumerate() {
                r[v] = rank(sig);
            }
            if sorted.len() == classes {
                return true;
            }
            classes = sorted.len();
        }
    }

    /// Refines a single automorphism-side partition in place.
    pub(crate) fn refine(&self, cells: &mut Cells) {
        let mut twin = cells.clone();
        let ok = self.refine_pair(cells, &mut twin);
        debug_assert!(ok);
    }

    /// Gives `v` a cell of its own, above every existing cell id; call a
    /// refinement afterwards.
    pub(crate) fn individualize(&self, cells: &mut Cells, v: usize) {
        let fresh = cells.iter().max().map_or(0, |&m| m + 1);
        cells[v] = fresh;
    }

    /// First cell (by id) holding more than one vertex, with its members.
    pub(crate) fn target_cell(cells: &Cells) -> Option<Vec<usize>> {
        let mut counts = vec![0usize; cells.len() + 1];
        for &c in cells {
            counts[c as usize] += 1;
        }
        let target = counts.iter().position(|&k| k > 1)? as u32;
        Some((0..cells.len()).filter(|&v| cells[v] == target).collect())
    }

    /// Some isomorphism left -> right compatible with the two unrefined
    /// colorings, searching leaves in branch order.
    pub(crate) fn extend(&self, mut l: Cells, mut r: Cells) -> Option<Permutation> {
        if !self.refine_pair(&mut l, &mut r) {
            return None;
        }
        match Self::target_cell(&l) {
            None => {
                let mut by_cell = vec![usize::MAX; self.n()];
                for (v, &c) in r.iter().enumerate() {
                    by_cell[c as usize] = v;
                }
                let map = Permutation::from_images(l.iter().map(|&c| by_cell[c as usize]).collect())?;
                map.is_isomorphism(self.left, self.right).then_some(map)
            }
            Some(cell) => {
                let u = cell[0];
                let target = l[u];
                (0..self.n()).filter(|&v| r[v] == target).find_map(|v| {
                    let (mut l2, mut r2) = (l.clone(), r.clone());
                    self.individualize(&mut l2, u);
                    self.individualize(&mut r2, v);
                    self.extend(l2, r2)
                })
            }
        }
    }

    /// A non-identity automorphism of the colored graph, if any exists.
    ///
    /// Walks the first path of the search tree; at each level, tries to
    /// send the individualized vertex elsewhere in its cell.
    pub(crate) fn nontrivial(&self, mut cells: Cells) -> Option<Permutation> {
        self.refine(&mut cells);
        while let Some(cell) = Self::target_cell(&cells) {
            let u = cell[0];
            for &v in &cell[1..] {
                let (mut l, mut r) = (cells.clone(), cells.clone());
                self.individualize(&mut l, u);
                self.individualize(&mut r, v);
                if let Some(p) = self.extend(l, r) {
                    return Some(p);
                }
            }
            self.individualize(&mut cells, u);
            self.refine(&mut cells);
        }
        None
    }

    /// Generators and the stabilizer-chain orbit lengths of the automorphism
    /// group of the colored graph. The group order is the product of the
    /// orbit lengths.
    pub(crate) fn group(&self, mut cells: Cells) -> (Vec<Permutation>, Vec<usize>) {
        self.refine(&mut cells);
        let mut gens: Vec<Permutation> = Vec::new();
        let mut base: Vec<usize> = Vec::new();
        let mut orbit_lengths = Vec::new();
        while let Some(cell) = Self::target_cell(&cells) {
            let u = cell[0];
            let mut orbit = vec![u];
            let mut in_orbit = vec![false; self.n()];
            in_orbit[u] = true;
            let close = |orbit: &mut Vec<usize>, in_orbit: &mut Vec<bool>, gens: &[Permutation]| {
                let stabilizing: Vec<&Permutation> =
                    gens.iter().filter(|p| base.iter().all(|&b| p.apply(b) == b)).collect();
                let mut i = 0;
                while i < orbit.len() {
                    let x = orbit[i];
                    for p in &stabilizing {
                        let y = p.apply(x);
                        if !in_orbit[y] {
                            in_orbit[y] = true;
                            orbit.push(y);
                        }
                    }
                    i += 1;
                }
            };
            close(&mut orbit, &mut in_orbit, &gens);
            for &v in &cell[1..] {
                if in_orbit[v] {
                    continue;
                }
                let (mut l, mut r) = (cells.clone(), cells.clone());
                self.individualize(&mut l, u);
                self.individualize(&mut r, v);
                if let Some(p) = self.extend(l, r) {
                    gens.push(p);
                    close(&mut orbit, &mut in_orbit, &gens);
                }
            }
            orbit_lengths.push(orbit.len());
            base.push(u);
            self.individualize(&mut cells, u);
            self.refine(&mut cells);
        }
        (gens, orbit_lengths)
    }

    /// Whether some automorphism fixes every vertex of `fixed` and moves
    /// something.
    fn stabilizer_nontrivial(&self, cells: &Cells, fixed: usize) -> bool {
        let mut c = cells.clone();
        for v in 0..fixed {
            self.individualize(&mut c, v);
            self.refine(&mut c);
        }
        self.nontrivial(c).is_some()
    }

    /// The lexicographically least non-identity automorphism (comparing
    /// image vectors), if the group is non-trivial.
    pub(crate) fn least_nontrivial(&self, cells: &Cells) -> Option<Permutation> {
        let n = self.n();
        if !self.stabilizer_nontrivial(cells, 0) {
            return None;
        }
        // The least element fixes the longest possible prefix 0..k and
        // moves k, so k is the last point whose prefix stabilizer is
        // non-trivial.
        let (mut lo, mut hi) = (0, n - 1);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.stabilizer_nontrivial(cells, mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let k = lo;
        let mut l = cells.clone();
        self.refine(&mut l);
        for v in 0..k {
            self.individualize(&mut l, v);
            self.refine(&mut l);
        }
        let mut r = l.clone();
        for v in k..n {
            if Self::target_cell(&l).is_none() {
                break;
            }
            let lower = if v == k { k + 1 } else { 0 };
            let mut chosen = None;
            for c in (lower..n).filter(|&c| r[c] == l[v]) {
                let (mut l2, mut r2) = (l.clone(), r.clone());
                self.individualize(&mut l2, v);
                self.individualize(&mut r2, c);
                if self.extend(l2.clone(), r2.clone()).is_some() {
                    let ok = self.refine_pair(&mut l2, &mut r2);
                    debug_assert!(ok);
                    chosen = Some((l2, r2));
                    break;
                }
            }
            let (l2, r2) = chosen.expect("a non-trivial stabilizer extends");
            l = l2;
            r = r2;
        }
        let result = self.extend(l, r)?;
        debug_assert!(!result.is_identity());
        Some(result)
    }
}

fn signatures(g: &Graph, cells: &Cells) -> Vec<(u32, Vec<u32>)> {
    (0..g.n())
        .map(|v| {
            let mut around: Vec<u32> = g.neighbors(v).iter().map(|&u| cells[u]).collect();
            around.sort_unstable();
            (cells[v], around)
        })
        .collect()
}
