//! Vertex colorings, list assignments, and their text formats.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::graph::Graph;
use crate::Color;

/// A total or partial assignment of positive colors to vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    /// The coloring of `n` vertices with nothing assigned.
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    /// A total coloring from a color per vertex.
    ///
    /// # Panics
    /// If any color is zero.
    pub fn from_colors(colors: Vec<Color>) -> Self {
        assert!(colors.iter().all(|&c| c > 0), "colors are positive");
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, color: Color) {
        assert!(color > 0, "colors are positive");
        self.colors[v] = Some(color);
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.colors.iter().flatten().count()
    }

    /// The colors of a total coloring.
    pub fn to_vec(&self) -> Result<Vec<Color>> {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| c.ok_or(Error::Partial { vertex: v }))
            .collect()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.colors.iter().flatten().copied().max()
    }

    /// Number of distinct colors in use.
    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    /// First monochromatic edge among colored vertices, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| matches!((self.colors[u], self.colors[v]), (Some(a), Some(b)) if a == b))
    }

    /// Properness on the colored vertices.
    pub fn check_proper(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::SizeMismatch {
                expected: g.n(),
                found: self.len(),
            });
        }
        match self.conflict(g) {
            Some((u, v)) => Err(Error::Improper {
                vertex: v,
                neighbor: u,
                color: self.colors[u].unwrap_or(0),
            }),
            None => Ok(()),
        }
    }

    /// Total and proper.
    pub fn check_total_proper(&self, g: &Graph) -> Result<()> {
        self.check_proper(g)?;
        self.to_vec().map(|_| ())
    }

    /// Sorted colors on the neighborhood of `v`; uncolored neighbors skipped.
    pub fn neighborhood_multiset(&self, g: &Graph, v: usize) -> Vec<Color> {
        let mut m: Vec<Color> = g.neighbors(v).iter().filter_map(|&u| self.colors[u]).collect();
        m.sort_unstable();
        m
    }

    /// The coloring read through a vertex map: vertex `v` of the result
    /// takes the color of `source[v]`.
    pub fn pull_back(&self, source: &[usize]) -> Coloring {
        Coloring {
            colors: source.iter().map(|&u| self.colors[u]).collect(),
        }
    }

    /// Renders `v <vertex> <color>` lines, 1-indexed, for colored vertices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            if let Some(c) = c {
                let _ = writeln!(out, "v {} {}", v + 1, c);
            }
        }
        out
    }

    /// Parses `v <vertex> <color>` lines for a graph on `n` vertices;
    /// blank lines and `c` comments are skipped. Missing vertices stay
    /// uncolored.
    pub fn parse(text: &str, n: usize) -> Result<Coloring, ParseError> {
        let mut colors = vec![None; n];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let malformed = || ParseError::Malformed {
                line,
                content: trimmed.to_string(),
            };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let ["v", vertex, color] = fields.as_slice() else {
                return Err(malformed());
            };
            let vertex: usize = vertex.parse().map_err(|_| malformed())?;
            let color: Color = color.parse().map_err(|_| malformed())?;
            if vertex == 0 || vertex > n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
            if color == 0 {
                return Err(ParseError::ZeroColor { line });
            }
            if colors[vertex - 1].replace(color).is_some() {
                return Err(ParseError::DuplicateVertex { line, vertex });
            }
        }
        Ok(Coloring { colors })
    }
}

/// Allowed colors per vertex, each list sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Builds from per-vertex color sets; lists must be non-empty and
    /// colors positive.
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let lists: Vec<Vec<Color>> = lists
            .into_iter()
            .map(|l| l.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        for (v, l) in lists.iter().enumerate() {
            if l.is_empty() || l[0] == 0 {
                return Err(Error::UndersizedList {
                    vertex: v,
                    size: l.len(),
                    required: 1,
                });
            }
        }
        Ok(ListAssignment { lists })
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: Color) -> Self {
        ListAssignment {
            lists: vec![(1..=k).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Renders `l <vertex> <c1> <c2> ...` lines, 1-indexed.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, l) in self.lists.iter().enumerate() {
            let _ = write!(out, "l {}", v + 1);
            for c in l {
                let _ = write!(out, " {c}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses `l <vertex> <colors...>` lines; every vertex must appear once.
    pub fn parse(text: &str, n: usize) -> Result<ListAssignment> {
        let mut lists: Vec<Option<Vec<Color>>> = vec![None; n];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let malformed = || ParseError::Malformed {
                line,
                content: trimmed.to_string(),
            };
            let mut fields = trimmed.split_whitespace();
            if fields.next() != Some("l") {
                return Err(malformed().into());
            }
            let vertex: usize = fields.next().and_then(|f| f.parse().ok()).ok_or_else(malformed)?;
            if vertex == 0 || vertex > n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n }.into());
            }
            let colors: Vec<Color> = fields
                .map(|f| f.parse().map_err(|_| malformed()))
                .collect::<Result<_, _>>()?;
            if colors.contains(&0) {
                return Err(ParseError::ZeroColor { line }.into());
            }
            if lists[vertex - 1].replace(colors).is_some() {
                return Err(ParseError::DuplicateVertex { line, vertex }.into());
            }
        }
        let lists = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| {
                l.ok_or(Error::UndersizedList {
                    vertex: v,
                    size: 0,
                    required: 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ListAssignment::new(lists)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn properness_and_multisets() {
        let g = cycle(5).unwrap();
        let good = Coloring::from_colors(vec![1, 2, 3, 1, 2]);
        assert!(good.check_total_proper(&g).is_ok());
        assert_eq!(good.neighborhood_multiset(&g, 0), vec![2, 2]);
        assert_eq!(good.distinct_colors(), 3);
        let bad = Coloring::from_colors(vec![1, 2, 1, 2, 1]);
        assert!(matches!(bad.check_proper(&g), Err(Error::Improper { .. })));
    }

    #[test]
    fn partial_colorings_are_not_total() {
        let mut c = Coloring::uncolored(3);
        c.set(1, 4);
        assert_eq!(c.to_vec(), Err(Error::Partial { vertex: 0 }));
        assert_eq!(c.colored_count(), 1);
    }

    #[test]
    fn coloring_text_round_trip() {
        let c = Coloring::from_colors(vec![3, 1, 2]);
        assert_eq!(c.to_text(), "v 1 3\nv 2 1\nv 3 2\n");
        assert_eq!(Coloring::parse(&c.to_text(), 3).unwrap(), c);
        assert!(matches!(
            Coloring::parse("v 4 1", 3),
            Err(ParseError::VertexOutOfRange { .. })
        ));
        assert!(matches!(Coloring::parse("v 1 0", 3), Err(ParseError::ZeroColor { .. })));
        assert!(matches!(
            Coloring::parse("v 1 1\nv 1 2", 3),
            Err(ParseError::DuplicateVertex { .. })
        ));
    }

    #[test]
    fn list_text_round_trip() {
        let l = ListAssignment::new(vec![vec![3, 1], vec![2], vec![5, 6, 7]]).unwrap();
        assert_eq!(l.list(0), &[1, 3]);
        assert_eq!(ListAssignment::parse(&l.to_text(), 3).unwrap(), l);
        assert!(ListAssignment::parse("l 1 1\nl 2 2", 3).is_err());
        assert!(ListAssignment::new(vec![vec![]]).is_err());
    }
}
