use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::ParseError;
use crate::graph::Graph;

/// A bijection on `0..n`, stored as the image of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Wraps an image vector, or `None` if it is not a bijection.
    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// `self` after `first`: `v -> self(first(v))`.
    pub fn after(&self, first: &Permutation) -> Permutation {
        Permutation {
            image: first.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// Whether this maps the edges of `g` onto the edges of `h`.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.n() == self.len()
            && h.n() == self.len()
            && g.edge_count() == h.edge_count()
            && g.edges().all(|(u, v)| h.has_edge(self.image[u], self.image[v]))
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.is_isomorphism(g, g)
    }

    pub fn preserves(&self, coloring: &Coloring) -> bool {
        (0..self.len()).all(|v| coloring.get(v) == coloring.get(self.image[v]))
    }

    /// Renders `u -> v` lines, 1-indexed, sorted by `u`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.image.iter().enumerate() {
            let _ = writeln!(out, "{} -> {}", u + 1, v + 1);
        }
        out
    }

    /// Parses the `u -> v` format; every vertex of `0..n` must appear once.
    pub fn parse(text: &str, n: usize) -> Result<Permutation, ParseError> {
        let mut image = vec![None; n];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            let malformed = || ParseError::Malformed {
                line,
                content: trimmed.to_string(),
            };
            let (u, v) = trimmed.split_once("->").ok_or_else(malformed)?;
            let u: usize = u.trim().parse().map_err(|_| malformed())?;
            let v: usize = v.trim().parse().map_err(|_| malformed())?;
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                }
            }
            if image[u - 1].replace(v - 1).is_some() {
                return Err(ParseError::DuplicateVertex { line, vertex: u });
            }
        }
        let image: Option<Vec<usize>> = image.into_iter().collect();
        image.and_then(Permutation::from_images).ok_or(ParseError::Malformed {
            line: 0,
            content: "not a bijection".into(),
        })
    }
}
