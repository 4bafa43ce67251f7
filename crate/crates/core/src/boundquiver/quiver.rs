//! Finite acyclic quivers and their paths.

use std::collections::HashMap;

use super::BoundQuiverError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// A path as a sequence of arrows, composed left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver, BoundQuiverError> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(BoundQuiverError::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            let src = *seen.get(&s).ok_or_else(|| BoundQuiverError::UnknownVertex(s.clone()))?;
            let tgt = *seen.get(&t).ok_or_else(|| BoundQuiverError::UnknownVertex(t.clone()))?;
            if names.insert(name.clone(), ()).is_some() {
                return Err(BoundQuiverError::InvalidQuiver(format!("duplicate arrow {name}")));
            }
            out.push(Arrow { name, src, tgt });
        }
        let q = Quiver { vertices, arrows: out };
        if q.topological_order().is_none() {
            return Err(BoundQuiverError::CyclicQuiver);
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize, BoundQuiverError> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| BoundQuiverError::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, BoundQuiverError> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| BoundQuiverError::UnknownArrow(name.to_string()))
    }

    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].tgt == v).collect()
    }

    pub fn arrows_out_of(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].src == v).collect()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows_out_of(v).is_empty()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows_into(v).is_empty()
    }

    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indeg = vec![0; n];
        for a in &self.arrows {
            indeg[a.tgt] += 1;
        }
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::new();
        while let Some(v) = stack.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.src == v) {
                indeg[a.tgt] -= 1;
                if indeg[a.tgt] == 0 {
                    stack.push(a.tgt);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// The quiver with every arrow reversed; arrow indices are preserved.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), src: a.tgt, tgt: a.src })
                .collect(),
        }
    }

    /// Same vertices, with the given arrows replaced.
    pub(crate) fn with_arrows(&self, arrows: Vec<Arrow>) -> Quiver {
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// The full subquiver on `keep`, with vertex indices renumbered in order.
    pub fn full_subquiver(&self, keep: &[usize]) -> Quiver {
        let pos = |v: usize| keep.iter().position(|&k| k == v);
        Quiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .filter_map(|a| {
                    Some(Arrow { name: a.name.clone(), src: pos(a.src)?, tgt: pos(a.tgt)? })
                })
                .collect(),
        }
    }

    /// All paths including the trivial ones, finite by acyclicity.
    pub fn all_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for v in 0..self.vertices.len() {
            let mut stack = vec![Path { src: v, tgt: v, arrows: vec![] }];
            while let Some(p) = stack.pop() {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.src == p.tgt {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        stack.push(Path { src: p.src, tgt: a.tgt, arrows });
                    }
                }
                out.push(p);
            }
        }
        out
    }

    /// Check that an arrow sequence is a path from `src`.
    pub fn path_from(&self, src: usize, arrows: &[usize]) -> Option<Path> {
        let mut cur = src;
        for &a in arrows {
            let ar = self.arrows.get(a)?;
            if ar.src != cur {
                return None;
            }
            cur = ar.tgt;
        }
        Some(Path { src, tgt: cur, arrows: arrows.to_vec() })
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("e_{}", self.vertices[p.src])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![("a".into(), "1".into(), "2".into()), ("b".into(), "2".into(), "3".into())],
        )
        .unwrap()
    }

    #[test]
    fn paths_of_a3() {
        let q = a3();
        let paths = q.all_paths();
        assert_eq!(paths.len(), 6);
        assert!(paths.iter().any(|p| p.arrows == vec![0, 1] && p.src == 0 && p.tgt == 2));
    }

    #[test]
    fn rejects_cycles_and_duplicates() {
        let cyc = Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "2".into()), ("b".into(), "2".into(), "1".into())],
        );
        assert_eq!(cyc, Err(BoundQuiverError::CyclicQuiver));
        let dup = Quiver::new(vec!["1".into(), "1".into()], vec![]);
        assert!(matches!(dup, Err(BoundQuiverError::InvalidQuiver(_))));
    }

    #[test]
    fn opposite_reverses() {
        let q = a3().opposite();
        assert_eq!(q.arrows()[0].src, 1);
        assert!(q.is_sink(0));
        assert!(q.is_source(2));
    }
}
