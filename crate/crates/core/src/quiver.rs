//! Finite acyclic quivers.

use std::collections::HashMap;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite directed graph without oriented cycles. Vertices and arrows are
/// addressed by index; names are kept for I/O.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let mut arrow_names = HashMap::new();
        let mut parsed = Vec::new();
        for (idx, (name, from, to)) in arrows.into_iter().enumerate() {
            if arrow_names.insert(name.clone(), idx).is_some() {
                return Err(Error::DuplicateName(name));
            }
            let source = *seen.get(&from).ok_or(Error::UnknownVertex(from))?;
            let target = *seen.get(&to).ok_or(Error::UnknownVertex(to))?;
            parsed.push(Arrow {
                name,
                source,
                target,
            });
        }
        let q = Quiver {
            vertices,
            arrows: parsed,
        };
        q.check_acyclic()?;
        Ok(q)
    }

    /// Kahn's algorithm; an oriented cycle leaves vertices unprocessed.
    fn check_acyclic(&self) -> Result<()> {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = queue.pop() {
            done += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        if done != n {
            let witness = (0..n)
                .find(|&v| indeg[v] > 0)
                .map(|v| self.vertices[v].clone());
            return Err(Error::OrientedCycle(witness));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// The same vertices with every arrow reversed. Arrow names are kept, so
    /// reversing twice is the identity on the nose.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &str) -> String {
        v.to_string()
    }

    #[test]
    fn rejects_loops_and_cycles() {
        let loopy = Quiver::new(
            vec![s("1")],
            vec![(s("a"), s("1"), s("1"))],
        );
        assert!(matches!(loopy, Err(Error::OrientedCycle(_))));
        let cyc = Quiver::new(
            vec![s("1"), s("2")],
            vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("1"))],
        );
        assert!(matches!(cyc, Err(Error::OrientedCycle(_))));
    }

    #[test]
    fn reversal_is_involutive() {
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3")],
            vec![(s("a"), s("1"), s("2")), (s("b"), s("2"), s("3"))],
        )
        .unwrap();
        assert_eq!(q.reversed().reversed(), q);
        assert_eq!(q.reversed().arrow(0).source, 1);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(Quiver::new(vec![s("1"), s("1")], vec![]).is_err());
        let q = Quiver::new(
            vec![s("1"), s("2")],
            vec![(s("a"), s("1"), s("2")), (s("a"), s("1"), s("2"))],
        );
        assert!(q.is_err());
    }
}
