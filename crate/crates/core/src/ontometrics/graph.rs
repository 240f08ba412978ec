use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::Scalar;

use super::OntoError;

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex<T> {
    /// Label as written; identity is the lower-cased label.
    pub label: String,
    pub level: u32,
    pub alpha: Option<T>,
}

/// `(parent key, child key, relation)`; keys are lower-cased labels.
pub type EdgeKey = (String, String, String);

/// A leveled concept graph with optional vertex weights `α` and edge weights
/// `β`. Edges go from a shallower to a strictly deeper level.
#[derive(Debug, Clone, PartialEq)]
pub struct Ontograph<T> {
    pub(crate) vertices: BTreeMap<String, Vertex<T>>,
    pub(crate) edges: BTreeMap<EdgeKey, Option<T>>,
}

impl<T> Default for Ontograph<T> {
    fn default() -> Self {
        Self {
            vertices: BTreeMap::new(),
            edges: BTreeMap::new(),
        }
    }
}

pub(crate) fn key(label: &str) -> String {
    label.to_lowercase()
}

fn check_weight<T: Scalar>(w: Option<T>, at: &str) -> Result<(), OntoError> {
    match w {
        Some(v) if !(v.is_finite() && v >= T::zero()) => Err(OntoError::BadWeight(at.to_string())),
        _ => Ok(()),
    }
}

impl<T: Scalar> Ontograph<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str, level: u32, alpha: Option<T>) -> Result<(), OntoError> {
        check_weight(alpha, label)?;
        let k = key(label);
        if self.vertices.contains_key(&k) {
            return Err(OntoError::DuplicateVertex(label.to_string()));
        }
        self.vertices.insert(
            k,
            Vertex {
                label: label.to_string(),
                level,
                alpha,
            },
        );
        Ok(())
    }

    pub fn add_edge(&mut self, parent: &str, child: &str, relation: &str, beta: Option<T>) -> Result<(), OntoError> {
        check_weight(beta, &format!("{parent}→{child}"))?;
        let (pk, ck) = (key(parent), key(child));
        let p = self
            .vertices
            .get(&pk)
            .ok_or_else(|| OntoError::UnknownVertex(parent.to_string()))?;
        let c = self
            .vertices
            .get(&ck)
            .ok_or_else(|| OntoError::UnknownVertex(child.to_string()))?;
        if c.level <= p.level {
            return Err(OntoError::LevelConflict {
                parent: p.label.clone(),
                child: c.label.clone(),
                parent_level: p.level,
                child_level: c.level,
            });
        }
        self.edges.insert((pk, ck, relation.to_string()), beta);
        Ok(())
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex<T>> {
        self.vertices.values()
    }

    pub fn vertex(&self, label: &str) -> Option<&Vertex<T>> {
        self.vertices.get(&key(label))
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeKey, Option<T>)> {
        self.edges.iter().map(|(k, v)| (k, *v))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn out_degree(&self, label: &str) -> usize {
        let k = key(label);
        self.edges.keys().filter(|e| e.0 == k).count()
    }

    /// Vertices at level 0.
    pub fn roots(&self) -> impl Iterator<Item = &Vertex<T>> {
        self.vertices.values().filter(|v| v.level == 0)
    }

    /// Lower-cased labels.
    pub fn label_set(&self) -> Vec<String> {
        self.vertices.keys().cloned().collect()
    }

    pub fn edge_set(&self) -> Vec<EdgeKey> {
        self.edges.keys().cloned().collect()
    }

    /// Parses `V<TAB>label<TAB>level[<TAB>alpha]` and
    /// `E<TAB>parent<TAB>child[<TAB>relation[<TAB>beta]]` lines. Vertices
    /// must precede the edges that use them.
    pub fn parse(text: &str) -> Result<Self, OntoError> {
        let mut g = Self::new();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| OntoError::Format { line: n + 1, reason };
            let cols: Vec<&str> = line.split('\t').collect();
            let weight = |s: Option<&&str>| -> Result<Option<T>, OntoError> {
                match s.map(|s| s.trim()).filter(|s| !s.is_empty()) {
                    None => Ok(None),
                    Some(s) => s
                        .parse::<f64>()
                        .ok()
                        .and_then(T::from_f64)
                        .map(Some)
                        .ok_or_else(|| bad(format!("bad weight {s:?}"))),
                }
            };
            let with_line = |e: OntoError| match e {
                OntoError::Format { .. } => e,
                other => bad(other.to_string()),
            };
            match cols[0] {
                "V" if (3..=4).contains(&cols.len()) => {
                    let level = cols[2]
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("bad level {:?}", cols[2])))?;
                    g.add_vertex(cols[1], level, weight(cols.get(3))?)
                        .map_err(with_line)?;
                }
                "E" if (3..=5).contains(&cols.len()) => {
                    let rel = cols.get(3).copied().unwrap_or("");
                    g.add_edge(cols[1], cols[2], rel, weight(cols.get(4))?)
                        .map_err(with_line)?;
                }
                _ => return Err(bad("expected a V or E record".into())),
            }
        }
        Ok(g)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let mut vs: Vec<&Vertex<T>> = self.vertices.values().collect();
        vs.sort_by(|a, b| a.level.cmp(&b.level).then(a.label.cmp(&b.label)));
        for v in vs {
            let _ = write!(out, "V\t{}\t{}", v.label, v.level);
            if let Some(a) = v.alpha {
                let _ = write!(out, "\t{a}");
            }
            out.push('\n');
        }
        for ((p, c, r), beta) in &self.edges {
            let _ = write!(out, "E\t{}\t{}\t{r}", self.vertices[p].label, self.vertices[c].label);
            if let Some(b) = beta {
                let _ = write!(out, "\t{b}");
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let text = "V\tMachine\t0\t1\nV\tPart\t1\t2\nE\tmachine\tpart\tis-a\t0.5\n";
        let g: Ontograph<f64> = Ontograph::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.out_degree("MACHINE"), 1);
        assert_eq!(Ontograph::<f64>::parse(&g.to_file_string()).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Ontograph::<f64>::parse("V\ta\t0\nV\tA\t1\n"),
            Err(OntoError::Format { line: 2, .. })
        ));
        assert!(Ontograph::<f64>::parse("V\ta\t1\nV\tb\t1\nE\ta\tb\n").is_err());
        assert!(Ontograph::<f64>::parse("E\ta\tb\n").is_err());
        assert!(Ontograph::<f64>::parse("V\ta\t0\t-1\n").is_err());
        assert!(Ontograph::<f64>::parse("X\ta\n").is_err());
    }
}
