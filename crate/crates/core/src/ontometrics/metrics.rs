use std::collections::BTreeSet;

use serde::Serialize;

use crate::Scalar;

use super::graph::Vertex;
use super::{OntoError, Ontograph};

/// Roots plus the sum of out-degrees. On a tree this is the vertex count.
pub fn vertex_complexity<T: Scalar>(og: &Ontograph<T>) -> Result<u128, OntoError> {
    let children: BTreeSet<&str> = og.edges.keys().map(|e| e.1.as_str()).collect();
    if let Some(v) = og
        .vertices
        .iter()
        .find(|(k, v)| v.level > 0 && !children.contains(k.as_str()))
    {
        return Err(OntoError::Disconnected(v.1.label.clone()));
    }
    Ok(og.roots().count() as u128 + og.edges.len() as u128)
}

/// Vertex count of a tree with `h` levels and branching `S` everywhere:
/// `(S^h − 1)/(S − 1)`, or `h` when `S = 1`.
pub fn uniform_complexity(s: u64, h: u32) -> Result<u128, OntoError> {
    if s == 0 || h == 0 {
        return Err(OntoError::Range(format!("S = {s}, h = {h}; both must be ≥ 1")));
    }
    if s == 1 {
        return Ok(h.into());
    }
    let s = u128::from(s);
    s.checked_pow(h)
        .map(|p| (p - 1) / (s - 1))
        .ok_or_else(|| OntoError::Range(format!("S^h overflows for S = {s}, h = {h}")))
}

/// A tree with `h` levels where every non-leaf has `s` children.
pub fn uniform_tree<T: Scalar>(s: u64, h: u32) -> Ontograph<T> {
    let mut g = Ontograph::new();
    g.add_vertex("n", 0, None).unwrap();
    let mut frontier = vec!["n".to_string()];
    for level in 1..h {
        let mut next = Vec::new();
        for p in &frontier {
            for i in 0..s {
                let c = format!("{p}.{i}");
                g.add_vertex(&c, level, None).unwrap();
                g.add_edge(p, &c, "", None).unwrap();
                next.push(c);
            }
        }
        frontier = next;
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeightedComplexity<T> {
    pub w_weighted: T,
    /// Unweighted complexity over weighted complexity.
    pub omega: T,
}

/// `Σ_v (α_v + Σ β over edges leaving v)` and the density `ω = W⁰/W_w`.
pub fn weighted_complexity<T: Scalar>(og: &Ontograph<T>) -> Result<WeightedComplexity<T>, OntoError> {
    let w0 = vertex_complexity(og)?;
    let mut total = T::zero();
    for v in og.vertices.values() {
        total = total + v.alpha.ok_or_else(|| OntoError::MissingVertexWeight(v.label.clone()))?;
    }
    for ((p, c, _), beta) in &og.edges {
        total = total
            + beta.ok_or_else(|| OntoError::MissingEdgeWeight {
                parent: og.vertices[p].label.clone(),
                child: og.vertices[c].label.clone(),
            })?;
    }
    if total <= T::zero() {
        return Err(OntoError::ZeroWeight);
    }
    let w0 = T::from_u128(w0).ok_or_else(|| OntoError::Range("complexity overflows".into()))?;
    Ok(WeightedComplexity {
        w_weighted: total,
        omega: w0 / total,
    })
}

fn max_weight<T: Scalar>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Merges graphs by lower-cased label. A merged vertex takes the smallest
/// level, the smallest spelling of its label and the largest weight; edges
/// are united by `(parent, child, relation)`. Fails if a merged edge no
/// longer goes to a deeper level.
pub fn concept_union<T: Scalar>(ogs: &[Ontograph<T>]) -> Result<Ontograph<T>, OntoError> {
    let mut out = Ontograph::new();
    for g in ogs {
        for (k, v) in &g.vertices {
            out.vertices
                .entry(k.clone())
                .and_modify(|m: &mut Vertex<T>| {
                    m.level = m.level.min(v.level);
                    if v.label < m.label {
                        m.label = v.label.clone();
                    }
                    m.alpha = max_weight(m.alpha, v.alpha);
                })
                .or_insert_with(|| v.clone());
        }
        for (e, beta) in &g.edges {
            out.edges
                .entry(e.clone())
                .and_modify(|b| *b = max_weight(*b, *beta))
                .or_insert(*beta);
        }
    }
    for (p, c, _) in out.edges.keys() {
        let (pv, cv) = (&out.vertices[p], &out.vertices[c]);
        if cv.level <= pv.level {
            return Err(OntoError::LevelConflict {
                parent: pv.label.clone(),
                child: cv.label.clone(),
                parent_level: pv.level,
                child_level: cv.level,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(edges: &[(&str, &str)], levels: &[(&str, u32)]) -> Ontograph<f64> {
        let mut g = Ontograph::new();
        for &(l, h) in levels {
            g.add_vertex(l, h, Some(1.0)).unwrap();
        }
        for &(p, c) in edges {
            g.add_edge(p, c, "is-a", Some(0.0)).unwrap();
        }
        g
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(vertex_complexity(&tree(&[], &[("r", 0)])).unwrap(), 1);
        assert_eq!(vertex_complexity(&uniform_tree::<f64>(2, 3)).unwrap(), 7);
        let g = tree(&[], &[("r", 0), ("x", 1)]);
        assert_eq!(vertex_complexity(&g), Err(OntoError::Disconnected("x".into())));
    }

    #[test]
    fn uniform() {
        assert_eq!(uniform_complexity(2, 3).unwrap(), 7);
        assert_eq!(uniform_complexity(1, 5).unwrap(), 5);
        assert_eq!(uniform_complexity(3, 4).unwrap(), 1 + 3 + 9 + 27);
        assert!(uniform_complexity(0, 1).is_err());
        assert!(uniform_complexity(2, 0).is_err());
        assert!(uniform_complexity(u64::MAX, 3).is_err());
    }

    #[test]
    fn weighted() {
        let g = tree(&[("r", "a"), ("r", "b")], &[("r", 0), ("a", 1), ("b", 1)]);
        let w = weighted_complexity(&g).unwrap();
        assert_eq!((w.w_weighted, w.omega), (3.0, 1.0));
        let mut g = Ontograph::new();
        g.add_vertex("r", 0, Some(2.0)).unwrap();
        let w = weighted_complexity(&g).unwrap();
        assert_eq!((w.w_weighted, w.omega), (2.0, 0.5));
        let mut g: Ontograph<f64> = Ontograph::new();
        g.add_vertex("r", 0, None).unwrap();
        assert_eq!(weighted_complexity(&g), Err(OntoError::MissingVertexWeight("r".into())));
    }

    #[test]
    fn union_laws() {
        let g = tree(&[("Root", "a")], &[("Root", 0), ("a", 1)]);
        let h = tree(&[("root", "b"), ("b", "c")], &[("root", 0), ("b", 1), ("c", 2)]);
        assert_eq!(concept_union(&[g.clone(), g.clone()]).unwrap(), g);
        let gh = concept_union(&[g.clone(), h.clone()]).unwrap();
        assert_eq!(gh, concept_union(&[h.clone(), g.clone()]).unwrap());
        assert_eq!(gh.vertex_count(), 2 + 3 - 1);
        assert_eq!(gh.vertex("ROOT").unwrap().label, "Root");
        assert_eq!(vertex_complexity(&gh).unwrap(), 4);
    }

    #[test]
    fn union_level_conflict() {
        let g = tree(&[("r", "a"), ("a", "b")], &[("r", 0), ("a", 1), ("b", 2)]);
        let h = tree(&[("s", "b")], &[("s", 0), ("b", 3)]);
        let h2 = tree(&[("b", "a")], &[("b", 0), ("a", 1)]);
        assert_eq!(concept_union(&[g.clone(), h]).unwrap().vertex("b").unwrap().level, 2);
        let shallow = tree(&[("s", "b")], &[("s", 0), ("b", 1)]);
        assert!(matches!(
            concept_union(&[g.clone(), shallow]),
            Err(OntoError::LevelConflict { .. })
        ));
        assert!(matches!(concept_union(&[g, h2]), Err(OntoError::LevelConflict { .. })));
    }
}
