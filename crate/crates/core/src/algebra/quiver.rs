use std::collections::HashMap;

use super::structure::{make_algebra, FiniteDimAlgebra};
use crate::error::Error;
use crate::exactlin::{Field, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path is a vertex (trivial path) or a nonempty arrow sequence; arrows
/// compose left to right, so `ab` means `a` followed by `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

/// Path algebra modulo monomial relations. The basis is every path without
/// a forbidden subpath, ordered by length and then lexicographically.
pub fn from_quiver(
    field: Field,
    vertices: &[String],
    arrows: &[Arrow],
    forbidden: &[Vec<usize>],
    path_cap: usize,
) -> Result<FiniteDimAlgebra, Error> {
    let nv = vertices.len();
    let input = |message: String| Error::Input {
        field: "algebra.quiver".into(),
        message,
    };
    for a in arrows {
        if a.source >= nv || a.target >= nv {
            return Err(input(format!("arrow {} has an endpoint outside 0..{nv}", a.name)));
        }
    }
    for r in forbidden {
        if r.len() < 2 {
            return Err(input("relations must be paths of length at least 2".into()));
        }
        if r.iter().any(|&a| a >= arrows.len()) {
            return Err(input("relation uses an unknown arrow".into()));
        }
        if r.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
            return Err(input("relation is not a path".into()));
        }
    }
    let admissible = |p: &[usize]| !forbidden.iter().any(|r| p.windows(r.len()).any(|w| w == r.as_slice()));

    let mut paths: Vec<Path> = (0..nv).map(Path::Trivial).collect();
    let mut layer: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    let mut len = 1;
    while !layer.is_empty() {
        if len >= path_cap {
            return Err(Error::InfiniteDimensional(path_cap));
        }
        let mut next = Vec::new();
        for p in &layer {
            let end = arrows[*p.last().unwrap()].target;
            for (a, arrow) in arrows.iter().enumerate() {
                if arrow.source == end {
                    let mut q = p.clone();
                    q.push(a);
                    if admissible(&q) {
                        next.push(q);
                    }
                }
            }
        }
        paths.extend(layer.into_iter().map(Path::Arrows));
        layer = next;
        len += 1;
    }

    let index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let source = |p: &Path| match p {
        Path::Trivial(v) => *v,
        Path::Arrows(a) => arrows[a[0]].source,
    };
    let target = |p: &Path| match p {
        Path::Trivial(v) => *v,
        Path::Arrows(a) => arrows[*a.last().unwrap()].target,
    };
    let concat = |p: &Path, q: &Path| -> Option<usize> {
        if target(p) != source(q) {
            return None;
        }
        match (p, q) {
            (Path::Trivial(_), _) => Some(index[q]),
            (_, Path::Trivial(_)) => Some(index[p]),
            (Path::Arrows(a), Path::Arrows(b)) => {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                admissible(&joined).then(|| index[&Path::Arrows(joined)])
            }
        }
    };
    let table = paths
        .iter()
        .map(|p| {
            paths
                .iter()
                .map(|q| concat(p, q).map_or_else(SparseVec::new, |k| SparseVec::unit(k, field)))
                .collect()
        })
        .collect();
    let unit = SparseVec::from_terms((0..nv).map(|v| (v, field.one())).collect());
    let single = arrows.iter().all(|a| a.name.chars().count() == 1);
    let labels = paths
        .iter()
        .map(|p| match p {
            Path::Trivial(v) => vertices[*v].clone(),
            Path::Arrows(a) => {
                let names: Vec<&str> = a.iter().map(|&i| arrows[i].name.as_str()).collect();
                names.join(if single { "" } else { "*" })
            }
        })
        .collect();
    make_algebra(field, labels, table, unit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, source: usize, target: usize) -> Arrow {
        Arrow {
            name: name.into(),
            source,
            target,
        }
    }

    #[test]
    fn quiver_examples() {
        let f = Field::Rational;
        let a2 = from_quiver(f, &["e1".into(), "e2".into()], &[arrow("a", 0, 1)], &[], 10).unwrap();
        assert_eq!(a2.dim(), 3);

        let dual = from_quiver(f, &["e".into()], &[arrow("x", 0, 0)], &[vec![0, 0]], 10).unwrap();
        assert_eq!(dual.dim(), 2);
        assert!(dual.product(1, 1).is_zero());

        let free = from_quiver(f, &["e".into()], &[arrow("x", 0, 0)], &[], 10);
        assert!(matches!(free, Err(Error::InfiniteDimensional(10))));
    }

    #[test]
    fn three_vertex_with_relation() {
        let f = Field::Rational;
        let v: Vec<String> = vec!["e1".into(), "e2".into(), "e3".into()];
        let a = from_quiver(f, &v, &[arrow("a", 0, 1), arrow("b", 1, 2)], &[vec![0, 1]], 10).unwrap();
        assert_eq!(a.dim(), 5);
        let without = from_quiver(f, &v, &[arrow("a", 0, 1), arrow("b", 1, 2)], &[], 10).unwrap();
        assert_eq!(without.dim(), 6);
        assert_eq!(without.labels()[5], "ab");
    }
}
