//! Finite chain complexes of vector spaces, chain maps and homology.

use crate::error::Error;
use crate::exactlin::{
    induced_map_with, kernel_with_free_columns, rank, Basis, Field, Matrix, QuotientSpace, SparseVec, Subspace,
};

/// Degrees `0..=top` with `d_n : C_n -> C_{n-1}` for `1 <= n <= top`.
/// Degrees above `top` are unknown, so homology is only reported below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: Field,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl ChainComplex {
    /// `diffs[k]` is `d_{k+1}`. Checks shapes and `d_n d_{n+1} = 0`.
    pub fn new(field: Field, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<ChainComplex, Error> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            let n = k + 1;
            if d.cols() != dims[n] || d.rows() != dims[n - 1] {
                return Err(Error::DimensionMismatch(format!(
                    "d_{n} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[n - 1],
                    dims[n]
                )));
            }
        }
        for k in 1..diffs.len() {
            let dd = diffs[k - 1].mul(&diffs[k])?;
            if let Some(i) = (0..dd.rows()).find(|&i| !dd.row(i).is_zero()) {
                let j = dd.row(i).entries()[0].0;
                return Err(Error::NotAComplex(format!(
                    "d_{} d_{} != 0: entry ({i}, {j}) is {}",
                    k,
                    k + 1,
                    dd.get(i, j)
                )));
            }
        }
        Ok(ChainComplex { field, dims, diffs })
    }

    pub fn zero(field: Field, top: usize) -> ChainComplex {
        ChainComplex {
            field,
            dims: vec![0; top + 1],
            diffs: (0..top).map(|_| Matrix::zeros(field, 0, 0)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    /// `d_n`; for `n = 0` the zero map to the zero space.
    pub fn differential(&self, n: usize) -> Matrix {
        if n == 0 {
            Matrix::zeros(self.field, 0, self.dims[0])
        } else {
            self.diffs[n - 1].clone()
        }
    }

    pub fn differential_ref(&self, n: usize) -> Option<&Matrix> {
        n.checked_sub(1).map(|k| &self.diffs[k])
    }

    fn check_degree(&self, n: usize) -> Result<(), Error> {
        let max = self.top_degree().saturating_sub(1);
        if n > max || self.top_degree() == 0 {
            return Err(Error::DegreeOutOfRange { degree: n, max });
        }
        Ok(())
    }

    pub fn rank_of_differential(&self, n: usize) -> usize {
        match self.differential_ref(n) {
            Some(d) => rank(d),
            None => 0,
        }
    }

    /// `dim H_n` by ranks alone.
    pub fn homology_dim(&self, n: usize) -> Result<usize, Error> {
        self.check_degree(n)?;
        Ok(self.dims[n] - self.rank_of_differential(n) - self.rank_of_differential(n + 1))
    }

    /// Homology dimensions in degrees `0..top`, reusing each rank once.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = crate::par::map_range(self.top_degree() + 1, |n| self.rank_of_differential(n));
        (0..self.top_degree())
            .map(|n| self.dims[n] - ranks[n] - ranks[n + 1])
            .collect()
    }

    pub fn homology(&self, n: usize) -> Result<Homology, Error> {
        self.check_degree(n)?;
        let cycles: Vec<SparseVec> = match self.differential_ref(n) {
            Some(d) => kernel_with_free_columns(d).0.row_vecs().to_vec(),
            None => (0..self.dims[n]).map(|i| SparseVec::unit(i, self.field)).collect(),
        };
        let boundary_cols = self.diffs[n].columns();
        let boundaries = Subspace::from_vectors(self.field, self.dims[n], &boundary_cols);
        let mut e = boundaries.echelon().clone();
        let mut representatives = Vec::new();
        for z in cycles.iter() {
            if e.insert(z.clone()).is_some() {
                representatives.push(z.clone());
            }
        }
        let mut all = boundaries.basis().to_vec();
        all.extend(representatives.iter().cloned());
        let basis = Basis::new(self.field, self.dims[n], all).expect("boundaries and representatives are independent");
        Ok(Homology {
            degree: n,
            cycles_dim: cycles.len(),
            boundary_rank: boundaries.dim(),
            representatives,
            basis,
        })
    }
}

/// `H_n` with a basis of cycle representatives.
#[derive(Clone, Debug)]
pub struct Homology {
    pub degree: usize,
    pub cycles_dim: usize,
    pub boundary_rank: usize,
    pub representatives: Vec<SparseVec>,
    basis: Basis,
}

impl Homology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Class of a cycle in the representative basis.
    pub fn class_of(&self, cycle: &SparseVec) -> Option<SparseVec> {
        self.basis
            .coords(cycle)
            .map(|c| c.window(self.boundary_rank, self.boundary_rank + self.dim()))
    }
}

/// Matrix of the map on homology induced by a degree-`n` chain-map component.
pub fn induced_on_homology(src: &Homology, dst: &Homology, component: &Matrix) -> Result<Matrix, Error> {
    let cols = src
        .representatives
        .iter()
        .enumerate()
        .map(|(i, z)| {
            dst.class_of(&component.apply(z))
                .ok_or_else(|| Error::NotAChainMap(format!("image of cycle representative {i} is not a cycle")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(component.field(), dst.dim(), &cols))
}

/// Components `f_n : C_n -> D_n` for `0 <= n <= top`.
#[derive(Clone, Debug)]
pub struct ChainMap {
    components: Vec<Matrix>,
}

impl ChainMap {
    /// Checks shapes and `d f_n = f_{n-1} d` in every degree.
    pub fn new(source: &ChainComplex, target: &ChainComplex, components: Vec<Matrix>) -> Result<ChainMap, Error> {
        let top = source.top_degree();
        if target.top_degree() != top || components.len() != top + 1 {
            return Err(Error::DimensionMismatch("chain map degree ranges differ".into()));
        }
        for (n, f) in components.iter().enumerate() {
            if f.cols() != source.dim(n) || f.rows() != target.dim(n) {
                return Err(Error::DimensionMismatch(format!("chain map component {n} has the wrong shape")));
            }
        }
        for n in 1..=top {
            let lhs = target.differential_ref(n).unwrap().mul(&components[n])?;
            let rhs = components[n - 1].mul(source.differential_ref(n).unwrap())?;
            if lhs != rhs {
                return Err(Error::NotAChainMap(format!("square in degree {n} does not commute")));
            }
        }
        Ok(ChainMap { components })
    }

    pub fn component(&self, n: usize) -> &Matrix {
        &self.components[n]
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn compose(&self, after: &ChainMap) -> Result<ChainMap, Error> {
        let components = self
            .components
            .iter()
            .zip(&after.components)
            .map(|(f, g)| g.mul(f))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ChainMap { components })
    }
}

/// `H_n(f)` in the representative bases of source and target.
pub fn induced_map(f: &ChainMap, source: &ChainComplex, target: &ChainComplex, n: usize) -> Result<Matrix, Error> {
    let hs = source.homology(n)?;
    let ht = target.homology(n)?;
    induced_on_homology(&hs, &ht, f.component(n))
}

/// The complex with degree 1 replaced by `Ker d_1` and degree 0 by zero.
/// Degree-1 coordinates are the entries at the kernel's free columns.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub complex: ChainComplex,
    pub kernel: Matrix,
    pub free: Vec<usize>,
    d1: Matrix,
}

impl Truncation {
    /// Coordinates in `Ker d_1` of an ambient degree-1 vector, if it is a cycle.
    pub fn degree_one_coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.d1.apply(v).is_zero() {
            return None;
        }
        Some(self.coords_unchecked(v))
    }

    fn coords_unchecked(&self, v: &SparseVec) -> SparseVec {
        let slot: std::collections::HashMap<usize, usize> = self.free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        SparseVec::from_terms(v.iter().filter_map(|(c, x)| slot.get(c).map(|&i| (i, x.clone()))).collect())
    }

    /// Ambient vector of a degree-1 coordinate vector.
    pub fn degree_one_vector(&self, coords: &SparseVec) -> SparseVec {
        SparseVec::combine(coords.iter().map(|(i, c)| (c.clone(), self.kernel.row(*i))))
    }
}

pub fn truncate(c: &ChainComplex) -> Result<Truncation, Error> {
    let field = c.field();
    if c.top_degree() == 0 {
        return Ok(Truncation {
            complex: ChainComplex::new(field, vec![0], vec![])?,
            kernel: Matrix::zeros(field, 0, 0),
            free: vec![],
            d1: Matrix::zeros(field, 0, 0),
        });
    }
    let d1 = c.differential(1);
    let (kernel, free) = kernel_with_free_columns(&d1);
    let mut dims = c.dims().to_vec();
    dims[0] = 0;
    dims[1] = free.len();
    let mut diffs = Vec::with_capacity(c.top_degree());
    diffs.push(Matrix::zeros(field, 0, free.len()));
    if c.top_degree() >= 2 {
        diffs.push(c.differential(2).select_rows(&free));
    }
    for n in 3..=c.top_degree() {
        diffs.push(c.differential(n));
    }
    Ok(Truncation {
        complex: ChainComplex::new(field, dims, diffs)?,
        kernel,
        free,
        d1,
    })
}

/// Degree-1 component of a chain map restricted to the kernels of `d_1`.
pub fn restrict_to_truncation(f1: &Matrix, source: &Truncation, target: &Truncation) -> Result<Matrix, Error> {
    let cols = source
        .kernel
        .row_vecs()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            target
                .degree_one_coords(&f1.apply(v))
                .ok_or_else(|| Error::NotAChainMap(format!("degree-1 kernel vector {i} leaves the target kernel")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_columns(f1.field(), target.free.len(), &cols))
}

/// `big_n / small_n` with the induced differential, after checking
/// `small ⊆ big` and that both are closed under the differential.
pub fn subquotient_complex(ambient: &ChainComplex, big: &[Subspace], small: &[Subspace]) -> Result<ChainComplex, Error> {
    let top = ambient.top_degree();
    if big.len() != top + 1 || small.len() != top + 1 {
        return Err(Error::DimensionMismatch("need one subspace per degree".into()));
    }
    let field = ambient.field();
    for n in 0..=top {
        if !big[n].contains_subspace(&small[n]) {
            return Err(Error::NotSubcomplex {
                degree: n,
                message: "the smaller subspace is not contained in the larger".into(),
            });
        }
    }
    for n in 1..=top {
        let d = ambient.differential_ref(n).unwrap();
        for (name, sub) in [("larger", &big), ("smaller", &small)] {
            if let Some(i) = sub[n].basis().iter().position(|v| !sub[n - 1].contains(&d.apply(v))) {
                return Err(Error::NotSubcomplex {
                    degree: n,
                    message: format!("differential maps basis vector {i} of the {name} subspace outside it"),
                });
            }
        }
    }
    let quotients: Vec<QuotientSpace> = (0..=top)
        .map(|n| {
            let rels = small[n].basis().iter().map(|v| big[n].coords_unchecked(v));
            QuotientSpace::new(field, big[n].dim(), rels)
        })
        .collect();
    let diffs = (1..=top)
        .map(|n| {
            let d = ambient.differential_ref(n).unwrap();
            induced_map_with(&quotients[n], &quotients[n - 1], |c: &SparseVec| {
                big[n - 1].coords_unchecked(&d.apply(&big[n].from_coords(c)))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChainComplex::new(field, quotients.iter().map(|q| q.quotient_dim()).collect(), diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn id_complex() -> ChainComplex {
        ChainComplex::new(q(), vec![1, 1, 0], vec![Matrix::identity(q(), 1), Matrix::zeros(q(), 1, 0)]).unwrap()
    }

    #[test]
    fn homology_examples() {
        let z = ChainComplex::zero(q(), 3);
        assert_eq!(z.homology_dims(), vec![0, 0, 0]);
        assert_eq!(id_complex().homology_dims(), vec![0, 0]);
        assert!(matches!(id_complex().homology(2), Err(Error::DegreeOutOfRange { .. })));
        let bad = ChainComplex::new(
            q(),
            vec![1, 1, 1],
            vec![Matrix::identity(q(), 1), Matrix::identity(q(), 1)],
        );
        assert!(matches!(bad, Err(Error::NotAComplex(_))));
    }

    #[test]
    fn truncate_examples() {
        let t = truncate(&id_complex()).unwrap();
        assert_eq!(t.complex.dims(), &[0, 0, 0]);
        let c = ChainComplex::new(q(), vec![2, 1, 1], vec![Matrix::zeros(q(), 2, 1), Matrix::identity(q(), 1)]).unwrap();
        let t = truncate(&c).unwrap();
        assert_eq!(t.complex.dims(), &[0, 1, 1]);
        assert_eq!(t.complex.homology_dim(1).unwrap(), c.homology_dim(1).unwrap());
    }

    #[test]
    fn induced_examples() {
        let c = ChainComplex::new(q(), vec![2, 1, 0], vec![Matrix::zeros(q(), 2, 1), Matrix::zeros(q(), 1, 0)]).unwrap();
        let id = ChainMap::new(&c, &c, c.dims().iter().map(|&d| Matrix::identity(q(), d)).collect()).unwrap();
        assert!(induced_map(&id, &c, &c, 0).unwrap().is_identity());
        assert!(induced_map(&id, &c, &c, 1).unwrap().is_identity());
        let zero = ChainMap::new(&c, &c, c.dims().iter().map(|&d| Matrix::zeros(q(), d, d)).collect()).unwrap();
        assert!(induced_map(&zero, &c, &c, 0).unwrap().is_zero());
        let both = id.compose(&zero).unwrap();
        assert!(induced_map(&both, &c, &c, 0).unwrap().is_zero());
    }

    #[test]
    fn subquotient_examples() {
        let c = id_complex();
        let whole: Vec<Subspace> = c.dims().iter().map(|&d| Subspace::whole(q(), d)).collect();
        let none: Vec<Subspace> = c.dims().iter().map(|&d| Subspace::zero(q(), d)).collect();
        assert_eq!(subquotient_complex(&c, &whole, &none).unwrap(), c);
        assert_eq!(subquotient_complex(&c, &whole, &whole).unwrap().dims(), &[0, 0, 0]);
        // span of degree 1 without its image in degree 0 is not a subcomplex.
        let mut bad = none.clone();
        bad[1] = Subspace::whole(q(), 1);
        assert!(matches!(
            subquotient_complex(&c, &bad, &none),
            Err(Error::NotSubcomplex { degree: 1, .. })
        ));
    }

    #[test]
    fn homology_classes_of_boundaries_vanish() {
        let d2 = Matrix::from_dense(q(), &[vec![1], vec![1], vec![0]]);
        let d1 = Matrix::from_dense(q(), &[vec![1, -1, 0], vec![0, 0, 0]]);
        let c = ChainComplex::new(q(), vec![2, 3, 1], vec![d1, d2.clone()]).unwrap();
        let h = c.homology(1).unwrap();
        assert_eq!(h.dim(), 1);
        assert_eq!(h.class_of(&d2.columns()[0]).unwrap(), SparseVec::new());
    }
}
