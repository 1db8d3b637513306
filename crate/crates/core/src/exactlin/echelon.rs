//! Row echelon forms and everything built on them: rank, kernels,
//! subspace membership and coordinates.

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::sparse::SparseVec;

const NO_PIVOT: u32 = u32::MAX;

/// An echelon basis of a subspace of `field^width`. Each stored row has
/// leading coefficient 1 at a column no other row leads at.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    width: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(field: Field, width: usize) -> Echelon {
        Echelon {
            field,
            width,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; width],
        }
    }

    pub fn from_vectors<'a>(field: Field, width: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Echelon {
        let mut e = Echelon::new(field, width);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        match self.pivot_row[col] {
            NO_PIVOT => None,
            r => Some(r as usize),
        }
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.width).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Reduces `v` modulo the span. The remainder has no entry at any pivot
    /// column, so it is the unique representative supported off the pivots.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_from(v, 0)
    }

    /// Like [`Echelon::reduce`] but leaves the first `skip` entries untouched.
    fn reduce_from(&self, v: SparseVec, skip: usize) -> SparseVec {
        let mut cur = v.into_entries();
        let mut k = skip;
        while k < cur.len() {
            let c = cur[k].0;
            if c >= self.width {
                break;
            }
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                k += 1;
                continue;
            }
            let coef = -&cur[k].1;
            let row = self.rows[r as usize].entries();
            let mut merged = Vec::with_capacity(cur.len() + row.len());
            merged.extend_from_slice(&cur[..k]);
            let (a, b) = (&cur[k + 1..], &row[1..]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                if a[i].0 < b[j].0 {
                    merged.push(a[i].clone());
                    i += 1;
                } else if a[i].0 > b[j].0 {
                    merged.push((b[j].0, &coef * &b[j].1));
                    j += 1;
                } else {
                    let s = &a[i].1 + &(&coef * &b[j].1);
                    if !s.is_zero() {
                        merged.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
            merged.extend_from_slice(&a[i..]);
            merged.extend(b[j..].iter().map(|(x, y)| (*x, &coef * y)));
            cur = merged;
        }
        SparseVec::from_sorted_unchecked(cur)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).leading().is_none_or(|(c, _)| *c >= self.width)
    }

    /// Adds `v` to the span; returns the new row index if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, r: SparseVec) -> Option<usize> {
        let (lead, c) = match r.leading() {
            Some((lead, c)) if *lead < self.width => (*lead, c.clone()),
            _ => return None,
        };
        let r = if c.is_one() { r } else { r.scale(&c.inv()) };
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(r);
        Some(self.rows.len() - 1)
    }

    /// Back-substitutes so that every pivot column is zero outside its row.
    pub fn into_rref(mut self) -> Echelon {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].entries()[0].0));
        for r in order {
            let row = std::mem::take(&mut self.rows[r]);
            self.rows[r] = self.reduce_from(row, 1);
        }
        self
    }
}

/// Exact rank of a matrix.
pub fn rank(m: &Matrix) -> usize {
    if m.rows() <= m.cols() {
        Echelon::from_vectors(m.field(), m.cols(), m.row_vecs()).rank()
    } else {
        let t = m.transpose();
        Echelon::from_vectors(t.field(), t.cols(), t.row_vecs()).rank()
    }
}

/// Rank of the span of a family of vectors.
pub fn rank_of(field: Field, width: usize, vs: &[SparseVec]) -> usize {
    Echelon::from_vectors(field, width, vs).rank()
}

/// A basis of `{v : m v = 0}` as the rows of the returned matrix. Basis
/// vector `i` has a 1 at the `i`-th free column and 0 at every other free
/// column, so coordinates of a kernel element are read off the free columns.
pub fn kernel_basis(m: &Matrix) -> Matrix {
    kernel_with_free_columns(m).0
}

pub fn kernel_with_free_columns(m: &Matrix) -> (Matrix, Vec<usize>) {
    let field = m.field();
    let e = Echelon::from_vectors(field, m.cols(), m.row_vecs()).into_rref();
    let mut slot = vec![usize::MAX; m.cols()];
    let mut free = Vec::new();
    for c in 0..m.cols() {
        if !e.is_pivot(c) {
            slot[c] = free.len();
            free.push(c);
        }
    }
    let mut terms: Vec<Vec<(usize, Scalar)>> = free.iter().map(|&f| vec![(f, field.one())]).collect();
    for row in e.rows() {
        let p = row.entries()[0].0;
        for (c, v) in &row.entries()[1..] {
            terms[slot[*c]].push((p, -v));
        }
    }
    let rows = terms.into_iter().map(SparseVec::from_terms).collect();
    (Matrix::from_rows(field, m.cols(), rows), free)
}

/// A subspace with a reduced echelon basis; coordinates of members are the
/// entries at the pivot columns.
#[derive(Clone, Debug)]
pub struct Subspace {
    echelon: Echelon,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn from_vectors<'a>(field: Field, width: usize, vs: impl IntoIterator<Item = &'a SparseVec>) -> Subspace {
        Subspace::from_echelon(Echelon::from_vectors(field, width, vs))
    }

    pub fn from_echelon(e: Echelon) -> Subspace {
        let mut e = e.into_rref();
        // Order basis rows by pivot column so coordinates are deterministic.
        e.rows.sort_by_key(|r| r.entries()[0].0);
        for (k, r) in e.rows.iter().enumerate() {
            e.pivot_row[r.entries()[0].0] = k as u32;
        }
        let pivots = e.rows.iter().map(|r| r.entries()[0].0).collect();
        Subspace { echelon: e, pivots }
    }

    pub fn whole(field: Field, width: usize) -> Subspace {
        let vs: Vec<SparseVec> = (0..width).map(|i| SparseVec::unit(i, field)).collect();
        Subspace::from_vectors(field, width, &vs)
    }

    pub fn zero(field: Field, width: usize) -> Subspace {
        Subspace::from_echelon(Echelon::new(field, width))
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.width()
    }

    pub fn field(&self) -> Field {
        self.echelon.field()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.echelon.rows()
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.ambient_dim(), self.basis().to_vec())
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates in the basis, or `None` if `v` is not a member.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(self.coords_unchecked(v))
    }

    /// Coordinates assuming membership.
    pub fn coords_unchecked(&self, v: &SparseVec) -> SparseVec {
        let terms = v
            .iter()
            .filter_map(|(c, x)| self.echelon.pivot_row_of(*c).map(|r| (r, x.clone())))
            .collect();
        SparseVec::from_terms(terms)
    }

    pub fn from_coords(&self, coords: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in coords.iter() {
            acc = acc.add_scaled(c, &self.basis()[*i]);
        }
        acc
    }
}

/// Coordinates with respect to an arbitrary (not echelon) independent
/// family, by tracking the elimination in tag columns past `width`.
#[derive(Clone, Debug)]
pub struct Basis {
    width: usize,
    len: usize,
    echelon: Echelon,
    vectors: Vec<SparseVec>,
}

impl Basis {
    /// Fails with the index of the first vector dependent on earlier ones.
    pub fn new(field: Field, width: usize, vectors: Vec<SparseVec>) -> Result<Basis, usize> {
        let mut echelon = Echelon::new(field, width + vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            let mut terms = v.entries().to_vec();
            terms.push((width + i, field.one()));
            let r = echelon.reduce(SparseVec::from_sorted_unchecked(terms));
            if r.leading().is_none_or(|(c, _)| *c >= width) {
                return Err(i);
            }
            echelon.push_reduced(r);
        }
        Ok(Basis {
            width,
            len: vectors.len(),
            echelon,
            vectors,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        let r = self.echelon.reduce(v.clone());
        if r.leading().is_some_and(|(c, _)| *c < self.width) {
            return None;
        }
        Some(r.window(self.width, self.width + self.len).neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Matrix::zeros(q(), 0, 0)), 0);
        assert_eq!(rank(&Matrix::identity(q(), 3)), 3);
        assert_eq!(rank(&Matrix::from_dense(q(), &[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Matrix::identity(q(), 2)).rows(), 0);
        assert_eq!(kernel_basis(&Matrix::zeros(q(), 2, 3)).rows(), 3);
        let k = kernel_basis(&Matrix::from_dense(q(), &[vec![1, 1]]));
        assert_eq!(k.rows(), 1);
        let v = k.row(0);
        assert_eq!(v.get(0).unwrap(), &-v.get(1).unwrap());
    }

    #[test]
    fn basis_coordinates_roundtrip() {
        let f = q();
        let vs = vec![
            SparseVec::from_dense(&[f.from_i64(1), f.from_i64(1), f.zero()]),
            SparseVec::from_dense(&[f.zero(), f.from_i64(2), f.from_i64(3)]),
        ];
        let b = Basis::new(f, 3, vs.clone()).unwrap();
        let w = vs[0].scale(&f.from_i64(5)).add_scaled(&f.from_i64(-7), &vs[1]);
        let c = b.coords(&w).unwrap();
        assert_eq!(c.to_dense(2, f), vec![f.from_i64(5), f.from_i64(-7)]);
        assert!(b.coords(&SparseVec::unit(2, f)).is_none());
        assert_eq!(Basis::new(f, 3, vec![vs[0].clone(), vs[0].scale(&f.from_i64(2))]).unwrap_err(), 1);
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix> {
        (0usize..6, 0usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-2i64..3, c), r)
                .prop_map(move |rows| {
                    if rows.is_empty() {
                        Matrix::zeros(Field::Rational, 0, c)
                    } else {
                        Matrix::from_dense(Field::Rational, &rows)
                    }
                })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + k.rows(), m.cols());
            for v in k.row_vecs() {
                prop_assert!(m.apply(v).is_zero());
            }
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
            let s = Subspace::from_vectors(m.field(), m.cols(), m.row_vecs());
            for v in m.row_vecs() {
                let c = s.coords(v).unwrap();
                prop_assert_eq!(&s.from_coords(&c), v);
            }
        }
    }
}
