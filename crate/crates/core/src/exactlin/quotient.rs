use super::echelon::Echelon;
use super::matrix::Matrix;
use super::scalar::Field;
use super::sparse::SparseVec;
use crate::error::Error;

/// `ambient / span(relations)`, with the quotient basis given by the
/// non-pivot columns of the relation echelon. The section sends quotient
/// basis vector `i` to the `i`-th non-pivot unit vector.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    relations: Echelon,
    representatives: Vec<usize>,
    slot: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl QuotientSpace {
    pub fn new(field: Field, ambient_dim: usize, relations: impl IntoIterator<Item = SparseVec>) -> QuotientSpace {
        let mut e = Echelon::new(field, ambient_dim);
        for r in relations {
            e.insert(r);
        }
        QuotientSpace::from_echelon(e)
    }

    pub fn from_echelon(relations: Echelon) -> QuotientSpace {
        let n = relations.width();
        let mut slot = vec![NONE; n];
        let mut representatives = Vec::new();
        for (c, s) in slot.iter_mut().enumerate() {
            if !relations.is_pivot(c) {
                *s = representatives.len() as u32;
                representatives.push(c);
            }
        }
        QuotientSpace {
            relations,
            representatives,
            slot,
        }
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.width()
    }

    pub fn quotient_dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.rank()
    }

    pub fn relations(&self) -> &Echelon {
        &self.relations
    }

    /// Ambient columns used as the quotient basis.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn is_relation(&self, v: &SparseVec) -> bool {
        self.relations.contains(v)
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.relations.reduce(v.clone());
        let entries = r
            .into_entries()
            .into_iter()
            .map(|(c, x)| (self.slot[c] as usize, x))
            .collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn section(&self, q: &SparseVec) -> SparseVec {
        let entries = q.iter().map(|(i, x)| (self.representatives[*i], x.clone())).collect();
        SparseVec::from_sorted_unchecked(entries)
    }

    pub fn section_of_basis(&self, i: usize) -> SparseVec {
        SparseVec::unit(self.representatives[i], self.field())
    }

    pub fn projection_matrix(&self) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.ambient_dim())
            .map(|c| self.project(&SparseVec::unit(c, self.field())))
            .collect();
        Matrix::from_columns(self.field(), self.quotient_dim(), &cols)
    }

    pub fn section_matrix(&self) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.quotient_dim()).map(|i| self.section_of_basis(i)).collect();
        Matrix::from_columns(self.field(), self.ambient_dim(), &cols)
    }

    pub fn relations_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field(), self.ambient_dim(), self.relations.rows().to_vec())
    }
}

/// Quotient of `field^ambient_dim` by the row space of `relations`.
pub fn make_quotient(ambient_dim: usize, relations: &Matrix) -> Result<QuotientSpace, Error> {
    if relations.cols() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "relations have {} columns, ambient dimension is {}",
            relations.cols(),
            ambient_dim
        )));
    }
    Ok(QuotientSpace::new(relations.field(), ambient_dim, relations.row_vecs().iter().cloned()))
}

/// Descends an ambient map to the quotients after checking that it maps
/// relations to relations. `apply` evaluates the ambient map on a vector.
pub fn induced_map_with(
    src: &QuotientSpace,
    dst: &QuotientSpace,
    apply: impl Fn(&SparseVec) -> SparseVec + Sync,
) -> Result<Matrix, Error> {
    for (k, rel) in src.relations().rows().iter().enumerate() {
        let image = apply(rel);
        if !dst.is_relation(&image) {
            return Err(Error::WellDefinednessViolation(format!(
                "relation #{k} of the source is sent outside the target relation space"
            )));
        }
    }
    let cols: Vec<SparseVec> = crate::par::map_range(src.quotient_dim(), |i| dst.project(&apply(&src.section_of_basis(i))));
    Ok(Matrix::from_columns(src.field(), dst.quotient_dim(), &cols))
}

/// `dst.projection * f * src.section`, after verifying that `f` preserves
/// relation subspaces (so the result does not depend on the section).
pub fn induced_on_quotient(f: &Matrix, src: &QuotientSpace, dst: &QuotientSpace) -> Result<Matrix, Error> {
    if f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "map is {}x{}, quotients have ambient dimensions {} -> {}",
            f.rows(),
            f.cols(),
            src.ambient_dim(),
            dst.ambient_dim()
        )));
    }
    let t = f.transpose();
    let apply = |v: &SparseVec| {
        let mut acc = SparseVec::new();
        for (i, c) in v.iter() {
            acc = acc.add_scaled(c, t.row(*i));
        }
        acc
    };
    induced_map_with(src, dst, apply)
}
