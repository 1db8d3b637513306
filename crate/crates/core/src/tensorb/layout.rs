use crate::algebra::ActionTable;
use crate::exactlin::{Scalar, SparseVec};

/// Mixed-radix indexing of the basis of `V_0 ⊗ ... ⊗ V_k`; the last factor
/// varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    dims: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl Layout {
    pub fn new(dims: Vec<usize>) -> Layout {
        let mut strides = vec![1; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let size = dims.iter().product();
        Layout { dims, strides, size }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.strides).map(|(t, s)| t * s).sum()
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (k, s) in self.strides.iter().enumerate() {
            out[k] = index / s;
            index %= s;
        }
        out
    }

    pub fn digit(&self, index: usize, slot: usize) -> usize {
        (index / self.strides[slot]) % self.dims[slot]
    }

    /// Terms of the tuple with `slot` replaced by the vector `v`.
    pub fn substitute(&self, index: usize, slot: usize, v: &SparseVec) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        let base = index - self.digit(index, slot) * self.strides[slot];
        let stride = self.strides[slot];
        v.clone().into_entries().into_iter().map(move |(k, c)| (base + k * stride, c))
    }

    /// Applies a basis action table to factor `slot` of a vector.
    pub fn act_on_slot(&self, v: &SparseVec, slot: usize, images: &[SparseVec]) -> SparseVec {
        let mut terms = Vec::new();
        for (i, c) in v.iter() {
            let img = &images[self.digit(*i, slot)];
            for (j, d) in self.substitute(*i, slot, img) {
                terms.push((j, &d * c));
            }
        }
        SparseVec::from_terms(terms)
    }
}

/// One factor of a balanced tensor product with the `B`-actions used at
/// its junctions. `left` is needed when the factor follows a junction and
/// `right` when it precedes one.
#[derive(Clone, Copy)]
pub struct Factor<'a> {
    pub dim: usize,
    pub left: Option<&'a ActionTable>,
    pub right: Option<&'a ActionTable>,
}

/// Relations spanning the kernel of `V_0 ⊗ ... ⊗ V_k -> V_0 ⊗_B ... ⊗_B V_k`:
/// `..u b ⊗ v.. - ..u ⊗ b v..` for every junction, plus the cyclic
/// `b x ⊗ ... ⊗ v - x ⊗ ... ⊗ v b` when `cyclic` is set (coinvariants).
/// Generated on basis tuples and basis elements of `B` only.
pub fn balanced_relations(layout: &Layout, factors: &[Factor<'_>], dim_b: usize, cyclic: bool) -> Vec<SparseVec> {
    let k = factors.len();
    let mut junctions: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    if cyclic && k >= 1 {
        junctions.push((k - 1, 0));
    }
    let per_index = |idx: usize| -> Vec<SparseVec> {
        let mut out = Vec::new();
        for &(l, r) in &junctions {
            let right = factors[l].right.expect("factor before a junction needs a right action");
            let left = factors[r].left.expect("factor after a junction needs a left action");
            for b in 0..dim_b {
                let mut terms: Vec<(usize, Scalar)> =
                    layout.substitute(idx, l, &right[b][layout.digit(idx, l)]).collect();
                terms.extend(
                    layout
                        .substitute(idx, r, &left[b][layout.digit(idx, r)])
                        .map(|(j, c)| (j, -c)),
                );
                let v = SparseVec::from_terms(terms);
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
        out
    };
    crate::par::map_range(layout.size(), per_index).into_iter().flatten().collect()
}
