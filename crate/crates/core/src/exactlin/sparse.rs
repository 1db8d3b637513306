use super::scalar::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, field: Field) -> SparseVec {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    /// Collects arbitrary `(index, coefficient)` terms, summing repeats.
    pub fn from_terms(mut terms: Vec<(usize, Scalar)>) -> SparseVec {
        terms.sort_by_key(|t| t.0);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    /// `sum c_k * v_k` over the given terms.
    pub fn combine<'a>(terms: impl IntoIterator<Item = (Scalar, &'a SparseVec)>) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (c, v) in terms {
            if c.is_zero() {
                continue;
            }
            acc.extend(v.iter().map(|(i, x)| (*i, x * &c)));
        }
        SparseVec::from_terms(acc)
    }

    /// Builds from entries that are already sorted, distinct and nonzero.
    pub fn from_sorted_unchecked(entries: Vec<(usize, Scalar)>) -> SparseVec {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn from_dense(values: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                out.push(a[i].clone());
                i += 1;
            } else if a[i].0 > b[j].0 {
                out.push((b[j].0, c * &b[j].1));
                j += 1;
            } else {
                let v = &a[i].1 + &(c * &b[j].1);
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(k, v)| (*k, c * v)));
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&c.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(&-c.field().one(), other),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    pub fn dot(&self, other: &SparseVec) -> Option<Scalar> {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut acc: Option<Scalar> = None;
        while i < a.len() && j < b.len() {
            if a[i].0 < b[j].0 {
                i += 1;
            } else if a[i].0 > b[j].0 {
                j += 1;
            } else {
                let p = &a[i].1 * &b[j].1;
                acc = Some(match acc {
                    None => p,
                    Some(s) => &s + &p,
                });
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Renumbers indices through `map`, dropping those mapped to `None`.
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> SparseVec {
        let terms: Vec<_> = self
            .entries
            .iter()
            .filter_map(|(i, c)| map(*i).map(|j| (j, c.clone())))
            .collect();
        SparseVec::from_terms(terms)
    }

    /// Restriction to an index window `[start, end)`, shifted to start at 0.
    pub fn window(&self, start: usize, end: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < end)
                .map(|(i, c)| (i - start, c.clone()))
                .collect(),
        }
    }
}
