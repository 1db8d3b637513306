use crate::error::Error;
use crate::exactlin::{Field, Matrix, Scalar, SparseVec};

/// A finite-dimensional associative unital algebra given by structure
/// constants on a fixed, labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimAlgebra {
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    unit: SparseVec,
}

/// Validates structure constants: `table[i][j]` is the product `e_i e_j`.
pub fn make_algebra(
    field: Field,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
    unit: SparseVec,
) -> Result<FiniteDimAlgebra, Error> {
    let dim = labels.len();
    if table.len() != dim || table.iter().any(|r| r.len() != dim) {
        return Err(Error::Input {
            field: "algebra.products".into(),
            message: format!("expected a {dim}x{dim} table of products"),
        });
    }
    let in_range = |v: &SparseVec| v.max_index().is_none_or(|m| m < dim);
    if !table.iter().flatten().all(in_range) || !in_range(&unit) {
        return Err(Error::Input {
            field: "algebra.products".into(),
            message: format!("basis index out of range (dimension {dim})"),
        });
    }
    let a = FiniteDimAlgebra {
        field,
        labels,
        table,
        unit,
    };
    a.validate()?;
    Ok(a)
}

impl FiniteDimAlgebra {
    fn validate(&self) -> Result<(), Error> {
        let n = self.dim();
        for k in 0..n {
            let e = SparseVec::unit(k, self.field);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::NotUnital(k));
            }
        }
        let bad = crate::par::map_range(n, |i| {
            for j in 0..n {
                let left = &self.table[i][j];
                for k in 0..n {
                    let lhs = self.mul_basis_right(left, k);
                    let rhs = self.mul(&SparseVec::unit(i, self.field), &self.table[j][k]);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        match bad.into_iter().flatten().next() {
            Some((i, j, k)) => Err(Error::NotAssociative(i, j, k)),
            None => Ok(()),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<SparseVec>] {
        &self.table
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let terms = u
            .iter()
            .flat_map(|(i, a)| v.iter().map(move |(j, b)| (a * b, &self.table[*i][*j])));
        SparseVec::combine(terms)
    }

    fn mul_basis_right(&self, u: &SparseVec, k: usize) -> SparseVec {
        SparseVec::combine(u.iter().map(|(i, a)| (a.clone(), &self.table[*i][k])))
    }

    /// Matrix of `v -> e_i v`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        Matrix::from_columns(self.field, self.dim(), &self.table[i])
    }

    /// Matrix of `v -> v e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| self.table[j][i].clone()).collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Trace of left multiplication by `v`.
    pub fn left_trace(&self, v: &SparseVec) -> Scalar {
        let mut acc = self.field.zero();
        for (i, c) in v.iter() {
            for j in 0..self.dim() {
                if let Some(x) = self.table[*i][j].get(j) {
                    acc = &acc + &(c * x);
                }
            }
        }
        acc
    }

    /// Renders a vector as a combination of basis labels.
    pub fn format_vector(&self, v: &SparseVec) -> String {
        format_combination(&self.labels, v)
    }

    /// The same algebra in the basis given by the columns of `change`
    /// (an invertible matrix); `inverse` must be its inverse.
    pub fn rebase(&self, change: &Matrix, inverse: &Matrix, labels: Vec<String>) -> Result<FiniteDimAlgebra, Error> {
        let cols = change.columns();
        let n = self.dim();
        let table = (0..n)
            .map(|i| (0..n).map(|j| inverse.apply(&self.mul(&cols[i], &cols[j]))).collect())
            .collect();
        let unit = inverse.apply(&self.unit);
        make_algebra(self.field, labels, table, unit)
    }
}

pub fn format_combination(labels: &[String], v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(m) => (true, m.to_string()),
            None => (false, s),
        };
        if k > 0 {
            out.push_str(if neg { "-" } else { "+" });
        } else if neg {
            out.push('-');
        }
        if mag != "1" {
            out.push_str(&mag);
            out.push('*');
        }
        out.push_str(&labels[*i]);
    }
    out
}

/// `A ⊗ A^op` on basis pairs `(i, j)` at index `i * dim + j`, with
/// `(a ⊗ a')(c ⊗ c') = ac ⊗ c'a'`.
pub fn enveloping(a: &FiniteDimAlgebra) -> FiniteDimAlgebra {
    let n = a.dim();
    let f = a.field;
    let pair = |u: &SparseVec, v: &SparseVec| {
        let terms = u
            .iter()
            .flat_map(|(i, x)| v.iter().map(move |(j, y)| (i * n + j, x * y)))
            .collect();
        SparseVec::from_terms(terms)
    };
    let mut labels = Vec::with_capacity(n * n);
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("{}⊗{}", a.labels[i], a.labels[j]));
            let row = (0..n * n)
                .map(|kl| {
                    let (k, l) = (kl / n, kl % n);
                    pair(&a.table[i][k], &a.table[l][j])
                })
                .collect();
            table.push(row);
        }
    }
    let unit = pair(&a.unit, &a.unit);
    make_algebra(f, labels, table, unit).expect("enveloping algebra of a valid algebra is valid")
}

/// The one-dimensional algebra.
pub fn ground_field(field: Field) -> FiniteDimAlgebra {
    let e = SparseVec::unit(0, field);
    make_algebra(field, vec!["1".into()], vec![vec![e.clone()]], e).expect("ground field")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn dual_numbers(field: Field) -> FiniteDimAlgebra {
        let one = SparseVec::unit(0, field);
        let x = SparseVec::unit(1, field);
        make_algebra(
            field,
            vec!["1".into(), "x".into()],
            vec![vec![one.clone(), x.clone()], vec![x, SparseVec::new()]],
            one,
        )
        .unwrap()
    }

    #[test]
    fn make_algebra_examples() {
        let f = Field::Rational;
        assert_eq!(ground_field(f).dim(), 1);
        let d = dual_numbers(f);
        assert_eq!(d.dim(), 2);
        assert!(d.product(1, 1).is_zero());

        let one = SparseVec::unit(0, f);
        let x = SparseVec::unit(1, f);
        let r = make_algebra(
            f,
            vec!["1".into(), "x".into()],
            vec![vec![one.clone(), x.clone()], vec![x.clone(), one]],
            x,
        );
        assert!(matches!(r, Err(Error::NotUnital(_))));
    }

    #[test]
    fn non_associative_is_rejected() {
        let f = Field::Rational;
        let e = |i| SparseVec::unit(i, f);
        // 1, x, y with x*y = x, y*x = 0, y*y = 0, x*x = y: (xx)y = y*y = 0 but x(xy) = xx = y.
        let table = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), e(1)],
            vec![e(2), SparseVec::new(), SparseVec::new()],
        ];
        let r = make_algebra(f, vec!["1".into(), "x".into(), "y".into()], table, e(0));
        assert!(matches!(r, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn enveloping_examples() {
        let f = Field::Rational;
        let k = enveloping(&ground_field(f));
        assert_eq!(k.dim(), 1);
        let d = enveloping(&dual_numbers(f));
        assert_eq!(d.dim(), 4);
        assert_eq!(d.unit(), &SparseVec::unit(0, f));
    }

    #[test]
    fn format() {
        let f = Field::Rational;
        let labels: Vec<String> = vec!["a".into(), "b".into()];
        let v = SparseVec::from_terms(vec![(0, f.from_i64(2)), (1, f.from_i64(-1))]);
        assert_eq!(format_combination(&labels, &v), "2*a-b");
    }
}
