use super::structure::FiniteDimAlgebra;
use crate::error::Error;
use crate::exactlin::{Matrix, SparseVec};

/// Images of basis vectors under one basis element's action:
/// `images[a][x]` is `e_a` acting on the `x`-th basis vector.
pub type ActionTable = Vec<Vec<SparseVec>>;

/// `sum_x v_x * images[x]`.
pub fn act(images: &[SparseVec], v: &SparseVec) -> SparseVec {
    SparseVec::combine(v.iter().map(|(x, c)| (c.clone(), &images[*x])))
}

/// Action of an arbitrary algebra element `a`.
pub fn act_by(table: &ActionTable, a: &SparseVec, v: &SparseVec) -> SparseVec {
    SparseVec::combine(a.iter().map(|(i, c)| (c.clone(), &table[*i])).flat_map(|(c, imgs)| {
        v.iter().map(move |(x, d)| (&c * d, &imgs[*x]))
    }))
}

fn table_from_matrices(ms: &[Matrix]) -> ActionTable {
    ms.iter().map(|m| m.columns()).collect()
}

/// A bimodule over a finite-dimensional algebra, stored as action tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    algebra: FiniteDimAlgebra,
    dim: usize,
    left: ActionTable,
    right: ActionTable,
}

impl Bimodule {
    /// Validates the unital representation, anti-representation and
    /// commutation axioms on all basis triples.
    pub fn new(algebra: FiniteDimAlgebra, dim: usize, left: &[Matrix], right: &[Matrix]) -> Result<Bimodule, Error> {
        let n = algebra.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::Input {
                field: "bimodule".into(),
                message: format!("expected {n} left and {n} right action matrices"),
            });
        }
        if left.iter().chain(right).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Input {
                field: "bimodule".into(),
                message: format!("action matrices must be {dim}x{dim}"),
            });
        }
        Bimodule::from_tables(algebra, dim, table_from_matrices(left), table_from_matrices(right))
    }

    pub fn from_tables(algebra: FiniteDimAlgebra, dim: usize, left: ActionTable, right: ActionTable) -> Result<Bimodule, Error> {
        let m = Bimodule {
            algebra,
            dim,
            left,
            right,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), Error> {
        let a = &self.algebra;
        let f = a.field();
        let n = a.dim();
        for x in 0..self.dim {
            let v = SparseVec::unit(x, f);
            if act_by(&self.left, a.unit(), &v) != v {
                return Err(Error::NotABimodule(format!("unit does not act as identity on the left on vector {x}")));
            }
            if act_by(&self.right, a.unit(), &v) != v {
                return Err(Error::NotABimodule(format!("unit does not act as identity on the right on vector {x}")));
            }
        }
        let bad = crate::par::map_range(n, |i| {
            for j in 0..n {
                let ij = a.product(i, j);
                for x in 0..self.dim {
                    let v = SparseVec::unit(x, f);
                    if act(&self.left[i], &self.left[j][x]) != act_by(&self.left, ij, &v) {
                        return Some(format!("left action: e{i}(e{j} m{x}) != (e{i}e{j}) m{x}"));
                    }
                    if act(&self.right[j], &self.right[i][x]) != act_by(&self.right, ij, &v) {
                        return Some(format!("right action: (m{x} e{i}) e{j} != m{x} (e{i}e{j})"));
                    }
                    if act(&self.right[j], &self.left[i][x]) != act(&self.left[i], &self.right[j][x]) {
                        return Some(format!("actions do not commute: (e{i} m{x}) e{j} != e{i} (m{x} e{j})"));
                    }
                }
            }
            None
        });
        match bad.into_iter().flatten().next() {
            Some(w) => Err(Error::NotABimodule(w)),
            None => Ok(()),
        }
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(algebra: &FiniteDimAlgebra) -> Bimodule {
        let n = algebra.dim();
        let left = (0..n).map(|i| (0..n).map(|x| algebra.product(i, x).clone()).collect()).collect();
        let right = (0..n).map(|i| (0..n).map(|x| algebra.product(x, i).clone()).collect()).collect();
        Bimodule {
            algebra: algebra.clone(),
            dim: n,
            left,
            right,
        }
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_table(&self) -> &ActionTable {
        &self.left
    }

    pub fn right_table(&self) -> &ActionTable {
        &self.right
    }

    /// `e_a * m_x`.
    pub fn left_basis(&self, a: usize, x: usize) -> &SparseVec {
        &self.left[a][x]
    }

    /// `m_x * e_a`.
    pub fn right_basis(&self, a: usize, x: usize) -> &SparseVec {
        &self.right[a][x]
    }

    pub fn act_left(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        act_by(&self.left, a, v)
    }

    pub fn act_right(&self, v: &SparseVec, a: &SparseVec) -> SparseVec {
        act_by(&self.right, a, v)
    }

    pub fn left_matrix(&self, a: usize) -> Matrix {
        Matrix::from_columns(self.algebra.field(), self.dim, &self.left[a])
    }

    pub fn right_matrix(&self, a: usize) -> Matrix {
        Matrix::from_columns(self.algebra.field(), self.dim, &self.right[a])
    }

    /// Precomposes both actions with an algebra map `new_algebra -> self.algebra`
    /// given by the images of the basis of `new_algebra`.
    pub fn pull_back(&self, new_algebra: &FiniteDimAlgebra, images: &[SparseVec]) -> Result<Bimodule, Error> {
        let f = self.algebra.field();
        let pull = |t: &ActionTable| -> ActionTable {
            images
                .iter()
                .map(|b| (0..self.dim).map(|x| act_by(t, b, &SparseVec::unit(x, f))).collect())
                .collect()
        };
        Bimodule::from_tables(new_algebra.clone(), self.dim, pull(&self.left), pull(&self.right))
    }

    /// The left module over the enveloping algebra: `(a ⊗ a') m = a m a'`.
    pub fn as_left_enveloping(&self, envelope: &FiniteDimAlgebra) -> Result<Module, Error> {
        let n = self.algebra.dim();
        let table = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..self.dim).map(|x| act(&self.right[j], &self.left[i][x])).collect()
            })
            .collect();
        Module::new(envelope.clone(), Side::Left, self.dim, table)
    }

    /// The right module over the enveloping algebra: `m (a ⊗ a') = a' m a`.
    pub fn as_right_enveloping(&self, envelope: &FiniteDimAlgebra) -> Result<Module, Error> {
        let n = self.algebra.dim();
        let table = (0..n * n)
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                (0..self.dim).map(|x| act(&self.left[j], &self.right[i][x])).collect()
            })
            .collect();
        Module::new(envelope.clone(), Side::Right, self.dim, table)
    }

    /// Forgets the right action.
    pub fn left_module(&self) -> Module {
        Module {
            algebra: self.algebra.clone(),
            side: Side::Left,
            dim: self.dim,
            table: self.left.clone(),
        }
    }

    /// Forgets the left action.
    pub fn right_module(&self) -> Module {
        Module {
            algebra: self.algebra.clone(),
            side: Side::Right,
            dim: self.dim,
            table: self.right.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A one-sided module; `table[a][x]` is the action of `e_a` on `m_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    algebra: FiniteDimAlgebra,
    side: Side,
    dim: usize,
    table: ActionTable,
}

impl Module {
    pub fn new(algebra: FiniteDimAlgebra, side: Side, dim: usize, table: ActionTable) -> Result<Module, Error> {
        let m = Module {
            algebra,
            side,
            dim,
            table,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn from_matrices(algebra: FiniteDimAlgebra, side: Side, dim: usize, ms: &[Matrix]) -> Result<Module, Error> {
        if ms.len() != algebra.dim() || ms.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Input {
                field: "module".into(),
                message: format!("expected {} action matrices of size {dim}x{dim}", algebra.dim()),
            });
        }
        Module::new(algebra, side, dim, table_from_matrices(ms))
    }

    fn validate(&self) -> Result<(), Error> {
        let a = &self.algebra;
        let f = a.field();
        let n = a.dim();
        if self.table.len() != n || self.table.iter().any(|r| r.len() != self.dim) {
            return Err(Error::NotAModule("action table has the wrong shape".into()));
        }
        for x in 0..self.dim {
            let v = SparseVec::unit(x, f);
            if act_by(&self.table, a.unit(), &v) != v {
                return Err(Error::NotAModule(format!("unit does not fix vector {x}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = a.product(i, j);
                for x in 0..self.dim {
                    let lhs = match self.side {
                        Side::Left => act(&self.table[i], &self.table[j][x]),
                        Side::Right => act(&self.table[j], &self.table[i][x]),
                    };
                    if lhs != act_by(&self.table, ij, &SparseVec::unit(x, f)) {
                        return Err(Error::NotAModule(format!("action of e{i}e{j} on vector {x}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The free module of rank one on the given side.
    pub fn regular(algebra: &FiniteDimAlgebra, side: Side) -> Module {
        let n = algebra.dim();
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|x| match side {
                        Side::Left => algebra.product(i, x).clone(),
                        Side::Right => algebra.product(x, i).clone(),
                    })
                    .collect()
            })
            .collect();
        Module {
            algebra: algebra.clone(),
            side,
            dim: n,
            table,
        }
    }

    pub fn algebra(&self) -> &FiniteDimAlgebra {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn table(&self) -> &ActionTable {
        &self.table
    }

    pub fn act(&self, a: &SparseVec, v: &SparseVec) -> SparseVec {
        act_by(&self.table, a, v)
    }

    pub fn act_basis(&self, a: usize, v: &SparseVec) -> SparseVec {
        act(&self.table[a], v)
    }
}

#[cfg(test)]
mod tests {
    use super::super::structure::tests::dual_numbers;
    use super::super::structure::{enveloping, ground_field};
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn regular_examples() {
        let f = Field::Rational;
        let k = Bimodule::regular(&ground_field(f));
        assert_eq!(k.dim(), 1);
        assert!(k.left_matrix(0).is_identity());

        let d = dual_numbers(f);
        let x = Bimodule::regular(&d);
        let lx = x.left_matrix(1);
        assert!(!lx.is_zero());
        assert!(lx.mul(&lx).unwrap().is_zero());
        assert!(Bimodule::new(d.clone(), 2, &[d.left_mult(0), d.left_mult(1)], &[d.right_mult(0), d.right_mult(1)]).is_ok());
    }

    #[test]
    fn bad_action_rejected() {
        let f = Field::Rational;
        let d = dual_numbers(f);
        // x acting as the identity on the left is not a representation (x^2 = 0).
        let id = Matrix::identity(f, 1);
        let r = Bimodule::new(d, 1, &[id.clone(), id.clone()], &[id.clone(), Matrix::zeros(f, 1, 1)]);
        assert!(matches!(r, Err(Error::NotABimodule(_))));
    }

    #[test]
    fn enveloping_modules_validate() {
        let f = Field::Rational;
        let d = dual_numbers(f);
        let e = enveloping(&d);
        let x = Bimodule::regular(&d);
        assert!(x.as_left_enveloping(&e).is_ok());
        assert!(x.as_right_enveloping(&e).is_ok());
    }
}
