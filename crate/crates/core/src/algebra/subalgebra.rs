use super::bimodule::{ActionTable, Bimodule};
use super::structure::{format_combination, make_algebra, FiniteDimAlgebra};
use crate::error::Error;
use crate::exactlin::{Basis, Matrix, QuotientSpace, SparseVec};

/// A subalgebra `B ⊂ A` given by independent columns spanning `B`. The
/// quotient `A/B` has the non-pivot unit vectors of the inclusion echelon
/// as representatives; they span the complement `S`, and the section
/// `A/B -> A` sends a quotient basis vector to its representative.
#[derive(Clone, Debug)]
pub struct SubalgebraEmbedding {
    ambient: FiniteDimAlgebra,
    sub: FiniteDimAlgebra,
    generators: Vec<SparseVec>,
    quotient: QuotientSpace,
}

pub fn make_subalgebra(ambient: &FiniteDimAlgebra, columns: &Matrix) -> Result<SubalgebraEmbedding, Error> {
    let f = ambient.field();
    let n = ambient.dim();
    if columns.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "subalgebra generators have length {}, algebra has dimension {n}",
            columns.rows()
        )));
    }
    let generators = columns.columns();
    let basis = Basis::new(f, n, generators.clone()).map_err(Error::DependentGenerators)?;
    let unit = basis.coords(ambient.unit()).ok_or(Error::UnitNotContained)?;
    let m = generators.len();
    let mut table = vec![vec![SparseVec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            let p = ambient.mul(&generators[i], &generators[j]);
            table[i][j] = basis.coords(&p).ok_or(Error::NotClosed(i, j))?;
        }
    }
    let labels = generators.iter().map(|g| format_combination(ambient.labels(), g)).collect();
    let sub = make_algebra(f, labels, table, unit)?;
    let quotient = QuotientSpace::new(f, n, generators.iter().cloned());
    Ok(SubalgebraEmbedding {
        ambient: ambient.clone(),
        sub,
        generators,
        quotient,
    })
}

/// The ambient algebra rewritten in the basis `[B generators, S basis]`, so
/// that `B` and `S` are coordinate subspaces: `B` is spanned by the first
/// `dim_sub` basis vectors and `S` by the rest.
#[derive(Clone, Debug)]
pub struct Adapted {
    pub embedding: SubalgebraEmbedding,
    /// Columns are the adapted basis in the original coordinates.
    pub change: Matrix,
    pub inverse: Matrix,
}

impl Adapted {
    pub fn algebra(&self) -> &FiniteDimAlgebra {
        self.embedding.ambient()
    }

    pub fn dim_sub(&self) -> usize {
        self.embedding.dim_sub()
    }

    pub fn dim_complement(&self) -> usize {
        self.embedding.dim_quotient()
    }

    /// Transports an `A`-bimodule to the adapted basis of `A`.
    pub fn bimodule(&self, x: &Bimodule) -> Result<Bimodule, Error> {
        x.pull_back(self.algebra(), &self.change.columns())
    }
}

impl SubalgebraEmbedding {
    pub fn ambient(&self) -> &FiniteDimAlgebra {
        &self.ambient
    }

    pub fn sub(&self) -> &FiniteDimAlgebra {
        &self.sub
    }

    /// `dim A x dim B`.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_columns(self.ambient.field(), self.ambient.dim(), &self.generators)
    }

    pub fn generators(&self) -> &[SparseVec] {
        &self.generators
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quotient
    }

    pub fn dim_sub(&self) -> usize {
        self.sub.dim()
    }

    pub fn dim_quotient(&self) -> usize {
        self.quotient.quotient_dim()
    }

    /// Columns spanning the complement `S`, one per quotient basis vector.
    pub fn complement(&self) -> Matrix {
        self.quotient.section_matrix()
    }

    pub fn projection(&self) -> Matrix {
        self.quotient.projection_matrix()
    }

    /// Image in `A` of an element of `B` given in generator coordinates.
    pub fn include(&self, b: &SparseVec) -> SparseVec {
        SparseVec::combine(b.iter().map(|(i, c)| (c.clone(), &self.generators[*i])))
    }

    pub fn project(&self, a: &SparseVec) -> SparseVec {
        self.quotient.project(a)
    }

    pub fn section(&self, q: &SparseVec) -> SparseVec {
        self.quotient.section(q)
    }

    pub fn contains(&self, a: &SparseVec) -> bool {
        self.quotient.is_relation(a)
    }

    /// `A/B` as a `B`-bimodule, `b.α = π(b σ(α))` and `α.b = π(σ(α) b)`.
    /// Through the section this is the transported structure on `S`.
    pub fn quotient_bimodule(&self) -> Result<Bimodule, Error> {
        let q = self.dim_quotient();
        let table = |left: bool| -> ActionTable {
            self.generators
                .iter()
                .map(|b| {
                    (0..q)
                        .map(|s| {
                            let rep = self.quotient.section_of_basis(s);
                            let p = if left { self.ambient.mul(b, &rep) } else { self.ambient.mul(&rep, b) };
                            self.project(&p)
                        })
                        .collect()
                })
                .collect()
        };
        Bimodule::from_tables(self.sub.clone(), q, table(true), table(false))
    }

    /// Restricts an `A`-bimodule to `B`.
    pub fn restrict(&self, x: &Bimodule) -> Result<Bimodule, Error> {
        x.pull_back(&self.sub, &self.generators)
    }

    pub fn adapted(&self) -> Result<Adapted, Error> {
        let f = self.ambient.field();
        let n = self.ambient.dim();
        let mut cols = self.generators.clone();
        cols.extend((0..self.dim_quotient()).map(|s| self.quotient.section_of_basis(s)));
        let change = Matrix::from_columns(f, n, &cols);
        let basis = Basis::new(f, n, cols).map_err(|_| Error::Invariant("complement does not complete B to a basis".into()))?;
        let inv_cols: Vec<SparseVec> = (0..n)
            .map(|k| basis.coords(&SparseVec::unit(k, f)).expect("basis spans"))
            .collect();
        let inverse = Matrix::from_columns(f, n, &inv_cols);
        let mut labels: Vec<String> = self.sub.labels().to_vec();
        labels.extend(
            self.quotient
                .representatives()
                .iter()
                .map(|&c| self.ambient.labels()[c].clone()),
        );
        let algebra = self.ambient.rebase(&change, &inverse, labels)?;
        let head = Matrix::from_columns(f, n, &(0..self.dim_sub()).map(|i| SparseVec::unit(i, f)).collect::<Vec<_>>());
        let embedding = make_subalgebra(&algebra, &head)?;
        Ok(Adapted {
            embedding,
            change,
            inverse,
        })
    }
}

/// The transported `B`-bimodule structure on `S`, with the checks that
/// `π|_S` is a bimodule isomorphism onto `A/B` and that each transported
/// product differs from the ambient one by an element of `B`.
pub fn transported_s(emb: &SubalgebraEmbedding) -> Result<Bimodule, Error> {
    let s = emb.quotient_bimodule()?;
    let q = emb.dim_quotient();
    let f = emb.ambient().field();
    for (bi, b) in emb.generators().iter().enumerate() {
        for k in 0..q {
            let rep = emb.quotient().section_of_basis(k);
            let transported_left = emb.section(s.left_basis(bi, k));
            let transported_right = emb.section(s.right_basis(bi, k));
            if !emb.contains(&transported_left.sub(&emb.ambient().mul(b, &rep))) {
                return Err(Error::Invariant(format!("b{bi}.s{k} - b{bi}s{k} is not in B")));
            }
            if !emb.contains(&transported_right.sub(&emb.ambient().mul(&rep, b))) {
                return Err(Error::Invariant(format!("s{k}.b{bi} - s{k}b{bi} is not in B")));
            }
            let back = emb.project(&transported_left);
            if back != *s.left_basis(bi, k) || emb.project(&SparseVec::unit(emb.quotient().representatives()[k], f)) != SparseVec::unit(k, f) {
                return Err(Error::Invariant("π restricted to S is not the identity on coordinates".into()));
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::super::quiver::{from_quiver, Arrow};
    use super::super::structure::tests::dual_numbers;
    use super::*;
    use crate::exactlin::Field;

    fn upper_triangular(f: Field) -> FiniteDimAlgebra {
        from_quiver(
            f,
            &["e11".into(), "e22".into()],
            &[Arrow {
                name: "e12".into(),
                source: 0,
                target: 1,
            }],
            &[],
            10,
        )
        .unwrap()
    }

    fn cols(f: Field, n: usize, cs: &[&[i64]]) -> Matrix {
        let v: Vec<SparseVec> = cs
            .iter()
            .map(|c| SparseVec::from_dense(&c.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>()))
            .collect();
        Matrix::from_columns(f, n, &v)
    }

    #[test]
    fn subalgebra_examples() {
        let f = Field::Rational;
        let d = dual_numbers(f);
        let k = make_subalgebra(&d, &cols(f, 2, &[&[1, 0]])).unwrap();
        assert_eq!(k.complement(), cols(f, 2, &[&[0, 1]]));

        let t = upper_triangular(f);
        let diag = make_subalgebra(&t, &cols(f, 3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(diag.complement(), cols(f, 3, &[&[0, 0, 1]]));

        assert!(matches!(make_subalgebra(&d, &cols(f, 2, &[&[0, 1]])), Err(Error::UnitNotContained)));
        let arrows = [
            Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            },
            Arrow {
                name: "b".into(),
                source: 1,
                target: 2,
            },
        ];
        let a3 = from_quiver(f, &["1".into(), "2".into(), "3".into()], &arrows, &[], 10).unwrap();
        // (a + b)^2 = ab is outside span{1, a + b}.
        let r = make_subalgebra(&a3, &cols(f, 6, &[&[1, 1, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 0]]));
        assert!(matches!(r, Err(Error::NotClosed(1, 1))));
        assert!(matches!(
            make_subalgebra(&t, &cols(f, 3, &[&[1, 1, 0], &[1, 0, 0], &[0, 0, 0]])),
            Err(Error::DependentGenerators(2))
        ));
    }

    #[test]
    fn section_and_projection() {
        let f = Field::Rational;
        let t = upper_triangular(f);
        let diag = make_subalgebra(&t, &cols(f, 3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let pi = diag.projection();
        assert!(pi.mul(&diag.complement()).unwrap().is_identity());
        assert!(pi.mul(&diag.inclusion()).unwrap().is_zero());
    }

    #[test]
    fn transported_examples() {
        let f = Field::Rational;
        let d = dual_numbers(f);
        let k = make_subalgebra(&d, &cols(f, 2, &[&[1, 0]])).unwrap();
        let s = transported_s(&k).unwrap();
        assert!(s.left_matrix(0).is_identity());

        let t = upper_triangular(f);
        let diag = make_subalgebra(&t, &cols(f, 3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let s = transported_s(&diag).unwrap();
        // e11 acts as 1 on the left, e22 as 1 on the right.
        assert!(s.left_matrix(0).is_identity());
        assert!(s.left_matrix(1).is_zero());
        assert!(s.right_matrix(0).is_zero());
        assert!(s.right_matrix(1).is_identity());
    }

    #[test]
    fn restrict_examples() {
        let f = Field::Rational;
        let t = upper_triangular(f);
        let x = Bimodule::regular(&t);
        let all = make_subalgebra(&t, &Matrix::identity(f, 3)).unwrap();
        let r = all.restrict(&x).unwrap();
        for i in 0..3 {
            assert_eq!(r.left_matrix(i), x.left_matrix(i));
        }
        let diag = make_subalgebra(&t, &cols(f, 3, &[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(diag.restrict(&x).unwrap().dim(), 3);
        let k = make_subalgebra(&t, &cols(f, 3, &[&[1, 1, 0]])).unwrap();
        assert!(k.restrict(&x).unwrap().left_matrix(0).is_identity());
    }

    #[test]
    fn adapted_basis_splits() {
        let f = Field::Rational;
        let d = dual_numbers(f);
        let k = make_subalgebra(&d, &cols(f, 2, &[&[1, 0]])).unwrap();
        let ad = k.adapted().unwrap();
        assert_eq!(ad.dim_sub(), 1);
        assert_eq!(ad.algebra().product(1, 1), &SparseVec::new());
        let x = ad.bimodule(&Bimodule::regular(&d)).unwrap();
        assert_eq!(x.dim(), 2);

        let t = upper_triangular(f);
        let b = make_subalgebra(&t, &cols(f, 3, &[&[1, 1, 0], &[0, 1, 0]])).unwrap();
        let ad = b.adapted().unwrap();
        let alg = ad.algebra();
        // The first two basis vectors span a subalgebra.
        for i in 0..2 {
            for j in 0..2 {
                assert!(alg.product(i, j).max_index().is_none_or(|m| m < 2));
            }
        }
        assert_eq!(ad.change.mul(&ad.inverse).unwrap(), Matrix::identity(f, 3));
    }
}
