//! Tensor products over a subalgebra `B` and over `B^e`, realised as
//! quotients of ordinary tensor products.

mod layout;

use std::sync::{Arc, RwLock};

pub use layout::{balanced_relations, Factor, Layout};

use crate::algebra::{ActionTable, Bimodule, SubalgebraEmbedding};
use crate::error::Error;
use crate::exactlin::{induced_map_with, QuotientSpace, SparseVec};

/// A `B`-bimodule realised as a quotient of an ambient tensor space.
#[derive(Clone, Debug)]
pub struct BModBimodule {
    pub quotient: QuotientSpace,
    pub module: Bimodule,
}

impl BModBimodule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// A bimodule viewed as the quotient of itself by nothing.
    pub fn plain(module: Bimodule) -> BModBimodule {
        let f = module.algebra().field();
        BModBimodule {
            quotient: QuotientSpace::new(f, module.dim(), std::iter::empty()),
            module,
        }
    }
}

fn same_algebra(m: &Bimodule, n: &Bimodule) -> Result<(), Error> {
    if m.algebra() != n.algebra() {
        return Err(Error::DimensionMismatch("bimodules over different algebras".into()));
    }
    Ok(())
}

/// `M ⊗_B N` with the outer actions descended to the quotient.
pub fn tensor_over_b(m: &Bimodule, n: &Bimodule) -> Result<BModBimodule, Error> {
    same_algebra(m, n)?;
    let b = m.algebra();
    let f = b.field();
    let layout = Layout::new(vec![m.dim(), n.dim()]);
    let factors = [
        Factor {
            dim: m.dim(),
            left: None,
            right: Some(m.right_table()),
        },
        Factor {
            dim: n.dim(),
            left: Some(n.left_table()),
            right: None,
        },
    ];
    let rels = balanced_relations(&layout, &factors, b.dim(), false);
    let quotient = QuotientSpace::new(f, layout.size(), rels);
    let descend = |slot: usize, table: &ActionTable| -> Result<ActionTable, Error> {
        (0..b.dim())
            .map(|i| {
                let mat = induced_map_with(&quotient, &quotient, |v: &SparseVec| layout.act_on_slot(v, slot, &table[i]))?;
                Ok(mat.columns())
            })
            .collect()
    };
    let left = descend(0, m.left_table())?;
    let right = descend(1, n.right_table())?;
    let module = Bimodule::from_tables(b.clone(), quotient.quotient_dim(), left, right)?;
    Ok(BModBimodule { quotient, module })
}

/// The space `X ⊗_{B^e} M`.
#[derive(Clone, Debug)]
pub struct CoinvariantSpace {
    pub quotient: QuotientSpace,
}

impl CoinvariantSpace {
    pub fn dim(&self) -> usize {
        self.quotient.quotient_dim()
    }
}

/// `X ⊗ M` modulo `x b ⊗ m - x ⊗ b m` and `b x ⊗ m - x ⊗ m b`.
pub fn coinvariants(x: &Bimodule, m: &Bimodule) -> Result<CoinvariantSpace, Error> {
    same_algebra(x, m)?;
    let layout = Layout::new(vec![x.dim(), m.dim()]);
    let factors = [
        Factor {
            dim: x.dim(),
            left: Some(x.left_table()),
            right: Some(x.right_table()),
        },
        Factor {
            dim: m.dim(),
            left: Some(m.left_table()),
            right: Some(m.right_table()),
        },
    ];
    let rels = balanced_relations(&layout, &factors, x.algebra().dim(), true);
    Ok(CoinvariantSpace {
        quotient: QuotientSpace::new(x.algebra().field(), layout.size(), rels),
    })
}

/// Left-associated powers `(A/B)^{⊗_B n}`, computed on demand and cached.
#[derive(Debug)]
pub struct PowerTower {
    base: Bimodule,
    unit: Bimodule,
    cache: RwLock<Vec<Arc<BModBimodule>>>,
}

impl PowerTower {
    pub fn new(emb: &SubalgebraEmbedding) -> Result<PowerTower, Error> {
        let base = emb.quotient_bimodule()?;
        let unit = Bimodule::regular(emb.sub());
        let zero = Arc::new(BModBimodule::plain(unit.clone()));
        let one = Arc::new(BModBimodule::plain(base.clone()));
        Ok(PowerTower {
            base,
            unit,
            cache: RwLock::new(vec![zero, one]),
        })
    }

    /// `B` as a bimodule over itself.
    pub fn unit(&self) -> &Bimodule {
        &self.unit
    }

    pub fn base(&self) -> &Bimodule {
        &self.base
    }

    pub fn power(&self, n: usize) -> Result<Arc<BModBimodule>, Error> {
        loop {
            let have = {
                let c = self.cache.read().expect("power cache poisoned");
                if let Some(p) = c.get(n) {
                    return Ok(p.clone());
                }
                c.len()
            };
            let prev = self.cache.read().expect("power cache poisoned")[have - 1].clone();
            let next = Arc::new(tensor_over_b(&prev.module, &self.base)?);
            let mut c = self.cache.write().expect("power cache poisoned");
            if c.len() == have {
                c.push(next);
            }
        }
    }
}

/// `(A/B)^{⊗_B n}`; `n = 0` gives `B`.
pub fn power_over_b(emb: &SubalgebraEmbedding, n: usize) -> Result<Arc<BModBimodule>, Error> {
    PowerTower::new(emb)?.power(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_quiver, ground_field, make_algebra, make_subalgebra, Arrow, FiniteDimAlgebra};
    use crate::exactlin::{Field, Matrix};

    fn f() -> Field {
        Field::Rational
    }

    fn dual() -> FiniteDimAlgebra {
        let f = f();
        let e = |i| SparseVec::unit(i, f);
        make_algebra(f, vec!["1".into(), "x".into()], vec![vec![e(0), e(1)], vec![e(1), SparseVec::new()]], e(0)).unwrap()
    }

    fn upper() -> FiniteDimAlgebra {
        let arrows = [Arrow {
            name: "e12".into(),
            source: 0,
            target: 1,
        }];
        from_quiver(f(), &["e11".into(), "e22".into()], &arrows, &[], 10).unwrap()
    }

    fn diag_emb() -> SubalgebraEmbedding {
        make_subalgebra(&upper(), &Matrix::from_dense(f(), &[vec![1, 0], vec![0, 1], vec![0, 0]])).unwrap()
    }

    /// `k` as a bimodule over the dual numbers with `x` acting by zero.
    fn trivial_dual() -> Bimodule {
        let f = f();
        let id = Matrix::identity(f, 1);
        let z = Matrix::zeros(f, 1, 1);
        Bimodule::new(dual(), 1, &[id.clone(), z.clone()], &[id, z]).unwrap()
    }

    #[test]
    fn tensor_examples() {
        let t = upper();
        let x = Bimodule::regular(&t);
        let b = Bimodule::regular(&t);
        assert_eq!(tensor_over_b(&x, &b).unwrap().dim(), x.dim());

        let k = ground_field(f());
        let m = Bimodule::regular(&k);
        assert_eq!(tensor_over_b(&m, &m).unwrap().dim(), 1);

        let kk = trivial_dual();
        assert_eq!(tensor_over_b(&kk, &kk).unwrap().dim(), 1);
    }

    #[test]
    fn unit_laws_and_associativity() {
        let emb = diag_emb();
        let b = Bimodule::regular(emb.sub());
        let x = emb.restrict(&Bimodule::regular(emb.ambient())).unwrap();
        let s = emb.quotient_bimodule().unwrap();
        for m in [&x, &s] {
            assert_eq!(tensor_over_b(m, &b).unwrap().dim(), m.dim());
            assert_eq!(tensor_over_b(&b, m).unwrap().dim(), m.dim());
        }
        let xs = tensor_over_b(&x, &s).unwrap().module;
        let sx = tensor_over_b(&s, &x).unwrap().module;
        let left = tensor_over_b(&xs, &x).unwrap().dim();
        let right = tensor_over_b(&x, &sx).unwrap().dim();
        assert_eq!(left, right);
    }

    #[test]
    fn power_examples() {
        let emb = diag_emb();
        assert_eq!(power_over_b(&emb, 1).unwrap().dim(), 1);
        assert_eq!(power_over_b(&emb, 2).unwrap().dim(), 0);
        assert_eq!(power_over_b(&emb, 0).unwrap().dim(), 2);

        let t = upper();
        let k = make_subalgebra(&t, &Matrix::from_dense(f(), &[vec![1], vec![1], vec![0]])).unwrap();
        assert_eq!(power_over_b(&k, 2).unwrap().dim(), 4);
    }

    #[test]
    fn coinvariant_examples() {
        let t = upper();
        let k = make_subalgebra(&t, &Matrix::from_dense(f(), &[vec![1], vec![1], vec![0]])).unwrap();
        let x = k.restrict(&Bimodule::regular(&t)).unwrap();
        let s = k.quotient_bimodule().unwrap();
        assert_eq!(coinvariants(&x, &s).unwrap().dim(), 3 * 2);

        let d = dual();
        let xb = Bimodule::regular(&d);
        assert_eq!(coinvariants(&xb, &xb).unwrap().dim(), 2);

        let emb = diag_emb();
        let x = emb.restrict(&Bimodule::regular(&t)).unwrap();
        let b = Bimodule::regular(emb.sub());
        assert_eq!(coinvariants(&x, &b).unwrap().dim(), 2);
    }
}
