//! The normalised relative bar resolution of `A` over `B`, the relative
//! Hochschild complex `X ⊗_{B^e} (A/B)^{⊗_B n}` and the standard Hochschild
//! complex `X ⊗ A^{⊗n}`.

use crate::algebra::{act_by, Bimodule, SubalgebraEmbedding};
use crate::complexes::ChainComplex;
use crate::error::Error;
use crate::exactlin::{induced_map_with, Matrix, QuotientSpace, Scalar, SparseVec};
use crate::tensorb::{balanced_relations, Factor, Layout};

/// Descends an ambient map given by its columns.
pub fn descend(src: &QuotientSpace, dst: &QuotientSpace, columns: &[SparseVec]) -> Result<Matrix, Error> {
    induced_map_with(src, dst, |v: &SparseVec| {
        SparseVec::combine(v.iter().map(|(i, c)| (c.clone(), &columns[*i])))
    })
}

fn signed(sign: bool, c: Scalar) -> Scalar {
    if sign {
        -c
    } else {
        c
    }
}

/// Layout of `X ⊗ A^{⊗n}`.
pub fn hochschild_layout(x: &Bimodule, n: usize) -> Layout {
    Layout::new(std::iter::once(x.dim()).chain(std::iter::repeat_n(x.algebra().dim(), n)).collect())
}

/// `b_A(x ⊗ a_1 ⊗ ... ⊗ a_n)` for one basis tuple, `n >= 1`.
pub fn hochschild_column(x: &Bimodule, t: &[usize], dst: &Layout) -> SparseVec {
    let a = x.algebra();
    let n = t.len() - 1;
    let mut terms: Vec<(usize, Scalar)> = Vec::new();
    let mut u = t.to_vec();
    u.remove(1);
    for (xi, c) in x.right_basis(t[1], t[0]).iter() {
        u[0] = *xi;
        terms.push((dst.encode(&u), c.clone()));
    }
    for i in 1..n {
        let mut u: Vec<usize> = t[..i].to_vec();
        u.push(0);
        u.extend_from_slice(&t[i + 2..]);
        for (k, c) in a.product(t[i], t[i + 1]).iter() {
            u[i] = *k;
            terms.push((dst.encode(&u), signed(i % 2 == 1, c.clone())));
        }
    }
    let mut u = t[..n].to_vec();
    for (xi, c) in x.left_basis(t[n], t[0]).iter() {
        u[0] = *xi;
        terms.push((dst.encode(&u), signed(n % 2 == 1, c.clone())));
    }
    SparseVec::from_terms(terms)
}

/// `b_A` on the whole basis of `X ⊗ A^{⊗n}`, as columns.
pub fn hochschild_columns(x: &Bimodule, n: usize) -> Vec<SparseVec> {
    let src = hochschild_layout(x, n);
    let dst = hochschild_layout(x, n - 1);
    crate::par::map_range(src.size(), |idx| hochschild_column(x, &src.decode(idx), &dst))
}

/// The Hochschild complex `C_*(A, X)` in degrees `0..=top`.
pub fn hochschild_complex(x: &Bimodule, top: usize) -> Result<ChainComplex, Error> {
    let a = x.algebra();
    let f = a.field();
    let dims: Vec<usize> = (0..=top).map(|n| x.dim() * a.dim().pow(n as u32)).collect();
    let diffs = (1..=top)
        .map(|n| Matrix::from_columns(f, dims[n - 1], &hochschild_columns(x, n)))
        .collect();
    ChainComplex::new(f, dims, diffs)
}

/// A section `σ : A/B -> A` with the products it induces, precomputed.
#[derive(Clone, Debug)]
pub struct Section {
    /// `σ(α_j)` in `A`.
    pub images: Vec<SparseVec>,
    /// `π(σ(α_i) σ(α_j))`.
    pub products: Vec<Vec<SparseVec>>,
}

impl Section {
    /// Checks `π σ = 1` for a `dim A x dim A/B` matrix.
    pub fn new(emb: &SubalgebraEmbedding, sigma: &Matrix) -> Result<Section, Error> {
        if sigma.rows() != emb.ambient().dim() || sigma.cols() != emb.dim_quotient() {
            return Err(Error::DimensionMismatch("section has the wrong shape".into()));
        }
        let images = sigma.columns();
        let f = emb.ambient().field();
        for (j, s) in images.iter().enumerate() {
            if emb.project(s) != SparseVec::unit(j, f) {
                return Err(Error::NotASection);
            }
        }
        let products = images
            .iter()
            .map(|u| images.iter().map(|v| emb.project(&emb.ambient().mul(u, v))).collect())
            .collect();
        Ok(Section { images, products })
    }

    pub fn standard(emb: &SubalgebraEmbedding) -> Section {
        Section::new(emb, &emb.complement()).expect("the complement is a section")
    }
}

fn require_over_ambient(emb: &SubalgebraEmbedding, x: &Bimodule) -> Result<(), Error> {
    if x.algebra() != emb.ambient() {
        return Err(Error::DimensionMismatch("bimodule is not over the ambient algebra".into()));
    }
    Ok(())
}

/// `C_*(A|B, X)`: degree `n` is `X ⊗_{B^e} (A/B)^{⊗_B n}`, realised as a
/// quotient of `X ⊗ (A/B)^{⊗n}`.
#[derive(Clone, Debug)]
pub struct RelativeChainComplex {
    pub complex: ChainComplex,
    pub spaces: Vec<QuotientSpace>,
    pub layouts: Vec<Layout>,
}

/// The degree-`n` relative space `X ⊗_{B^e} (A/B)^{⊗_B n}`.
pub fn relative_space(emb: &SubalgebraEmbedding, xb: &Bimodule, s: &Bimodule, n: usize) -> (Layout, QuotientSpace) {
    let layout = Layout::new(std::iter::once(xb.dim()).chain(std::iter::repeat_n(s.dim(), n)).collect());
    let mut factors = vec![Factor {
        dim: xb.dim(),
        left: Some(xb.left_table()),
        right: Some(xb.right_table()),
    }];
    factors.extend(std::iter::repeat_n(
        Factor {
            dim: s.dim(),
            left: Some(s.left_table()),
            right: Some(s.right_table()),
        },
        n,
    ));
    let rels = balanced_relations(&layout, &factors, emb.dim_sub(), true);
    let q = QuotientSpace::new(emb.ambient().field(), layout.size(), rels);
    (layout, q)
}

/// `b_{A|B}` on the ambient basis of `X ⊗ (A/B)^{⊗n}`, `n >= 1`.
fn relative_columns(x: &Bimodule, sec: &Section, src: &Layout, dst: &Layout, n: usize) -> Vec<SparseVec> {
    crate::par::map_range(src.size(), |idx| {
        let t = src.decode(idx);
        let mut terms: Vec<(usize, Scalar)> = Vec::new();
        let mut u = t.clone();
        u.remove(1);
        for (xi, c) in x.act_right(&SparseVec::unit(t[0], x.algebra().field()), &sec.images[t[1]]).iter() {
            u[0] = *xi;
            terms.push((dst.encode(&u), c.clone()));
        }
        for i in 1..n {
            let mut u: Vec<usize> = t[..i].to_vec();
            u.push(0);
            u.extend_from_slice(&t[i + 2..]);
            for (k, c) in sec.products[t[i]][t[i + 1]].iter() {
                u[i] = *k;
                terms.push((dst.encode(&u), signed(i % 2 == 1, c.clone())));
            }
        }
        let mut u = t[..n].to_vec();
        for (xi, c) in act_by(x.left_table(), &sec.images[t[n]], &SparseVec::unit(t[0], x.algebra().field())).iter() {
            u[0] = *xi;
            terms.push((dst.encode(&u), signed(n % 2 == 1, c.clone())));
        }
        SparseVec::from_terms(terms)
    })
}

pub fn relative_chain_complex(emb: &SubalgebraEmbedding, x: &Bimodule, top: usize) -> Result<RelativeChainComplex, Error> {
    relative_chain_complex_with(emb, x, top, &Section::standard(emb))
}

/// The relative complex built with the given section; every differential is
/// checked to be well defined on the quotients before it is descended.
pub fn relative_chain_complex_with(
    emb: &SubalgebraEmbedding,
    x: &Bimodule,
    top: usize,
    sec: &Section,
) -> Result<RelativeChainComplex, Error> {
    require_over_ambient(emb, x)?;
    let xb = emb.restrict(x)?;
    let s = emb.quotient_bimodule()?;
    let (layouts, spaces): (Vec<Layout>, Vec<QuotientSpace>) =
        crate::par::map_range(top + 1, |n| relative_space(emb, &xb, &s, n)).into_iter().unzip();
    let diffs = (1..=top)
        .map(|n| {
            let cols = relative_columns(x, sec, &layouts[n], &layouts[n - 1], n);
            descend(&spaces[n], &spaces[n - 1], &cols)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let complex = ChainComplex::new(
        emb.ambient().field(),
        spaces.iter().map(|q| q.quotient_dim()).collect(),
        diffs,
    )?;
    Ok(RelativeChainComplex {
        complex,
        spaces,
        layouts,
    })
}

/// Whether the descended differentials built with `sigma` coincide with
/// those built with the standard section in every degree up to `top`.
pub fn section_independence(emb: &SubalgebraEmbedding, x: &Bimodule, sigma: &Matrix, top: usize) -> Result<bool, Error> {
    let alt = Section::new(emb, sigma)?;
    let a = relative_chain_complex(emb, x, top)?;
    let b = relative_chain_complex_with(emb, x, top, &alt)?;
    Ok(a.complex == b.complex)
}

/// `σ + g` for a map `g : A/B -> B` given in generator coordinates
/// (`dim B x dim A/B`).
pub fn perturbed_section(emb: &SubalgebraEmbedding, g: &Matrix) -> Result<Matrix, Error> {
    emb.complement().add(&emb.inclusion().mul(g)?)
}

/// `P_m = A ⊗_B (A/B)^{⊗_B m} ⊗_B A` for `0 <= m <= top` with `d` and the
/// contracting homotopy `s`; `P_{-1} = A`.
#[derive(Clone, Debug)]
pub struct RelativeResolution {
    pub spaces: Vec<QuotientSpace>,
    /// `d[m] : P_m -> P_{m-1}`, with `d[0]` the multiplication `P_0 -> A`.
    pub d: Vec<Matrix>,
    /// `s[m + 1] : P_m -> P_{m+1}` for `-1 <= m < top`.
    pub s: Vec<Matrix>,
    augmentation_dim: usize,
}

impl RelativeResolution {
    pub fn top_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    /// `d_m d_{m+1} = 0` for `0 <= m < top`.
    pub fn check_square_zero(&self) -> Result<(), Error> {
        for m in 0..self.top_degree() {
            if !self.d[m].mul(&self.d[m + 1])?.is_zero() {
                return Err(Error::NotAComplex(format!("resolution: d_{m} d_{} != 0", m + 1)));
            }
        }
        Ok(())
    }

    /// `d s + s d = 1` on `P_m` for `-1 <= m < top`.
    pub fn check_homotopy(&self) -> Result<(), Error> {
        let f = self.d[0].field();
        // On P_{-1} = A only d_0 s_{-1} contributes.
        if !self.d[0].mul(&self.s[0])?.is_identity() {
            return Err(Error::Invariant("resolution: d s != 1 on A".into()));
        }
        for m in 0..self.top_degree() {
            let ds = self.d[m + 1].mul(&self.s[m + 1])?;
            let sd = self.s[m].mul(&self.d[m])?;
            let total = ds.add(&sd)?;
            if total != Matrix::identity(f, self.spaces[m].quotient_dim()) {
                return Err(Error::Invariant(format!("resolution: d s + s d != 1 on P_{m}")));
            }
        }
        Ok(())
    }

    /// Whether the augmentation `P_0 -> A` is onto.
    pub fn augmentation_surjective(&self) -> bool {
        crate::exactlin::rank(&self.d[0]) == self.augmentation_dim
    }
}

fn resolution_space(emb: &SubalgebraEmbedding, a_b: &Bimodule, s: &Bimodule, m: usize) -> (Layout, QuotientSpace) {
    let da = emb.ambient().dim();
    let layout = Layout::new(
        std::iter::once(da)
            .chain(std::iter::repeat_n(s.dim(), m))
            .chain(std::iter::once(da))
            .collect(),
    );
    let mut factors = vec![Factor {
        dim: da,
        left: None,
        right: Some(a_b.right_table()),
    }];
    factors.extend(std::iter::repeat_n(
        Factor {
            dim: s.dim(),
            left: Some(s.left_table()),
            right: Some(s.right_table()),
        },
        m,
    ));
    factors.push(Factor {
        dim: da,
        left: Some(a_b.left_table()),
        right: None,
    });
    let rels = balanced_relations(&layout, &factors, emb.dim_sub(), false);
    (layout.clone(), QuotientSpace::new(emb.ambient().field(), layout.size(), rels))
}

pub fn relative_resolution(emb: &SubalgebraEmbedding, top: usize) -> Result<RelativeResolution, Error> {
    relative_resolution_with(emb, top, &Section::standard(emb))
}

pub fn relative_resolution_with(emb: &SubalgebraEmbedding, top: usize, sec: &Section) -> Result<RelativeResolution, Error> {
    let a = emb.ambient();
    let f = a.field();
    let da = a.dim();
    let a_b = emb.restrict(&Bimodule::regular(a))?;
    let s = emb.quotient_bimodule()?;
    let (layouts, spaces): (Vec<Layout>, Vec<QuotientSpace>) =
        crate::par::map_range(top + 1, |m| resolution_space(emb, &a_b, &s, m)).into_iter().unzip();
    let plain_a = QuotientSpace::new(f, da, std::iter::empty());

    let mut d = Vec::with_capacity(top + 1);
    let mult: Vec<SparseVec> = (0..layouts[0].size())
        .map(|idx| {
            let t = layouts[0].decode(idx);
            a.product(t[0], t[1]).clone()
        })
        .collect();
    d.push(descend(&spaces[0], &plain_a, &mult)?);
    for m in 1..=top {
        let (src, dst) = (&layouts[m], &layouts[m - 1]);
        let cols = crate::par::map_range(src.size(), |idx| {
            let t = src.decode(idx);
            let mut terms: Vec<(usize, Scalar)> = Vec::new();
            let mut u = t.clone();
            u.remove(1);
            let first = a.mul(&SparseVec::unit(t[0], f), &sec.images[t[1]]);
            for (k, c) in first.iter() {
                u[0] = *k;
                terms.push((dst.encode(&u), c.clone()));
            }
            for i in 1..m {
                let mut u: Vec<usize> = t[..i].to_vec();
                u.push(0);
                u.extend_from_slice(&t[i + 2..]);
                for (k, c) in sec.products[t[i]][t[i + 1]].iter() {
                    u[i] = *k;
                    terms.push((dst.encode(&u), signed(i % 2 == 1, c.clone())));
                }
            }
            let mut u = t.clone();
            u.remove(m);
            let last = a.mul(&sec.images[t[m]], &SparseVec::unit(t[m + 1], f));
            for (k, c) in last.iter() {
                u[m] = *k;
                terms.push((dst.encode(&u), signed(m % 2 == 1, c.clone())));
            }
            SparseVec::from_terms(terms)
        });
        d.push(descend(&spaces[m], &spaces[m - 1], &cols)?);
    }

    let mut s_maps = Vec::with_capacity(top + 1);
    let lift: Vec<SparseVec> = (0..da)
        .map(|k| SparseVec::from_terms(a.unit().iter().map(|(i, c)| (layouts[0].encode(&[*i, k]), c.clone())).collect()))
        .collect();
    s_maps.push(descend(&plain_a, &spaces[0], &lift)?);
    for m in 0..top {
        let (src, dst) = (&layouts[m], &layouts[m + 1]);
        let cols = crate::par::map_range(src.size(), |idx| {
            let t = src.decode(idx);
            let head = emb.project(&SparseVec::unit(t[0], f));
            let mut terms = Vec::new();
            for (i, c1) in a.unit().iter() {
                for (q, c2) in head.iter() {
                    let mut u = vec![*i, *q];
                    u.extend_from_slice(&t[1..]);
                    terms.push((dst.encode(&u), c1 * c2));
                }
            }
            SparseVec::from_terms(terms)
        });
        s_maps.push(descend(&spaces[m], &spaces[m + 1], &cols)?);
    }
    Ok(RelativeResolution {
        spaces,
        d,
        s: s_maps,
        augmentation_dim: da,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_quiver, ground_field, make_algebra, make_subalgebra, Arrow, FiniteDimAlgebra};
    use crate::exactlin::Field;
    use crate::tensorb::{coinvariants, power_over_b};

    fn q() -> Field {
        Field::Rational
    }

    fn dual() -> FiniteDimAlgebra {
        let f = q();
        let e = |i| SparseVec::unit(i, f);
        make_algebra(f, vec!["1".into(), "x".into()], vec![vec![e(0), e(1)], vec![e(1), SparseVec::new()]], e(0)).unwrap()
    }

    fn upper() -> FiniteDimAlgebra {
        let arrows = [Arrow {
            name: "e12".into(),
            source: 0,
            target: 1,
        }];
        from_quiver(q(), &["e11".into(), "e22".into()], &arrows, &[], 10).unwrap()
    }

    fn unit_sub(a: &FiniteDimAlgebra) -> SubalgebraEmbedding {
        make_subalgebra(a, &Matrix::from_columns(q(), a.dim(), &[a.unit().clone()])).unwrap()
    }

    #[test]
    fn hochschild_examples() {
        let k = ground_field(q());
        let c = hochschild_complex(&Bimodule::regular(&k), 4).unwrap();
        assert_eq!(c.homology_dims(), vec![1, 0, 0, 0]);

        let d = dual();
        let c = hochschild_complex(&Bimodule::regular(&d), 5).unwrap();
        assert_eq!(c.homology_dims(), vec![2, 1, 1, 1, 1]);

        assert!(hochschild_complex(&Bimodule::regular(&upper()), 5).is_ok());
    }

    #[test]
    fn relative_examples() {
        let d = dual();
        let x = Bimodule::regular(&d);
        let all = make_subalgebra(&d, &Matrix::identity(q(), 2)).unwrap();
        let r = relative_chain_complex(&all, &x, 3).unwrap();
        assert_eq!(r.complex.dims(), &[2, 0, 0, 0]);

        let k = unit_sub(&d);
        let rel = relative_chain_complex(&k, &x, 5).unwrap().complex.homology_dims();
        let abs = hochschild_complex(&x, 5).unwrap().homology_dims();
        assert_eq!(rel[1..], abs[1..]);

        let t = upper();
        let diag = make_subalgebra(&t, &Matrix::from_dense(q(), &[vec![1, 0], vec![0, 1], vec![0, 0]])).unwrap();
        let r = relative_chain_complex(&diag, &Bimodule::regular(&t), 4).unwrap();
        assert_eq!(&r.complex.dims()[2..], &[0, 0, 0]);
    }

    #[test]
    fn relative_spaces_match_iterated_quotients() {
        let t = upper();
        let k = unit_sub(&t);
        let diag = make_subalgebra(&t, &Matrix::from_dense(q(), &[vec![1, 0], vec![0, 1], vec![0, 0]])).unwrap();
        for emb in [&k, &diag] {
            let x = Bimodule::regular(&t);
            let r = relative_chain_complex(emb, &x, 3).unwrap();
            let xb = emb.restrict(&x).unwrap();
            for n in 0..=3 {
                let p = power_over_b(emb, n).unwrap();
                assert_eq!(coinvariants(&xb, &p.module).unwrap().dim(), r.complex.dim(n));
            }
        }
    }

    #[test]
    fn section_independence_examples() {
        let d = dual();
        let x = Bimodule::regular(&d);
        let k = unit_sub(&d);
        assert!(section_independence(&k, &x, &k.complement(), 4).unwrap());
        let g = Matrix::from_dense(q(), &[vec![3]]);
        let alt = perturbed_section(&k, &g).unwrap();
        assert!(section_independence(&k, &x, &alt, 4).unwrap());
        let bad = Matrix::from_dense(q(), &[vec![0], vec![2]]);
        assert!(matches!(section_independence(&k, &x, &bad, 2), Err(Error::NotASection)));
    }

    #[test]
    fn resolution_examples() {
        let d = dual();
        let all = make_subalgebra(&d, &Matrix::identity(q(), 2)).unwrap();
        let r = relative_resolution(&all, 3).unwrap();
        r.check_square_zero().unwrap();
        r.check_homotopy().unwrap();
        assert_eq!(r.spaces[0].quotient_dim(), 2);
        assert_eq!(r.spaces[1].quotient_dim(), 0);

        let k = unit_sub(&d);
        let r = relative_resolution(&k, 4).unwrap();
        r.check_square_zero().unwrap();
        r.check_homotopy().unwrap();
        assert!(r.augmentation_surjective());

        let t = upper();
        let k = unit_sub(&t);
        let alt = perturbed_section(&k, &Matrix::from_dense(q(), &[vec![1, -2]])).unwrap();
        let r = relative_resolution_with(&k, 3, &Section::new(&k, &alt).unwrap()).unwrap();
        r.check_square_zero().unwrap();
        r.check_homotopy().unwrap();
    }
}
