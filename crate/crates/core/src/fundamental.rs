//! The fundamental sequence `0 -> Č(B,X) -> Č(A,X) -> Č(A|B,X) -> 0`, its
//! gap complex `Ker κ / Im ι`, and the filtration by the number of
//! tensorands taken from the complement `S`.
//!
//! Everything is computed in the adapted basis of `A`, where `B` is spanned
//! by the first `dim B` basis vectors and `S` by the rest, so the summands
//! `X ⊗ [S_p B_q]` are spanned by basis tuples.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{enveloping, Adapted, Bimodule, SubalgebraEmbedding};
use crate::complexes::{restrict_to_truncation, truncate, ChainComplex, ChainMap, Truncation};
use crate::error::Error;
use crate::exactlin::{kernel_basis, rank, Field, Matrix, QuotientSpace, Scalar, SparseVec, Subspace};
use crate::relbar::{hochschild_column, hochschild_complex, hochschild_layout, relative_chain_complex, RelativeChainComplex};
use crate::tensorb::{Layout, PowerTower};
use crate::torlab::{tor, HypothesisReport, TorRequest};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim [S_p B_q] = C(p+q, p) dim S^p dim B^q`.
pub fn spb_dims(n: usize, p: usize, dim_s: usize, dim_b: usize) -> usize {
    assert!(p <= n);
    binomial(n, p) * dim_s.pow(p as u32) * dim_b.pow((n - p) as u32)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FundamentalChecks {
    pub iota_injective: bool,
    pub kappa_iota_zero: bool,
    /// Surjectivity of `κ` in each degree `>= 2`.
    pub kappa_surjective: Vec<(usize, bool)>,
    /// Whether `κ_| : Ker b_A -> Ker b_{A|B}` happens to be onto.
    pub kappa_onto_in_degree_one: bool,
}

impl FundamentalChecks {
    pub fn all_hold(&self) -> bool {
        self.iota_injective && self.kappa_iota_zero && self.kappa_surjective.iter().all(|c| c.1)
    }
}

#[derive(Clone, Debug)]
pub struct FundamentalSequence {
    pub top: usize,
    pub adapted: Adapted,
    /// `X` over the adapted `A`.
    pub x: Bimodule,
    pub xb: Bimodule,
    pub absolute_a: ChainComplex,
    pub absolute_b: ChainComplex,
    pub relative: RelativeChainComplex,
    pub trunc_a: Truncation,
    pub trunc_b: Truncation,
    pub trunc_rel: Truncation,
    /// `ι` and `κ` between the truncated complexes.
    pub iota: ChainMap,
    pub kappa: ChainMap,
    /// `κ_n : X ⊗ A^{⊗n} -> X ⊗_{B^e} (A/B)^{⊗_B n}` before truncation.
    pub kappa_full: Vec<Matrix>,
    pub checks: FundamentalChecks,
}

impl FundamentalSequence {
    pub fn field(&self) -> Field {
        self.x.algebra().field()
    }

    pub fn dim_b(&self) -> usize {
        self.adapted.dim_sub()
    }

    pub fn dim_s(&self) -> usize {
        self.adapted.dim_complement()
    }

    pub fn embedding(&self) -> &SubalgebraEmbedding {
        &self.adapted.embedding
    }

    /// Number of tensorands from `S` in an `X ⊗ A^{⊗n}` basis tuple.
    pub fn s_count(&self, t: &[usize]) -> usize {
        t[1..].iter().filter(|&&a| a >= self.dim_b()).count()
    }

    /// Fails with the first violated property.
    pub fn verify(&self) -> Result<(), Error> {
        let c = &self.checks;
        if !c.iota_injective {
            return Err(Error::Invariant("ι is not injective".into()));
        }
        if !c.kappa_iota_zero {
            return Err(Error::Invariant("κ ι != 0".into()));
        }
        if let Some((n, _)) = c.kappa_surjective.iter().find(|c| !c.1) {
            return Err(Error::Invariant(format!("κ is not surjective in degree {n}")));
        }
        Ok(())
    }
}

fn iota_matrix(xb: &Bimodule, x: &Bimodule, n: usize) -> Matrix {
    let src = hochschild_layout(xb, n);
    let dst = hochschild_layout(x, n);
    let cols: Vec<SparseVec> = (0..src.size())
        .map(|i| SparseVec::unit(dst.encode(&src.decode(i)), x.algebra().field()))
        .collect();
    Matrix::from_columns(x.algebra().field(), dst.size(), &cols)
}

fn kappa_matrix(emb: &SubalgebraEmbedding, x: &Bimodule, rel: &RelativeChainComplex, n: usize) -> Matrix {
    let f = x.algebra().field();
    let src = hochschild_layout(x, n);
    let pis: Vec<SparseVec> = (0..x.algebra().dim()).map(|k| emb.project(&SparseVec::unit(k, f))).collect();
    let dst = &rel.layouts[n];
    let cols = crate::par::map_range(src.size(), |idx| {
        let t = src.decode(idx);
        let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(vec![t[0]], f.one())];
        for &a in &t[1..] {
            terms = terms
                .into_iter()
                .flat_map(|(u, c)| {
                    pis[a].iter().map(move |(q, d)| {
                        let mut v = u.clone();
                        v.push(*q);
                        (v, &c * d)
                    })
                })
                .collect();
        }
        let amb = SparseVec::from_terms(terms.into_iter().map(|(u, c)| (dst.encode(&u), c)).collect());
        rel.spaces[n].project(&amb)
    });
    Matrix::from_columns(f, rel.spaces[n].quotient_dim(), &cols)
}

pub fn build_fundamental(emb: &SubalgebraEmbedding, x: &Bimodule, top: usize) -> Result<FundamentalSequence, Error> {
    if x.algebra() != emb.ambient() {
        return Err(Error::DimensionMismatch("bimodule is not over the ambient algebra".into()));
    }
    let adapted = emb.adapted()?;
    let ea = adapted.embedding.clone();
    let xa = adapted.bimodule(x)?;
    let xb = ea.restrict(&xa)?;
    let f = xa.algebra().field();

    let absolute_a = hochschild_complex(&xa, top)?;
    let absolute_b = hochschild_complex(&xb, top)?;
    let relative = relative_chain_complex(&ea, &xa, top)?;
    let trunc_a = truncate(&absolute_a)?;
    let trunc_b = truncate(&absolute_b)?;
    let trunc_rel = truncate(&relative.complex)?;

    let iota_full: Vec<Matrix> = (0..=top).map(|n| iota_matrix(&xb, &xa, n)).collect();
    let kappa_full: Vec<Matrix> = (0..=top).map(|n| kappa_matrix(&ea, &xa, &relative, n)).collect();

    let mut iota_c = vec![Matrix::zeros(f, 0, 0)];
    let mut kappa_c = vec![Matrix::zeros(f, 0, 0)];
    if top >= 1 {
        iota_c.push(restrict_to_truncation(&iota_full[1], &trunc_b, &trunc_a)?);
        kappa_c.push(restrict_to_truncation(&kappa_full[1], &trunc_a, &trunc_rel)?);
    }
    for n in 2..=top {
        iota_c.push(iota_full[n].clone());
        kappa_c.push(kappa_full[n].clone());
    }
    let iota = ChainMap::new(&trunc_b.complex, &trunc_a.complex, iota_c)?;
    let kappa = ChainMap::new(&trunc_a.complex, &trunc_rel.complex, kappa_c)?;

    let iota_injective = (1..=top).all(|n| rank(iota.component(n)) == trunc_b.complex.dim(n));
    let kappa_iota_zero = (1..=top).all(|n| kappa.component(n).mul(iota.component(n)).map(|m| m.is_zero()).unwrap_or(false));
    let kappa_surjective = (2..=top)
        .map(|n| (n, rank(kappa.component(n)) == trunc_rel.complex.dim(n)))
        .collect();
    let kappa_onto_in_degree_one = top >= 1 && rank(kappa.component(1)) == trunc_rel.complex.dim(1);
    let checks = FundamentalChecks {
        iota_injective,
        kappa_iota_zero,
        kappa_surjective,
        kappa_onto_in_degree_one,
    };
    Ok(FundamentalSequence {
        top,
        adapted,
        x: xa,
        xb,
        absolute_a,
        absolute_b,
        relative,
        trunc_a,
        trunc_b,
        trunc_rel,
        iota,
        kappa,
        kappa_full,
        checks,
    })
}

/// `L_{n,0} = Ker κ` restricted to `X ⊗ S^{⊗n}`, in local coordinates on the
/// pure-`S` tuples listed in `tuples` (ambient indices, increasing).
#[derive(Clone, Debug)]
pub struct PureS {
    pub n: usize,
    pub tuples: Vec<usize>,
    pub kernel: Subspace,
    position: HashMap<usize, usize>,
}

impl PureS {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }

    /// Ambient vector of the `i`-th basis vector of `L_{n,0}`.
    pub fn ambient_vector(&self, i: usize) -> SparseVec {
        SparseVec::from_terms(self.kernel.basis()[i].iter().map(|(k, c)| (self.tuples[*k], c.clone())).collect())
    }

    /// Coordinates in the `L_{n,0}` basis of the pure-`S` part of a vector.
    pub fn coords_of_part(&self, v: &SparseVec) -> Option<SparseVec> {
        let local = SparseVec::from_terms(
            v.iter()
                .filter_map(|(i, c)| self.position.get(i).map(|&k| (k, c.clone())))
                .collect(),
        );
        self.kernel.coords(&local)
    }
}

fn pure_s_tuples(layout: &Layout, dim_b: usize) -> Vec<usize> {
    (0..layout.size())
        .filter(|&i| (1..layout.factors()).all(|s| layout.digit(i, s) >= dim_b))
        .collect()
}

pub fn l_n0(fs: &FundamentalSequence, n: usize) -> PureS {
    let layout = hochschild_layout(&fs.x, n);
    let tuples = pure_s_tuples(&layout, fs.dim_b());
    let kappa = &fs.kappa_full[n];
    let cols: Vec<SparseVec> = kappa.columns();
    let restricted: Vec<SparseVec> = tuples.iter().map(|&i| cols[i].clone()).collect();
    let m = Matrix::from_columns(fs.field(), kappa.rows(), &restricted);
    let kernel = Subspace::from_vectors(fs.field(), tuples.len(), kernel_basis(&m).row_vecs());
    let position = tuples.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    PureS {
        n,
        tuples,
        kernel,
        position,
    }
}

/// One degree of the gap complex. For `n >= 2` the basis is a basis of
/// `L_{n,0}` followed by the mixed tuples (at least one tensorand from each
/// of `B` and `S`); `grades` records the number of `S` tensorands.
#[derive(Clone, Debug)]
pub enum GapDegree {
    Zero,
    One {
        big: Subspace,
        quotient: QuotientSpace,
    },
    Higher {
        l: PureS,
        mixed: Vec<usize>,
        position: HashMap<usize, usize>,
        grades: Vec<usize>,
    },
}

#[derive(Clone, Debug)]
pub struct GapComplex {
    pub complex: ChainComplex,
    pub degrees: Vec<GapDegree>,
    /// Dimension identity per degree `n >= 2`:
    /// `(n, dim gap_n, dim L_{n,0}, dim Ker κ_n - dim Im ι_n, formula)`.
    pub dimension_rows: Vec<DimensionRow>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DimensionRow {
    pub degree: usize,
    pub gap_dim: usize,
    pub l_dim: usize,
    pub kernel_minus_image: usize,
    pub formula: usize,
    /// `dim X ⊗ S^{⊗n} - dim L_{n,0} = dim X ⊗_{B^e} S^{⊗_B n}`.
    pub quotient_matches: bool,
}

impl DimensionRow {
    pub fn holds(&self) -> bool {
        self.gap_dim == self.formula && self.kernel_minus_image == self.formula && self.quotient_matches
    }
}

impl GapComplex {
    pub fn dimension_identity_holds(&self) -> bool {
        self.dimension_rows.iter().all(|r| r.holds())
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        self.complex.homology_dims()
    }
}

impl GapDegree {
    fn dim(&self) -> usize {
        match self {
            GapDegree::Zero => 0,
            GapDegree::One { quotient, .. } => quotient.quotient_dim(),
            GapDegree::Higher { l, mixed, .. } => l.dim() + mixed.len(),
        }
    }
}

fn gap_coords(fs: &FundamentalSequence, deg: &GapDegree, v: &SparseVec) -> Result<SparseVec, Error> {
    match deg {
        GapDegree::Zero => Ok(SparseVec::new()),
        GapDegree::One { big, quotient } => {
            let k = fs
                .trunc_a
                .degree_one_coords(v)
                .ok_or_else(|| Error::Invariant("gap differential leaves Ker b_A".into()))?;
            let c = big
                .coords(&k)
                .ok_or_else(|| Error::NotSubcomplex {
                    degree: 1,
                    message: "image is not in Ker κ".into(),
                })?;
            Ok(quotient.project(&c))
        }
        GapDegree::Higher { l, position, .. } => {
            let lc = l.coords_of_part(v).ok_or_else(|| Error::NotSubcomplex {
                degree: l.n,
                message: "pure-S component is not in L".into(),
            })?;
            let off = l.dim();
            let mut terms: Vec<(usize, Scalar)> = lc.into_entries();
            for (i, c) in v.iter() {
                if let Some(&p) = position.get(i) {
                    terms.push((off + p, c.clone()));
                }
            }
            Ok(SparseVec::from_terms(terms))
        }
    }
}

fn gap_basis_vector(fs: &FundamentalSequence, deg: &GapDegree, i: usize) -> SparseVec {
    match deg {
        GapDegree::Zero => unreachable!("degree zero of the gap complex is zero"),
        GapDegree::One { big, quotient } => {
            let c = big.from_coords(&quotient.section_of_basis(i));
            fs.trunc_a.degree_one_vector(&c)
        }
        GapDegree::Higher { l, mixed, .. } => {
            if i < l.dim() {
                l.ambient_vector(i)
            } else {
                SparseVec::unit(mixed[i - l.dim()], fs.field())
            }
        }
    }
}

fn apply_b(x: &Bimodule, v: &SparseVec, n: usize) -> SparseVec {
    let src = hochschild_layout(x, n);
    let dst = hochschild_layout(x, n - 1);
    let cols: Vec<(Scalar, SparseVec)> = v
        .iter()
        .map(|(i, c)| (c.clone(), hochschild_column(x, &src.decode(*i), &dst)))
        .collect();
    SparseVec::combine(cols.iter().map(|(c, w)| (c.clone(), w)))
}

pub fn gap_complex(fs: &FundamentalSequence) -> Result<GapComplex, Error> {
    let f = fs.field();
    let top = fs.top;
    let db = fs.dim_b();
    let ds = fs.dim_s();
    let dx = fs.x.dim();
    let mut degrees = vec![GapDegree::Zero];
    let mut dimension_rows = Vec::new();
    if top >= 1 {
        let k1 = fs.kappa.component(1);
        let big = Subspace::from_vectors(f, k1.cols(), kernel_basis(k1).row_vecs());
        let small: Vec<SparseVec> = fs.iota.component(1).columns();
        let rels = small
            .iter()
            .map(|v| big.coords(v).ok_or_else(|| Error::Invariant("Im ι is not inside Ker κ in degree 1".into())))
            .collect::<Result<Vec<_>, _>>()?;
        let quotient = QuotientSpace::new(f, big.dim(), rels);
        degrees.push(GapDegree::One { big, quotient });
    }
    for n in 2..=top {
        let layout = hochschild_layout(&fs.x, n);
        let l = l_n0(fs, n);
        let mut mixed = Vec::new();
        let mut grades = vec![n; l.dim()];
        for i in 0..layout.size() {
            let s = (1..=n).filter(|&k| layout.digit(i, k) >= db).count();
            if s > 0 && s < n {
                mixed.push(i);
                grades.push(s);
            }
        }
        let position: HashMap<usize, usize> = mixed.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let formula = l.dim() + (1..n).map(|p| dx * spb_dims(n, p, ds, db)).sum::<usize>();
        let kernel_minus_image = layout.size() - rank(&fs.kappa_full[n]) - dx * db.pow(n as u32);
        let quotient_matches = l.tuples.len() - l.dim() == fs.relative.complex.dim(n);
        dimension_rows.push(DimensionRow {
            degree: n,
            gap_dim: l.dim() + mixed.len(),
            l_dim: l.dim(),
            kernel_minus_image,
            formula,
            quotient_matches,
        });
        degrees.push(GapDegree::Higher {
            l,
            mixed,
            position,
            grades,
        });
    }
    let dims: Vec<usize> = degrees.iter().map(|d| d.dim()).collect();
    let mut diffs = Vec::with_capacity(top);
    if top >= 1 {
        diffs.push(Matrix::zeros(f, 0, dims[1]));
    }
    for n in 2..=top {
        let cols = crate::par::map_range(dims[n], |i| {
            let v = gap_basis_vector(fs, &degrees[n], i);
            gap_coords(fs, &degrees[n - 1], &apply_b(&fs.x, &v, n))
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        diffs.push(Matrix::from_columns(f, dims[n - 1], &cols));
    }
    Ok(GapComplex {
        complex: ChainComplex::new(f, dims, diffs)?,
        degrees,
        dimension_rows,
    })
}

/// Result of checking that each `G_p` is closed under the differential.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FiltrationReport {
    pub closed: bool,
    /// First `(p, n)` where `d (G_p)_n` leaves `(G_p)_{n-1}`.
    pub witness: Option<(usize, usize)>,
    /// `dim (G_p)_n` for `p = 0..=top` and `n = 0..=top`.
    pub dims: Vec<Vec<usize>>,
}

fn in_filtration(deg: &GapDegree, n: usize, i: usize, p: usize) -> bool {
    if n <= p {
        return p >= 1;
    }
    match deg {
        GapDegree::Higher { grades, .. } => grades[i] <= p,
        _ => false,
    }
}

/// `G_p`: chains with at most `p` tensorands from `S`, all of the gap complex
/// in degrees `<= p`; `G_0 = 0`.
pub fn filtration(g: &GapComplex) -> FiltrationReport {
    let top = g.complex.top_degree();
    let mut witness = None;
    let mut dims = Vec::new();
    for p in 0..=top {
        let row: Vec<usize> = (0..=top)
            .map(|n| (0..g.complex.dim(n)).filter(|&i| in_filtration(&g.degrees[n], n, i, p)).count())
            .collect();
        dims.push(row);
        for n in 1..=top {
            let d = g.complex.differential(n);
            let t = d.transpose();
            for j in 0..g.complex.dim(n) {
                if !in_filtration(&g.degrees[n], n, j, p) {
                    continue;
                }
                let leaves = t
                    .row(j)
                    .iter()
                    .any(|(i, _)| !in_filtration(&g.degrees[n - 1], n - 1, *i, p));
                if leaves && witness.is_none() {
                    witness = Some((p, n));
                }
            }
        }
    }
    FiltrationReport {
        closed: witness.is_none(),
        witness,
        dims,
    }
}

/// `G_p / G_{p-1}` in internal degrees `q = 0..=qmax+1` (total degree `p+q`):
/// `X ⊗ [S_p B_q]` for `q > 0` and `L_{p,0}` for `q = 0`.
pub fn quotient_complex(fs: &FundamentalSequence, p: usize, qmax: usize) -> Result<ChainComplex, Error> {
    if p == 0 || p > fs.top {
        return Err(Error::DegreeOutOfRange { degree: p, max: fs.top });
    }
    let f = fs.field();
    let db = fs.dim_b();
    let ds = fs.dim_s();
    let dx = fs.x.dim();
    let l = l_n0(fs, p);
    let mut bases: Vec<Vec<usize>> = vec![Vec::new()];
    let mut positions: Vec<HashMap<usize, usize>> = vec![HashMap::new()];
    for q in 1..=qmax + 1 {
        let n = p + q;
        let layout = hochschild_layout(&fs.x, n);
        let mut idx = Vec::with_capacity(dx * spb_dims(n, p, ds, db));
        for mask in subsets(n, p) {
            let mut tuple = vec![0usize; n + 1];
            let count = dx * ds.pow(p as u32) * db.pow(q as u32);
            for mut c in 0..count {
                for k in (1..=n).rev() {
                    let (radix, off) = if mask[k - 1] { (ds, db) } else { (db, 0) };
                    tuple[k] = off + c % radix;
                    c /= radix;
                }
                tuple[0] = c;
                idx.push(layout.encode(&tuple));
            }
        }
        idx.sort_unstable();
        positions.push(idx.iter().enumerate().map(|(k, &i)| (i, k)).collect());
        bases.push(idx);
    }
    let mut dims = vec![l.dim()];
    dims.extend(bases[1..].iter().map(|b| b.len()));
    let mut diffs = Vec::with_capacity(qmax + 1);
    for q in 1..=qmax + 1 {
        let n = p + q;
        let src = hochschild_layout(&fs.x, n);
        let dst = hochschild_layout(&fs.x, n - 1);
        let cols = crate::par::map_range(bases[q].len(), |j| {
            let col = hochschild_column(&fs.x, &src.decode(bases[q][j]), &dst);
            let mut kept = Vec::new();
            for (i, c) in col.iter() {
                let s = (1..n).filter(|&k| dst.digit(*i, k) >= db).count();
                if s > p {
                    return Err(Error::NotSubcomplex {
                        degree: n,
                        message: "differential raises the number of S tensorands".into(),
                    });
                }
                if s == p {
                    kept.push((*i, c.clone()));
                }
            }
            let kept = SparseVec::from_sorted_unchecked(kept);
            if q == 1 {
                l.coords_of_part(&kept).ok_or_else(|| Error::NotSubcomplex {
                    degree: p,
                    message: "boundary of X ⊗ [S_p B_1] is not in L".into(),
                })
            } else {
                Ok(SparseVec::from_terms(
                    kept.iter().map(|(i, c)| (positions[q - 1][i], c.clone())).collect(),
                ))
            }
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
        diffs.push(Matrix::from_columns(f, dims[q - 1], &cols));
    }
    ChainComplex::new(f, dims, diffs)
}

/// All `n`-bit masks with exactly `p` set bits, in lexicographic order.
fn subsets(n: usize, p: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, p: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        let used = cur.iter().filter(|&&b| b).count();
        if cur.len() == n {
            if used == p {
                out.push(cur.clone());
            }
            return;
        }
        if n - cur.len() > p - used {
            cur.push(false);
            go(n, p, cur, out);
            cur.pop();
        }
        if used < p {
            cur.push(true);
            go(n, p, cur, out);
            cur.pop();
        }
    }
    go(n, p, &mut cur, &mut out);
    out
}

/// `Tor^{B^e}_k(X, (A/B)^{⊗_B p})` for `k < max_degree`.
pub fn tor_against_power(fs: &FundamentalSequence, tower: &PowerTower, p: usize, max_degree: usize) -> Result<Vec<usize>, Error> {
    let env = enveloping(fs.embedding().sub());
    let right = fs.xb.as_right_enveloping(&env)?;
    let left = tower.power(p)?.module.as_left_enveloping(&env)?;
    tor(&TorRequest::new(env, right, left, max_degree)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientTorRow {
    pub q: usize,
    pub homology: usize,
    pub tor: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientTorComparison {
    pub p: usize,
    pub hypothesis_holds: bool,
    /// Whether the comparison is asserted (only under the hypothesis).
    pub asserted: bool,
    pub h0: usize,
    pub rows: Vec<QuotientTorRow>,
}

impl QuotientTorComparison {
    pub fn agrees(&self) -> bool {
        !self.asserted || (self.h0 == 0 && self.rows.iter().all(|r| r.equal))
    }
}

/// `dim H_q(G_p/G_{p-1})` against `dim Tor^{B^e}_{p+q}(X, S^{⊗_B p})` for
/// `1 <= q <= qmax`, plus `H_0`.
pub fn quotient_homology_vs_tor(
    fs: &FundamentalSequence,
    tower: &PowerTower,
    p: usize,
    qmax: usize,
    hypothesis: &HypothesisReport,
) -> Result<QuotientTorComparison, Error> {
    if fs.dim_s() == 0 {
        return Ok(QuotientTorComparison {
            p,
            hypothesis_holds: hypothesis.holds,
            asserted: false,
            h0: 0,
            rows: vec![],
        });
    }
    let h = quotient_complex(fs, p, qmax)?.homology_dims();
    let t = tor_against_power(fs, tower, p, p + qmax + 1)?;
    let rows = (1..=qmax)
        .map(|q| QuotientTorRow {
            q,
            homology: h[q],
            tor: t[p + q],
            equal: h[q] == t[p + q],
        })
        .collect();
    Ok(QuotientTorComparison {
        p,
        hypothesis_holds: hypothesis.holds,
        asserted: hypothesis.holds,
        h0: h[0],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_quiver, make_algebra, make_subalgebra, Arrow, FiniteDimAlgebra};
    use crate::complexes::subquotient_complex;
    use crate::torlab::check_hypothesis;

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

    fn diag() -> SubalgebraEmbedding {
        make_subalgebra(&upper(), &Matrix::from_dense(q(), &[vec![1, 0], vec![0, 1], vec![0, 0]])).unwrap()
    }

    #[test]
    fn spb_examples() {
        assert_eq!(spb_dims(3, 2, 1, 1), 3);
        assert_eq!(spb_dims(4, 4, 2, 3), 16);
        assert_eq!(spb_dims(4, 0, 2, 3), 81);
        assert_eq!(binomial(5, 2), 10);
    }

    #[test]
    fn fundamental_examples() {
        let d = dual();
        let x = Bimodule::regular(&d);
        let all = make_subalgebra(&d, &Matrix::identity(q(), 2)).unwrap();
        let fs = build_fundamental(&all, &x, 4).unwrap();
        fs.verify().unwrap();
        let g = gap_complex(&fs).unwrap();
        assert!(g.complex.dims()[2..].iter().all(|&d| d == 0));

        let k = make_subalgebra(&d, &Matrix::from_dense(q(), &[vec![1], vec![0]])).unwrap();
        let fs = build_fundamental(&k, &x, 4).unwrap();
        fs.verify().unwrap();

        let e = diag();
        let fs = build_fundamental(&e, &Bimodule::regular(e.ambient()), 4).unwrap();
        fs.verify().unwrap();
        let g = gap_complex(&fs).unwrap();
        assert!(g.dimension_identity_holds());
    }

    #[test]
    fn l_examples() {
        let d = dual();
        let x = Bimodule::regular(&d);
        let k = make_subalgebra(&d, &Matrix::from_dense(q(), &[vec![1], vec![0]])).unwrap();
        let fs = build_fundamental(&k, &x, 3).unwrap();
        for n in 1..=3 {
            assert_eq!(l_n0(&fs, n).dim(), 0);
        }
        let e = diag();
        let fs = build_fundamental(&e, &Bimodule::regular(e.ambient()), 3).unwrap();
        let l = l_n0(&fs, 1);
        assert_eq!(l.tuples.len() - l.dim(), fs.relative.complex.dim(1));
    }

    #[test]
    fn structured_gap_matches_generic_subquotient() {
        let e = diag();
        let x = Bimodule::regular(e.ambient());
        let fs = build_fundamental(&e, &x, 4).unwrap();
        let g = gap_complex(&fs).unwrap();
        let f = q();
        let c = &fs.trunc_a.complex;
        let mut big = vec![Subspace::zero(f, 0)];
        let mut small = vec![Subspace::zero(f, 0)];
        for n in 1..=4 {
            let k = fs.kappa.component(n);
            big.push(Subspace::from_vectors(f, c.dim(n), kernel_basis(k).row_vecs()));
            small.push(Subspace::from_vectors(f, c.dim(n), &fs.iota.component(n).columns()));
        }
        let generic = subquotient_complex(c, &big, &small).unwrap();
        assert_eq!(generic.dims(), g.complex.dims());
        assert_eq!(generic.homology_dims(), g.homology_dims());
    }

    #[test]
    fn filtration_is_closed() {
        let t = upper();
        let k = make_subalgebra(&t, &Matrix::from_dense(q(), &[vec![1], vec![1], vec![0]])).unwrap();
        let fs = build_fundamental(&k, &Bimodule::regular(&t), 4).unwrap();
        let g = gap_complex(&fs).unwrap();
        let r = filtration(&g);
        assert!(r.closed);
        assert_eq!(r.dims[4], g.complex.dims());
        assert!(r.dims[0].iter().all(|&d| d == 0));
    }

    #[test]
    fn quotient_complex_matches_tor() {
        let e = diag();
        let fs = build_fundamental(&e, &Bimodule::regular(e.ambient()), 4).unwrap();
        let tower = PowerTower::new(fs.embedding()).unwrap();
        let hyp = check_hypothesis(fs.embedding(), 3, 3).unwrap();
        let c = quotient_homology_vs_tor(&fs, &tower, 1, 3, &hyp).unwrap();
        assert!(c.asserted && c.agrees());
        assert!(c.rows.iter().all(|r| r.tor == 0));

        let t = upper();
        let k = make_subalgebra(&t, &Matrix::from_dense(q(), &[vec![1], vec![1], vec![0]])).unwrap();
        let fs = build_fundamental(&k, &Bimodule::regular(&t), 3).unwrap();
        let tower = PowerTower::new(fs.embedding()).unwrap();
        let hyp = check_hypothesis(fs.embedding(), 3, 3).unwrap();
        for p in 1..=2 {
            let qc = quotient_complex(&fs, p, 2).unwrap();
            assert_eq!(qc.dim(1), 3 * spb_dims(p + 1, p, 2, 1));
            let c = quotient_homology_vs_tor(&fs, &tower, p, 2, &hyp).unwrap();
            assert!(c.agrees(), "{c:?}");
        }
    }
}
