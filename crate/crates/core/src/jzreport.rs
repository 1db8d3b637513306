//! The Jacobi-Zariski long nearly exact sequence
//! `... -> H_m(B,X) -I-> H_m(A,X) -K-> H_m(A|B,X) -> H_{m-1}(B,X) -> ...`,
//! its gap `Ker K / Im I`, and the flat and bounded exactness criteria.

use serde::{Deserialize, Serialize};

use crate::algebra::{Bimodule, SubalgebraEmbedding};
use crate::complexes::induced_map;
use crate::error::Error;
use crate::exactlin::{rank, Matrix};
use crate::fundamental::{
    build_fundamental, filtration, gap_complex, tor_against_power, quotient_homology_vs_tor, DimensionRow,
    FiltrationReport, FundamentalChecks, FundamentalSequence, QuotientTorComparison,
};
use crate::tensorb::PowerTower;
use crate::torlab::{check_hypothesis, nilpotency_index, quotient_pd, HypothesisReport, PdBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub degree: usize,
    pub nmax: usize,
    pub starmax: usize,
    pub pmax: usize,
    pub qmax: usize,
    pub cap: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            degree: 6,
            nmax: 4,
            starmax: 4,
            pmax: 3,
            qmax: 3,
            cap: 8,
        }
    }
}

/// One degree `m` of the long sequence.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub sub: usize,
    pub ambient: usize,
    pub relative: usize,
    pub rank_i: usize,
    pub rank_k: usize,
    /// `I_m` and `K_m` in cycle-representative bases, entries as strings.
    pub i_matrix: Vec<Vec<String>>,
    pub k_matrix: Vec<Vec<String>>,
    /// `dim Ker K_m - rank I_m`.
    pub gap: usize,
    /// Homology of `Ker κ / Im ι` in degree `m`.
    pub gap_homology: usize,
    pub k_after_i_zero: bool,
    /// `g_m = h_m`; only asserted for `m >= 2`.
    pub gap_identity: Option<bool>,
    /// `dim H_m(A|B) = rank K_m + dim Ker I_{m-1}`; only for `m >= 2`.
    pub connecting_identity: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct E1Page {
    pub pmax: usize,
    pub qmax: usize,
    /// `table[p-1][q-1] = dim Tor^{B^e}_{p+q}(X, (A/B)^{⊗_B p})`.
    pub table: Vec<Vec<usize>>,
    pub hypothesis_holds: bool,
    /// `H_*(G_p/G_{p-1})` against the table, computed when the hypothesis holds.
    pub cross_check: Vec<QuotientTorComparison>,
}

impl E1Page {
    pub fn all_zero(&self) -> bool {
        self.table.iter().flatten().all(|&d| d == 0)
    }

    pub fn consistent(&self) -> bool {
        self.cross_check.iter().all(|c| c.agrees())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct DegreeOneVerdict {
    pub rank_k: usize,
    pub relative: usize,
    pub gap: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct FlatVerdict {
    /// Tor vanishing up to the bounds and an all-zero E1 page.
    pub premises_verified: bool,
    pub gap_zero: bool,
    pub degree_one: bool,
    /// `None` when the premises fail.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BoundedVerdict {
    pub nilpotency: Option<usize>,
    pub pd: PdBound,
    /// First degree from which the gap must vanish.
    pub from_degree: Option<usize>,
    /// `None` when `n` or `u` is not found within the cap.
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JZReport {
    pub bounds: Bounds,
    pub rows: Vec<DegreeRow>,
    pub fundamental: FundamentalChecks,
    pub dimension_rows: Vec<DimensionRow>,
    pub filtration: FiltrationReport,
    pub hypothesis: HypothesisReport,
    pub e1: E1Page,
    pub flat: FlatVerdict,
    pub bounded: BoundedVerdict,
    pub degree_one: DegreeOneVerdict,
}

impl JZReport {
    pub fn row(&self, m: usize) -> &DegreeRow {
        &self.rows[m - 1]
    }

    pub fn gap_row(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.gap).collect()
    }

    /// Every asserted identity and verdict.
    pub fn all_hold(&self) -> bool {
        self.failures().is_empty()
    }

    /// Names of the failing checks with a witness degree where meaningful.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.fundamental.all_hold() {
            out.push("fundamental sequence".to_string());
        }
        for r in &self.rows {
            if !r.k_after_i_zero {
                out.push(format!("K I = 0 in degree {}", r.degree));
            }
            if r.gap_identity == Some(false) {
                out.push(format!("gap identity in degree {}", r.degree));
            }
            if r.connecting_identity == Some(false) {
                out.push(format!("connecting identity in degree {}", r.degree));
            }
        }
        if let Some(r) = self.dimension_rows.iter().find(|r| !r.holds()) {
            out.push(format!("gap dimension count in degree {}", r.degree));
        }
        if let Some((p, n)) = self.filtration.witness {
            out.push(format!("filtration G_{p} not closed in degree {n}"));
        }
        if !self.e1.consistent() {
            out.push("E1 page against quotient homology".to_string());
        }
        if self.flat.holds == Some(false) {
            out.push("flat case".to_string());
        }
        if self.bounded.holds == Some(false) {
            out.push("bounded case".to_string());
        }
        if !self.degree_one.holds {
            out.push("degree one".to_string());
        }
        out
    }
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

/// The long sequence in degrees `1..=N-2`, from complexes with top degree `N-1`.
pub fn long_sequence(fs: &FundamentalSequence) -> Result<Vec<DegreeRow>, Error> {
    let top = fs.top;
    let gap = gap_complex(fs)?;
    let h_gap = gap.homology_dims();
    let (b, a, r) = (&fs.trunc_b.complex, &fs.trunc_a.complex, &fs.trunc_rel.complex);
    let maps = crate::par::map_range(top, |m| -> Result<(Matrix, Matrix), Error> {
        Ok((induced_map(&fs.iota, b, a, m)?, induced_map(&fs.kappa, a, r, m)?))
    })
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let (hb, ha, hr) = (b.homology_dims(), a.homology_dims(), r.homology_dims());
    let ranks: Vec<(usize, usize)> = maps.iter().map(|(i, k)| (rank(i), rank(k))).collect();
    let rows = (1..top)
        .map(|m| {
            let (i, k) = &maps[m];
            let (rank_i, rank_k) = ranks[m];
            let gap = ha[m] - rank_k - rank_i;
            let k_after_i_zero = k.mul(i).map(|p| p.is_zero()).unwrap_or(false);
            let (gap_identity, connecting_identity) = if m >= 2 {
                let ker_prev = hb[m - 1] - ranks[m - 1].0;
                (Some(gap == h_gap[m]), Some(hr[m] == rank_k + ker_prev))
            } else {
                (None, None)
            };
            DegreeRow {
                degree: m,
                sub: hb[m],
                ambient: ha[m],
                relative: hr[m],
                rank_i,
                rank_k,
                i_matrix: matrix_strings(i),
                k_matrix: matrix_strings(k),
                gap,
                gap_homology: h_gap[m],
                k_after_i_zero,
                gap_identity,
                connecting_identity,
            }
        })
        .collect();
    Ok(rows)
}

pub fn e1_page(fs: &FundamentalSequence, hypothesis: &HypothesisReport, pmax: usize, qmax: usize) -> Result<E1Page, Error> {
    let tower = PowerTower::new(fs.embedding())?;
    let pmax = pmax.min(fs.top);
    let table = (1..=pmax)
        .map(|p| {
            if fs.dim_s() == 0 {
                return Ok(vec![0; qmax]);
            }
            let t = tor_against_power(fs, &tower, p, p + qmax + 1)?;
            Ok((1..=qmax).map(|q| t[p + q]).collect())
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let cross_check = if hypothesis.holds {
        (1..=pmax)
            .map(|p| quotient_homology_vs_tor(fs, &tower, p, qmax, hypothesis))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    Ok(E1Page {
        pmax,
        qmax,
        table,
        hypothesis_holds: hypothesis.holds,
        cross_check,
    })
}

pub fn degree_one_check(rows: &[DegreeRow]) -> DegreeOneVerdict {
    let r = &rows[0];
    DegreeOneVerdict {
        rank_k: r.rank_k,
        relative: r.relative,
        gap: r.gap,
        holds: r.rank_k == r.relative && r.gap == 0,
    }
}

pub fn flat_case(rows: &[DegreeRow], hypothesis: &HypothesisReport, e1: &E1Page) -> FlatVerdict {
    let premises_verified = hypothesis.holds && e1.all_zero();
    let gap_zero = rows.iter().filter(|r| r.degree >= 2).all(|r| r.gap == 0);
    let degree_one = degree_one_check(rows).holds;
    FlatVerdict {
        premises_verified,
        gap_zero,
        degree_one,
        holds: premises_verified.then_some(gap_zero && degree_one),
    }
}

pub fn bounded_case(emb: &SubalgebraEmbedding, rows: &[DegreeRow], cap: usize) -> Result<BoundedVerdict, Error> {
    let nilpotency = nilpotency_index(emb, cap)?.index;
    let pd = quotient_pd(emb, cap)?;
    let from_degree = match (nilpotency, pd) {
        (Some(n), PdBound::AtMost(u)) => Some((n * u).max(1)),
        _ => None,
    };
    let holds = from_degree.map(|s| rows.iter().filter(|r| r.degree >= s).all(|r| r.gap == 0));
    Ok(BoundedVerdict {
        nilpotency,
        pd,
        from_degree,
        holds,
    })
}

pub fn jz(emb: &SubalgebraEmbedding, x: &Bimodule, bounds: Bounds) -> Result<JZReport, Error> {
    if bounds.degree < 3 {
        return Err(Error::DegreeBoundTooSmall(bounds.degree));
    }
    let fs = build_fundamental(emb, x, bounds.degree - 1)?;
    let rows = long_sequence(&fs)?;
    let gap = gap_complex(&fs)?;
    let filtration = filtration(&gap);
    let hypothesis = check_hypothesis(fs.embedding(), bounds.nmax, bounds.starmax)?;
    let e1 = e1_page(&fs, &hypothesis, bounds.pmax, bounds.qmax)?;
    let flat = flat_case(&rows, &hypothesis, &e1);
    let bounded = bounded_case(fs.embedding(), &rows, bounds.cap)?;
    let degree_one = degree_one_check(&rows);
    Ok(JZReport {
        bounds,
        rows,
        fundamental: fs.checks.clone(),
        dimension_rows: gap.dimension_rows,
        filtration,
        hypothesis,
        e1,
        flat,
        bounded,
        degree_one,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{from_quiver, make_algebra, make_subalgebra, Arrow, FiniteDimAlgebra};
    use crate::exactlin::{Field, SparseVec};

    fn q() -> Field {
        Field::Rational
    }

    fn dual() -> FiniteDimAlgebra {
        let f = q();
        let e = |i| SparseVec::unit(i, f);
        make_algebra(f, vec!["1".into(), "x".into()], vec![vec![e(0), e(1)], vec![e(1), SparseVec::new()]], e(0)).unwrap()
    }

    fn small() -> Bounds {
        Bounds {
            degree: 5,
            nmax: 2,
            starmax: 2,
            pmax: 2,
            qmax: 2,
            cap: 4,
        }
    }

    #[test]
    fn b_equals_a() {
        let d = dual();
        let all = make_subalgebra(&d, &Matrix::identity(q(), 2)).unwrap();
        let r = jz(&all, &Bimodule::regular(&d), small()).unwrap();
        assert!(r.all_hold(), "{:?}", r.failures());
        assert!(r.rows.iter().all(|row| row.relative == 0 && row.gap == 0 && row.rank_i == row.ambient));
        assert_eq!(r.bounded.nilpotency, Some(1));
        assert_eq!(r.bounded.pd, PdBound::AtMost(0));
    }

    #[test]
    fn ground_field_in_dual_numbers() {
        let d = dual();
        let k = make_subalgebra(&d, &Matrix::from_dense(q(), &[vec![1], vec![0]])).unwrap();
        let r = jz(&k, &Bimodule::regular(&d), small()).unwrap();
        assert!(r.all_hold(), "{:?}", r.failures());
        for row in &r.rows[1..] {
            assert_eq!(row.rank_k, row.ambient);
            assert_eq!(row.rank_k, row.relative);
            assert_eq!(row.gap, 0);
        }
        assert_eq!(r.flat.holds, Some(true));
        assert!(r.e1.all_zero());
    }

    #[test]
    fn diagonal_in_upper_triangular() {
        let arrows = [Arrow {
            name: "a".into(),
            source: 0,
            target: 1,
        }];
        let t = from_quiver(q(), &["e1".into(), "e2".into()], &arrows, &[], 10).unwrap();
        let e = make_subalgebra(&t, &Matrix::from_dense(q(), &[vec![1, 0], vec![0, 1], vec![0, 0]])).unwrap();
        let r = jz(&e, &Bimodule::regular(&t), small()).unwrap();
        assert!(r.all_hold(), "{:?}", r.failures());
        assert_eq!(r.flat.holds, Some(true));
        assert_eq!(r.bounded.nilpotency, Some(2));
        assert_eq!(r.bounded.pd, PdBound::AtMost(0));
        assert_eq!(r.bounded.holds, Some(true));
        assert!(r.gap_row().iter().all(|&g| g == 0));
    }

    /// `A = k x k[x]/(x^2)` with `B = k[x]/(x^2)` embedded diagonally. By hand:
    /// `H_1(B,A) = k^2` with `e1 ⊗ x` a cycle that bounds `e1 ⊗ e1 ⊗ x` in
    /// `A`, so `I_1` has rank 1; the relative complex has `d_n(m) = 2 m e2 - m`
    /// for even `n` (invertible) and `0` for odd `n`, so `H_m(A|B,A) = 0`.
    /// Nothing reaches `Ker I_1`, and the sequence is not exact at `H_1(B,A)`.
    #[test]
    fn diagonal_dual_numbers_break_exactness_at_the_subalgebra() {
        let a = from_quiver(
            q(),
            &["e1".into(), "e2".into()],
            &[Arrow {
                name: "x".into(),
                source: 1,
                target: 1,
            }],
            &[vec![0, 0]],
            8,
        )
        .unwrap();
        let b = make_subalgebra(&a, &Matrix::from_dense(q(), &[vec![1, 0], vec![1, 0], vec![0, 1]])).unwrap();
        let r = jz(&b, &Bimodule::regular(&a), small()).unwrap();
        let (one, two) = (r.row(1), r.row(2));
        assert_eq!((one.sub, one.ambient, one.rank_i), (2, 1, 1));
        assert_eq!((two.relative, two.rank_k), (0, 0));
        assert_eq!(two.connecting_identity, Some(false));
        assert_eq!((two.gap, two.gap_homology), (0, 1));
        assert!(r.degree_one.holds);
    }

    #[test]
    fn degree_bound_too_small() {
        let d = dual();
        let k = make_subalgebra(&d, &Matrix::from_dense(q(), &[vec![1], vec![0]])).unwrap();
        assert_eq!(
            jz(&k, &Bimodule::regular(&d), Bounds { degree: 2, ..small() }).unwrap_err(),
            Error::DegreeBoundTooSmall(2)
        );
    }
}
