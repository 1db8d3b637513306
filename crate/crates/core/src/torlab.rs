//! Tor over a finite-dimensional algebra, the Tor-vanishing hypothesis,
//! tensor nilpotency and a projective-dimension bound.

use crate::algebra::{enveloping, FiniteDimAlgebra, Module, Side, SubalgebraEmbedding};
use crate::complexes::ChainComplex;
use crate::error::Error;
use crate::exactlin::{induced_map_with, kernel_basis, Echelon, Field, Matrix, QuotientSpace, Scalar, SparseVec, Subspace};
use crate::tensorb::{Layout, PowerTower};
use serde::Serialize;

/// `Tor^Λ_*(right, left)` in degrees `0..max_degree`.
#[derive(Clone, Debug)]
pub struct TorRequest {
    pub ring: FiniteDimAlgebra,
    pub right: Module,
    pub left: Module,
    pub max_degree: usize,
}

impl TorRequest {
    pub fn new(ring: FiniteDimAlgebra, right: Module, left: Module, max_degree: usize) -> Result<TorRequest, Error> {
        if right.side() != Side::Right || left.side() != Side::Left {
            return Err(Error::Input {
                field: "tor".into(),
                message: "expected a right module and a left module".into(),
            });
        }
        if right.algebra() != &ring || left.algebra() != &ring {
            return Err(Error::Input {
                field: "tor".into(),
                message: "modules are not over the requested ring".into(),
            });
        }
        Ok(TorRequest {
            ring,
            right,
            left,
            max_degree,
        })
    }
}

/// The Jacobson radical. In characteristic zero it is the kernel of the
/// trace form `(u, v) -> tr(w -> u v w)`; over `F_p` it is cut out by lifted
/// traces of `p^i`-th powers.
pub fn radical(ring: &FiniteDimAlgebra) -> Result<Subspace, Error> {
    let f = ring.field();
    let n = ring.dim();
    if let Field::Prime(p) = f {
        return radical_prime(ring, p);
    }
    let rows: Vec<SparseVec> = (0..n)
        .map(|i| {
            let vals: Vec<Scalar> = (0..n).map(|j| ring.left_trace(ring.product(i, j))).collect();
            SparseVec::from_dense(&vals)
        })
        .collect();
    let form = Matrix::from_rows(f, n, rows);
    let rad = Subspace::from_vectors(f, n, kernel_basis(&form).row_vecs());
    Ok(rad)
}

type IntMatrix = Vec<Vec<u128>>;

fn int_mul(a: &IntMatrix, b: &IntMatrix, modulus: u128) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % modulus;
            }
        }
    }
    out
}

fn int_pow(a: &IntMatrix, mut e: u64, modulus: u128) -> IntMatrix {
    let n = a.len();
    let mut acc: IntMatrix = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_mul(&acc, &base, modulus);
        }
        base = int_mul(&base, &base, modulus);
        e >>= 1;
    }
    acc
}

fn residue(c: &Scalar) -> u128 {
    match c {
        Scalar::Fp { value, .. } => u128::from(*value),
        Scalar::Q(_) => unreachable!("prime field element expected"),
    }
}

/// Radical over `F_p`: with `I_{-1} = Λ` and `g_i(a)` the trace of `ã^{p^i}`
/// modulo `p^{i+1}` divided by `p^i`, where `ã` is the entrywise integer lift
/// of left multiplication by `a`, `I_i = {a ∈ I_{i-1} : g_i(a Λ) = 0}` and
/// the radical is `I_l` for `p^l <= dim Λ < p^{l+1}`.
fn radical_prime(ring: &FiniteDimAlgebra, p: u64) -> Result<Subspace, Error> {
    let f = ring.field();
    let n = ring.dim();
    let lift = |v: &SparseVec| -> IntMatrix {
        let mut m = vec![vec![0u128; n]; n];
        for (i, c) in v.iter() {
            let c = residue(c);
            for j in 0..n {
                for (k, x) in ring.product(*i, j).iter() {
                    m[*k][j] = (m[*k][j] + c * residue(x)) % u128::from(p);
                }
            }
        }
        m
    };
    let mut levels = 0u32;
    while (p as u128).pow(levels + 1) <= n as u128 {
        levels += 1;
    }
    let units: Vec<SparseVec> = (0..n).map(|i| SparseVec::unit(i, f)).collect();
    let mut ideal = Subspace::from_vectors(f, n, &units);
    for i in 0..=levels {
        let scale = (p as u128).pow(i);
        let modulus = scale * p as u128;
        let g = |a: &SparseVec| -> Result<Scalar, Error> {
            let power = int_pow(&lift(a), scale as u64, modulus);
            let tr = (0..n).map(|k| power[k][k]).sum::<u128>() % modulus;
            if !tr.is_multiple_of(scale) {
                return Err(Error::Invariant(format!("lifted trace {tr} is not divisible by {scale}")));
            }
            Ok(f.from_i64((tr / scale) as i64))
        };
        let rows = ideal
            .basis()
            .iter()
            .map(|v| Ok(SparseVec::from_dense(&(0..n).map(|j| g(&ring.mul(v, &units[j]))).collect::<Result<Vec<_>, Error>>()?)))
            .collect::<Result<Vec<_>, Error>>()?;
        let form = Matrix::from_rows(f, n, rows);
        let combos = kernel_basis(&form.transpose());
        let next: Vec<SparseVec> = combos.row_vecs().iter().map(|c| ideal.from_coords(c)).collect();
        ideal = Subspace::from_vectors(f, n, &next);
    }
    Ok(ideal)
}

/// Checks that a subspace is a two-sided ideal with `I^k = 0` for some `k <= dim`.
pub fn is_nilpotent_ideal(ring: &FiniteDimAlgebra, ideal: &Subspace) -> bool {
    let f = ring.field();
    let n = ring.dim();
    for v in ideal.basis() {
        for i in 0..n {
            let e = SparseVec::unit(i, f);
            if !ideal.contains(&ring.mul(&e, v)) || !ideal.contains(&ring.mul(v, &e)) {
                return false;
            }
        }
    }
    let mut power = ideal.basis().to_vec();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let next: Vec<SparseVec> = power
            .iter()
            .flat_map(|u| ideal.basis().iter().map(move |v| ring.mul(u, v)))
            .collect();
        power = Subspace::from_vectors(f, n, &next).basis().to_vec();
    }
    power.is_empty()
}

/// A solution of `Σ a_k cols[k] = rhs`, if one exists.
fn solve(field: Field, width: usize, cols: &[SparseVec], rhs: &SparseVec) -> Option<SparseVec> {
    let mut all = cols.to_vec();
    all.push(rhs.neg());
    let kernel = kernel_basis(&Matrix::from_columns(field, width, &all));
    let last = cols.len();
    let v = kernel.row_vecs().iter().find(|v| v.get(last).is_some())?;
    let c = v.get(last).expect("checked").inv();
    Some(v.scale(&c).window(0, last))
}

/// Splits the idempotent `e` of a semisimple quotient `Q` into orthogonal
/// idempotents with local corner rings, as far as basis elements of `eQe`
/// generate proper right ideals.
fn split_idempotent(mul: &dyn Fn(&SparseVec, &SparseVec) -> SparseVec, field: Field, width: usize, e: SparseVec) -> Vec<SparseVec> {
    let units: Vec<SparseVec> = (0..width).map(|i| SparseVec::unit(i, field)).collect();
    let corner = Subspace::from_vectors(field, width, &units.iter().map(|b| mul(&mul(&e, b), &e)).collect::<Vec<_>>());
    for c in corner.basis() {
        let ideal = Subspace::from_vectors(field, width, &corner.basis().iter().map(|w| mul(c, w)).collect::<Vec<_>>());
        if ideal.dim() == 0 || ideal.dim() == corner.dim() {
            continue;
        }
        let stacked = |parts: Vec<SparseVec>| {
            SparseVec::from_terms(
                parts
                    .into_iter()
                    .enumerate()
                    .flat_map(|(j, p)| p.into_entries().into_iter().map(move |(i, v)| (j * width + i, v)))
                    .collect(),
            )
        };
        let cols: Vec<SparseVec> = ideal
            .basis()
            .iter()
            .map(|u| stacked(ideal.basis().iter().map(|w| mul(u, w)).collect()))
            .collect();
        let rhs = stacked(ideal.basis().to_vec());
        let a = solve(field, width * ideal.dim(), &cols, &rhs).expect("a right ideal of a semisimple ring has a left unit");
        let u = ideal.from_coords(&a);
        let mut out = split_idempotent(mul, field, width, u.clone());
        out.extend(split_idempotent(mul, field, width, e.sub(&u)));
        return out;
    }
    vec![e]
}

/// A complete set of orthogonal idempotents summing to `1`. They are
/// primitive whenever `Λ / rad Λ` is split; otherwise `[1]` is always valid.
pub fn orthogonal_idempotents(ring: &FiniteDimAlgebra) -> Result<Vec<SparseVec>, Error> {
    let f = ring.field();
    let rad = radical(ring)?;
    let q = QuotientSpace::new(f, ring.dim(), rad.basis().iter().cloned());
    let mul = |u: &SparseVec, v: &SparseVec| q.project(&ring.mul(&q.section(u), &q.section(v)));
    let top = split_idempotent(&mul, f, q.quotient_dim(), q.project(ring.unit()));
    let mut remaining = ring.unit().clone();
    let mut out = Vec::with_capacity(top.len());
    for e in &top[..top.len().saturating_sub(1)] {
        let mut a = ring.mul(&ring.mul(&remaining, &q.section(e)), &remaining);
        for _ in 0..64 {
            let a2 = ring.mul(&a, &a);
            if a2 == a {
                break;
            }
            let a3 = ring.mul(&a2, &a);
            a = a2.scale(&f.from_i64(3)).sub(&a3.scale(&f.from_i64(2)));
        }
        if ring.mul(&a, &a) != a {
            return Err(Error::Invariant("idempotent lifting did not converge".into()));
        }
        remaining = remaining.sub(&a);
        out.push(a);
    }
    out.push(remaining);
    Ok(out)
}

/// A projective resolution `... -> P_1 -> P_0 -> M` with
/// `P_n = ⊕_g Λ e_{types[n][g]}`. `maps[n][g]` (`n >= 1`) lists the
/// components `(h, c)` of the image of `e_{types[n][g]}` in `P_{n-1}`, with
/// `c ∈ e_{types[n][g]} Λ e_{types[n-1][h]}` as a ring vector.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    pub idempotents: Vec<SparseVec>,
    pub types: Vec<Vec<usize>>,
    pub maps: Vec<Vec<Vec<(usize, SparseVec)>>>,
}

impl ProjectiveResolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.types.iter().map(|t| t.len()).collect()
    }
}

/// `Λ e` for each idempotent, with the left action in its own basis.
struct Covers {
    bases: Vec<Subspace>,
    left: Vec<Vec<Matrix>>,
}

impl Covers {
    fn new(ring: &FiniteDimAlgebra, idempotents: &[SparseVec]) -> Covers {
        let f = ring.field();
        let n = ring.dim();
        let bases: Vec<Subspace> = idempotents
            .iter()
            .map(|e| Subspace::from_vectors(f, n, &(0..n).map(|l| ring.mul(&SparseVec::unit(l, f), e)).collect::<Vec<_>>()))
            .collect();
        let left = bases
            .iter()
            .map(|b| {
                (0..n)
                    .map(|l| {
                        let cols: Vec<SparseVec> = b
                            .basis()
                            .iter()
                            .map(|v| b.coords(&ring.mul(&SparseVec::unit(l, f), v)).expect("Λe is a left ideal"))
                            .collect();
                        Matrix::from_columns(f, b.dim(), &cols)
                    })
                    .collect()
            })
            .collect();
        Covers { bases, left }
    }

    fn offsets(&self, types: &[usize]) -> Vec<usize> {
        let mut off = vec![0];
        for &t in types {
            off.push(off.last().unwrap() + self.bases[t].dim());
        }
        off
    }

    /// Basis element `l` of `Λ` acting on a vector of `⊕ Λ e_t`.
    fn act(&self, types: &[usize], off: &[usize], l: usize, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (g, &t) in types.iter().enumerate() {
            let block = v.window(off[g], off[g + 1]);
            if block.is_zero() {
                continue;
            }
            terms.extend(self.left[t][l].apply(&block).into_entries().into_iter().map(|(i, c)| (off[g] + i, c)));
        }
        SparseVec::from_terms(terms)
    }
}

/// Generators of a submodule `K`: each lies in some `e_t K` and together they
/// span `K` modulo `rad Λ · K`, chosen greedily.
fn cover(
    ring: &FiniteDimAlgebra,
    rad: &Subspace,
    idempotents: &[SparseVec],
    width: usize,
    basis: &[SparseVec],
    act: &(dyn Fn(usize, &SparseVec) -> SparseVec + Sync),
) -> Vec<(usize, SparseVec)> {
    let f = ring.field();
    let act_by = |a: &SparseVec, v: &SparseVec| {
        let images: Vec<(Scalar, SparseVec)> = a.iter().map(|(i, c)| (c.clone(), act(*i, v))).collect();
        SparseVec::combine(images.iter().map(|(c, w)| (c.clone(), w)))
    };
    let mut e = Echelon::new(f, width);
    for v in basis {
        for r in rad.basis() {
            e.insert(act_by(r, v));
        }
    }
    let mut gens = Vec::new();
    for (t, idem) in idempotents.iter().enumerate() {
        for v in basis {
            let w = act_by(idem, v);
            if w.is_zero() || e.contains(&w) {
                continue;
            }
            for l in 0..ring.dim() {
                e.insert(act(l, &w));
            }
            gens.push((t, w));
        }
    }
    gens
}

pub fn projective_resolution(ring: &FiniteDimAlgebra, m: &Module, length: usize) -> Result<ProjectiveResolution, Error> {
    let f = ring.field();
    let rad = radical(ring)?;
    let idempotents = orthogonal_idempotents(ring)?;
    let covers = Covers::new(ring, &idempotents);
    let top: Vec<SparseVec> = (0..m.dim()).map(|x| SparseVec::unit(x, f)).collect();
    let gens = cover(ring, &rad, &idempotents, m.dim(), &top, &|l, v| m.act_basis(l, v));
    let mut types = vec![gens.iter().map(|g| g.0).collect::<Vec<_>>()];
    let mut maps = vec![Vec::new()];
    // The map P_n -> previous target, as images of the basis of each `Λ e_t`.
    let image_matrix = |gens: &[(usize, SparseVec)], width: usize, act: &(dyn Fn(usize, &SparseVec) -> SparseVec + Sync)| {
        let cols: Vec<SparseVec> = gens
            .iter()
            .flat_map(|(t, g)| {
                covers.bases[*t].basis().iter().map(move |b| {
                    let images: Vec<(Scalar, SparseVec)> = b.iter().map(|(i, c)| (c.clone(), act(*i, g))).collect();
                    SparseVec::combine(images.iter().map(|(c, w)| (c.clone(), w)))
                })
            })
            .collect();
        Matrix::from_columns(f, width, &cols)
    };
    let mut kernel = kernel_basis(&image_matrix(&gens, m.dim(), &|l, v| m.act_basis(l, v))).row_vecs().to_vec();
    for _ in 1..=length {
        let prev = types.last().unwrap().clone();
        let off = covers.offsets(&prev);
        let act = |l: usize, v: &SparseVec| covers.act(&prev, &off, l, v);
        let gens = cover(ring, &rad, &idempotents, off[prev.len()], &kernel, &act);
        let comps: Vec<Vec<(usize, SparseVec)>> = gens
            .iter()
            .map(|(_, g)| {
                (0..prev.len())
                    .filter_map(|h| {
                        let block = g.window(off[h], off[h + 1]);
                        (!block.is_zero()).then(|| (h, covers.bases[prev[h]].from_coords(&block)))
                    })
                    .collect()
            })
            .collect();
        kernel = if gens.is_empty() {
            Vec::new()
        } else {
            kernel_basis(&image_matrix(&gens, off[prev.len()], &act)).row_vecs().to_vec()
        };
        types.push(gens.iter().map(|g| g.0).collect());
        maps.push(comps);
    }
    Ok(ProjectiveResolution {
        idempotents,
        types,
        maps,
    })
}

/// `X ⊗_Λ P_•` for a right module `X`, using `X ⊗_Λ Λe = Xe`.
pub fn tensor_resolution(right: &Module, res: &ProjectiveResolution) -> Result<ChainComplex, Error> {
    let f = right.algebra().field();
    let dx = right.dim();
    let units: Vec<SparseVec> = (0..dx).map(|x| SparseVec::unit(x, f)).collect();
    let corners: Vec<Subspace> = res
        .idempotents
        .iter()
        .map(|e| Subspace::from_vectors(f, dx, &units.iter().map(|x| right.act(e, x)).collect::<Vec<_>>()))
        .collect();
    let offsets: Vec<Vec<usize>> = res
        .types
        .iter()
        .map(|ts| {
            let mut off = vec![0];
            for &t in ts {
                off.push(off.last().unwrap() + corners[t].dim());
            }
            off
        })
        .collect();
    let dims: Vec<usize> = offsets.iter().map(|o| *o.last().unwrap()).collect();
    let diffs = (1..res.types.len())
        .map(|n| {
            let mut cols = Vec::with_capacity(dims[n]);
            for (g, &t) in res.types[n].iter().enumerate() {
                for x in corners[t].basis() {
                    let mut terms = Vec::new();
                    for (h, c) in &res.maps[n][g] {
                        let y = right.act(c, x);
                        let coords = corners[res.types[n - 1][*h]].coords(&y).expect("x c lies in X e");
                        terms.extend(coords.into_entries().into_iter().map(|(i, v)| (offsets[n - 1][*h] + i, v)));
                    }
                    cols.push(SparseVec::from_terms(terms));
                }
            }
            Matrix::from_columns(f, dims[n - 1], &cols)
        })
        .collect();
    ChainComplex::new(f, dims, diffs)
}

/// Tor dimensions in degrees `0..max_degree` from a projective resolution.
pub fn tor(req: &TorRequest) -> Result<Vec<usize>, Error> {
    if req.max_degree == 0 {
        return Ok(vec![]);
    }
    let res = projective_resolution(&req.ring, &req.left, req.max_degree)?;
    Ok(tensor_resolution(&req.right, &res)?.homology_dims())
}

/// Tor from the truncated two-sided bar complex `X ⊗ Λ^{⊗n} ⊗ M`. Its size
/// grows like `(dim Λ)^n`; used as an independent check on small inputs.
pub fn tor_bar(req: &TorRequest) -> Result<Vec<usize>, Error> {
    if req.max_degree == 0 {
        return Ok(vec![]);
    }
    let ring = &req.ring;
    let f = ring.field();
    let (dx, dl, dm) = (req.right.dim(), ring.dim(), req.left.dim());
    let layout = |n: usize| {
        Layout::new(
            std::iter::once(dx)
                .chain(std::iter::repeat_n(dl, n))
                .chain(std::iter::once(dm))
                .collect(),
        )
    };
    let top = req.max_degree;
    let dims: Vec<usize> = (0..=top).map(|n| layout(n).size()).collect();
    let diffs = (1..=top)
        .map(|n| {
            let (src, dst) = (layout(n), layout(n - 1));
            let cols = crate::par::map_range(src.size(), |idx| {
                let t = src.decode(idx);
                let mut terms = Vec::new();
                let mut u = t.clone();
                u.remove(1);
                for (y, c) in req.right.act_basis(t[1], &SparseVec::unit(t[0], f)).iter() {
                    u[0] = *y;
                    terms.push((dst.encode(&u), c.clone()));
                }
                for i in 1..n {
                    let mut u: Vec<usize> = t[..i].to_vec();
                    u.push(0);
                    u.extend_from_slice(&t[i + 2..]);
                    for (k, c) in ring.product(t[i], t[i + 1]).iter() {
                        u[i] = *k;
                        terms.push((dst.encode(&u), if i % 2 == 1 { -c } else { c.clone() }));
                    }
                }
                let mut u = t.clone();
                u.remove(n);
                for (y, c) in req.left.act_basis(t[n], &SparseVec::unit(t[n + 1], f)).iter() {
                    u[n] = *y;
                    terms.push((dst.encode(&u), if n % 2 == 1 { -c } else { c.clone() }));
                }
                SparseVec::from_terms(terms)
            });
            Matrix::from_columns(f, dims[n - 1], &cols)
        })
        .collect();
    Ok(ChainComplex::new(f, dims, diffs)?.homology_dims())
}

/// Bounded check of `Tor^B_*(A/B, (A/B)^{⊗_B n}) = 0` for `1 <= * <= starmax`
/// and `1 <= n <= nmax`. A positive answer is a finite verification only.
#[derive(Clone, Debug, Serialize)]
pub struct HypothesisReport {
    pub holds: bool,
    /// First `(n, degree)` with nonzero Tor.
    pub witness: Option<(usize, usize)>,
    /// `table[n - 1][k]` is `dim Tor_k` for `0 <= k <= starmax`.
    pub table: Vec<Vec<usize>>,
    pub nmax: usize,
    pub starmax: usize,
}

pub fn check_hypothesis(emb: &SubalgebraEmbedding, nmax: usize, starmax: usize) -> Result<HypothesisReport, Error> {
    let tower = PowerTower::new(emb)?;
    let right = tower.base().right_module();
    let b = emb.sub().clone();
    let table = (1..=nmax)
        .map(|n| {
            let left = tower.power(n)?.module.left_module();
            tor(&TorRequest::new(b.clone(), right.clone(), left, starmax + 1)?)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let witness = table
        .iter()
        .enumerate()
        .find_map(|(i, row)| (1..=starmax).find(|&k| row[k] != 0).map(|k| (i + 1, k)));
    Ok(HypothesisReport {
        holds: witness.is_none(),
        witness,
        table,
        nmax,
        starmax,
    })
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct NilpotencyReport {
    /// `dim (A/B)^{⊗_B n}` for `n = 1..=cap`.
    pub dims: Vec<usize>,
    /// Smallest `n` with a zero power, if it is at most `cap`.
    pub index: Option<usize>,
    pub cap: usize,
}

pub fn nilpotency_index(emb: &SubalgebraEmbedding, cap: usize) -> Result<NilpotencyReport, Error> {
    let tower = PowerTower::new(emb)?;
    let mut dims = Vec::with_capacity(cap);
    let mut index = None;
    for n in 1..=cap {
        if index.is_some() {
            dims.push(0);
            continue;
        }
        let d = tower.power(n)?.dim();
        dims.push(d);
        if d == 0 {
            index = Some(n);
        }
    }
    Ok(NilpotencyReport { dims, index, cap })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PdBound {
    /// Tor against the semisimple top vanishes from this degree plus one up to the cap.
    AtMost(usize),
    ExceedsCap,
}

/// `Λ / rad Λ` as a right module.
pub fn top_module(ring: &FiniteDimAlgebra) -> Result<Module, Error> {
    let f = ring.field();
    let rad = radical(ring)?;
    let q = QuotientSpace::new(f, ring.dim(), rad.basis().iter().cloned());
    let table = (0..ring.dim())
        .map(|i| {
            let right = ring.right_mult(i);
            Ok(induced_map_with(&q, &q, |v: &SparseVec| right.apply(v))?.columns())
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Module::new(ring.clone(), Side::Right, q.quotient_dim(), table)
}

/// Largest `n < cap` with `Tor_n(Λ/rad Λ, M) != 0`, or `ExceedsCap` when
/// `Tor_{cap-1}` is still nonzero. Zero for `M = 0`.
pub fn pd_upper(ring: &FiniteDimAlgebra, m: &Module, cap: usize) -> Result<PdBound, Error> {
    let top = top_module(ring)?;
    let dims = tor(&TorRequest::new(ring.clone(), top, m.clone(), cap)?)?;
    if dims.last().is_some_and(|&d| d != 0) {
        return Ok(PdBound::ExceedsCap);
    }
    Ok(PdBound::AtMost(dims.iter().rposition(|&d| d != 0).unwrap_or(0)))
}

/// `pd_upper` of `A/B` over `B^e`.
pub fn quotient_pd(emb: &SubalgebraEmbedding, cap: usize) -> Result<PdBound, Error> {
    let env = enveloping(emb.sub());
    let m = emb.quotient_bimodule()?.as_left_enveloping(&env)?;
    pd_upper(&env, &m, cap)
}
