//! The shipped corpus of extensions and seeded random small extensions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{from_quiver, make_algebra, make_subalgebra, Arrow, Bimodule, FiniteDimAlgebra, SubalgebraEmbedding};
use crate::error::Error;
use crate::exactlin::{Basis, Field, Matrix, SparseVec};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub embedding: SubalgebraEmbedding,
    pub bimodule: Bimodule,
}

impl Fixture {
    pub fn new(name: &str, embedding: SubalgebraEmbedding) -> Fixture {
        let bimodule = Bimodule::regular(embedding.ambient());
        Fixture {
            name: name.to_string(),
            embedding,
            bimodule,
        }
    }
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn arrow(name: &str, source: usize, target: usize) -> Arrow {
    Arrow {
        name: name.into(),
        source,
        target,
    }
}

fn columns(field: Field, dim: usize, cols: &[&[i64]]) -> Matrix {
    let vs: Vec<SparseVec> = cols
        .iter()
        .map(|c| SparseVec::from_dense(&c.iter().map(|&v| field.from_i64(v)).collect::<Vec<_>>()))
        .collect();
    Matrix::from_columns(field, dim, &vs)
}

/// `k[x]/(x^2)` on the basis `1, x`.
pub fn dual_numbers(field: Field) -> FiniteDimAlgebra {
    from_quiver(field, &names(&["1"]), &[arrow("x", 0, 0)], &[vec![0, 0]], 8).expect("dual numbers")
}

/// Upper-triangular 2x2 matrices on the basis `e1, e2, a`.
pub fn upper_triangular(field: Field) -> FiniteDimAlgebra {
    from_quiver(field, &names(&["e1", "e2"]), &[arrow("a", 0, 1)], &[], 8).expect("upper triangular")
}

/// `k x k` on the basis `e1, e2`.
pub fn split_pair(field: Field) -> FiniteDimAlgebra {
    from_quiver(field, &names(&["e1", "e2"]), &[], &[], 8).expect("k x k")
}

/// `k[x,y]/(x,y)^2` on the basis `1, x, y`: the trivial extension of
/// `k[x]/(x^2)` by a one-dimensional bimodule killed by `x`.
pub fn square_zero(field: Field) -> FiniteDimAlgebra {
    let e = |i| SparseVec::unit(i, field);
    let z = SparseVec::new;
    make_algebra(
        field,
        names(&["1", "x", "y"]),
        vec![vec![e(0), e(1), e(2)], vec![e(1), z(), z()], vec![e(2), z(), z()]],
        e(0),
    )
    .expect("square-zero extension")
}

/// Path algebra of `1 -a-> 2 -b-> 3` modulo `ab`, on `e1, e2, e3, a, b`.
pub fn a3_with_relation(field: Field) -> FiniteDimAlgebra {
    from_quiver(field, &names(&["e1", "e2", "e3"]), &[arrow("a", 0, 1), arrow("b", 1, 2)], &[vec![0, 1]], 8)
        .expect("A3 modulo ab")
}

pub fn ground_in(a: &FiniteDimAlgebra) -> SubalgebraEmbedding {
    let unit = a.unit().clone();
    make_subalgebra(a, &Matrix::from_columns(a.field(), a.dim(), &[unit])).expect("k.1 is a subalgebra")
}

/// The six shipped extensions, each with `X = A`.
pub fn corpus(field: Field) -> Vec<Fixture> {
    let dual = dual_numbers(field);
    let upper = upper_triangular(field);
    let pair = split_pair(field);
    let sq = square_zero(field);
    let a3 = a3_with_relation(field);
    vec![
        Fixture::new("ground-in-dual-numbers", ground_in(&dual)),
        Fixture::new(
            "diagonal-in-upper-triangular",
            make_subalgebra(&upper, &columns(field, 3, &[&[1, 0, 0], &[0, 1, 0]])).expect("diagonal"),
        ),
        Fixture::new("ground-in-split-pair", ground_in(&pair)),
        Fixture::new(
            "square-zero-extension",
            make_subalgebra(&sq, &columns(field, 3, &[&[1, 0, 0], &[0, 1, 0]])).expect("k[x]/(x^2)"),
        ),
        Fixture::new(
            "vertices-in-a3-quiver",
            make_subalgebra(&a3, &columns(field, 5, &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0]]))
                .expect("vertex span"),
        ),
        Fixture::new("dual-numbers-in-itself", make_subalgebra(&dual, &Matrix::identity(field, 2)).expect("B = A")),
    ]
}

/// The A3 quiver algebra over the ground field.
pub fn ground_in_a3(field: Field) -> Fixture {
    Fixture::new("ground-in-a3-quiver", ground_in(&a3_with_relation(field)))
}

/// Base algebras of dimension at most 4 with elements `b` such that
/// `span(1, b)` is a subalgebra.
fn random_bases(field: Field) -> Vec<(FiniteDimAlgebra, Vec<usize>)> {
    let loop_algebra = |len: usize| {
        from_quiver(field, &names(&["1"]), &[arrow("x", 0, 0)], &[vec![0; len]], 8).expect("truncated polynomials")
    };
    vec![
        (dual_numbers(field), vec![1]),
        (split_pair(field), vec![0]),
        (upper_triangular(field), vec![0, 2]),
        (loop_algebra(3), vec![2]),
        (loop_algebra(4), vec![2, 3]),
        (square_zero(field), vec![1, 2]),
        (from_quiver(field, &names(&["e1", "e2", "e3"]), &[], &[], 8).expect("k^3"), vec![0, 1]),
        (
            from_quiver(field, &names(&["e1", "e2"]), &[arrow("a", 0, 1), arrow("b", 0, 1)], &[], 8).expect("Kronecker"),
            vec![0, 2],
        ),
        (
            from_quiver(field, &names(&["e1", "e2"]), &[arrow("x", 1, 1)], &[vec![0, 0]], 8).expect("k x dual"),
            vec![0, 2],
        ),
    ]
}

/// A small extension (`dim A <= 4`, `dim B <= 2`) in a random basis. The
/// structure constants are revalidated after the change of basis.
pub fn random_extension(seed: u64) -> Result<Fixture, Error> {
    let field = Field::Rational;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = random_bases(field);
    let (base, special) = bases.choose(&mut rng).expect("nonempty");
    let n = base.dim();
    // A permutation times a unit upper-triangular matrix with entries in
    // {-1, 0, 1}: the inverse is integral, so structure constants stay small.
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let cols: Vec<SparseVec> = (0..n)
        .map(|j| {
            let mut v: Vec<_> = (0..n).map(|_| field.zero()).collect();
            v[perm[j]] = field.one();
            for i in 0..j {
                v[perm[i]] = field.from_i64(rng.gen_range(-1..=1));
            }
            SparseVec::from_dense(&v)
        })
        .collect();
    let basis = Basis::new(field, n, cols.clone()).expect("unitriangular up to a permutation");
    let inv: Vec<SparseVec> = (0..n).map(|k| basis.coords(&SparseVec::unit(k, field)).expect("spans")).collect();
    let (change, inverse) = (Matrix::from_columns(field, n, &cols), Matrix::from_columns(field, n, &inv));
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    let a = base.rebase(&change, &inverse, labels)?;
    let mut gens = vec![a.unit().clone()];
    if rng.gen_range(0..4) != 0 {
        let s = *special.choose(&mut rng).expect("nonempty");
        let c = field.from_i64(rng.gen_range(-2..=2));
        let d = field.from_i64(rng.gen_range(1..=2));
        let b = inverse.apply(&SparseVec::unit(s, field)).scale(&d).add_scaled(&c, a.unit());
        gens.push(b);
    }
    let emb = make_subalgebra(&a, &Matrix::from_columns(field, n, &gens))?;
    Ok(Fixture::new(&format!("random-{seed}"), emb))
}
