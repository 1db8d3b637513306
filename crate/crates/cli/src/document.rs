//! The JSON input document and its translation into core objects.

use serde::{Deserialize, Serialize};

use jz_core::algebra::{from_quiver, make_algebra, make_subalgebra, Arrow, Bimodule, FiniteDimAlgebra, SubalgebraEmbedding};
use jz_core::exactlin::{Field, Matrix, Scalar, SparseVec};
use jz_core::jzreport::Bounds;

use crate::error::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// `"Q"` or `"Fp:<p>"`.
    pub field: String,
    pub algebra: AlgebraSpec,
    /// Coordinate vectors spanning `B` in the basis of `A`.
    pub subalgebra: Vec<Vec<String>>,
    #[serde(default)]
    pub bimodule: BimoduleSpec,
    #[serde(default = "default_degree")]
    pub degree: usize,
    #[serde(default)]
    pub bounds: TorBounds,
}

fn default_degree() -> usize {
    Bounds::default().degree
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    Structure(StructureSpec),
    Quiver(QuiverSpec),
}

/// `products[i][j]` is `e_i e_j` as a coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureSpec {
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub products: Vec<Vec<Vec<String>>>,
}

/// Arrows compose left to right; each relation is a forbidden path given
/// by arrow names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default = "default_path_cap")]
    pub path_cap: usize,
}

fn default_path_cap() -> usize {
    16
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BimoduleSpec {
    #[default]
    Regular,
    /// `left[i]` and `right[i]` are the matrices of `e_i` acting, given by rows.
    Explicit {
        dim: usize,
        left: Vec<Vec<Vec<String>>>,
        right: Vec<Vec<Vec<String>>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TorBounds {
    pub nmax: usize,
    pub starmax: usize,
    pub pmax: usize,
    pub qmax: usize,
    pub cap: usize,
}

impl Default for TorBounds {
    fn default() -> TorBounds {
        let b = Bounds::default();
        TorBounds {
            nmax: b.nmax,
            starmax: b.starmax,
            pmax: b.pmax,
            qmax: b.qmax,
            cap: b.cap,
        }
    }
}

/// Parses a document, reporting the JSON path of the first schema error.
pub fn parse_document(text: &str) -> Result<InputDocument, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: InputDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::input(if path == "." { "document" } else { &path }, e.into_inner().to_string())
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(CliError::input(
            "schema_version",
            format!("unsupported version {}, expected {SCHEMA_VERSION}", doc.schema_version),
        ));
    }
    Ok(doc)
}

/// A validated input: the extension, the bimodule and every bound.
#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub field: Field,
    pub embedding: SubalgebraEmbedding,
    pub bimodule: Bimodule,
    pub bounds: Bounds,
}

/// Command-line overrides applied on top of the document.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub field: Option<String>,
    pub degree: Option<usize>,
}

fn scalar(field: Field, s: &str, at: &str) -> Result<Scalar, CliError> {
    field.parse(s).map_err(|m| CliError::input(at, m))
}

fn vector(field: Field, entries: &[String], len: usize, at: &str) -> Result<SparseVec, CliError> {
    if entries.len() != len {
        return Err(CliError::input(at, format!("expected {len} entries, found {}", entries.len())));
    }
    let values = entries
        .iter()
        .enumerate()
        .map(|(i, s)| scalar(field, s, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SparseVec::from_dense(&values))
}

fn square_matrix(field: Field, rows: &[Vec<String>], dim: usize, at: &str) -> Result<Matrix, CliError> {
    if rows.len() != dim {
        return Err(CliError::input(at, format!("expected {dim} rows, found {}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(field, r, dim, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, dim, rows))
}

fn build_algebra(field: Field, spec: &AlgebraSpec) -> Result<FiniteDimAlgebra, CliError> {
    match spec {
        AlgebraSpec::Structure(s) => {
            let n = s.labels.len();
            let at = "algebra.structure";
            if s.products.len() != n {
                return Err(CliError::input(
                    &format!("{at}.products"),
                    format!("expected {n} rows of products, found {}", s.products.len()),
                ));
            }
            let table = s
                .products
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    if row.len() != n {
                        return Err(CliError::input(
                            &format!("{at}.products[{i}]"),
                            format!("expected {n} products, found {}", row.len()),
                        ));
                    }
                    row.iter()
                        .enumerate()
                        .map(|(j, v)| vector(field, v, n, &format!("{at}.products[{i}][{j}]")))
                        .collect()
                })
                .collect::<Result<Vec<Vec<SparseVec>>, _>>()?;
            let unit = vector(field, &s.unit, n, &format!("{at}.unit"))?;
            make_algebra(field, s.labels.clone(), table, unit).map_err(|e| CliError::input(at, e.to_string()))
        }
        AlgebraSpec::Quiver(q) => {
            let at = "algebra.quiver";
            let arrows: Vec<Arrow> = q
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.source,
                    target: a.target,
                })
                .collect();
            let forbidden = q
                .relations
                .iter()
                .enumerate()
                .map(|(r, path)| {
                    path.iter()
                        .map(|name| {
                            arrows.iter().position(|a| &a.name == name).ok_or_else(|| {
                                CliError::input(&format!("{at}.relations[{r}]"), format!("unknown arrow {name:?}"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            from_quiver(field, &q.vertices, &arrows, &forbidden, q.path_cap).map_err(|e| CliError::input(at, e.to_string()))
        }
    }
}

fn build_bimodule(field: Field, a: &FiniteDimAlgebra, spec: &BimoduleSpec) -> Result<Bimodule, CliError> {
    match spec {
        BimoduleSpec::Regular => Ok(Bimodule::regular(a)),
        BimoduleSpec::Explicit { dim, left, right } => {
            let n = a.dim();
            let side = |ms: &[Vec<Vec<String>>], name: &str| {
                let at = format!("bimodule.explicit.{name}");
                if ms.len() != n {
                    return Err(CliError::input(&at, format!("expected {n} matrices, found {}", ms.len())));
                }
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| square_matrix(field, m, *dim, &format!("{at}[{i}]")))
                    .collect::<Result<Vec<_>, _>>()
            };
            let l = side(left, "left")?;
            let r = side(right, "right")?;
            Bimodule::new(a.clone(), *dim, &l, &r).map_err(|e| CliError::input("bimodule", e.to_string()))
        }
    }
}

/// Validates a document into core objects.
pub fn build(doc: &InputDocument, overrides: &Overrides) -> Result<Input, CliError> {
    let field_text = overrides.field.as_deref().unwrap_or(&doc.field);
    let field: Field = field_text.parse().map_err(CliError::from)?;
    let degree = overrides.degree.unwrap_or(doc.degree);
    if degree < 3 {
        return Err(CliError::input("degree", format!("degree bound {degree} is too small (need at least 3)")));
    }
    let a = build_algebra(field, &doc.algebra)?;
    let columns = doc
        .subalgebra
        .iter()
        .enumerate()
        .map(|(i, v)| vector(field, v, a.dim(), &format!("subalgebra[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let embedding = make_subalgebra(&a, &Matrix::from_columns(field, a.dim(), &columns))
        .map_err(|e| CliError::input("subalgebra", e.to_string()))?;
    let bimodule = build_bimodule(field, &a, &doc.bimodule)?;
    let t = doc.bounds;
    Ok(Input {
        name: doc.name.clone().unwrap_or_default(),
        field,
        embedding,
        bimodule,
        bounds: Bounds {
            degree,
            nmax: t.nmax,
            starmax: t.starmax,
            pmax: t.pmax,
            qmax: t.qmax,
            cap: t.cap,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dual_numbers_doc() -> InputDocument {
        parse_document(include_str!("../corpus/01-ground-in-dual-numbers.json")).unwrap()
    }

    #[test]
    fn schema_errors_name_the_path() {
        let err = parse_document(r#"{"schema_version": 1, "field": "Q", "algebra": {"structure": {"labels": ["1"], "unit": ["1"], "products": 3}}, "subalgebra": []}"#)
            .unwrap_err();
        match err {
            CliError::Input { field, constraint } => {
                assert_eq!(field, "algebra.structure.products");
                assert!(constraint.contains("line 1"), "{constraint}");
            }
            other => panic!("{other}"),
        }
        let mut doc = dual_numbers_doc();
        doc.schema_version = 2;
        let text = serde_json::to_string(&doc).unwrap();
        assert!(matches!(parse_document(&text), Err(CliError::Input { field, .. }) if field == "schema_version"));
    }

    #[test]
    fn validation_errors_name_the_field() {
        let mut doc = dual_numbers_doc();
        doc.subalgebra = vec![vec!["1".into()]];
        let err = build(&doc, &Overrides::default()).unwrap_err();
        assert!(matches!(&err, CliError::Input { field, .. } if field == "subalgebra[0]"), "{err}");

        let mut doc = dual_numbers_doc();
        doc.subalgebra = vec![vec!["0".into(), "1".into()]];
        let err = build(&doc, &Overrides::default()).unwrap_err();
        assert!(matches!(&err, CliError::Input { field, constraint } if field == "subalgebra" && constraint.contains("unit")), "{err}");

        let overrides = Overrides {
            field: Some("Fp:9".into()),
            degree: None,
        };
        let err = build(&dual_numbers_doc(), &overrides).unwrap_err();
        assert!(matches!(&err, CliError::Input { field, .. } if field == "field"), "{err}");
    }

    #[test]
    fn explicit_bimodule_matches_regular() {
        let mut doc = dual_numbers_doc();
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        // Left and right multiplication by 1 and x on the basis 1, x.
        let mats = vec![vec![s(&["1", "0"]), s(&["0", "1"])], vec![s(&["0", "0"]), s(&["1", "0"])]];
        doc.bimodule = BimoduleSpec::Explicit {
            dim: 2,
            left: mats.clone(),
            right: mats,
        };
        let explicit = build(&doc, &Overrides::default()).unwrap();
        let regular = build(&dual_numbers_doc(), &Overrides::default()).unwrap();
        assert_eq!(explicit.bimodule, regular.bimodule);
    }

    fn rational() -> impl Strategy<Value = String> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") })
    }

    fn document() -> impl Strategy<Value = InputDocument> {
        let structure = (1usize..=3).prop_flat_map(|n| {
            (
                proptest::collection::vec("[a-z][a-z0-9]{0,3}", n),
                proptest::collection::vec(rational(), n),
                proptest::collection::vec(proptest::collection::vec(proptest::collection::vec(rational(), n), n), n),
            )
                .prop_map(|(labels, unit, products)| AlgebraSpec::Structure(StructureSpec { labels, unit, products }))
        });
        let quiver = (
            proptest::collection::vec("[a-z][0-9]", 1..=3),
            proptest::collection::vec(("[a-z]", 0usize..3, 0usize..3), 0..=3),
            1usize..20,
        )
            .prop_map(|(vertices, arrows, path_cap)| {
                let arrows: Vec<ArrowSpec> = arrows
                    .into_iter()
                    .map(|(name, source, target)| ArrowSpec { name, source, target })
                    .collect();
                let relations = arrows.iter().take(1).map(|a| vec![a.name.clone(), a.name.clone()]).collect();
                AlgebraSpec::Quiver(QuiverSpec {
                    vertices,
                    arrows,
                    relations,
                    path_cap,
                })
            });
        (
            prop_oneof![structure, quiver],
            proptest::option::of("[a-z-]{1,12}"),
            prop_oneof![Just("Q".to_string()), Just("Fp:7".to_string())],
            proptest::collection::vec(proptest::collection::vec(rational(), 0..4), 0..3),
            3usize..9,
            (1usize..6, 1usize..6, 1usize..4, 1usize..4, 1usize..10),
        )
            .prop_map(|(algebra, name, field, subalgebra, degree, (nmax, starmax, pmax, qmax, cap))| InputDocument {
                schema_version: SCHEMA_VERSION,
                name,
                field,
                algebra,
                subalgebra,
                bimodule: BimoduleSpec::Regular,
                degree,
                bounds: TorBounds {
                    nmax,
                    starmax,
                    pmax,
                    qmax,
                    cap,
                },
            })
    }

    proptest! {
        #[test]
        fn document_round_trips(doc in document()) {
            let text = serde_json::to_string_pretty(&doc).unwrap();
            prop_assert_eq!(parse_document(&text).unwrap(), doc);
        }
    }
}
