//! The shipped input corpus and directory loading.

use std::path::Path;

use crate::error::CliError;

/// `(file name, contents)` of every shipped input.
pub const SHIPPED: [(&str, &str); 6] = [
    ("01-ground-in-dual-numbers.json", include_str!("../corpus/01-ground-in-dual-numbers.json")),
    ("02-diagonal-in-upper-triangular.json", include_str!("../corpus/02-diagonal-in-upper-triangular.json")),
    ("03-ground-in-split-pair.json", include_str!("../corpus/03-ground-in-split-pair.json")),
    ("04-square-zero-extension.json", include_str!("../corpus/04-square-zero-extension.json")),
    ("05-vertices-in-a3-quiver.json", include_str!("../corpus/05-vertices-in-a3-quiver.json")),
    ("06-dual-numbers-in-itself.json", include_str!("../corpus/06-dual-numbers-in-itself.json")),
];

pub fn shipped() -> Vec<(String, String)> {
    SHIPPED.iter().map(|(n, c)| (n.to_string(), c.to_string())).collect()
}

/// Every `*.json` file directly inside `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(String, String)>, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(io)?;
    paths.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "json"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p).map_err(|e| CliError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            Ok((name, text))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{build, parse_document, Overrides};
    use jz_core::exactlin::Field;
    use jz_core::fixtures::corpus;

    #[test]
    fn shipped_documents_match_core_fixtures() {
        let fixtures = corpus(Field::Rational);
        assert_eq!(fixtures.len(), SHIPPED.len());
        for ((file, text), fixture) in SHIPPED.iter().zip(&fixtures) {
            let input = build(&parse_document(text).unwrap(), &Overrides::default()).unwrap();
            assert_eq!(input.name, fixture.name, "{file}");
            assert_eq!(input.embedding.ambient(), fixture.embedding.ambient(), "{file}");
            assert_eq!(input.embedding.generators(), fixture.embedding.generators(), "{file}");
            assert_eq!(input.bimodule, fixture.bimodule, "{file}");
        }
    }

    #[test]
    fn directory_loading_is_sorted_and_filtered() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("b.json"), "{}").unwrap();
        std::fs::write(dir.path().join("a.json"), "{}").unwrap();
        std::fs::write(dir.path().join("notes.txt"), "").unwrap();
        let names: Vec<String> = load_dir(dir.path()).unwrap().into_iter().map(|(n, _)| n).collect();
        assert_eq!(names, ["a.json", "b.json"]);
        assert!(matches!(load_dir(&dir.path().join("missing")), Err(CliError::Io { .. })));
    }
}
