//! JSON presentation files:
//! `{"name": str, "genus": int, "z_count": int, "relations": [[token, ...], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fox::{AdmissiblePresentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    #[serde(default)]
    pub name: String,
    pub genus: usize,
    pub z_count: usize,
    pub relations: Vec<Vec<String>>,
}

impl PresentationFile {
    pub fn to_presentation(&self) -> Result<AdmissiblePresentation> {
        let relations = self
            .relations
            .iter()
            .map(|r| Word::parse_tokens(r.iter().map(String::as_str)))
            .collect::<Result<Vec<_>>>()?;
        let name = (!self.name.is_empty()).then(|| self.name.clone());
        AdmissiblePresentation::new(self.genus, self.z_count, relations, name)
    }

    pub fn from_presentation(p: &AdmissiblePresentation) -> Self {
        PresentationFile {
            name: p.name().unwrap_or_default().to_string(),
            genus: p.genus(),
            z_count: p.internal_count(),
            relations: p.relations().iter().map(Word::tokens).collect(),
        }
    }
}

pub fn parse_presentation(text: &str) -> Result<AdmissiblePresentation> {
    let file: PresentationFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_presentation()
}

/// Pretty JSON with one relation per line.
pub fn serialize_presentation(p: &AdmissiblePresentation) -> String {
    let file = PresentationFile::from_presentation(p);
    let rels: Vec<String> = file
        .relations
        .iter()
        .map(|r| {
            format!(
                "    {}",
                serde_json::to_string(r).expect("strings serialize")
            )
        })
        .collect();
    format!(
        "{{\n  \"name\": {},\n  \"genus\": {},\n  \"z_count\": {},\n  \"relations\": [\n{}\n  ]\n}}\n",
        serde_json::to_string(&file.name).expect("strings serialize"),
        file.genus,
        file.z_count,
        rels.join(",\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = r#"{"name": "t", "genus": 1, "z_count": 3,
        "relations": [["z1","z2","z3"],["m1","-z3"],["m2","-z3","-z1"],["p1","z2"],["p2","-z1"]]}"#;

    #[test]
    fn round_trip() {
        let p = parse_presentation(TREFOIL).unwrap();
        assert_eq!(p.name(), Some("t"));
        let again = parse_presentation(&serialize_presentation(&p)).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse_presentation("{\n  \"genus\": 1,\n  oops\n}").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn bad_tokens() {
        for tok in ["q3", "-m0"] {
            let text = TREFOIL.replace("\"p2\",\"-z1\"", &format!("\"p2\",\"{tok}\""));
            assert!(
                matches!(parse_presentation(&text), Err(Error::Token(_))),
                "{tok}"
            );
        }
    }

    #[test]
    fn admissibility_forwarded() {
        let text = TREFOIL.replace(",[\"p2\",\"-z1\"]", "");
        assert!(matches!(
            parse_presentation(&text),
            Err(Error::Admissibility(_))
        ));
    }
}
