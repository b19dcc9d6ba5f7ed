//! A directory of named objects and inclusions stored as JSON.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use fibrancy::{validate_map, validate_sset, Inclusion, MapDoc, SSet, SSetDoc, SimplicialMap};
use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Stored {
    Object {
        expr: String,
        sset: SSetDoc,
    },
    Inclusion {
        expr: String,
        map: MapDoc,
    },
}

#[derive(Clone, Debug)]
pub enum Value {
    Object(Arc<SSet>),
    Inclusion(Inclusion),
}

impl Value {
    /// The object itself, or the domain of an inclusion.
    pub fn object(&self) -> &Arc<SSet> {
        match self {
            Value::Object(x) => x,
            Value::Inclusion(i) => i.domain(),
        }
    }

    pub fn dim(&self) -> usize {
        self.object().dim()
    }

    pub fn to_stored(&self, expr: &str) -> Stored {
        match self {
            Value::Object(x) => Stored::Object { expr: expr.into(), sset: x.to_doc() },
            Value::Inclusion(i) => Stored::Inclusion { expr: expr.into(), map: i.map().to_doc() },
        }
    }
}

pub struct Workspace {
    root: PathBuf,
}

pub fn check_name(name: &str) -> Result<(), CliError> {
    let ok = !name.is_empty()
        && !name.starts_with('.')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || "_-.".contains(c));
    if ok {
        Ok(())
    } else {
        Err(CliError::Usage(format!("invalid name {name:?}")))
    }
}

/// Writes through a temporary file in the same directory and renames it over
/// the destination.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

impl Workspace {
    pub fn open(root: impl Into<PathBuf>) -> Workspace {
        Workspace { root: root.into() }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    pub fn path_of(&self, name: &str) -> PathBuf {
        self.root.join(format!("{name}.json"))
    }

    pub fn report_path(&self, file: &str) -> PathBuf {
        self.root.join("reports").join(file)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.path_of(name).is_file()
    }

    pub fn names(&self) -> Result<Vec<String>, CliError> {
        let mut out = Vec::new();
        if !self.root.is_dir() {
            return Ok(out);
        }
        for entry in fs::read_dir(&self.root)? {
            let path = entry?.path();
            if path.extension().is_some_and(|e| e == "json") {
                if let Some(stem) = path.file_stem() {
                    out.push(stem.to_string_lossy().into_owned());
                }
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn save(&self, name: &str, value: &Value, expr: &str, overwrite: bool) -> Result<PathBuf, CliError> {
        check_name(name)?;
        let path = self.path_of(name);
        if !overwrite && path.exists() {
            return Err(CliError::Usage(format!("`{name}` already exists")));
        }
        write_atomic(&path, &to_json(&value.to_stored(expr)))?;
        Ok(path)
    }

    pub fn load_stored(&self, name: &str) -> Result<Stored, CliError> {
        check_name(name)?;
        let path = self.path_of(name);
        let text = fs::read_to_string(&path).map_err(|_| CliError::Usage(format!("no object named `{name}`")))?;
        Ok(serde_json::from_str(&text).map_err(fibrancy::Error::from)?)
    }

    /// Loads and revalidates a stored entry.
    pub fn load(&self, name: &str) -> Result<Value, CliError> {
        match self.load_stored(name)? {
            Stored::Object { sset, .. } => {
                let x = SSet::from_doc(&sset)?;
                let report = validate_sset(&x);
                if !report.is_ok() {
                    return Err(CliError::Invalid(name.into(), to_json(&report)));
                }
                Ok(Value::Object(Arc::new(x)))
            }
            Stored::Inclusion { map, .. } => {
                let m = SimplicialMap::from_doc(&map)?;
                for (part, x) in [("domain", m.domain()), ("codomain", m.codomain())] {
                    let report = validate_sset(x);
                    if !report.is_ok() {
                        return Err(CliError::Invalid(format!("{name} ({part})"), to_json(&report)));
                    }
                }
                let report = validate_map(&m);
                if !report.is_ok() {
                    return Err(CliError::Invalid(name.into(), to_json(&report)));
                }
                Ok(Value::Inclusion(Inclusion::new(m)?))
            }
        }
    }
}
