//! Generator files: `#` comments, a `degree N` line, an optional `order N`
//! line, then one permutation per line in 1-based cycle notation.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct GeneratorFile {
    pub degree: usize,
    pub order: Option<u64>,
    pub generators: Vec<Permutation>,
}

pub fn parse_generator_file(text: &str, path: &str) -> Result<GeneratorFile> {
    let err = |line: usize, reason: String| Error::GeneratorFile {
        path: path.to_string(),
        line,
        reason,
    };
    let mut degree = None;
    let mut order = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(d) = degree else {
            let n = line
                .strip_prefix("degree")
                .and_then(|r| r.trim().parse::<usize>().ok())
                .ok_or_else(|| err(lineno, "expected 'degree N'".into()))?;
            degree = Some(n);
            continue;
        };
        if let Some(r) = line.strip_prefix("order") {
            if order.is_some() || !generators.is_empty() {
                return Err(err(lineno, "'order' must precede the generators and appear once".into()));
            }
            order = Some(r.trim().parse::<u64>().map_err(|_| err(lineno, "bad order".into()))?);
            continue;
        }
        generators.push(Permutation::parse(line, d).map_err(|e| err(lineno, e.to_string()))?);
    }
    let degree = degree.ok_or_else(|| err(0, "missing 'degree N' line".into()))?;
    Ok(GeneratorFile {
        degree,
        order,
        generators,
    })
}

impl GeneratorFile {
    /// Builds the group and enforces the annotated order.
    pub fn into_group(self) -> Result<PermGroup> {
        let g = PermGroup::new(self.degree, self.generators)?;
        if let Some(expected) = self.order {
            let computed = g.order()?;
            if computed != expected {
                return Err(Error::OrderMismatch { expected, computed });
            }
        }
        Ok(g)
    }

    pub fn render(&self, comments: &[&str]) -> String {
        let mut s = String::new();
        for c in comments {
            let _ = writeln!(s, "# {c}");
        }
        let _ = writeln!(s, "degree {}", self.degree);
        if let Some(o) = self.order {
            let _ = writeln!(s, "order {o}");
        }
        for g in &self.generators {
            let _ = writeln!(s, "{}", g.to_cycle_string());
        }
        s
    }
}

pub fn ingest_generators(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_generator_file(&text, &path.display().to_string())?.into_group()
}
