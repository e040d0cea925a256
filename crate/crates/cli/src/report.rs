//! Key/value reports. Human mode writes `key = value`, machine mode
//! `key=value`; both put one record per line.

use std::fmt::{self, Display};

use l2dim::scalars::Matrix;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.entries.push((key.into(), value.to_string()));
    }

    /// Appends `other` with every key prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.entries {
            self.entries.push((format!("{prefix}.{k}"), v));
        }
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, machine: bool) -> String {
        let sep = if machine { "=" } else { " = " };
        self.entries.iter().map(|(k, v)| format!("{k}{sep}{v}\n")).collect()
    }
}

/// Reads records back from either rendering. Keys never contain `=`.
pub fn parse_records(text: &str) -> Vec<(String, String)> {
    text.lines()
        .filter_map(|l| l.split_once('='))
        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
        .collect()
}

/// `[[a, b], [c, d]]`.
pub struct MatrixDisplay<'a, T>(pub &'a Matrix<T>);

impl<T: Display> Display for MatrixDisplay<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        f.write_str("[")?;
        for i in 0..m.rows() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..m.cols() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", m.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_renderings_parse() {
        let mut r = Report::new();
        r.push("dim", "1/2");
        let mut inner = Report::new();
        inner.push("status", "pass");
        r.extend_prefixed("module2", inner);
        for machine in [false, true] {
            let recs = parse_records(&r.render(machine));
            assert_eq!(recs, vec![("dim".into(), "1/2".into()), ("module2.status".into(), "pass".into())]);
        }
        assert_eq!(r.render(false), "dim = 1/2\nmodule2.status = pass\n");
    }

    #[test]
    fn matrices() {
        let m = Matrix::new(2, 2, vec![1, 2, 3, 4]);
        assert_eq!(MatrixDisplay(&m).to_string(), "[[1, 2], [3, 4]]");
    }
}
