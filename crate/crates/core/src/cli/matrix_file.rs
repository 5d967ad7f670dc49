use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Operator;

/// On-disk matrix: JSON with explicit shape and row-major `[re, im]` pairs.
///
/// ```text
/// {
///   "rows": 2,
///   "cols": 2,
///   "data": [
///     [1.0, 0.0], [0.0, -0.5],
///     [0.0, 0.5], [2.0, 0.0]
///   ]
/// }
/// ```
///
/// Numbers are written in shortest round-trip form, so writing and reading
/// back reproduces every bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_operator(op: &Operator) -> Self {
        Self {
            rows: op.rows(),
            cols: op.cols(),
            data: op.to_row_major().into_iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_operator(&self) -> Result<Operator> {
        let entries = self.data.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        Operator::from_row_major(self.rows, self.cols, entries)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        // validate shape and finiteness up front
        file.to_operator()?;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn read_operator(path: &Path) -> Result<Operator> {
        Self::read(path)?.to_operator()
    }

    pub fn render(&self) -> Result<String> {
        let mut out = format!("{{\n  \"rows\": {},\n  \"cols\": {},\n  \"data\": [\n", self.rows, self.cols);
        for (i, row) in self.data.chunks(self.cols.max(1)).enumerate() {
            out.push_str("    ");
            for (j, pair) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&serde_json::to_string(pair)?.replace(',', ", "));
            }
            let last = (i + 1) * self.cols >= self.data.len();
            let _ = writeln!(out, "{}", if last { "" } else { "," });
        }
        out.push_str("  ]\n}\n");
        Ok(out)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.render()?).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })
    }
}
