//! Plain ASCII two-column tables.

use std::fmt::Write as _;

#[derive(Debug, Default)]
pub struct KvTable {
    rows: Vec<(String, String)>,
}

impl KvTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn row(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.rows.push((key.into(), value.to_string()));
        self
    }

    pub fn render(&self) -> String {
        let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

pub fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "undetermined".to_owned(), |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_keys() {
        let mut t = KvTable::new();
        t.row("a", 1).row("long key", "x");
        assert_eq!(t.render(), "a         1\nlong key  x\n");
    }
}
