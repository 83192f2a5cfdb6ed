//! Plain-text tables with right-aligned integer columns.

use sdgamma_core::CountVector;

#[derive(Debug, Default)]
pub struct Table {
    header: Option<Vec<String>>,
    rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn new() -> Self {
        Table::default()
    }

    /// A header row labelled by column index `0..columns`.
    pub fn indexed(columns: usize) -> Self {
        Table { header: Some((0..columns).map(|i| i.to_string()).collect()), rows: Vec::new() }
    }

    pub fn row(&mut self, label: impl Into<String>, cells: Vec<String>) -> &mut Self {
        self.rows.push((label.into(), cells));
        self
    }

    pub fn vector(&mut self, label: impl Into<String>, v: &CountVector) -> &mut Self {
        self.row(label, v.entries().iter().map(ToString::to_string).collect())
    }

    pub fn render(&self) -> String {
        let all = self.header.iter().map(|h| ("", h)).chain(self.rows.iter().map(|(l, c)| (l.as_str(), c)));
        let label_width = all.clone().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        let mut widths: Vec<usize> = Vec::new();
        for (_, cells) in all.clone() {
            for (i, c) in cells.iter().enumerate() {
                if i == widths.len() {
                    widths.push(0);
                }
                widths[i] = widths[i].max(c.chars().count());
            }
        }
        let mut out = String::new();
        for (label, cells) in all {
            let mut line = format!("{label:<label_width$}");
            for (c, w) in cells.iter().zip(&widths) {
                line.push_str(&format!("  {c:>w$}"));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_aligned() {
        let mut t = Table::indexed(3);
        t.vector("f", &CountVector::f([1, 3, 3])).vector("h(sd)", &CountVector::h([1, 400, 1]));
        assert_eq!(t.render(), "       0    1  2\nf      1    3  3\nh(sd)  1  400  1\n");
    }
}
