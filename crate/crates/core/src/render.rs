//! ASCII layouts: patterns as staggered triangles, tableaux as Young
//! diagrams in English notation.

use crate::combinat::{AlphabetKind, GTPattern, Letter, OrthogonalPattern, Tableau};

/// Top row first, each lower row shifted right by half a cell so entries sit
/// between the two entries they interlace.
pub fn render_pattern(p: &GTPattern) -> String {
    render_rows(p, |_, v| v.to_string())
}

/// Like [`render_pattern`], with circled top-row entries in parentheses.
pub fn render_orthogonal(p: &OrthogonalPattern) -> String {
    let n = p.king().as_gt().n_rows();
    render_rows(
        p.king().as_gt(),
        |(i, k), v| {
            if k == n && p.circled().contains(&i) {
                format!("({v})")
            } else {
                v.to_string()
            }
        },
    )
}

fn render_rows(p: &GTPattern, cell: impl Fn((usize, usize), i64) -> String) -> String {
    let n = p.n_rows();
    let cells: Vec<Vec<String>> =
        (1..=n).rev().map(|k| (1..=k).map(|i| cell((i, k), p.get(i, k).unwrap())).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let half = width.div_ceil(2) + 1;
    cells
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let body: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            format!("{}{}", " ".repeat(r * half), body.join(&" ".repeat(2 * half - width))).trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Boxed Young diagram. Barred letters are written with a trailing `b`.
pub fn render_tableau(t: &Tableau) -> String {
    if t.rows().is_empty() {
        return "(empty)".to_string();
    }
    let label = |l: Letter| match t.kind() {
        AlphabetKind::TypeA(_) => format!("{}", l.0),
        _ => l.to_signed_string(),
    };
    let labels: Vec<Vec<String>> = t.rows().iter().map(|r| r.iter().map(|&l| label(l)).collect()).collect();
    let width = labels.iter().flatten().map(String::len).max().unwrap_or(1);
    let border = |len: usize| format!("+{}", format!("{}+", "-".repeat(width + 2)).repeat(len));
    let mut lines = vec![border(labels[0].len())];
    for row in &labels {
        let body: String = row.iter().map(|c| format!(" {c:>width$} |")).collect();
        lines.push(format!("|{body}"));
        lines.push(border(row.len()));
    }
    lines.join("\n")
}
