//! Text renderings of tableaux and GT patterns.
//!
//! ASCII output uses French notation: the bottom row of a tableau is printed
//! last. GT patterns are printed top row first, each lower row shifted right
//! by half an entry.

use framesteps::{Entry, GtPattern, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Latex,
}

pub fn tableau(t: &Tableau, format: Format) -> String {
    match format {
        Format::Ascii => tableau_ascii(t),
        Format::Latex => tableau_latex(t),
    }
}

pub fn pattern<E: Entry>(p: &GtPattern<E>, format: Format) -> String {
    match format {
        Format::Ascii => pattern_ascii(p),
        Format::Latex => pattern_latex(p),
    }
}

fn tableau_ascii(t: &Tableau) -> String {
    if t.is_empty() && t.is_straight() {
        return "(empty)\n".into();
    }
    let width = t.max_entry().to_string().len();
    let mut out = String::new();
    for (r, row) in t.rows().iter().enumerate().rev() {
        let skipped = std::iter::repeat_n(format!("{:>width$}", "."), t.inner().get(r));
        let cells = row.iter().map(|x| format!("{x:>width$}"));
        let line: Vec<String> = skipped.chain(cells).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn tableau_latex(t: &Tableau) -> String {
    if t.is_empty() && t.is_straight() {
        return "\\varnothing\n".into();
    }
    let lines: Vec<String> = t
        .rows()
        .iter()
        .enumerate()
        .rev()
        .map(|(r, row)| {
            let skipped = std::iter::repeat_n("\\none".to_string(), t.inner().get(r));
            let cells: Vec<String> = skipped.chain(row.iter().map(|x| x.to_string())).collect();
            cells.join(" & ")
        })
        .collect();
    format!("\\begin{{ytableau}}\n{}\n\\end{{ytableau}}\n", lines.join(" \\\\\n"))
}

fn pattern_ascii<E: Entry>(p: &GtPattern<E>) -> String {
    let text: Vec<Vec<String>> = p.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let width = text.iter().flatten().map(String::len).max().unwrap_or(1);
    let pitch = width + 2;
    let mut out = String::new();
    for (k, row) in text.iter().rev().enumerate() {
        let mut line = " ".repeat(k * (pitch / 2));
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                line.push_str(&" ".repeat(pitch - width));
            }
            line.push_str(&format!("{entry:>width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn latex_entry(s: &str) -> String {
    match s.split_once('/') {
        Some((p, q)) if p.starts_with('-') => format!("-\\frac{{{}}}{{{q}}}", &p[1..]),
        Some((p, q)) => format!("\\frac{{{p}}}{{{q}}}"),
        None => s.to_string(),
    }
}

fn pattern_latex<E: Entry>(p: &GtPattern<E>) -> String {
    let lines: Vec<String> = p
        .rows()
        .iter()
        .rev()
        .enumerate()
        .map(|(k, row)| {
            let entries: Vec<String> = row.iter().map(|x| latex_entry(&x.to_string())).collect();
            format!("{}{}", "& ".repeat(k), entries.join(" & & "))
        })
        .collect();
    format!("\\begin{{matrix}}\n{} \\\\\n\\end{{matrix}}\n", lines.join(" \\\\\n"))
}
