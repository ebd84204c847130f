use std::fmt::Write;

use repring::chartab::CharacterTable;
use repring::exact::IntMatrix;

/// Left-aligned columns separated by two spaces.
pub fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn character_table(t: &CharacterTable) -> String {
    let g = t.group();
    let conj = g.conjugacy();
    let mut rows = vec![
        std::iter::once(String::from("class"))
            .chain((0..t.rank()).map(|c| g.label(conj.representative(c)).to_string()))
            .collect::<Vec<_>>(),
        std::iter::once(String::from("size"))
            .chain((0..t.rank()).map(|c| conj.class_size(c).to_string()))
            .collect(),
        std::iter::once(String::from("order"))
            .chain((0..t.rank()).map(|c| conj.element_order(c).to_string()))
            .collect(),
    ];
    for (i, chi) in t.irreducibles().iter().enumerate() {
        rows.push(
            std::iter::once(format!("χ{i}"))
                .chain(chi.values().iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    format!("{} (order {})\n{}", g.name(), g.order(), grid(&rows))
}

pub fn int_matrix(m: &IntMatrix) -> String {
    let mut rows = vec![std::iter::once(String::new()).chain((0..m.cols()).map(|j| format!("χ{j}"))).collect()];
    for i in 0..m.rows() {
        rows.push(
            std::iter::once(format!("χ{i}"))
                .chain(m.row(i).iter().map(|x| x.to_string()))
                .collect::<Vec<_>>(),
        );
    }
    grid(&rows)
}

/// `c₀·χ₀ + c₁·χ₁ + …` with zero terms dropped.
pub fn combination(coeffs: &[i64], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if *c == 0 {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if *c < 0 { " - " } else { " + " });
        }
        if mag != 1 {
            let _ = write!(out, "{mag}");
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
