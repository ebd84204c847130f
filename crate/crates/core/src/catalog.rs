//! Named small groups and group-file loading.

use std::path::Path;

use crate::error::{Error, Result};
use crate::groups::{alternating, cyclic, dihedral, direct_product, klein, quaternion8, symmetric, GroupTable};
use crate::io::GroupFile;

/// Names of the built-in catalog, in a fixed order.
pub const CATALOG: &[&str] = &[
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12", "Klein", "S3", "D8", "Q8", "C2xC4",
    "C2xC2xC2", "D8xC2", "Q8xC2", "C4xC4", "D10", "D12", "A4",
];

fn number(s: &str) -> Option<usize> {
    s.parse().ok().filter(|&n| n > 0)
}

fn atom(name: &str) -> Option<GroupTable> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "klein" | "v4" => return Some(klein()),
        "q8" => return Some(quaternion8()),
        _ => {}
    }
    let (head, n) = lower.split_at(1);
    let n = number(n)?;
    match head {
        "c" => Some(cyclic(n)),
        "d" if n % 2 == 0 && n >= 2 => Some(dihedral(n)),
        "s" if n <= 7 => Some(symmetric(n)),
        "a" if (3..=7).contains(&n) => Some(alternating(n)),
        _ => None,
    }
}

/// Resolves `C<n>`, `D<2n>`, `S<n>`, `A<n>`, `Klein`, `Q8` and products
/// written `GxH` (left to right).
pub fn by_name(name: &str) -> Result<GroupTable> {
    let parts: Vec<&str> = name.split(['x', 'X']).collect();
    let mut groups = Vec::with_capacity(parts.len());
    for p in &parts {
        groups.push(atom(p.trim()).ok_or_else(|| Error::InvalidInput(format!("unknown group name '{name}'")))?);
    }
    let mut acc = groups.remove(0);
    for g in &groups {
        acc = direct_product(&acc, g);
    }
    if parts.len() > 1 {
        acc = acc.with_name(name);
    }
    Ok(acc)
}

/// Every catalog group, validated.
pub fn catalog() -> Vec<GroupTable> {
    CATALOG.iter().map(|n| by_name(n).expect("catalog names resolve")).collect()
}

/// Loads a catalog name, or a JSON group file when `source` names an existing
/// file.
pub fn load(source: &str, limit: usize) -> Result<GroupTable> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{source}: {e}")))?;
        let file: GroupFile =
            serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("{source}: {e}")))?;
        return file.into_table(limit);
    }
    let g = by_name(source)?;
    if g.order() > limit {
        return Err(Error::OrderExceedsLimit(limit));
    }
    Ok(g)
}
