use super::table::DEFAULT_ORDER_LIMIT;
use super::GroupTable;

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn word(parts: &[String]) -> String {
    let w: String = parts.concat();
    if w.is_empty() {
        "1".to_string()
    } else {
        w
    }
}

/// ℤ/n with generator `g`; element `i` is `gⁱ`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1, "cyclic group of order 0");
    let labels = (0..n).map(|i| word(&[power_label("g", i)])).collect();
    GroupTable::from_fn(n, |a, b| (a + b) % n, labels)
        .expect("cyclic table is a group")
        .with_name(format!("C{n}"))
}

/// Dihedral group of the given (even) order.
///
/// Order 8 uses the presentation `x² = y² = q² = 1, [x,y] = [q,y] = 1,
/// [q,x] = y`, with element `i + 2j + 4k` standing for `xⁱyʲqᵏ`. Other orders
/// use `rⁱsʲ` at index `i + n·j` with `srs⁻¹ = r⁻¹`.
pub fn dihedral(order: usize) -> GroupTable {
    assert!(order >= 2 && order % 2 == 0, "dihedral group needs an even order");
    if order == 8 {
        return d8_presentation();
    }
    let n = order / 2;
    let split = |a: usize| (a % n, a / n);
    let labels = (0..order)
        .map(|a| {
            let (i, j) = split(a);
            word(&[power_label("r", i), power_label("s", j)])
        })
        .collect();
    GroupTable::from_fn(
        order,
        |a, b| {
            let ((i, j), (k, l)) = (split(a), split(b));
            let k = if j == 1 { (n - k) % n } else { k };
            (i + k) % n + n * ((j + l) % 2)
        },
        labels,
    )
    .expect("dihedral table is a group")
    .with_name(format!("D{order}"))
}

fn d8_presentation() -> GroupTable {
    let split = |a: usize| (a & 1, (a >> 1) & 1, a >> 2);
    let labels = (0..8)
        .map(|a| {
            let (i, j, k) = split(a);
            word(&[power_label("x", i), power_label("y", j), power_label("q", k)])
        })
        .collect();
    // q xⁱ = xⁱ yⁱ q, so moving qᵏ past xⁱ' contributes y^{k·i'}
    GroupTable::from_fn(
        8,
        |a, b| {
            let ((i, j, k), (i2, j2, k2)) = (split(a), split(b));
            ((i + i2) % 2) + 2 * ((j + j2 + k * i2) % 2) + 4 * ((k + k2) % 2)
        },
        labels,
    )
    .expect("D8 table is a group")
    .with_name("D8")
}

/// The quaternion group `{±1, ±i, ±j, ±k}`; element `a + 4b` is `iᵃjᵇ`.
pub fn quaternion8() -> GroupTable {
    let labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"].map(String::from).to_vec();
    GroupTable::from_fn(
        8,
        |x, y| {
            let ((a, b), (c, d)) = ((x % 4, x / 4), (y % 4, y / 4));
            // j iᶜ = i⁻ᶜ j and j² = i²
            let c = if b == 1 { (4 - c) % 4 } else { c };
            let extra = if b == 1 && d == 1 { 2 } else { 0 };
            (a + c + extra) % 4 + 4 * ((b + d) % 2)
        },
        labels,
    )
    .expect("Q8 table is a group")
    .with_name("Q8")
}

/// ℤ/2 × ℤ/2 as bit strings under XOR.
pub fn klein() -> GroupTable {
    let labels = ["1", "a", "b", "ab"].map(String::from).to_vec();
    GroupTable::from_fn(4, |a, b| a ^ b, labels)
        .expect("Klein table is a group")
        .with_name("Klein")
}

/// `G × H`; the pair `(g, h)` has index `g + |G|·h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, n) = (g.order(), h.order());
    let labels = (0..m * n)
        .map(|x| {
            let (a, b) = (x % m, x / m);
            match (a, b) {
                (0, 0) => "1".to_string(),
                (_, 0) => g.label(a).to_string(),
                (0, _) => h.label(b).to_string(),
                _ => format!("{}·{}", g.label(a), h.label(b)),
            }
        })
        .collect();
    GroupTable::from_fn(
        m * n,
        |x, y| g.mul(x % m, y % m) + m * h.mul(x / m, y / m),
        labels,
    )
    .expect("direct product of groups is a group")
    .with_name(format!("{}x{}", g.name(), h.name()))
}

/// Symmetric group on `n` letters, generated by an `n`-cycle and a transposition.
pub fn symmetric(n: usize) -> GroupTable {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
    }
    GroupTable::from_permutations(n, &gens, DEFAULT_ORDER_LIMIT)
        .expect("symmetric group within the order limit")
        .with_name(format!("S{n}"))
}

/// Alternating group on `n` letters, generated by the 3-cycles `(0 1 k)`.
pub fn alternating(n: usize) -> GroupTable {
    let gens: Vec<Vec<usize>> = (2..n)
        .map(|k| {
            let mut p: Vec<usize> = (0..n).collect();
            p[0] = 1;
            p[1] = k;
            p[k] = 0;
            p
        })
        .collect();
    GroupTable::from_permutations(n, &gens, DEFAULT_ORDER_LIMIT)
        .expect("alternating group within the order limit")
        .with_name(format!("A{n}"))
}
