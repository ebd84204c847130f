//! Smith normal form over ℤ and linear systems over ℚ/ℤ.

use super::{IntMatrix, QmodZ};

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal with `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries, in divisibility order.
    pub fn elementary_divisors(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)])
            .take_while(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.elementary_divisors().len()
    }
}

/// Elimination state. Row operations are mirrored into `u` and `rhs`, column
/// operations into `v` and (inverted) into `v_inv`.
struct Reducer {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
    rhs: Option<Vec<QmodZ>>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(r) = &mut self.rhs {
            r.swap(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, c: i64) {
        self.a.add_row(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_row(dst, src, c);
        }
        if let Some(r) = &mut self.rhs {
            let t = r[src].times(c);
            r[dst] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(r) = &mut self.rhs {
            r[i] = -r[i];
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
        if let Some(w) = &mut self.v_inv {
            w.swap_rows(i, j);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, c: i64) {
        self.a.add_col(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col(dst, src, c);
        }
        if let Some(w) = &mut self.v_inv {
            w.add_row(src, dst, -c);
        }
    }

    fn min_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, i64)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                    best = Some((i, j, x));
                    if x == 1 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        for t in 0..rows.min(cols) {
            let Some((pi, pj)) = self.min_nonzero(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a[(t, t)];
                let mut clean = true;
                for i in t + 1..rows {
                    let x = self.a[(i, t)];
                    if x != 0 {
                        self.add_row(i, t, -(x / p));
                        clean &= self.a[(i, t)] == 0;
                    }
                }
                for j in t + 1..cols {
                    let x = self.a[(t, j)];
                    if x != 0 {
                        self.add_col(j, t, -(x / p));
                        clean &= self.a[(t, j)] == 0;
                    }
                }
                if !clean {
                    // move the smallest remainder in row/column t to the pivot
                    let mut best = (t, t, p.abs());
                    for i in t + 1..rows {
                        let x = self.a[(i, t)].abs();
                        if x != 0 && x < best.2 {
                            best = (i, t, x);
                        }
                    }
                    for j in t + 1..cols {
                        let x = self.a[(t, j)].abs();
                        if x != 0 && x < best.2 {
                            best = (t, j, x);
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                let offender = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| self.a[(i, j)] % p != 0);
                match offender {
                    Some((i, _)) => self.add_row(t, i, 1),
                    None => break,
                }
            }
            if self.a[(t, t)] < 0 {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form of an arbitrary rectangular integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let mut r = Reducer {
        a: a.clone(),
        u: Some(IntMatrix::identity(a.rows())),
        v: Some(IntMatrix::identity(a.cols())),
        v_inv: None,
        rhs: None,
    };
    r.run();
    SmithDecomposition {
        u: r.u.unwrap(),
        v: r.v.unwrap(),
        d: r.a,
    }
}

/// Smith form together with `V⁻¹` (no `U`), for changes of basis.
pub(crate) fn smith_with_inverse(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut r = Reducer {
        a: a.clone(),
        u: None,
        v: Some(IntMatrix::identity(a.cols())),
        v_inv: Some(IntMatrix::identity(a.cols())),
        rhs: None,
    };
    r.run();
    (r.a, r.v.unwrap(), r.v_inv.unwrap())
}

/// Solves `A·x ≡ r` componentwise in ℚ/ℤ.
///
/// Returns one solution, or `None` when the transformed right-hand side is
/// nonzero against a zero elementary divisor. The row transform `U` is never
/// materialized; row operations are applied to `r` directly.
pub fn solve_mod(a: &IntMatrix, r: &[QmodZ]) -> Option<Vec<QmodZ>> {
    assert_eq!(a.rows(), r.len(), "right-hand side length mismatch");
    let mut red = Reducer {
        a: a.clone(),
        u: None,
        v: Some(IntMatrix::identity(a.cols())),
        v_inv: None,
        rhs: Some(r.to_vec()),
    };
    red.run();
    let d = &red.a;
    let rhs = red.rhs.as_ref().unwrap();
    let v = red.v.as_ref().unwrap();
    let diag = d.rows().min(d.cols());
    let rank = (0..diag).take_while(|&i| d[(i, i)] != 0).count();
    if rhs[rank..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let y: Vec<QmodZ> = (0..a.cols())
        .map(|j| if j < rank { rhs[j].divide(d[(j, j)]) } else { QmodZ::ZERO })
        .collect();
    let x = (0..a.cols())
        .map(|i| (0..a.cols()).map(|j| y[j].times(v[(i, j)])).sum())
        .collect();
    Some(x)
}

/// `A·x` evaluated in ℚ/ℤ.
pub fn apply_mod(a: &IntMatrix, x: &[QmodZ]) -> Vec<QmodZ> {
    (0..a.rows())
        .map(|i| a.row(i).iter().zip(x).map(|(&c, v)| v.times(c)).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert_eq!(s.u.determinant().abs(), 1);
        assert_eq!(s.v.determinant().abs(), 1);
        let ds = s.elementary_divisors();
        for w in ds.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        s
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(check(&IntMatrix::identity(2)).d, IntMatrix::identity(2));
        assert_eq!(check(&IntMatrix::zeros(2, 3)).d, IntMatrix::zeros(2, 3));
    }

    #[test]
    fn two_by_two() {
        // hand reduction: gcd of entries is 2, determinant is -8, so diag(2, 4)
        let s = check(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.elementary_divisors(), vec![2, 4]);
    }

    #[test]
    fn rectangular() {
        let s = check(&IntMatrix::from_rows(&[vec![4, 6, 2], vec![2, 2, 8]]));
        assert_eq!(s.elementary_divisors(), vec![2, 2]);
    }

    #[test]
    fn inverse_tracking() {
        let a = IntMatrix::from_rows(&[vec![3, 5, 7], vec![2, 9, 4], vec![6, 1, 8]]);
        let (_, v, vi) = smith_with_inverse(&a);
        assert!((&v * &vi).is_identity());
    }

    #[test]
    fn solve_mod_examples() {
        let one = IntMatrix::from_rows(&[vec![1]]);
        assert_eq!(solve_mod(&one, &[QmodZ::new(1, 2)]), Some(vec![QmodZ::new(1, 2)]));
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(solve_mod(&two, &[QmodZ::new(1, 2)]), Some(vec![QmodZ::new(1, 4)]));
        let zero = IntMatrix::from_rows(&[vec![0]]);
        assert_eq!(solve_mod(&zero, &[QmodZ::new(1, 3)]), None);
        assert_eq!(solve_mod(&zero, &[QmodZ::ZERO]), Some(vec![QmodZ::ZERO]));
    }

    #[test]
    fn solve_mod_overdetermined() {
        // x + y = 1/2, x - y = 0, 2x = 1/2  → x = y = 1/4 (mod 1/2 choices)
        let a = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1], vec![2, 0]]);
        let r = [QmodZ::new(1, 2), QmodZ::ZERO, QmodZ::new(1, 2)];
        let x = solve_mod(&a, &r).unwrap();
        assert_eq!(apply_mod(&a, &x), r);
        // inconsistent: 2x = 1/3 and x = 0
        let b = IntMatrix::from_rows(&[vec![2], vec![1]]);
        assert_eq!(solve_mod(&b, &[QmodZ::new(1, 3), QmodZ::ZERO]), None);
    }
}
