//! Linear algebra over the prime field 𝔽ₚ, `p < 2³¹`.

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .unwrap_or(1)
}

/// Basis of `{c : A·c = 0}` for an `m × n` matrix given by rows.
pub(crate) fn nullspace(mut a: Vec<Vec<u64>>, n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][col], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[row][f]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(13) && !is_prime(15) && !is_prime(1));
        assert_eq!(primitive_root(13), 2);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(inv_mod(3, 7) * 3 % 7, 1);
    }

    #[test]
    fn nullspace_rank_one() {
        let ns = nullspace(vec![vec![1, 2, 3]], 3, 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
