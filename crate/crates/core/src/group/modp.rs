//! Small prime-field helpers for the character table computation.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// Smallest prime p with p = 1 mod e and p > 2*sqrt(order).
pub fn dixon_prime(e: u64, order: u64) -> u64 {
    let mut p = e + 1;
    while p * p <= 4 * order || !is_prime(p) {
        p += e;
    }
    p
}

pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Right null space of a rows x cols matrix over F_p, as basis vectors.
pub fn kernel_mod(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0; cols];
        v[f] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[i][f]) % p;
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // exponent 6, |G| = 6: p > 2*sqrt(6) ~ 4.9 and p = 1 mod 6
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(12, 24), 13);
        assert_eq!(dixon_prime(2, 4), 5);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(pow_mod(3, 6, 7), 1);
    }

    #[test]
    fn kernel_mod_small() {
        let k = kernel_mod(&[vec![1, 1]], 2, 7);
        assert_eq!(k, vec![vec![6, 1]]);
    }
}
