//! Small integer helpers shared across the crate. All moduli fit in `u64`;
//! intermediate products go through `u128`.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a*x + b*y = g` over the integers.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn addmod(a: u64, b: u64, m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    ((a as u128 + b as u128) % m as u128) as u64
}

pub fn submod(a: u64, b: u64, m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    let (a, b) = (a % m, b % m);
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn invmod(a: u64, m: u64) -> Option<u64> {
    if m <= 1 {
        return Some(0);
    }
    let (g, x, _) = egcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some((x.rem_euclid(m as i128)) as u64)
}

/// A unit `u` mod `m` with `u * a ≡ gcd(a, m) (mod m)`.
///
/// Writing `a = g*a'` with `g = gcd(a, m)`, the cofactor `a'` is coprime to
/// `m/g`, so an inverse of `a'` mod `m/g` lifts to a unit mod `m`.
pub fn unit_scaling_to_gcd(a: u64, m: u64) -> u64 {
    if m <= 1 {
        return 0;
    }
    let a = a % m;
    if a == 0 {
        return 1;
    }
    let g = gcd(a, m);
    let cof = a / g;
    let mg = m / g;
    let u0 = invmod(cof % mg, mg).expect("cofactor is coprime to m/g");
    let mut u = if u0 == 0 { mg } else { u0 };
    while gcd(u, m) != 1 {
        u += mg;
    }
    u % m
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in prime_factors(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

pub fn num_divisors(n: u64) -> u64 {
    prime_factors(n).iter().map(|&(_, e)| e as u64 + 1).product()
}

/// `base^exp` with overflow check; the desk-scale bounds keep this in `u64`.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_egcd() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        let (g, x, y) = egcd(240, 46);
        assert_eq!(g, 2);
        assert_eq!(240 * x + 46 * y, 2);
    }

    #[test]
    fn modular_ops() {
        assert_eq!(powmod(3, 4, 100), 81);
        assert_eq!(invmod(3, 7), Some(5));
        assert_eq!(invmod(2, 4), None);
        assert_eq!(submod(1, 3, 8), 6);
        // Degenerate modulus 1: everything is 0.
        assert_eq!(powmod(5, 2, 1), 0);
        assert_eq!(invmod(0, 1), Some(0));
    }

    #[test]
    fn unit_scaling_reaches_gcd() {
        for m in 2u64..=36 {
            for a in 0..m {
                let u = unit_scaling_to_gcd(a, m);
                assert_eq!(gcd(u, m), 1, "u={u} not a unit mod {m}");
                if a != 0 {
                    assert_eq!(mulmod(u, a, m), gcd(a, m), "a={a} m={m}");
                }
            }
        }
    }

    #[test]
    fn primes_and_phi() {
        assert!(is_prime(2) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(91));
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(num_divisors(12), 6);
        assert_eq!(prime_factors(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}
