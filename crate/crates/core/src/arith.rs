//! Small integer helpers shared by the group code.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: usize) -> bool {
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

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
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

pub fn prime_divisors(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut n = n;
    let mut part = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(a)` when `m == p^a`.
pub fn p_log(m: usize, p: usize) -> Option<u32> {
    if m == 0 || p < 2 {
        return None;
    }
    let mut m = m;
    let mut a = 0;
    while m % p == 0 {
        m /= p;
        a += 1;
    }
    (m == 1).then_some(a)
}

pub fn is_p_power(m: usize, p: usize) -> bool {
    p_log(m, p).is_some()
}

/// True when `m` is a power of a single prime (including 1).
pub fn is_prime_power(m: usize) -> bool {
    factorize(m).len() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization() {
        assert_eq!(factorize(648), vec![(2, 3), (3, 4)]);
        assert_eq!(factorize(1), vec![]);
        assert_eq!(p_part(324, 3), 81);
        assert_eq!(p_log(27, 3), Some(3));
        assert_eq!(p_log(1, 5), Some(0));
        assert_eq!(p_log(12, 2), None);
        assert!(is_prime(97) && !is_prime(91));
    }
}
