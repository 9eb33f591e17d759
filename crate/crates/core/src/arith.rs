//! Small integer helpers shared across modules.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Distinct prime factors in increasing order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of 2 modulo an odd `m > 1`.
pub fn order_of_two(m: u64) -> u32 {
    assert!(m > 1 && m % 2 == 1, "order of 2 needs an odd modulus > 1");
    let mut k = 1u32;
    let mut v = 2 % m;
    while v != 1 {
        v = (v * 2) % m;
        k += 1;
    }
    k
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Splits `t - 1 = 2^i * ell` with `ell` odd. Returns `(i, ell)`.
pub fn two_adic_split(t: u64) -> (u32, u64) {
    let m = t - 1;
    let i = m.trailing_zeros();
    (i, m >> i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_of_two_small_cases() {
        assert_eq!(order_of_two(3), 2);
        assert_eq!(order_of_two(7), 3);
        assert_eq!(order_of_two(51), 8);
        assert_eq!(order_of_two(37), 36);
    }

    #[test]
    fn factors_and_divisors() {
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(divisors(15), vec![1, 3, 5, 15]);
        assert_eq!(two_adic_split(205), (2, 51));
        assert_eq!(two_adic_split(49), (4, 3));
    }
}
