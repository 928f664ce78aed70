//! Small integer helpers shared by the classifier and the automorphism solver.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple, `None` on overflow. `lcm(0, x)` is 0.
pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// `d | n` for a possibly wide divisor. Zero divides only zero.
pub fn divides(d: u128, n: u64) -> bool {
    if d == 0 {
        n == 0
    } else {
        u128::from(n) % d == 0
    }
}

/// All positive divisors of `n` in increasing order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n % d == 0 {
            low.push(d);
            if d != n / d {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Odd divisors of `n` that are at least 3.
pub fn odd_divisors_from_3(n: u64) -> impl Iterator<Item = u64> {
    divisors(n).into_iter().filter(|d| d % 2 == 1 && *d >= 3)
}
