//! Small integer helpers.

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    let mut p = 2u128;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u128) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u128, p: u128) -> u128 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// `n` with all factors of 2 removed.
pub fn odd_part(n: u128) -> u128 {
    n / p_part(n, 2)
}

/// Prime factors with multiplicity, ascending.
pub fn prime_factors_with_multiplicity(n: u128) -> Vec<u128> {
    factorize(n)
        .into_iter()
        .flat_map(|(p, e)| std::iter::repeat(p).take(e as usize))
        .collect()
}
