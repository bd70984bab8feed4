//! Mobius function, common divisors, factorials and binomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// Mobius function; `k >= 1`.
pub fn mobius(k: i64) -> Result<i64> {
    if k <= 0 {
        return Err(Error::InvalidArgument(format!("mobius: k = {k} <= 0")));
    }
    let mut m = k;
    let mut res = 1i64;
    let mut p = 2i64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    Ok(res)
}

/// All positive `k` dividing every component of `d` (i.e. dividing the gcd),
/// ascending. The zero vector is rejected.
pub fn divisors_common(d: &[i64]) -> Result<Vec<i64>> {
    if d.is_empty() || d.iter().all(|x| *x == 0) {
        return Err(Error::InvalidArgument(
            "divisors_common: zero degree vector".into(),
        ));
    }
    let mut g = 0i64;
    for x in d {
        g = g.gcd(x);
    }
    let mut out: Vec<i64> = (1..=g).filter(|k| g % k == 0).collect();
    out.sort_unstable();
    Ok(out)
}

/// Exact factorial.
pub fn factorial(n: i64) -> BigInt {
    assert!(n >= 0, "factorial of negative integer");
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= i;
    }
    f
}

/// Exact binomial coefficient, zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if m < 0 || n < 0 || m > n {
        return BigInt::from(0);
    }
    let m = m.min(n - m);
    let mut num = BigInt::one();
    for i in 0..m {
        num *= n - i;
    }
    num / factorial(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        let vals: Vec<i64> = (1..=12).map(|k| mobius(k).unwrap()).collect();
        assert_eq!(vals, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
        assert!(mobius(0).is_err());
    }

    #[test]
    fn divisors() {
        assert_eq!(divisors_common(&[2, 4]).unwrap(), vec![1, 2]);
        assert_eq!(divisors_common(&[3, 5]).unwrap(), vec![1]);
        assert_eq!(divisors_common(&[6, 0]).unwrap(), vec![1, 2, 3, 6]);
        assert!(divisors_common(&[0, 0]).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 7), BigInt::from(0));
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }
}
