//! Exact arithmetic in Laurent polynomials and rational functions of
//! fractional powers of `q`, plus the elementary number theory the
//! closed-form invariants consume.
//!
//! The building blocks:
//! - [`QExact`]: a Laurent polynomial in `q^{1/(2L)}` with exact rational
//!   coefficients and a canonical minimal lattice `L`;
//! - [`QRatio`]: a quotient of two [`QExact`] values in canonical form;
//! - [`HbarSeries`]: the power-series expansion in `hbar` after `q = e^{i hbar}`,
//!   kept real by splitting into cosine (even) and sine (odd) channels;
//! - [`q_num`], [`q_factorial`], [`q_binomial`], [`q_pochhammer`]: the
//!   symmetrised q-numbers `[n]_q = q^{n/2} - q^{-n/2}` and their derived
//!   products;
//! - [`mobius`], [`divisors_common`]: the arithmetic functions entering the
//!   BPS Mobius inversions.

mod exact;
mod hbar;
mod numtheory;
mod ratio;

pub use exact::QExact;
pub use hbar::{hbar_expand, HbarSeries};
pub use numtheory::{binomial, divisors_common, factorial, mobius};
pub use ratio::QRatio;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Exact rational scalar used for every coefficient in the crate.
pub type Rat = BigRational;

/// `Rat` from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `Rat` from a numerator/denominator pair.
pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// The q-number `[n]_q = q^{n/2} - q^{-n/2}`.
///
/// `[0]_q = 0`; negative `n` is rejected.
pub fn q_num(n: i64) -> Result<QExact> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q_num: n = {n} < 0")));
    }
    if n == 0 {
        return Ok(QExact::zero());
    }
    let mut f = QExact::monomial(Rat::one(), n, 2);
    f += &QExact::monomial(-Rat::one(), -n, 2);
    Ok(f)
}

/// The symmetrised q-factorial `[n]_q! = prod_{i=1}^n [i]_q`.
pub fn q_factorial(n: i64) -> Result<QExact> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q_factorial: n = {n} < 0")));
    }
    let mut f = QExact::one();
    for i in 1..=n {
        f = &f * &q_num(i)?;
    }
    Ok(f)
}

/// The q-binomial `[n over m]_q = [n]_q! / ([m]_q! [n-m]_q!)`.
///
/// The division is performed exactly; a nonzero remainder is an internal
/// consistency fault.
pub fn q_binomial(n: i64, m: i64) -> Result<QExact> {
    if m < 0 || n < 0 || m > n {
        return Err(Error::InvalidArgument(format!(
            "q_binomial: need 0 <= m <= n, got (n, m) = ({n}, {m})"
        )));
    }
    // [n]!/( [m]! [n-m]! ) with m the smaller index, as a product of exact
    // single-factor divisions: prod_{i=1}^{m} [n-m+i]_q / [i]_q.
    let m = m.min(n - m);
    let mut f = QExact::one();
    for i in 1..=m {
        f = &f * &q_num(n - m + i)?;
        f = f
            .div_exact(&q_num(i)?)
            .map_err(|_| Error::ConsistencyFault(format!("q_binomial({n},{m}) not exact")))?;
    }
    Ok(f)
}

/// q-binomial extended by zero outside `0 <= m <= n`.
///
/// The closed-form invariants use Gaussian binomials with this convention;
/// the strict range check lives in [`q_binomial`].
pub fn q_binomial_or_zero(n: i64, m: i64) -> QExact {
    if m < 0 || n < 0 || m > n {
        QExact::zero()
    } else {
        q_binomial(n, m).expect("in-range q_binomial")
    }
}

/// The q-Pochhammer symbol `(q;q)_n = prod_{k=1}^n (1 - q^k)`.
///
/// Also evaluates the equivalent closed form
/// `(q;q)_n = (-1)^n q^{n(n+1)/4} [n]_q!` and demands the two routes agree.
pub fn q_pochhammer(n: i64) -> Result<QExact> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!("q_pochhammer: n = {n} < 0")));
    }
    let mut prod = QExact::one();
    for k in 1..=n {
        let mut f = QExact::one();
        f += &QExact::monomial(-Rat::one(), k, 1);
        prod = &prod * &f;
    }
    let mut alt = QExact::monomial(
        if n % 2 == 0 { Rat::one() } else { -Rat::one() },
        n * (n + 1),
        4,
    );
    alt = &alt * &q_factorial(n)?;
    if prod != alt {
        return Err(Error::ConsistencyFault(format!(
            "q_pochhammer({n}): product and q-factorial routes disagree"
        )));
    }
    Ok(prod)
}

/// `1/(q;q)_n` as a [`QRatio`], zero for negative `n`.
///
/// The zero-for-negative convention truncates the finite vertex sums exactly
/// as the skew Schur closed forms require.
pub fn inv_pochhammer(n: i64) -> QRatio {
    if n < 0 {
        QRatio::zero()
    } else {
        QRatio::new(QExact::one(), q_pochhammer(n).expect("n >= 0")).expect("nonzero denominator")
    }
}
