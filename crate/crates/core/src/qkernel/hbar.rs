//! Expansion in `hbar` after the substitution `q = e^{i hbar}`.
//!
//! All generating polynomials in this crate split under `q <-> q^{-1}` into a
//! symmetric and an antisymmetric part. A symmetric pair `q^e + q^{-e}`
//! expands as `2 cos(e hbar)` (even, real), an antisymmetric pair
//! `q^e - q^{-e}` as `i * 2 sin(e hbar)` whose global `i` is stripped; both
//! channels then have exact rational Taylor coefficients, so no complex
//! arithmetic ever appears.

use num_traits::Zero;

use super::{QExact, Rat};
use crate::error::Result;

/// Truncated real expansion of a Laurent polynomial at `q = e^{i hbar}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HbarSeries {
    order: usize,
    /// Coefficient of `hbar^{2k}` at index `k` (cosine channel).
    even: Vec<Rat>,
    /// Coefficient of `hbar^{2k+1}` at index `k` (sine channel, `i` stripped).
    odd: Vec<Rat>,
}

impl HbarSeries {
    /// Truncation order: coefficients of `hbar^n` are kept for `n <= order`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn even_part(&self) -> &[Rat] {
        &self.even
    }

    pub fn odd_part(&self) -> &[Rat] {
        &self.odd
    }

    /// Coefficient of `hbar^n`, combining both channels.
    pub fn coeff(&self, n: usize) -> Rat {
        assert!(n <= self.order, "coefficient past truncation order");
        if n % 2 == 0 {
            self.even.get(n / 2).cloned().unwrap_or_else(Rat::zero)
        } else {
            self.odd.get(n / 2).cloned().unwrap_or_else(Rat::zero)
        }
    }

    /// Cauchy product, truncated to the smaller order.
    ///
    /// The channels multiply with the sign rule of `i^2 = -1` on odd*odd,
    /// matching `(f g)(e^{i hbar})` for the stripped-`i` convention.
    pub fn mul(&self, rhs: &HbarSeries) -> HbarSeries {
        let order = self.order.min(rhs.order);
        let mut even = vec![Rat::zero(); order / 2 + 1];
        let mut odd = vec![Rat::zero(); (order + 1) / 2];
        let a = |n: usize| -> Rat { self.coeff(n) };
        let b = |n: usize| -> Rat { rhs.coeff(n) };
        for n in 0..=order {
            let mut acc = Rat::zero();
            for k in 0..=n {
                let (x, y) = (a(k), b(n - k));
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                // odd*odd carries i^2 = -1
                if k % 2 == 1 && (n - k) % 2 == 1 {
                    acc -= x * y;
                } else {
                    acc += x * y;
                }
            }
            if n % 2 == 0 {
                even[n / 2] = acc;
            } else {
                odd[n / 2] = acc;
            }
        }
        HbarSeries { order, even, odd }
    }
}

/// Expand a Laurent polynomial at `q = e^{i hbar}` to the given order.
pub fn hbar_expand(f: &QExact, order: usize) -> Result<HbarSeries> {
    let mut even = vec![Rat::zero(); order / 2 + 1];
    let mut odd = vec![Rat::zero(); (order + 1) / 2];
    let abs_exps: std::collections::BTreeSet<i64> = f.terms().map(|(e, _)| e.abs()).collect();
    for e in abs_exps {
        let cpos = f_coeff(f, e);
        let cneg = f_coeff(f, -e);
        if e == 0 {
            even[0] += cpos;
            continue;
        }
        let sym = (cpos.clone() + cneg.clone()) / Rat::from_integer(2.into());
        let anti = (cpos - cneg) / Rat::from_integer(2.into());
        let ev = f.exponent_value(e);
        // 2 cos(e h) = sum_k 2 (-1)^k e^{2k} h^{2k} / (2k)!
        if !sym.is_zero() {
            let mut pow = Rat::from_integer(2.into()); // 2 * e^{2k} / (2k)!
            let mut k = 0usize;
            while 2 * k <= order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                even[k] += sym.clone() * pow.clone() * Rat::from_integer(sign.into());
                pow *= ev.clone() * ev.clone();
                pow /= Rat::from_integer(((2 * k + 1) as i64).into());
                pow /= Rat::from_integer(((2 * k + 2) as i64).into());
                k += 1;
            }
        }
        // 2 sin(e h) = sum_k 2 (-1)^k e^{2k+1} h^{2k+1} / (2k+1)!
        if !anti.is_zero() {
            let mut pow = Rat::from_integer(2.into()) * ev.clone();
            let mut k = 0usize;
            while 2 * k + 1 <= order {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                odd[k] += anti.clone() * pow.clone() * Rat::from_integer(sign.into());
                pow *= ev.clone() * ev.clone();
                pow /= Rat::from_integer(((2 * k + 2) as i64).into());
                pow /= Rat::from_integer(((2 * k + 3) as i64).into());
                k += 1;
            }
        }
    }
    Ok(HbarSeries { order, even, odd })
}

fn f_coeff(f: &QExact, e: i64) -> Rat {
    for (ee, c) in f.terms() {
        if *ee == e {
            return c.clone();
        }
    }
    Rat::zero()
}

#[cfg(test)]
mod tests {
    use super::super::{q_num, rat, rat_frac};
    use super::*;
    use crate::qkernel::QExact;

    #[test]
    fn cos_expansion_of_symmetric_pair() {
        // q^{1/2} + q^{-1/2} = 2 cos(h/2) = 2 - h^2/4 + h^4/192 - ...
        let f = &QExact::monomial(rat(1), 1, 2) + &QExact::monomial(rat(1), -1, 2);
        let s = hbar_expand(&f, 4).unwrap();
        assert_eq!(s.coeff(0), rat(2));
        assert_eq!(s.coeff(1), rat(0));
        assert_eq!(s.coeff(2), rat_frac(-1, 4));
        assert_eq!(s.coeff(3), rat(0));
        assert_eq!(s.coeff(4), rat_frac(1, 192));
    }

    #[test]
    fn constant_expansion() {
        let s = hbar_expand(&QExact::one(), 3).unwrap();
        assert_eq!(s.coeff(0), rat(1));
        assert!(s.coeff(1).is_zero() && s.coeff(2).is_zero() && s.coeff(3).is_zero());
    }

    #[test]
    fn sin_expansion_of_q_number() {
        // [1]_q -> 2 sin(h/2) (i stripped): h/1 - ... coefficients
        // 2 sin(h/2) = h - h^3/24 + h^5/1920 - ...
        let s = hbar_expand(&q_num(1).unwrap(), 5).unwrap();
        assert_eq!(s.coeff(1), rat(1));
        assert_eq!(s.coeff(3), rat_frac(-1, 24));
        assert_eq!(s.coeff(5), rat_frac(1, 1920));
        assert!(s.coeff(0).is_zero() && s.coeff(2).is_zero());
    }

    #[test]
    fn product_matches_cauchy_product() {
        let f = q_num(3).unwrap(); // antisymmetric
        let g = &QExact::monomial(rat(2), 1, 1) + &QExact::monomial(rat(2), -1, 1); // symmetric
        let h = &f * &g;
        let order = 7;
        let direct = hbar_expand(&h, order).unwrap();
        let prod = hbar_expand(&f, order)
            .unwrap()
            .mul(&hbar_expand(&g, order).unwrap());
        for n in 0..=order {
            assert_eq!(direct.coeff(n), prod.coeff(n), "hbar^{n}");
        }
        // mixed * mixed too
        let m = &f + &g;
        let direct2 = hbar_expand(&(&m * &m), order).unwrap();
        let prod2 = hbar_expand(&m, order).unwrap().mul(&hbar_expand(&m, order).unwrap());
        for n in 0..=order {
            assert_eq!(direct2.coeff(n), prod2.coeff(n), "mixed hbar^{n}");
        }
    }
}
