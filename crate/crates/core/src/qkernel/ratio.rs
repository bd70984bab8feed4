//! Quotients of [`QExact`] values in canonical form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{QExact, Rat};
use crate::error::{Error, Result};

/// A rational function of `q^{1/(2L)}`, stored as a reduced fraction.
///
/// Canonical form: the polynomial gcd of numerator and denominator (in the
/// common lattice variable) is 1, the denominator is anchored at exponent 0
/// with coprime integer coefficients, and its lowest-exponent coefficient is
/// positive. Two values compare equal iff cross-multiplication gives equal
/// [`QExact`] values; the canonical form makes that agree with field equality.
#[derive(Debug, Clone)]
pub struct QRatio {
    num: QExact,
    den: QExact,
}

impl QRatio {
    /// Build `num / den`; the denominator must be nonzero.
    pub fn new(num: QExact, den: QExact) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("QRatio: zero denominator".into()));
        }
        let mut r = QRatio { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn zero() -> Self {
        QRatio {
            num: QExact::zero(),
            den: QExact::one(),
        }
    }

    pub fn one() -> Self {
        QRatio {
            num: QExact::one(),
            den: QExact::one(),
        }
    }

    pub fn from_exact(num: QExact) -> Self {
        QRatio {
            num,
            den: QExact::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_exact(QExact::constant(c))
    }

    pub fn num(&self) -> &QExact {
        &self.num
    }

    pub fn den(&self) -> &QExact {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = QExact::one();
            return;
        }
        let g = self.num.poly_gcd(&self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        // anchor the denominator at exponent 0 by moving its monomial unit
        // into the numerator
        let lat = self.den.lattice();
        let (dmin, dv) = self.den.dense_on(lat);
        if dmin != 0 {
            let shift = QExact::monomial(Rat::one(), -dmin, 2 * lat);
            self.num = &self.num * &shift;
            self.den = QExact::from_dense(lat, 0, dv.clone());
        }
        // scale so den has coprime integer coefficients, lowest positive
        let mut mult = BigInt::one(); // lcm of denominators
        for c in dv.iter() {
            if !c.is_zero() {
                mult = mult.lcm(c.denom());
            }
        }
        let mut content = BigInt::zero(); // gcd of scaled numerators
        for c in dv.iter() {
            if !c.is_zero() {
                content = content.gcd(&(c.numer() * &mult / c.denom()));
            }
        }
        let mut scale = Rat::new(mult, content);
        let lowest = dv.iter().find(|c| !c.is_zero()).expect("den nonzero");
        if (lowest.clone() * scale.clone()).is_negative() {
            scale = -scale;
        }
        if !scale.is_one() {
            self.num = &self.num * &scale;
            self.den = &self.den * &scale;
        }
    }

    /// Substitute `q -> q^k`, `k >= 1`.
    pub fn adams(&self, k: i64) -> Result<Self> {
        QRatio::new(self.num.adams(k)?, self.den.adams(k)?)
    }

    /// Substitute `q -> q^{-1}`.
    pub fn flip_q(&self) -> Self {
        QRatio::new(self.num.flip_q(), self.den.flip_q()).expect("nonzero den")
    }

    pub fn inverse(&self) -> Result<Self> {
        QRatio::new(self.den.clone(), self.num.clone())
    }

    /// The value as a Laurent polynomial, if the denominator divides the
    /// numerator; errors otherwise.
    pub fn to_polynomial(&self) -> Result<QExact> {
        self.num.div_exact(&self.den)
    }

    /// Exact limit `q -> 1`, by repeated exact division of numerator and
    /// denominator by `(u - 1)` in the common lattice variable `u`.
    pub fn eval_at_one(&self) -> Result<Rat> {
        if self.num.is_zero() {
            return Ok(Rat::zero());
        }
        let lat = self.num.lattice().lcm(&self.den.lattice());
        let (_, mut nv) = self.num.dense_on(lat);
        let (_, mut dv) = self.den.dense_on(lat);
        loop {
            let dsum: Rat = dv.iter().cloned().sum();
            if !dsum.is_zero() {
                let nsum: Rat = nv.iter().cloned().sum();
                return Ok(nsum / dsum);
            }
            let nsum: Rat = nv.iter().cloned().sum();
            if !nsum.is_zero() {
                return Err(Error::PoleAtOne);
            }
            nv = synthetic_div_at_one(&nv);
            dv = synthetic_div_at_one(&dv);
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QRatio::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Canonical JSON form `{"num": ..., "den": ...}` of the reduced fraction.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

/// Divide a dense polynomial (known to vanish at u = 1) by `(u - 1)`.
fn synthetic_div_at_one(v: &[Rat]) -> Vec<Rat> {
    // v(u) = (u - 1) w(u): w_i = -(v_0 + ... + v_i)
    let mut out = Vec::with_capacity(v.len().saturating_sub(1));
    let mut acc = Rat::zero();
    for c in &v[..v.len() - 1] {
        acc += c;
        out.push(-acc.clone());
    }
    out
}

impl PartialEq for QRatio {
    /// Cross-multiplication equality.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QRatio {}

impl Neg for &QRatio {
    type Output = QRatio;
    fn neg(self) -> QRatio {
        QRatio {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for &QRatio {
    type Output = QRatio;
    fn add(self, rhs: &QRatio) -> QRatio {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        QRatio::new(num, den).expect("nonzero denominator")
    }
}

impl AddAssign<&QRatio> for QRatio {
    fn add_assign(&mut self, rhs: &QRatio) {
        *self = &*self + rhs;
    }
}

impl Sub for &QRatio {
    type Output = QRatio;
    fn sub(self, rhs: &QRatio) -> QRatio {
        self + &(-rhs)
    }
}

impl Mul for &QRatio {
    type Output = QRatio;
    fn mul(self, rhs: &QRatio) -> QRatio {
        QRatio::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Mul<&QExact> for &QRatio {
    type Output = QRatio;
    fn mul(self, rhs: &QExact) -> QRatio {
        QRatio::new(&self.num * rhs, self.den.clone()).expect("nonzero denominator")
    }
}

impl Div for &QRatio {
    type Output = QRatio;
    fn div(self, rhs: &QRatio) -> QRatio {
        QRatio::new(&self.num * &rhs.den, &self.den * &rhs.num).expect("division by zero QRatio")
    }
}

impl fmt::Display for QRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q_binomial, q_num, rat};
    use super::*;

    #[test]
    fn reduction_and_equality() {
        let a = QRatio::new(q_num(4).unwrap(), q_num(2).unwrap()).unwrap();
        let b = QRatio::from_exact(
            q_num(4).unwrap().div_exact(&q_num(2).unwrap()).unwrap(),
        );
        assert_eq!(a, b);
        assert!(a.to_polynomial().is_ok());
        let c = QRatio::new(QExact::one(), q_num(1).unwrap()).unwrap();
        assert!(c.to_polynomial().is_err());
        assert!(QRatio::new(QExact::one(), QExact::zero()).is_err());
    }

    #[test]
    fn eval_at_one_examples() {
        // q-binomial(2,1) -> 2
        let b = QRatio::from_exact(q_binomial(2, 1).unwrap());
        assert_eq!(b.eval_at_one().unwrap(), rat(2));
        // [4]/[2] -> 2
        let r = QRatio::new(q_num(4).unwrap(), q_num(2).unwrap()).unwrap();
        assert_eq!(r.eval_at_one().unwrap(), rat(2));
        // [1]^2 -> 0
        let s = QRatio::from_exact(&q_num(1).unwrap() * &q_num(1).unwrap());
        assert_eq!(s.eval_at_one().unwrap(), rat(0));
        // 1/[1] has a pole
        let p = QRatio::new(QExact::one(), q_num(1).unwrap()).unwrap();
        assert_eq!(p.eval_at_one(), Err(Error::PoleAtOne));
    }

    #[test]
    fn field_laws() {
        let x = QRatio::new(q_num(3).unwrap(), q_num(2).unwrap()).unwrap();
        let y = QRatio::new(q_binomial(4, 2).unwrap(), q_num(1).unwrap()).unwrap();
        let z = &x * &y;
        assert_eq!(&z / &y, x);
        assert_eq!(&(&x + &y) - &y, x);
        assert_eq!(&x * &x.inverse().unwrap(), QRatio::one());
    }

    #[test]
    fn adams_commutes_with_arithmetic() {
        let x = QRatio::new(q_num(3).unwrap(), q_num(2).unwrap()).unwrap();
        let y = QRatio::new(QExact::one(), q_num(1).unwrap()).unwrap();
        for k in 1..=3 {
            assert_eq!(
                (&x * &y).adams(k).unwrap(),
                &x.adams(k).unwrap() * &y.adams(k).unwrap()
            );
        }
        // [n]_q under q -> q^k becomes [nk]_q
        assert_eq!(
            QRatio::from_exact(q_num(2).unwrap()).adams(3).unwrap(),
            QRatio::from_exact(q_num(6).unwrap())
        );
    }
}
