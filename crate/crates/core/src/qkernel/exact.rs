//! Laurent polynomials in `q^{1/(2L)}` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// A Laurent polynomial in `q^{1/(2L)}` with exact rational coefficients.
///
/// Exponents are stored as integers in units of `1/(2L)` where the lattice
/// `L >= 1` is kept minimal: zero coefficients are never stored, and after
/// every operation the lattice is rescaled to the smallest positive integer
/// representing all exponents. Addition and multiplication of values on
/// different lattices first rescale both to the lcm lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QExact {
    lattice: i64,
    coeffs: BTreeMap<i64, Rat>,
}

impl QExact {
    /// The zero polynomial (lattice 1).
    pub fn zero() -> Self {
        QExact {
            lattice: 1,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c);
        }
        QExact { lattice: 1, coeffs }
    }

    /// The monomial `c * q^{num/den}` (`den > 0`).
    pub fn monomial(c: Rat, num: i64, den: i64) -> Self {
        assert!(den > 0, "monomial: exponent denominator must be positive");
        if c.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (n, d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        // exponent n/d = e/(2L): take 2L = d if d even, else 2d
        let (two_l, e) = if d % 2 == 0 { (d, n) } else { (2 * d, 2 * n) };
        let mut coeffs = BTreeMap::new();
        coeffs.insert(e, c);
        let mut f = QExact {
            lattice: two_l / 2,
            coeffs,
        };
        f.canonicalize();
        f
    }

    /// The lattice integer `L`.
    pub fn lattice(&self) -> i64 {
        self.lattice
    }

    /// Iterate over `(exponent in units 1/(2L), coefficient)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    /// True when the polynomial is a single term `c * q^e`.
    pub fn is_single_term(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// The exponent of a term as an exact rational.
    pub fn exponent_value(&self, e: i64) -> Rat {
        Rat::new(BigInt::from(e), BigInt::from(2 * self.lattice))
    }

    /// Coefficient of `q^{num/den}`.
    pub fn coeff(&self, num: i64, den: i64) -> Rat {
        assert!(den > 0);
        // num/den = e/(2L)  =>  e = 2L*num/den, integral or absent
        let t = 2 * self.lattice * num;
        if t % den != 0 {
            return Rat::zero();
        }
        self.coeffs.get(&(t / den)).cloned().unwrap_or_else(Rat::zero)
    }

    fn canonicalize(&mut self) {
        self.coeffs.retain(|_, c| !c.is_zero());
        if self.coeffs.is_empty() {
            self.lattice = 1;
            return;
        }
        let two_l = 2 * self.lattice;
        let mut g: i64 = two_l;
        for e in self.coeffs.keys() {
            g = g.gcd(e);
        }
        let d = two_l / g; // reduced common denominator of all exponents
        let new_two_l = if d % 2 == 0 { d } else { 2 * d };
        if new_two_l == two_l {
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        for (e, c) in old {
            // e/two_l = e'/new_two_l
            debug_assert_eq!((e * new_two_l) % two_l, 0);
            self.coeffs.insert(e * new_two_l / two_l, c);
        }
        self.lattice = new_two_l / 2;
    }

    /// Rescale to a given (multiple) lattice; internal helper for ring ops.
    fn with_lattice(&self, lattice: i64) -> Self {
        debug_assert_eq!(lattice % self.lattice, 0);
        let factor = lattice / self.lattice;
        if factor == 1 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e * factor, c.clone()))
            .collect();
        QExact { lattice, coeffs }
    }

    fn common_lattice(&self, other: &Self) -> i64 {
        self.lattice.lcm(&other.lattice)
    }

    /// Substitute `q -> q^k` (every exponent scaled by `k`), `k >= 1`.
    pub fn adams(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument(format!("adams: k = {k} < 1")));
        }
        let mut f = QExact {
            lattice: self.lattice,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (e * k, c.clone()))
                .collect(),
        };
        f.canonicalize();
        Ok(f)
    }

    /// Substitute `q -> q^{-1}` (every exponent negated).
    pub fn flip_q(&self) -> Self {
        QExact {
            lattice: self.lattice,
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// True when invariant under `q <-> q^{-1}`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.flip_q()
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = QExact::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Dense coefficient vector in the variable `u = q^{1/(2L)}`:
    /// returns `(min_exponent, coefficients)` with the leading entry nonzero.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Rat>) {
        if self.coeffs.is_empty() {
            return (0, vec![]);
        }
        let min = *self.coeffs.keys().next().unwrap();
        let max = *self.coeffs.keys().next_back().unwrap();
        let mut v = vec![Rat::zero(); (max - min + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e - min) as usize] = c.clone();
        }
        (min, v)
    }

    /// Dense coefficient vector in the variable `u = q^{1/(2*lattice)}` for a
    /// given multiple of the minimal lattice.
    pub(crate) fn dense_on(&self, lattice: i64) -> (i64, Vec<Rat>) {
        debug_assert_eq!(lattice % self.lattice, 0);
        let factor = lattice / self.lattice;
        if self.coeffs.is_empty() {
            return (0, vec![]);
        }
        let min = *self.coeffs.keys().next().unwrap() * factor;
        let max = *self.coeffs.keys().next_back().unwrap() * factor;
        let mut v = vec![Rat::zero(); (max - min + 1) as usize];
        for (e, c) in &self.coeffs {
            v[(e * factor - min) as usize] = c.clone();
        }
        (min, v)
    }

    pub(crate) fn from_dense(lattice: i64, min: i64, v: Vec<Rat>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in v.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(min + i as i64, c);
            }
        }
        let mut f = QExact { lattice, coeffs };
        f.canonicalize();
        f
    }

    /// Exact division; errors when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(QExact::zero());
        }
        let lat = self.common_lattice(other);
        let a = self.with_lattice(lat);
        let b = other.with_lattice(lat);
        let (sa, va) = a.to_dense();
        let (sb, vb) = b.to_dense();
        let (q, r) = poly_div_rem(&va, &vb);
        if !r.iter().all(|c| c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self} by {other}")));
        }
        Ok(QExact::from_dense(lat, sa - sb, q))
    }

    /// Greatest common divisor with `other`, as polynomials in the common
    /// lattice variable, normalised monic with minimum exponent zero.
    pub(crate) fn poly_gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_unit();
        }
        if other.is_zero() {
            return self.normalized_unit();
        }
        let lat = self.common_lattice(other);
        let (_, va) = self.with_lattice(lat).to_dense();
        let (_, vb) = other.with_lattice(lat).to_dense();
        let g = dense_gcd(va, vb);
        QExact::from_dense(lat, 0, g)
    }

    /// Strip the unit `c * u^k`: returns `self` rescaled so the lowest term
    /// has exponent 0 and the leading coefficient is 1.
    fn normalized_unit(&self) -> Self {
        if self.is_zero() {
            return QExact::zero();
        }
        let (_, v) = self.to_dense();
        let lead = v.last().unwrap().clone();
        let v = v.into_iter().map(|c| c / lead.clone()).collect();
        QExact::from_dense(self.lattice, 0, v)
    }
}

/// Dense polynomial long division: returns `(quotient, remainder)`.
pub(crate) fn poly_div_rem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dn = den.len();
    assert!(dn > 0 && !den[dn - 1].is_zero());
    if num.len() < dn {
        return (vec![], num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quo = vec![Rat::zero(); num.len() - dn + 1];
    let lead = den[dn - 1].clone();
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn - 1].clone() / lead.clone();
        if !c.is_zero() {
            for (j, d) in den.iter().enumerate() {
                let t = c.clone() * d.clone();
                rem[i + j] -= t;
            }
        }
        quo[i] = c;
    }
    while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    (quo, rem)
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn make_monic(mut v: Vec<Rat>) -> Vec<Rat> {
    if let Some(lead) = v.last().cloned() {
        if !lead.is_one() {
            for c in &mut v {
                *c /= lead.clone();
            }
        }
    }
    v
}

/// Monic Euclidean gcd of dense polynomials, dropping pure `u^k` content
/// (trailing zero coefficients) first so the result is prime to `u`.
fn dense_gcd(a: Vec<Rat>, b: Vec<Rat>) -> Vec<Rat> {
    fn strip_low(v: Vec<Rat>) -> Vec<Rat> {
        let k = v.iter().position(|c| !c.is_zero()).unwrap_or(0);
        v[k..].to_vec()
    }
    let mut a = make_monic(trim(strip_low(a)));
    let mut b = make_monic(trim(strip_low(b)));
    while !b.is_empty() {
        let (_, r) = poly_div_rem(&a, &b);
        a = b;
        b = make_monic(trim(r));
    }
    a
}

impl Neg for &QExact {
    type Output = QExact;
    fn neg(self) -> QExact {
        QExact {
            lattice: self.lattice,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for &QExact {
    type Output = QExact;
    fn add(self, rhs: &QExact) -> QExact {
        let lat = self.common_lattice(rhs);
        let mut out = self.with_lattice(lat);
        for (e, c) in rhs.with_lattice(lat).coeffs {
            let entry = out.coeffs.entry(e).or_insert_with(Rat::zero);
            *entry += c;
        }
        out.canonicalize();
        out
    }
}

impl AddAssign<&QExact> for QExact {
    fn add_assign(&mut self, rhs: &QExact) {
        *self = &*self + rhs;
    }
}

impl Sub for &QExact {
    type Output = QExact;
    fn sub(self, rhs: &QExact) -> QExact {
        self + &(-rhs)
    }
}

impl Mul for &QExact {
    type Output = QExact;
    fn mul(self, rhs: &QExact) -> QExact {
        if self.is_zero() || rhs.is_zero() {
            return QExact::zero();
        }
        let lat = self.common_lattice(rhs);
        let a = self.with_lattice(lat);
        let b = rhs.with_lattice(lat);
        let mut coeffs: BTreeMap<i64, Rat> = BTreeMap::new();
        for (ea, ca) in &a.coeffs {
            for (eb, cb) in &b.coeffs {
                let e = ea + eb;
                let t = ca.clone() * cb.clone();
                let entry = coeffs.entry(e).or_insert_with(Rat::zero);
                *entry += t;
            }
        }
        let mut f = QExact { lattice: lat, coeffs };
        f.canonicalize();
        f
    }
}

impl Mul<&Rat> for &QExact {
    type Output = QExact;
    fn mul(self, rhs: &Rat) -> QExact {
        if rhs.is_zero() {
            return QExact::zero();
        }
        QExact {
            lattice: self.lattice,
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| (*e, c.clone() * rhs.clone()))
                .collect(),
        }
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_exp(e: i64, two_l: i64) -> String {
    let g = e.gcd(&two_l);
    let (n, d) = (e / g, two_l / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

impl fmt::Display for QExact {
    /// Terms in descending exponent order, e.g. `q^(1/2) + q^(-1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let two_l = 2 * self.lattice;
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{}", fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "q^({})", fmt_exp(*e, two_l))?;
            } else {
                write!(f, "{}*q^({})", fmt_rat(&abs), fmt_exp(*e, two_l))?;
            }
        }
        Ok(())
    }
}

impl QExact {
    /// Canonical JSON form: `{"lattice": L, "terms": [[e, "p/q"], ...]}` with
    /// exponents in units `1/(2L)` ascending and rationals in lowest terms,
    /// sign on the numerator.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                serde_json::json!([e, format!("{}/{}", c.numer(), c.denom())])
            })
            .collect();
        serde_json::json!({ "lattice": self.lattice, "terms": terms })
    }

    /// Parse the canonical JSON form produced by [`QExact::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("QExact::from_json: {m}"));
        let lattice = v
            .get("lattice")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| bad("missing lattice"))?;
        if lattice < 1 {
            return Err(bad("lattice must be >= 1"));
        }
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| bad("missing terms"))?;
        let mut coeffs = BTreeMap::new();
        for t in terms {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term shape"))?;
            let e = pair[0].as_i64().ok_or_else(|| bad("exponent"))?;
            let s = pair[1].as_str().ok_or_else(|| bad("coefficient"))?;
            let (num, den) = s.split_once('/').ok_or_else(|| bad("coefficient format"))?;
            let num: BigInt = num.parse().map_err(|_| bad("numerator"))?;
            let den: BigInt = den.parse().map_err(|_| bad("denominator"))?;
            if den <= BigInt::zero() {
                return Err(bad("denominator must be positive"));
            }
            coeffs.insert(e, Rat::new(num, den));
        }
        let mut f = QExact { lattice, coeffs };
        f.canonicalize();
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{q_binomial, q_factorial, q_num, q_pochhammer, rat, rat_frac};
    use super::*;

    #[test]
    fn q_num_basics() {
        assert!(q_num(0).unwrap().is_zero());
        let one = q_num(1).unwrap();
        assert_eq!(one.lattice(), 1);
        assert_eq!(one.coeff(1, 2), rat(1));
        assert_eq!(one.coeff(-1, 2), rat(-1));
        let two = q_num(2).unwrap();
        assert_eq!(two.coeff(1, 1), rat(1));
        assert_eq!(two.coeff(-1, 1), rat(-1));
        assert_eq!(two.lattice(), 1);
        assert!(q_num(-1).is_err());
    }

    #[test]
    fn lattice_is_minimal() {
        let f = QExact::monomial(rat(1), 2, 4); // q^(1/2)
        assert_eq!(f.lattice(), 1);
        assert_eq!(f.coeff(1, 2), rat(1));
        let g = QExact::monomial(rat(1), 1, 3); // q^(1/3): 1/3 = 2/6, L = 3
        assert_eq!(g.lattice(), 3);
        // adding the mirror brings exponents to +-2/6, still L = 3
        let h = &g + &QExact::monomial(rat(1), -1, 3);
        assert_eq!(h.lattice(), 3);
        // product of two L=3 monomials can drop back to L=1
        let p = &g * &QExact::monomial(rat(1), 2, 3);
        assert_eq!(p.lattice(), 1);
        assert_eq!(p.coeff(1, 1), rat(1));
    }

    #[test]
    fn q_binomial_examples() {
        // (2,1) -> q^(1/2) + q^(-1/2)
        let b21 = q_binomial(2, 1).unwrap();
        assert_eq!(b21, q_num_plus(1));
        // (4,2) -> q^2 + q + 2 + q^-1 + q^-2, from the brute-force product
        // (1 + q + q^2)(1 + q^2) centered by q^{-2}
        let mut brute = QExact::zero();
        for (e, c) in [(2, 1), (1, 1), (0, 2), (-1, 1), (-2, 1)] {
            brute += &QExact::monomial(rat(c), e, 1);
        }
        assert_eq!(q_binomial(4, 2).unwrap(), brute);
        // (n, 0) -> 1
        assert!(q_binomial(7, 0).unwrap().is_one());
        assert!(q_binomial(3, 4).is_err());
        assert!(q_binomial(3, -1).is_err());
    }

    // q^{1/2} + q^{-1/2}
    fn q_num_plus(n: i64) -> QExact {
        &QExact::monomial(rat(1), n, 2) + &QExact::monomial(rat(1), -n, 2)
    }

    #[test]
    fn q_binomial_symmetry_integrality_classical_limit() {
        for n in 0..=20i64 {
            for m in 0..=n {
                let b = q_binomial(n, m).unwrap();
                assert!(b.is_symmetric(), "q-binomial({n},{m}) not q<->1/q symmetric");
                assert!(b.has_integer_coeffs());
                assert_eq!(b, q_binomial(n, n - m).unwrap());
                assert_eq!(b.eval_one(), Rat::from_integer(super::super::binomial(n, m)));
            }
        }
    }

    #[test]
    fn q_pochhammer_examples() {
        assert!(q_pochhammer(0).unwrap().is_one());
        let p1 = q_pochhammer(1).unwrap();
        assert_eq!(p1.coeff(0, 1), rat(1));
        assert_eq!(p1.coeff(1, 1), rat(-1));
        // (1-q)(1-q^2) = 1 - q - q^2 + q^3
        let p2 = q_pochhammer(2).unwrap();
        for (e, c) in [(0, 1), (1, -1), (2, -1), (3, 1)] {
            assert_eq!(p2.coeff(e, 1), rat(c));
        }
        assert!(q_pochhammer(-1).is_err());
    }

    #[test]
    fn adams_examples() {
        let f = q_num_plus(1);
        let g = f.adams(2).unwrap();
        assert_eq!(g.coeff(1, 1), rat(1));
        assert_eq!(g.coeff(-1, 1), rat(1));
        assert_eq!(f.adams(1).unwrap(), f);
        assert_eq!(q_num(2).unwrap().adams(3).unwrap(), q_num(6).unwrap());
        assert!(f.adams(0).is_err());
    }

    #[test]
    fn adams_is_ring_homomorphism() {
        let f = &q_binomial(3, 1).unwrap() + &QExact::monomial(rat_frac(2, 3), 1, 3);
        let g = &q_num(2).unwrap() - &QExact::monomial(rat(5), -3, 2);
        for k in 1..=4 {
            assert_eq!(
                (&f * &g).adams(k).unwrap(),
                &f.adams(k).unwrap() * &g.adams(k).unwrap()
            );
            assert_eq!(
                (&f + &g).adams(k).unwrap(),
                &f.adams(k).unwrap() + &g.adams(k).unwrap()
            );
            for j in 1..=3 {
                assert_eq!(f.adams(j).unwrap().adams(k).unwrap(), f.adams(j * k).unwrap());
            }
        }
    }

    #[test]
    fn exact_division() {
        let n = q_num(4).unwrap();
        let d = q_num(1).unwrap();
        let q = n.div_exact(&d).unwrap();
        // [4]/[1] = q^{3/2} + q^{1/2} + q^{-1/2} + q^{-3/2}
        for e in [3, 1, -1, -3] {
            assert_eq!(q.coeff(e, 2), rat(1));
        }
        assert!(q_num(3).unwrap().div_exact(&q_num(2).unwrap()).is_err());
    }

    #[test]
    fn display_format() {
        assert_eq!(q_num_plus(1).to_string(), "q^(1/2) + q^(-1/2)");
        assert_eq!(q_num(2).unwrap().to_string(), "q^(1) - q^(-1)");
        assert_eq!(QExact::zero().to_string(), "0");
        assert_eq!(
            (&QExact::constant(rat_frac(-3, 2)) * &QExact::monomial(rat(1), 1, 1)).to_string(),
            "-3/2*q^(1)"
        );
    }

    #[test]
    fn json_round_trip() {
        let f = &q_binomial(4, 2).unwrap() + &QExact::monomial(rat_frac(-7, 3), 5, 6);
        let j = f.to_json();
        assert_eq!(QExact::from_json(&j).unwrap(), f);
        let one_half = QExact::monomial(rat(1), 1, 2);
        assert_eq!(
            one_half.to_json().to_string(),
            r#"{"lattice":1,"terms":[[1,"1/1"]]}"#
        );
    }
}
