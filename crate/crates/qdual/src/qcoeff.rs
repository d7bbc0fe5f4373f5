//! Exact arithmetic in the Laurent ring k[q,q^-1] with rational coefficients.
//!
//! [`LaurentPoly`] is the scalar type of the whole crate: a finite
//! rational-linear combination of integer powers of the formal variable q,
//! kept in canonical form (no zero coefficients). On top of the ring
//! operations it provides the (q-1)-adic tools used everywhere else:
//! order of vanishing at q = 1, exact multiplication/division by powers of
//! (q-1), and evaluation at q = 1.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub type Rat = BigRational;

/// Element of k[q,q^-1]: map from q-exponent to nonzero rational coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

pub fn rat(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("element is not divisible by (q-1)^{0}")]
pub struct NotDivisible(pub u32);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rat::one(), 0)
    }

    /// The variable q itself.
    pub fn q() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// q^-1.
    pub fn q_inv() -> Self {
        Self::monomial(Rat::one(), -1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(rat(n), 0)
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::monomial(r, 0)
    }

    /// c * q^k, canonicalized.
    pub fn monomial(c: Rat, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// Canonical form of an arbitrary list of (exponent, coefficient) terms.
    pub fn canonical(raw: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in raw {
            out.add_term(k, c);
        }
        out
    }

    /// q - 1.
    pub fn q_minus_1() -> Self {
        Self::canonical([(1, rat(1)), (0, rat(-1))])
    }

    /// q - q^-1.
    pub fn q_minus_qinv() -> Self {
        Self::canonical([(1, rat(1)), (-1, rat(-1))])
    }

    /// 1 + q^-1.
    pub fn one_plus_qinv() -> Self {
        Self::canonical([(0, rat(1)), (-1, rat(1))])
    }

    /// q + q^-1.
    pub fn q_plus_qinv() -> Self {
        Self::canonical([(1, rat(1)), (-1, rat(1))])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by q^k.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Order of vanishing at q = 1; `None` means +infinity (the zero element).
    ///
    /// Computed by clearing the lowest q-power (a unit) and then counting
    /// exact divisions by (q-1) in k[q]; bounded by the exponent span.
    pub fn q1_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0u32;
        let mut cur = self.clone();
        loop {
            match cur.div_q_minus_1_exact() {
                Some(next) => {
                    v += 1;
                    cur = next;
                }
                None => return Some(v),
            }
        }
    }

    /// Exact division by (q-1), or `None` if not divisible.
    /// Divisible iff the value at q = 1 is zero.
    fn div_q_minus_1_exact(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if !self.eval1().is_zero() {
            return None;
        }
        // Shift so the element is a plain polynomial, divide, shift back.
        let low = self.min_exp().unwrap();
        let span = (self.max_exp().unwrap() - low) as usize;
        let mut coeffs: Vec<Rat> = vec![Rat::zero(); span + 1];
        for (k, c) in self.terms() {
            coeffs[(k - low) as usize] = c.clone();
        }
        // Synthetic division of sum coeffs[i] x^i by (x - 1).
        let mut quot: Vec<Rat> = vec![Rat::zero(); span];
        let mut carry = Rat::zero();
        for i in (1..=span).rev() {
            carry = &coeffs[i] + &carry;
            quot[i - 1] = carry.clone();
        }
        // Remainder is eval at 1, already checked to be 0.
        Some(Self::canonical(
            quot.into_iter().enumerate().map(|(i, c)| (i as i64 + low, c)),
        ))
    }

    /// Multiply by (q-1)^k for k >= 0, or divide exactly for k < 0.
    pub fn shift_q1(&self, k: i64) -> Result<Self, NotDivisible> {
        if k >= 0 {
            Ok(self * &Self::q_minus_1().pow(k as u32))
        } else {
            let mut cur = self.clone();
            for i in 0..(-k) {
                cur = cur
                    .div_q_minus_1_exact()
                    .ok_or(NotDivisible((-k - i) as u32))?;
            }
            Ok(cur)
        }
    }

    /// Substitute q = 1.
    pub fn eval1(&self) -> Rat {
        let mut s = Rat::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Exact division in k[q,q^-1]; `None` if `self` is not a multiple of `d`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero in k[q,q^-1]");
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division from the top; exponent bound guarantees termination.
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let d_top = d.max_exp().unwrap();
        let d_lead = d.terms.get(&d_top).unwrap().clone();
        let min_quot_exp = self.min_exp().unwrap() - d.min_exp().unwrap();
        while !rem.is_zero() {
            let r_top = rem.max_exp().unwrap();
            let e = r_top - d_top;
            if e < min_quot_exp {
                return None;
            }
            let c = rem.terms.get(&r_top).unwrap() / &d_lead;
            let t = Self::monomial(c, e);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// True if `d` divides `self` in k[q,q^-1].
    pub fn divisible_by(&self, d: &Self) -> bool {
        self.exact_div(d).is_some()
    }

    /// Degree span (max exponent minus min exponent); Euclidean size function.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// True if the element is a unit c*q^k of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in rhs.terms() {
            self.add_term(k, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k1, c1) in self.terms() {
            for (k2, c2) in rhs.terms() {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Sorted ascending q-exponents; coefficients as INT or INT/INT.
    /// Examples: "0", "-1/2*q^-2 + q", "2 - 3*q^2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let mag = c.abs();
            let neg = c.is_negative();
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
            let coeff_one = mag.is_one();
            match (k, coeff_one) {
                (0, _) => write!(f, "{}", fmt_rat(&mag))?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{}*q", fmt_rat(&mag))?,
                (_, true) => write!(f, "q^{}", k)?,
                (_, false) => write!(f, "{}*q^{}", fmt_rat(&mag), k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero as _;
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::canonical(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn canonical_cancellation() {
        // [(0, 1), (0, -1)] -> 0
        assert!(lp(&[(0, 1), (0, -1)]).is_zero());
    }

    #[test]
    fn ring_identity() {
        // (q-1)(q+1) = q^2 - 1
        let p = &lp(&[(1, 1), (0, -1)]) * &lp(&[(1, 1), (0, 1)]);
        assert_eq!(p, lp(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn unit_law() {
        assert!((&LaurentPoly::q() * &LaurentPoly::q_inv()).is_one());
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(LaurentPoly::q_minus_1().q1_valuation(), Some(1));
        assert_eq!(LaurentPoly::q().q1_valuation(), Some(0));
        // q - q^-1 = q^-1 (q-1)(q+1): order 1 at q = 1
        assert_eq!(LaurentPoly::q_minus_qinv().q1_valuation(), Some(1));
        assert_eq!(LaurentPoly::zero().q1_valuation(), None);
    }

    #[test]
    fn shift_examples() {
        // (q^2 - 1)/(q-1) = q + 1
        let r = lp(&[(2, 1), (0, -1)]).shift_q1(-1).unwrap();
        assert_eq!(r, lp(&[(1, 1), (0, 1)]));
        assert!(LaurentPoly::q().shift_q1(-1).is_err());
        // (q - q^-1)/(q-1) = q^-1(q+1) = 1 + q^-1
        let r = LaurentPoly::q_minus_qinv().shift_q1(-1).unwrap();
        assert_eq!(r, lp(&[(0, 1), (-1, 1)]));
    }

    #[test]
    fn eval1_examples() {
        assert_eq!(lp(&[(3, 1)]).eval1(), rat(1));
        assert!(LaurentPoly::q_minus_1().pow(2).eval1().is_zero());
        assert_eq!(lp(&[(1, 2), (-1, 3)]).eval1(), rat(5));
    }

    #[test]
    fn exact_div() {
        let a = lp(&[(2, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        assert_eq!(a.exact_div(&b).unwrap(), LaurentPoly::q_minus_1());
        assert!(b.exact_div(&a).is_none());
    }

    #[test]
    fn display_form() {
        let p = LaurentPoly::canonical([(-2, rat_frac(-1, 2)), (1, rat(1))]);
        assert_eq!(p.to_string(), "-1/2*q^-2 + q");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::q_minus_qinv().to_string(), "-q^-1 + q");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-4i64..5), (-6i64..7)), 0..5)
            .prop_map(|v| LaurentPoly::canonical(v.into_iter().map(|(k, c)| (k, rat(c)))))
    }

    proptest! {
        #[test]
        fn valuation_multiplicative(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(
                prod.q1_valuation().unwrap(),
                a.q1_valuation().unwrap() + b.q1_valuation().unwrap()
            );
        }

        #[test]
        fn valuation_additive_bound(a in arb_poly(), b in arb_poly()) {
            let s = &a + &b;
            if let Some(vs) = s.q1_valuation() {
                let bound = match (a.q1_valuation(), b.q1_valuation()) {
                    (Some(x), Some(y)) => x.min(y),
                    (Some(x), None) | (None, Some(x)) => x,
                    (None, None) => return Ok(()),
                };
                prop_assert!(vs >= bound);
            }
        }

        #[test]
        fn eval1_zero_iff_val_positive(a in arb_poly()) {
            let vanishes = a.eval1().is_zero();
            let val_pos = a.q1_valuation().map(|v| v >= 1).unwrap_or(true);
            prop_assert_eq!(vanishes, val_pos);
        }

        #[test]
        fn shift_roundtrip(a in arb_poly(), k in 0i64..4) {
            let up = a.shift_q1(k).unwrap();
            prop_assert_eq!(up.shift_q1(-k).unwrap(), a);
        }

        #[test]
        fn mul_commutes_assoc(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }
    }
}
