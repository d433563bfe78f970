//! The coefficient field: rational functions in `q` with integer
//! coefficients, stored in a unique canonical form.
//!
//! A [`RatFunc`] is a quotient of two integer polynomials in `q`.
//! The canonical form maintains:
//! - no common polynomial factor between numerator and denominator
//!   (gcd over the rationals is 1),
//! - no common integer content between the two coefficient vectors,
//! - positive leading coefficient of the denominator,
//! - zero is represented as `0/1`.
//!
//! Two equal field elements therefore have identical stored forms and
//! equality is plain structural comparison. Negative powers of `q` are
//! fractions with a power of `q` in the denominator; there is no separate
//! Laurent type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from field operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QFieldError {
    /// Division by the zero rational function.
    DivisionByZero,
    /// Numeric evaluation attempted too close to a zero of the denominator.
    PoleNearEvaluationPoint,
}

impl fmt::Display for QFieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QFieldError::DivisionByZero => write!(f, "division by zero rational function"),
            QFieldError::PoleNearEvaluationPoint => write!(f, "pole near evaluation point"),
        }
    }
}

impl std::error::Error for QFieldError {}

/// Dense integer polynomial in `q`, coefficients stored by ascending
/// exponent with trailing zeros trimmed. The zero polynomial is the empty
/// coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `q^exp`.
    pub fn monomial(exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of a nonzero polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Exponent of the lowest nonzero term; 0 for the zero polynomial.
    fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    /// Multiplies by `q^k`.
    fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divides by `q^k`; the low coefficients must all be zero.
    fn unshift(&self, k: usize) -> IntPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        IntPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_content(&self, g: &BigInt) -> IntPoly {
        if g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / g).collect(),
        }
    }

    /// Content-free part with positive leading coefficient.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        self.div_content(&g)
    }

    /// Pseudo-remainder of `self` by `d`: scales by powers of the leading
    /// coefficient of `d` so that every step stays integral.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        debug_assert!(!d.is_zero());
        let dd = d.degree();
        let lead = d.leading().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let dr = r.degree();
            let lr = r.leading().clone();
            r = &r.scale(&lead) - &d.shift(dr - dd).scale(&lr);
            debug_assert!(r.is_zero() || r.degree() < dr);
        }
        r
    }

    /// Exact division; panics if `d` does not divide `self`.
    fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        if d.is_one() {
            return self.clone();
        }
        // Monomial divisor: strip the power of q, then the constant.
        if d.is_monomial() {
            let v = d.valuation();
            let c = d.leading();
            let shifted = self.unshift(v);
            if c.is_one() {
                return shifted;
            }
            let coeffs = shifted
                .coeffs
                .iter()
                .map(|a| {
                    let (quot, rem) = a.div_rem(c);
                    assert!(rem.is_zero(), "inexact polynomial division");
                    quot
                })
                .collect();
            return IntPoly::from_coeffs(coeffs);
        }
        let dd = d.degree();
        let dn = self.degree();
        assert!(dn >= dd, "inexact polynomial division");
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= dd {
            let dr = r.degree();
            let (c, rem) = r.leading().div_rem(d.leading());
            assert!(rem.is_zero(), "inexact polynomial division");
            quot[dr - dd] = c.clone();
            r = &r - &d.shift(dr - dd).scale(&c);
            debug_assert!(r.is_zero() || r.degree() < dr);
        }
        assert!(r.is_zero(), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    /// Full gcd in Z[q]: the integer content gcd times the primitive
    /// polynomial gcd, with positive leading coefficient. `gcd(0, b) = |b|`
    /// up to sign normalization.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive().scale(&self.content());
        }
        let cg = self.content().gcd(&other.content());
        let mut a = self.primitive();
        let mut b = other.primitive();
        // Common power of q first; it keeps the remainder sequence short.
        let v = a.valuation().min(b.valuation());
        a = a.unshift(a.valuation());
        b = b.unshift(b.valuation());
        let core = if a.is_monomial() || b.is_monomial() {
            IntPoly::one()
        } else {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
            loop {
                if b.is_zero() {
                    break a;
                }
                if b.degree() == 0 {
                    break IntPoly::one();
                }
                let r = a.pseudo_rem(&b).primitive();
                a = b;
                b = r;
            }
        };
        core.shift(v).scale(&cg)
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::INFINITY), 0.0);
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    /// Compact descending rendering with explicit `*` between integer
    /// coefficient and power, e.g. `2*q^3-q+1`, so the output stays
    /// parseable by the expression grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

/// Canonical rational function in `q`. See the module docs for the exact
/// normal form. Construct with [`RatFunc::new`] or the named constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Canonicalizes `num/den`. Errors when `den` is zero. Idempotent:
    /// feeding a canonical pair back in reproduces it exactly.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc, QFieldError> {
        if den.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = num.gcd(&den);
        Ok(RatFunc::reduced(num.div_exact(&g), den.div_exact(&g)))
    }

    /// Normalizes a pair already known to be coprime in Z[q] except
    /// possibly for integer content and sign.
    fn reduced(num: IntPoly, den: IntPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let mut num = num;
        let mut den = den;
        let cg = num.content().gcd(&den.content());
        if !cg.is_one() {
            num = num.div_content(&cg);
            den = den.div_content(&cg);
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> RatFunc {
        RatFunc {
            num: IntPoly::from_coeffs(vec![n]),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// The generator `q`.
    pub fn q() -> RatFunc {
        RatFunc::q_pow(1)
    }

    /// `q^k` for any integer `k`; negative powers go in the denominator.
    pub fn q_pow(k: i64) -> RatFunc {
        if k >= 0 {
            RatFunc {
                num: IntPoly::monomial(k as usize),
                den: IntPoly::one(),
            }
        } else {
            RatFunc {
                num: IntPoly::one(),
                den: IntPoly::monomial((-k) as usize),
            }
        }
    }

    /// `q + q^{-1}`, the ubiquitous denominator weight.
    pub fn q_plus_qinv() -> RatFunc {
        &RatFunc::q() + &RatFunc::q_pow(-1)
    }

    /// `q - q^{-1}`.
    pub fn q_minus_qinv() -> RatFunc {
        &RatFunc::q() - &RatFunc::q_pow(-1)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Sign of the leading numerator coefficient (the denominator's leading
    /// coefficient is positive by canonicality).
    pub fn is_negative(&self) -> bool {
        !self.num.is_zero() && self.num.leading().is_negative()
    }

    pub fn abs(&self) -> RatFunc {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<RatFunc, QFieldError> {
        if self.is_zero() {
            return Err(QFieldError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, QFieldError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power, negative exponents via inversion.
    pub fn pow(&self, k: i64) -> Result<RatFunc, QFieldError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = RatFunc::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Numeric value at `q0` by Horner evaluation of both polynomials.
    /// Errors when the denominator magnitude is at most `tol`.
    pub fn eval(&self, q0: Complex64, tol: f64) -> Result<Complex64, QFieldError> {
        let d = self.den.eval_complex(q0);
        if d.norm() <= tol {
            return Err(QFieldError::PoleNearEvaluationPoint);
        }
        Ok(self.num.eval_complex(q0) / d)
    }

    /// Standalone LaTeX form. Laurent elements (denominator a power of `q`)
    /// factor out their integer content, so e.g. `(-2q^2+2)/q` renders as
    /// `-2\left(q-q^{-1}\right)`; everything else uses `\frac`.
    pub fn latex(&self) -> String {
        self.latex_parts().0
    }

    /// LaTeX form plus a flag: `true` means the string is a bare sum that
    /// must be wrapped before juxtaposing it with another factor.
    pub fn latex_parts(&self) -> (String, bool) {
        if self.is_zero() {
            return ("0".to_string(), false);
        }
        if self.den.is_monomial() && self.den.leading().is_one() {
            let shift = self.den.valuation() as i64;
            return laurent_latex(&self.num, shift);
        }
        (
            format!("\\frac{{{}}}{{{}}}", poly_latex(&self.num, 0), poly_latex(&self.den, 0)),
            false,
        )
    }
}

/// LaTeX for an integer Laurent polynomial `p(q)/q^shift` with integer
/// content factored out; multi-term bodies are wrapped in `\left(...\right)`.
fn laurent_latex(p: &IntPoly, shift: i64) -> (String, bool) {
    let content = p.content();
    let factor = if p.leading().is_negative() {
        -content
    } else {
        content
    };
    let body = p.div_content(&factor);
    if body.term_count() == 1 {
        // factor * q^e, rendered as one signed term
        let e = body.valuation() as i64 - shift;
        let mag = factor.abs();
        let sign = if factor.is_negative() { "-" } else { "" };
        let s = match (mag.is_one(), e) {
            (true, 0) => format!("{sign}1"),
            (true, 1) => format!("{sign}q"),
            (true, _) => format!("{sign}q^{{{e}}}"),
            (false, 0) => format!("{sign}{mag}"),
            (false, 1) => format!("{sign}{mag}q"),
            (false, _) => format!("{sign}{mag}q^{{{e}}}"),
        };
        (s, false)
    } else {
        let inner = poly_latex(&body, shift);
        if factor.is_one() {
            (inner, true)
        } else if factor == BigInt::from(-1) {
            (format!("-\\left({inner}\\right)"), false)
        } else {
            (format!("{factor}\\left({inner}\\right)"), false)
        }
    }
}

/// LaTeX body of `p(q)/q^shift` as a signed sum in descending powers.
fn poly_latex(p: &IntPoly, shift: i64) -> String {
    let mut out = String::new();
    for i in (0..p.coeffs.len()).rev() {
        let c = &p.coeffs[i];
        if c.is_zero() {
            continue;
        }
        let e = i as i64 - shift;
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push('-');
        } else {
            out.push('+');
        }
        let mag = c.abs();
        match (mag.is_one(), e) {
            (true, 0) => out.push('1'),
            (true, 1) => out.push('q'),
            (true, _) => out.push_str(&format!("q^{{{e}}}")),
            (false, 0) => out.push_str(&format!("{mag}")),
            (false, 1) => out.push_str(&format!("{mag}q")),
            (false, _) => out.push_str(&format!("{mag}q^{{{e}}}")),
        }
    }
    out
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // Henrici: reduce by the denominator gcd so the final gcd runs on
        // small operands.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            return RatFunc::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let da = self.den.div_exact(&g);
        let db = rhs.den.div_exact(&g);
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RatFunc::reduced(num, &da * &rhs.den)
        } else {
            RatFunc::reduced(num.div_exact(&h), &da * &rhs.den.div_exact(&h))
        }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-cancel before multiplying; the products are then coprime.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1);
        let n2 = rhs.num.div_exact(&g2);
        let d1 = self.den.div_exact(&g2);
        let d2 = rhs.den.div_exact(&g1);
        RatFunc::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl fmt::Display for RatFunc {
    /// Text form parseable by the expression grammar, e.g. `(q^2+1)/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        // A lone q-power or integer denominator needs no parentheses; `^`
        // binds tighter than `/` in the grammar.
        let den_atomic = self.den.degree() == 0 || self.den.leading().is_one();
        if self.den.term_count() > 1 || !den_atomic {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let digits = |p: &IntPoly| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let mut st = serializer.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &digits(&self.num))?;
        st.serialize_field("den", &digits(&self.den))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: Vec<String>,
            den: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let parse = |v: Vec<String>| -> Result<IntPoly, D::Error> {
            let coeffs = v
                .into_iter()
                .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(IntPoly::from_coeffs(coeffs))
        };
        RatFunc::new(parse(raw.num)?, parse(raw.den)?).map_err(D::Error::custom)
    }
}

/// The q-integer `[n]_q = (q^n - q^{-n})/(q - q^{-1})` in canonical form.
pub fn qbracket(n: u32) -> RatFunc {
    let num = &RatFunc::q_pow(n as i64) - &RatFunc::q_pow(-(n as i64));
    let den = RatFunc::q_minus_qinv();
    num.div(&den).expect("q - q^{-1} is nonzero")
}

/// The structure constant `rho = -(q^2 - q^{-2})^2`.
pub fn rho() -> RatFunc {
    let d = &RatFunc::q_pow(2) - &RatFunc::q_pow(-2);
    -&(&d * &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn canonicalize_cancels_common_factor() {
        // (q^2-1)/(q-1) = q+1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn canonicalize_reduces_content() {
        // 2q/4 = q/2
        let r = rf(&[0, 2], &[4]);
        assert_eq!(r.num(), &poly(&[0, 1]));
        assert_eq!(r.den(), &poly(&[2]));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let r = rf(&[0, 0, 6, -6], &[-4, 0, 4]);
        let again = RatFunc::new(r.num().clone(), r.den().clone()).unwrap();
        assert_eq!(r, again);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(poly(&[1]), IntPoly::zero()),
            Err(QFieldError::DivisionByZero)
        );
    }

    #[test]
    fn quotient_of_q_differences() {
        // (q^4 - q^{-4})/(q - q^{-1}) = q^3 + q + q^{-1} + q^{-3},
        // stored as (q^6+q^4+q^2+1)/q^3.
        let a = rf(&[-1, 0, 0, 0, 0, 0, 0, 0, 1], &[0, 0, 0, 0, 1]);
        let b = rf(&[-1, 0, 1], &[0, 1]);
        let quot = a.div(&b).unwrap();
        assert_eq!(quot, rf(&[1, 0, 1, 0, 1, 0, 1], &[0, 0, 0, 1]));
        // Long-division oracle: the quotient times the divisor returns the
        // dividend.
        assert_eq!(&quot * &b, a);
    }

    #[test]
    fn add_and_inverse_match_defining_forms() {
        let q = RatFunc::q();
        let qinv = RatFunc::q_pow(-1);
        let sum = &q + &qinv;
        assert_eq!(sum, rf(&[1, 0, 1], &[0, 1]));
        assert_eq!(sum.inv().unwrap(), rf(&[0, 1], &[1, 0, 1]));
        let prod = &RatFunc::q_minus_qinv() * &RatFunc::q_plus_qinv();
        assert_eq!(prod, &RatFunc::q_pow(2) - &RatFunc::q_pow(-2));
    }

    #[test]
    fn inverse_of_zero_rejected() {
        assert_eq!(RatFunc::zero().inv(), Err(QFieldError::DivisionByZero));
    }

    #[test]
    fn qbracket_small_values() {
        assert!(qbracket(0).is_zero());
        assert!(qbracket(1).is_one());
        // [3]_q = q^2 + 1 + q^{-2}
        assert_eq!(qbracket(3), rf(&[1, 0, 1, 0, 1], &[0, 0, 1]));
    }

    #[test]
    fn qbracket_chebyshev_recurrence() {
        let w = RatFunc::q_plus_qinv();
        for m in 1..=20u32 {
            let lhs = qbracket(m + 1);
            let rhs = &(&w * &qbracket(m)) - &qbracket(m - 1);
            assert_eq!(lhs, rhs, "recurrence fails at m = {m}");
        }
    }

    #[test]
    fn rho_value_and_inverse() {
        // rho = -(q^2-q^{-2})^2 = (-q^8 + 2q^4 - 1)/q^4
        assert_eq!(rho(), rf(&[-1, 0, 0, 0, 2, 0, 0, 0, -1], &[0, 0, 0, 0, 1]));
        assert!((&rho() * &rho().inv().unwrap()).is_one());
    }

    #[test]
    fn rho_evaluates_at_two() {
        let v = rho().eval(Complex64::new(2.0, 0.0), 1e-12).unwrap();
        // -(4 - 1/4)^2 = -225/16
        assert!((v.re - (-14.0625)).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn eval_matches_cosine() {
        let q0 = Complex64::from_polar(1.0, std::f64::consts::PI / 5.0);
        let v = RatFunc::q_plus_qinv().eval(q0, 1e-12).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!((v.re - expected).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
        assert!((expected - 1.618_033_988_7).abs() < 1e-9);
    }

    #[test]
    fn eval_detects_pole() {
        // q + q^{-1} vanishes at q = i
        let f = RatFunc::q_plus_qinv().inv().unwrap();
        assert_eq!(
            f.eval(Complex64::new(0.0, 1.0), 1e-9),
            Err(QFieldError::PoleNearEvaluationPoint)
        );
    }

    #[test]
    fn eval_of_one_is_one() {
        let v = RatFunc::one().eval(Complex64::new(0.3, 0.7), 1e-12).unwrap();
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn display_forms() {
        assert_eq!(rf(&[1, 0, 1], &[0, 1]).to_string(), "(q^2+1)/q");
        assert_eq!(rf(&[0, 1], &[1, 0, 1]).to_string(), "q/(q^2+1)");
        assert_eq!(rf(&[0, 1], &[2]).to_string(), "q/2");
        assert_eq!(rf(&[1], &[0, 2]).to_string(), "1/(2*q)");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(rf(&[-2, 0, 3], &[1]).to_string(), "3*q^2-2");
    }

    #[test]
    fn latex_factors_laurent_content() {
        // -2q + 2q^{-1} = (-2q^2+2)/q
        let r = rf(&[2, 0, -2], &[0, 1]);
        assert_eq!(r.latex(), "-2\\left(q-q^{-1}\\right)");
        assert_eq!(RatFunc::q_pow(-3).latex(), "q^{-3}");
        assert_eq!(rf(&[1, 0, 1], &[0, 1]).latex(), "q+q^{-1}");
        assert_eq!(rf(&[0, 1], &[1, 0, 1]).latex(), "\\frac{q}{q^{2}+1}");
    }

    #[test]
    fn serde_round_trip() {
        let r = rf(&[2, 0, -2], &[0, 3]);
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, r#"{"num":["2","0","-2"],"den":["0","3"]}"#);
        let back: RatFunc = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|v| IntPoly::from_i64s(&v))
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (arb_poly(6), arb_poly(6))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn mul_inverse_is_one(a in arb_ratfunc()) {
            prop_assume!(!a.is_zero());
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }

        #[test]
        fn canonical_form_is_stable(a in arb_ratfunc()) {
            let again = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
            prop_assert_eq!(again, a);
        }

        #[test]
        fn eval_is_multiplicative(a in arb_ratfunc(), b in arb_ratfunc()) {
            let q0 = Complex64::new(0.9, 0.43);
            let tol = 1e-8;
            let (ea, eb) = (a.eval(q0, tol), b.eval(q0, tol));
            let eab = (&a * &b).eval(q0, tol);
            if let (Ok(ea), Ok(eb), Ok(eab)) = (ea, eb, eab) {
                prop_assert!((eab - ea * eb).norm() < 1e-10 * (1.0 + ea.norm() * eb.norm()));
            }
        }
    }
}
