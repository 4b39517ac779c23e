//! Exact integer Laurent polynomials in one variable.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{KnotError, Result};

/// A Laurent polynomial `sum c_e x^e` with `i64` coefficients.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has
/// no coefficients. Zero coefficients at either end never survive an
/// operation, so structural equality is coefficient-map equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: i64, exp: i64) -> Self {
        Self::from_dense(exp, vec![c])
    }

    /// Builds a polynomial from `coeffs[i]` as the coefficient of `x^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for (exp, c) in terms {
            acc += &LaurentPoly::monomial(c, exp);
        }
        acc
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(k) => {
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.low += k as i64;
                }
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs == [1]
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `max_exp - min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        let idx = exp - self.low;
        if idx < 0 {
            return 0;
        }
        self.coeffs.get(idx as usize).copied().unwrap_or(0)
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i64, c))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// Substitutes `x -> x^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution exponent must be nonzero");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Divides every exponent by `k`; fails unless all exponents are multiples.
    pub fn divide_exponents(&self, k: i64) -> Option<Self> {
        if self.terms().any(|(e, _)| e.rem_euclid(k) != 0) {
            return None;
        }
        Some(Self::from_terms(self.terms().map(|(e, c)| (e / k, c))))
    }

    /// Exact quotient by a divisor with leading and trailing coefficient
    /// `±1`; `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = divisor.coeff(dhi);
        if lead.abs() != 1 {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(hi) = rem.max_exp() {
            if hi - dhi < rem.min_exp().unwrap() - dlo {
                return None;
            }
            let c = rem.coeff(hi) * lead;
            let k = hi - dhi;
            quot.push((k, c));
            rem = &rem - &divisor.shift(k).scale(c);
        }
        Some(Self::from_terms(quot))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `x = v` for `v = 1` or `v = -1`, where negative powers
    /// stay integral.
    pub fn eval_unit(&self, v: i64) -> i64 {
        assert!(v == 1 || v == -1, "eval_unit takes +1 or -1");
        self.terms()
            .map(|(e, c)| if v == -1 && e.rem_euclid(2) == 1 { -c } else { c })
            .sum()
    }

    /// Evaluates a polynomial with no negative exponents at an integer.
    pub fn eval_poly(&self, v: i64) -> Option<i128> {
        if self.low < 0 {
            return None;
        }
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(v as i128)?.checked_add(c as i128)?;
        }
        for _ in 0..self.low {
            acc = acc.checked_mul(v as i128)?;
        }
        Some(acc)
    }

    /// True when `p(x) = p(x^-1)`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Renders with ascending exponents, e.g. `-t^-3 + t^-2 - 1 + t`.
    pub fn render(&self, var: &str) -> String {
        self.render_with(var, |e| e.to_string(), |e| e == 1)
    }

    /// Renders a polynomial in `q = var^(1/2)` as powers of `var`, using
    /// integer exponents when all are even and `^(k/2)` otherwise.
    pub fn render_half(&self, var: &str) -> String {
        if let Some(p) = self.divide_exponents(2) {
            return p.render(var);
        }
        self.render_with(
            var,
            |e| if e % 2 == 0 { (e / 2).to_string() } else { format!("({}/2)", e) },
            |e| e == 2,
        )
    }

    fn render_with(
        &self,
        var: &str,
        exp_str: impl Fn(i64) -> String,
        is_unit_exp: impl Fn(i64) -> bool,
    ) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if !is_unit_exp(e) {
                out.push('^');
                out.push_str(&exp_str(e));
            }
        }
        out
    }

    /// Parses the output of [`LaurentPoly::render`] (or `render_half`, with
    /// `half = true`, yielding exponents in the half variable).
    pub fn parse(text: &str, var: &str, half: bool) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mult = if half { 2 } else { 1 };
        let mut terms = Vec::new();
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            // scan one term up to the next top-level sign
            let start = i;
            let mut depth = 0;
            while i < bytes.len() {
                let ch = bytes[i];
                if ch == '(' {
                    depth += 1;
                } else if ch == ')' {
                    depth -= 1;
                } else if depth == 0 && (ch == '+' || ch == '-') && i > start && bytes[i - 1] != '^' {
                    break;
                }
                i += 1;
            }
            let term: String = bytes[start..i].iter().collect();
            if term.is_empty() {
                return Err(KnotError::Parse(format!("empty term in {text:?}")));
            }
            let (coef_str, exp) = match term.find(var) {
                None => (term.as_str(), 0),
                Some(pos) => {
                    let rest = &term[pos + var.len()..];
                    let exp = if rest.is_empty() {
                        mult
                    } else {
                        let e = rest
                            .strip_prefix('^')
                            .ok_or_else(|| KnotError::Parse(format!("bad term {term:?}")))?;
                        parse_exp(e, half)?
                    };
                    (&term[..pos], exp)
                }
            };
            let coef: i64 = if coef_str.is_empty() {
                1
            } else {
                coef_str
                    .parse()
                    .map_err(|_| KnotError::Parse(format!("bad coefficient in {term:?}")))?
            };
            terms.push((exp, sign * coef));
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_exp(e: &str, half: bool) -> Result<i64> {
    let bad = || KnotError::Parse(format!("bad exponent {e:?}"));
    if let Some(inner) = e.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (num, den) = inner.split_once('/').ok_or_else(bad)?;
        if den != "2" || !half {
            return Err(bad());
        }
        return num.parse().map_err(|_| bad());
    }
    let v: i64 = e.parse().map_err(|_| bad())?;
    Ok(if half { 2 * v } else { v })
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (src, off) in [(&self.coeffs, self.low - low), (&rhs.coeffs, rhs.low - low)] {
            for (i, &c) in src.iter().enumerate() {
                coeffs[i + off as usize] += c;
            }
        }
        self.low = low;
        self.coeffs = coeffs;
        self.trim();
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = p(&[(-2, 1), (0, 0), (3, -1)]);
        let b = p(&[(3, -1), (-2, 1)]);
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
        assert_eq!((&a - &b).min_exp(), None);
    }

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::monomial(1, 1);
        let one = LaurentPoly::one();
        let sq = (&x + &one).pow(2);
        assert_eq!(sq, p(&[(0, 1), (1, 2), (2, 1)]));
        let xinv = LaurentPoly::monomial(1, -1);
        assert!((&x * &xinv).is_one());
        assert_eq!(sq.eval_unit(-1), 0);
        assert_eq!(sq.eval_unit(1), 4);
        assert_eq!(sq.eval_poly(3), Some(16));
    }

    #[test]
    fn render_and_parse() {
        let a = p(&[(-3, -1), (-2, 1), (0, -1), (1, 2), (3, 1)]);
        let s = a.render("t");
        assert_eq!(s, "-t^-3 + t^-2 - 1 + 2t + t^3");
        assert_eq!(LaurentPoly::parse(&s, "t", false).unwrap(), a);
        let h = p(&[(-1, 1), (3, -2)]);
        let s = h.render_half("t");
        assert_eq!(s, "t^(-1/2) - 2t^(3/2)");
        assert_eq!(LaurentPoly::parse(&s, "t", true).unwrap(), h);
        assert_eq!(LaurentPoly::parse("0", "t", false).unwrap(), LaurentPoly::zero());
        assert!(LaurentPoly::parse("t^x", "t", false).is_err());
    }

    #[test]
    fn inversion_and_symmetry() {
        let a = p(&[(-1, 1), (0, -1), (1, 1)]);
        assert!(a.is_symmetric());
        let b = p(&[(1, 1), (4, -2)]);
        assert_eq!(b.invert_variable(), p(&[(-1, 1), (-4, -2)]));
        assert_eq!(b.substitute_power(-2), p(&[(-2, 1), (-8, -2)]));
    }
}
