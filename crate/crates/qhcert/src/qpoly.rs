//! Dense univariate polynomials over the exact rationals.
//!
//! The primary role is polynomials in the quantum parameter `q`; the same
//! representation doubles as polynomials in the spectral variable `x` (for
//! the square-free analysis of a characteristic polynomial at `t = 0`) and
//! in `t` (for the fraction-free resultant path). Coefficients are stored by
//! ascending power with no trailing zeros, so structural equality is
//! canonical equality.

use crate::rational::{rat, Rat};
use crate::ring::Ring;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_int(n: i64) -> Self {
        QPoly::constant(rat(n))
    }

    /// `c * q^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![rat(0); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    /// Coefficients by ascending power; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// `true` when the polynomial is a nonzero constant, i.e. a unit of Q[q].
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Euler operator `q d/dq`: sends `c q^k` to `k c q^k`.
    pub fn q_log_derivative(&self) -> Self {
        QPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    /// Formal derivative with respect to the variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * rat(k as i64 + 1))
                .collect(),
        )
    }

    /// Quotient and remainder; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let d = rhs.coeffs.len();
        let n = self.coeffs.len();
        if n < d {
            return (QPoly::zero(), self.clone());
        }
        let lead = rhs.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![rat(0); n - d + 1];
        for k in (d - 1..n).rev() {
            let factor = &rem[k] / lead;
            if factor.is_zero() {
                continue;
            }
            let shift = k + 1 - d;
            for (j, c) in rhs.coeffs.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &(c * &factor);
            }
            quot[shift] = factor;
        }
        rem.truncate(d - 1);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    /// Exact division: `Some(self / rhs)` when the remainder vanishes.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    pub fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero integer");
        self.scale(&(rat(1) / rat(n)))
    }

    /// Leading coefficient scaled to 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&(rat(1) / l)),
        }
    }

    /// Monic gcd by the Euclidean algorithm, normalizing at every step so
    /// the result is deterministic.
    pub fn gcd_monic(&self, rhs: &Self) -> Self {
        let mut a = self.monic();
        let mut b = rhs.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Yun square-free decomposition: returns `(multiplicity, factor)` pairs
    /// with nontrivial factors only, so `self ~ prod factor_i^mult_i`.
    pub fn squarefree_decomposition(&self) -> Vec<(usize, QPoly)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let fp = f.derivative();
        let mut out = Vec::new();
        let a0 = f.gcd_monic(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = fp.div_exact(&a0).expect("gcd divides");
        let mut d = c.sub(&b.derivative());
        let mut mult = 1usize;
        while b.degree() != Some(0) {
            let a = b.gcd_monic(&d);
            if a.degree() != Some(0) {
                out.push((mult, a.clone()));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            mult += 1;
        }
        out
    }

    /// Number of zero low-order coefficients, i.e. the multiplicity of the
    /// root 0. Zero polynomial yields `None`.
    pub fn trailing_zeros(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

}

impl Ring for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        QPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        QPoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        QPoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        QPoly::mul(self, rhs)
    }
    fn from_int(n: i64) -> Self {
        QPoly::from_int(n)
    }
    fn div_int(&self, n: i64) -> Self {
        QPoly::div_int(self, n)
    }
}

/// Renders with the given variable name, descending powers, exact rational
/// coefficients: `96*q^2 + 26*q`, `-1/3*q`, `0`.
pub fn format_poly(p: &QPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        match (coeff_part.is_empty(), var_part.is_empty()) {
            (true, _) => out.push_str(&var_part),
            (false, true) => out.push_str(&coeff_part),
            (false, false) => {
                out.push_str(&coeff_part);
                out.push('*');
                out.push_str(&var_part);
            }
        }
    }
    out
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, "q"))
    }
}
