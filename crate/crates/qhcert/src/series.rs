//! Truncated power series in the deformation parameter `t`, with
//! polynomial-in-`q` coefficients and explicit precision tracking.
//!
//! A `TSeries` is "known modulo t^order". Arithmetic never claims precision
//! it does not have:
//!
//! * addition keeps `min` of the operand orders;
//! * multiplication keeps `min(ord(a) + v(b), ord(b) + v(a))` where `v` is
//!   the valuation lower bound of the other factor (its exact valuation, or
//!   its order when every known coefficient vanishes);
//! * integration in `t` gains one order, `q d/dq` keeps the order.
//!
//! The sharper multiplication rule is what lets `t * M` carry one more
//! order of precision than `M` itself, which the Euler-field assembly needs.
//! Exactly known values (embedded constants, `t^k`) carry the order
//! [`ORDER_INF`], which absorbs the `min`s above.

use crate::qpoly::{format_poly, QPoly};
use crate::rational::Rat;
use crate::ring::Ring;
use std::fmt;

/// Order marker for exactly known series (no truncation anywhere).
pub const ORDER_INF: usize = usize::MAX;

fn ord_add(a: usize, b: usize) -> usize {
    a.saturating_add(b)
}

/// t-adic valuation of a truncated series, as far as it can be known.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    /// Lowest power of `t` carrying a nonzero coefficient; always below the
    /// truncation order.
    Exact(usize),
    /// Every known coefficient vanishes; the valuation is `>= N` (with
    /// `N == ORDER_INF` meaning the series is exactly zero).
    AtLeast(usize),
}

impl Valuation {
    /// The guaranteed lower bound in either case.
    pub fn lower_bound(&self) -> usize {
        match *self {
            Valuation::Exact(v) => v,
            Valuation::AtLeast(n) => n,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Valuation::Exact(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeast(ORDER_INF) => write!(f, ">= inf"),
            Valuation::AtLeast(n) => write!(f, ">= {n}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    /// Coefficient of `t^k` at index `k`; trailing zero polynomials trimmed,
    /// `coeffs.len() <= order`.
    coeffs: Vec<QPoly>,
    order: usize,
}

impl TSeries {
    /// Exactly known constant (order infinity).
    pub fn constant(p: QPoly) -> Self {
        TSeries::from_coeffs(vec![p], ORDER_INF)
    }

    pub fn rat_constant(c: Rat) -> Self {
        TSeries::constant(QPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        TSeries::constant(QPoly::from_int(n))
    }

    /// The monomial `t^k`, exactly known.
    pub fn t_power(k: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); k + 1];
        coeffs[k] = QPoly::one();
        TSeries::from_coeffs(coeffs, ORDER_INF)
    }

    /// Zero known modulo `t^order`.
    pub fn zero_of_order(order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        TSeries {
            coeffs: Vec::new(),
            order,
        }
    }

    /// Build from `t^k` coefficients (ascending) with an explicit order.
    /// Coefficients beyond the order are discarded.
    pub fn from_coeffs(coeffs: Vec<QPoly>, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let mut s = TSeries { coeffs, order };
        if order != ORDER_INF && s.coeffs.len() > order {
            s.coeffs.truncate(order);
        }
        s.trim();
        s
    }

    /// Lift a `q`-polynomial to a series truncated at `order`.
    pub fn from_qpoly_at_order(p: QPoly, order: usize) -> Self {
        TSeries::from_coeffs(vec![p], order)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`; panics if `k` is at or beyond the order, since
    /// that coefficient is unknown rather than zero.
    pub fn coeff(&self, k: usize) -> QPoly {
        assert!(k < self.order, "coefficient t^{k} is beyond the known order");
        self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero)
    }

    /// All known coefficients, zero-padded up to `len` entries.
    pub fn coeffs_padded(&self, len: usize) -> Vec<QPoly> {
        assert!(
            len <= self.order,
            "requested {len} coefficients from a series of order {}",
            self.order
        );
        (0..len).map(|k| self.coeff(k)).collect()
    }

    pub fn known_coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn t_valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(v) => Valuation::Exact(v),
            None => Valuation::AtLeast(self.order),
        }
    }

    fn valuation_lower_bound(&self) -> usize {
        self.t_valuation().lower_bound()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        let n = self
            .coeffs
            .len()
            .max(rhs.coeffs.len())
            .min(if order == ORDER_INF { usize::MAX } else { order });
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(QPoly::zero);
            coeffs.push(a.add(&b));
        }
        TSeries::from_coeffs(coeffs, order)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            order: self.order,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = ord_add(self.order, rhs.valuation_lower_bound())
            .min(ord_add(rhs.order, self.valuation_lower_bound()));
        if self.is_zero() || rhs.is_zero() {
            return if order == ORDER_INF {
                TSeries::from_coeffs(Vec::new(), ORDER_INF)
            } else {
                TSeries::zero_of_order(order)
            };
        }
        let full = self.coeffs.len() + rhs.coeffs.len() - 1;
        let n = full.min(if order == ORDER_INF { full } else { order });
        let mut coeffs = vec![QPoly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TSeries::from_coeffs(coeffs, order)
    }

    pub fn scale_q(&self, p: &QPoly) -> Self {
        self.mul(&TSeries::constant(p.clone()))
    }

    /// Multiply by `t^k`: shifts coefficients and gains `k` orders.
    pub fn shift_t(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![QPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TSeries::from_coeffs(coeffs, ord_add(self.order, k))
    }

    /// Forget any precision beyond `t^order`.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        if order >= self.order {
            return self.clone();
        }
        TSeries::from_coeffs(self.coeffs.clone(), order)
    }

    /// Term-by-term `q d/dq` on the coefficients; order preserved.
    pub fn q_log_derivative(&self) -> Self {
        TSeries::from_coeffs(
            self.coeffs.iter().map(|c| c.q_log_derivative()).collect(),
            self.order,
        )
    }

    /// Definite integral from 0 in `t`: `t^k -> t^(k+1)/(k+1)`; gains one
    /// order of precision.
    pub fn t_integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(QPoly::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.div_int(k as i64 + 1));
        }
        TSeries::from_coeffs(coeffs, ord_add(self.order, 1))
    }

    /// Formal `d/dt`, the left inverse of [`TSeries::t_integrate`]; loses
    /// one order.
    pub fn t_derivative(&self) -> Self {
        let order = if self.order == ORDER_INF {
            ORDER_INF
        } else {
            (self.order - 1).max(1)
        };
        if self.coeffs.len() <= 1 {
            return TSeries::from_coeffs(Vec::new(), order);
        }
        TSeries::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&crate::rational::rat(k as i64 + 1)))
                .collect(),
            order,
        )
    }

    /// Evaluate every coefficient at a rational `q`.
    pub fn specialize_q(&self, q: &Rat) -> Self {
        TSeries::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| QPoly::constant(c.eval(q)))
                .collect(),
            self.order,
        )
    }

    /// Highest power of `q` appearing in any known coefficient.
    pub fn max_q_degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|c| c.degree())
            .max()
            .unwrap_or(0)
    }

    /// Multiplicative inverse modulo `t^order`; requires the constant term
    /// to be a unit (a nonzero rational constant in `q`).
    pub fn inverse_at(&self, order: usize) -> Option<Self> {
        assert!(order >= 1);
        let c0 = self.coeffs.first()?.clone();
        if !c0.is_unit() {
            return None;
        }
        let order = order.min(self.order);
        let inv0 = QPoly::constant(
            crate::rational::rat(1) / c0.coeffs().first().unwrap().clone(),
        );
        let n = if order == ORDER_INF {
            // Exactly known input: an exact inverse only exists for constants.
            if self.coeffs.len() > 1 {
                return None;
            }
            return Some(TSeries::constant(inv0));
        } else {
            order
        };
        let mut out = vec![QPoly::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = QPoly::zero();
            for j in 1..=k {
                let a = self.coeffs.get(j).cloned().unwrap_or_else(QPoly::zero);
                if a.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&inv0);
        }
        Some(TSeries::from_coeffs(out, order))
    }

    pub fn div_int(&self, n: i64) -> Self {
        TSeries {
            coeffs: self.coeffs.iter().map(|c| c.div_int(n)).collect(),
            order: self.order,
        }
    }
}

impl Ring for TSeries {
    fn zero() -> Self {
        TSeries {
            coeffs: Vec::new(),
            order: ORDER_INF,
        }
    }
    fn one() -> Self {
        TSeries::int(1)
    }
    fn is_zero(&self) -> bool {
        TSeries::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        TSeries::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        TSeries::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        TSeries::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        TSeries::mul(self, rhs)
    }
    fn from_int(n: i64) -> Self {
        TSeries::int(n)
    }
    fn div_int(&self, n: i64) -> Self {
        TSeries::div_int(self, n)
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = format_poly(c, "q");
            let multi = body[1..].contains(" + ") || body[1..].contains(" - ");
            let (mag, neg) = if !multi && body.starts_with('-') {
                (body[1..].to_string(), true)
            } else {
                (body, false)
            };
            let term = match k {
                0 => mag,
                _ => {
                    let tp = if k == 1 {
                        "t".to_string()
                    } else {
                        format!("t^{k}")
                    };
                    if mag == "1" {
                        tp
                    } else if multi || mag.contains('/') {
                        format!("({mag})*{tp}")
                    } else {
                        format!("{mag}*{tp}")
                    }
                }
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{term}")?;
                first = false;
            } else if neg {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if self.order != ORDER_INF {
            write!(f, " (mod t^{})", self.order)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn series(ints: &[i64], order: usize) -> TSeries {
        TSeries::from_coeffs(ints.iter().map(|&n| QPoly::from_int(n)).collect(), order)
    }

    #[test]
    fn addition_takes_min_order() {
        // (1 + t mod t^3) + (-1 mod t^2) = t mod t^2
        let a = series(&[1, 1], 3);
        let b = series(&[-1], 2);
        assert_eq!(a.add(&b), series(&[0, 1], 2));
        // (q mod t^2) + (0 mod t^5) = q mod t^2
        let q = TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 1), 2);
        assert_eq!(q.add(&TSeries::zero_of_order(5)), q);
        // (t + t^2 mod t^3) + (t mod t^3) = 2t + t^2 mod t^3
        assert_eq!(
            series(&[0, 1, 1], 3).add(&series(&[0, 1], 3)),
            series(&[0, 2, 1], 3)
        );
    }

    #[test]
    fn multiplication_order_rule() {
        // (1 + t mod t^2)(1 - t mod t^2) = 1 mod t^2
        let a = series(&[1, 1], 2);
        let b = series(&[1, -1], 2);
        assert_eq!(a.mul(&b), series(&[1], 2));
        // (t mod t^3)^2 = t^2 mod t^4 under the sharp valuation rule
        let t3 = series(&[0, 1], 3);
        let sq = t3.mul(&t3);
        assert_eq!(sq.order(), 4);
        assert_eq!(sq, series(&[0, 0, 1], 4));
        // (q mod t^2)(q^2 mod t^2) = q^3 mod t^2
        let qa = TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 1), 2);
        let qb = TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 2), 2);
        assert_eq!(
            qa.mul(&qb),
            TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 3), 2)
        );
    }

    #[test]
    fn shift_gains_order() {
        let m = series(&[1, 2], 4);
        let shifted = m.shift_t(1);
        assert_eq!(shifted, series(&[0, 1, 2], 5));
        // shift agrees with multiplying by the exact monomial t
        assert_eq!(shifted, m.mul(&TSeries::t_power(1)));
    }

    #[test]
    fn integration_and_valuation() {
        // (a + b t mod t^2) -> (a t + b t^2 / 2 mod t^3)
        let s = series(&[3, 1], 2);
        let int = s.t_integrate();
        assert_eq!(int.order(), 3);
        assert_eq!(int.coeff(0), QPoly::zero());
        assert_eq!(int.coeff(1), QPoly::from_int(3));
        assert_eq!(int.coeff(2), QPoly::constant(crate::rational::ratio(1, 2)));
        // (0 mod t^2) -> (0 mod t^3)
        assert_eq!(TSeries::zero_of_order(2).t_integrate(), TSeries::zero_of_order(3));
        // (1 mod t^1) -> (t mod t^2)
        assert_eq!(series(&[1], 1).t_integrate(), series(&[0, 1], 2));

        assert_eq!(series(&[0, 0, 1, -1], 4).t_valuation(), Valuation::Exact(2));
        assert_eq!(TSeries::zero_of_order(3).t_valuation(), Valuation::AtLeast(3));
        let q = TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 1), 2);
        assert_eq!(q.t_valuation(), Valuation::Exact(0));
    }

    #[test]
    fn series_inverse() {
        // diag entry example: (1 + t mod t^2)^-1 = 1 - t mod t^2
        let s = series(&[1, 1], 2);
        assert_eq!(s.inverse_at(2).unwrap(), series(&[1, -1], 2));
        assert_eq!(s.mul(&s.inverse_at(2).unwrap()), series(&[1], 2));
        // constant term q is not a unit
        let q = TSeries::from_qpoly_at_order(QPoly::monomial(rat(1), 1), 2);
        assert!(q.inverse_at(2).is_none());
    }

    #[test]
    fn derivative_inverts_integral() {
        let s = series(&[5, -2, 7], 3);
        assert_eq!(s.t_integrate().t_derivative(), s);
    }

    #[test]
    fn display_format() {
        assert_eq!(series(&[1, -1], 2).to_string(), "1 - t (mod t^2)");
        assert_eq!(TSeries::zero_of_order(3).to_string(), "0 (mod t^3)");
        assert_eq!(TSeries::t_power(2).to_string(), "t^2");
        let mixed = TSeries::from_coeffs(
            vec![QPoly::zero(), QPoly::from_coeffs(vec![rat(26), rat(96)])],
            2,
        );
        assert_eq!(mixed.to_string(), "(96*q + 26)*t (mod t^2)");
    }
}
