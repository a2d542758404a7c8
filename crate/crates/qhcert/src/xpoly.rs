//! Polynomials in the spectral variable `x` with truncated-series
//! coefficients, and the Sylvester resultant over that ring.
//!
//! The resultant is a determinant, so it is computed division-free. When all
//! coefficients are free of `q` (the usual case, after a rational
//! specialization) the Sylvester matrix is lifted to exact polynomials in
//! `t` and eliminated fraction-free (Bareiss); otherwise a Faddeev-LeVerrier
//! determinant over the series ring is used. Both paths truncate the result
//! to the smallest coefficient order, the conservative propagation rule.

use crate::matrix::Mat;
use crate::qpoly::{format_poly, QPoly};
use crate::rational::Rat;
use crate::ring::Ring;
use crate::series::{TSeries, ORDER_INF};
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum XPolyError {
    #[error("resultant of a zero polynomial")]
    ZeroPolynomial,
}

/// Polynomial in `x`, coefficients by ascending power.
#[derive(Clone, PartialEq, Debug)]
pub struct XPoly {
    coeffs: Vec<TSeries>,
}

impl XPoly {
    /// Coefficients by ascending power of `x`. Trailing coefficients whose
    /// known part vanishes are dropped; the polynomial is understood as the
    /// written representative.
    pub fn new(coeffs: Vec<TSeries>) -> Self {
        let mut p = XPoly { coeffs };
        while matches!(p.coeffs.last(), Some(c) if c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> TSeries {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(<TSeries as Ring>::zero)
    }

    pub fn coeffs(&self) -> &[TSeries] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&TSeries> {
        self.coeffs.last()
    }

    /// Smallest truncation order among the coefficients.
    pub fn min_order(&self) -> usize {
        self.coeffs
            .iter()
            .map(TSeries::order)
            .min()
            .unwrap_or(ORDER_INF)
    }

    /// Formal derivative in `x`; coefficient orders are preserved.
    pub fn x_derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return XPoly::zero();
        }
        XPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale_q(&QPoly::from_int(k as i64 + 1)))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| self.coeff(k).add(&rhs.coeff(k))).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs =
            vec![<TSeries as Ring>::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        XPoly::new(coeffs)
    }

    pub fn truncate_t(&self, order: usize) -> Self {
        XPoly::new(self.coeffs.iter().map(|c| c.truncate(order)).collect())
    }

    pub fn specialize_q(&self, q: &Rat) -> Self {
        XPoly::new(self.coeffs.iter().map(|c| c.specialize_q(q)).collect())
    }

    /// The coefficient of `t^m` as a polynomial in `q` per `x` power,
    /// zero-padded to the full degree. Panics if `m` is beyond some
    /// coefficient's order.
    pub fn t_slice(&self, m: usize) -> Vec<QPoly> {
        self.coeffs.iter().map(|c| c.coeff(m)).collect()
    }

    /// The `t = 0` part evaluated at a rational `q`, as a polynomial in `x`
    /// over Q (reusing the dense rational-polynomial type).
    pub fn t0_at_q(&self, q: &Rat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|c| c.coeff(0).eval(q)).collect())
    }
}

/// Fraction-free determinant over Q[t], with rational coefficients.
/// `QPoly` here plays the role of a dense polynomial in `t`.
fn det_bareiss(mut m: Vec<Vec<QPoly>>) -> QPoly {
    let n = m.len();
    if n == 0 {
        return QPoly::one();
    }
    let mut negate = false;
    let mut prev = QPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return QPoly::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = QPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of `p` (degree m) and `q` (degree l), size (m+l)^2:
/// l staggered rows of p coefficients followed by m staggered rows of q
/// coefficients, all by descending power.
fn sylvester(p: &XPoly, q: &XPoly) -> Mat<TSeries> {
    let m = p.degree().expect("nonzero p");
    let l = q.degree().expect("nonzero q");
    let n = m + l;
    let mut s: Mat<TSeries> = Mat::zero(n.max(1), n.max(1));
    let pd: Vec<TSeries> = (0..=m).map(|k| p.coeff(m - k)).collect();
    let qd: Vec<TSeries> = (0..=l).map(|k| q.coeff(l - k)).collect();
    for r in 0..l {
        for (j, c) in pd.iter().enumerate() {
            s[(r, r + j)] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in qd.iter().enumerate() {
            s[(l + r, r + j)] = c.clone();
        }
    }
    s
}

/// Resultant of two nonzero `x`-polynomials as the determinant of their
/// Sylvester matrix. Sign convention: `resultant(x-a, x-b) = a - b`.
pub fn resultant(p: &XPoly, q: &XPoly) -> Result<TSeries, XPolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(XPolyError::ZeroPolynomial);
    }
    if p.degree() == Some(0) && q.degree() == Some(0) {
        return Ok(TSeries::one());
    }
    let order = p.min_order().min(q.min_order());
    let s = sylvester(p, q);
    let q_free = s.entries().all(|e| e.max_q_degree() == 0);
    let det = if q_free {
        // Lift entries to exact polynomials in t and eliminate
        // fraction-free; sound modulo t^order because every determinant
        // coefficient below the order only involves known entry
        // coefficients.
        let n = s.rows();
        let lifted: Vec<Vec<QPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        QPoly::from_coeffs(
                            s[(i, j)].known_coeffs().iter().map(|c| c.coeff(0)).collect(),
                        )
                    })
                    .collect()
            })
            .collect();
        let d = det_bareiss(lifted);
        TSeries::from_coeffs(d.coeffs().iter().map(|c| QPoly::constant(c.clone())).collect(), order)
    } else {
        s.det().truncate(order)
    };
    Ok(det)
}

/// One `t`-slice rendered by descending `x` power, with multi-term `q`
/// coefficients parenthesized the way the polynomials are usually printed:
/// `x^12 - 60*q*x^9 - (96*q^2 + 26*q)*x^7 - ...`.
pub fn format_x_slice(slice: &[QPoly]) -> String {
    let mut out = String::new();
    for (k, c) in slice.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let all_negative = c.coeffs().iter().filter(|r| !num_traits::Zero::is_zero(*r)).all(Signed::is_negative);
        let nonzero_terms = c.coeffs().iter().filter(|r| !num_traits::Zero::is_zero(*r)).count();
        let (neg, body) = if nonzero_terms > 1 {
            if all_negative {
                (true, format!("({})", format_poly(&c.neg(), "q")))
            } else {
                (false, format!("({})", format_poly(c, "q")))
            }
        } else {
            let s = format_poly(c, "q");
            match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            }
        };
        let xp = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let term = match (body.as_str(), xp.is_empty()) {
            ("1", false) => xp,
            (_, true) => body,
            (_, false) => format!("{body}*{xp}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn c(n: i64) -> TSeries {
        TSeries::int(n)
    }

    fn xpoly_ints(coeffs: &[i64]) -> XPoly {
        XPoly::new(coeffs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn derivative_examples() {
        // x^12 -> 12 x^11
        let mut coeffs = vec![c(0); 13];
        coeffs[12] = c(1);
        let p = XPoly::new(coeffs);
        let d = p.x_derivative();
        assert_eq!(d.degree(), Some(11));
        assert_eq!(d.coeff(11), c(12));
        // constants die
        assert!(xpoly_ints(&[7]).x_derivative().is_zero());
    }

    #[test]
    fn resultant_sign_convention() {
        // resultant(x - a, x - b) = a - b
        let a = c(3);
        let b = c(5);
        let p = XPoly::new(vec![a.neg(), c(1)]);
        let q = XPoly::new(vec![b.neg(), c(1)]);
        assert_eq!(resultant(&p, &q).unwrap(), c(-2));
        // resultant(x^2, x + 1) = 1
        let x2 = xpoly_ints(&[0, 0, 1]);
        let x1 = xpoly_ints(&[1, 1]);
        assert_eq!(resultant(&x2, &x1).unwrap(), c(1));
        // distinct constant-in-t roots: (x-1)(x-2) against its derivative;
        // res(p, p') = p'(1) p'(2) = -1, nonzero iff the roots are simple
        let p = xpoly_ints(&[2, -3, 1]);
        let d = p.x_derivative();
        let r = resultant(&p, &d).unwrap();
        assert_eq!(r, c(-1));
        assert!(resultant(&p, &XPoly::zero()).is_err());
    }

    #[test]
    fn resultant_paths_agree() {
        // Same input with a symbolic-q marker forced through the series
        // path must match the lifted fraction-free path.
        let tser = TSeries::t_power(1).truncate(4);
        let p = XPoly::new(vec![tser.neg(), c(0), c(1)]); // x^2 - t
        let d = p.x_derivative();
        let r = resultant(&p, &d).unwrap();
        // res(x^2 - t, 2x) = p'(sqrt t) p'(-sqrt t) = -4t, at the
        // conservative order of the input coefficients
        assert_eq!(r, TSeries::t_power(1).scale_q(&QPoly::from_int(-4)).truncate(4));

        // force the generic path with a q-dependent constant coefficient
        let qq = TSeries::constant(QPoly::monomial(rat(1), 1));
        let p1 = XPoly::new(vec![qq.clone().neg(), c(1)]); // x - q
        let p2 = XPoly::new(vec![c(-5), c(1)]); // x - 5
        let r = resultant(&p1, &p2).unwrap();
        assert_eq!(r, qq.sub(&c(5))); // a - b with a = q, b = 5
    }

    #[test]
    fn slice_formatting() {
        let p0 = vec![
            QPoly::zero(),
            QPoly::zero(),
            QPoly::from_coeffs(vec![rat(0), rat(0), rat(-27), rat(-96)]),
            QPoly::zero(),
            QPoly::monomial(rat(-60), 2),
        ];
        assert_eq!(
            format_x_slice(&p0),
            "-60*q^2*x^4 - (96*q^3 + 27*q^2)*x^2"
        );
        assert_eq!(format_x_slice(&[QPoly::zero()]), "0");
    }
}
