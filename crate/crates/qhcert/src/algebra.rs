//! Finite-dimensional graded algebras presented by structure constants.
//!
//! An [`AlgebraSpec`] stores one multiplication matrix per basis class over
//! Q[q]. Verifiers collect every violation instead of failing fast, so a
//! mistyped table can be diagnosed in one pass: commutativity over
//! unordered pairs, associativity over all triples (as a matrix identity
//! per ordered pair), the unit axiom, grading homogeneity of every
//! structure constant, and the Frobenius compatibility of the derived
//! Poincare pairing.

use crate::matrix::{rational_rank, Mat};
use crate::qpoly::QPoly;
use crate::rational::Rat;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("inconsistent algebra data: {0}")]
    Inconsistent(String),
    #[error("derived pairing is not symmetric at ({0}, {1})")]
    PairingAsymmetric(String, String),
    #[error("derived pairing is singular (rank {rank} < dim {dim})")]
    PairingSingular { rank: usize, dim: usize },
    #[error("operation requires constant coefficients; specialize q first")]
    NonConstant,
    #[error("axiom verification failed with {0} violation(s)")]
    Violations(usize),
}

/// A named basis class with its Chow-ring degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisLabel {
    pub name: String,
    pub degree: usize,
}

impl BasisLabel {
    pub fn new(name: &str, degree: usize) -> Self {
        BasisLabel {
            name: name.to_string(),
            degree,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.name)
    }
}

/// One verification failure; rendering carries enough context to locate the
/// offending table entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    Unit { detail: String },
    Commutativity { a: String, b: String },
    Associativity { a: String, b: String, c: String },
    Grading { a: String, b: String, target: String, q_power: usize },
    Frobenius { a: String, b: String, c: String },
    Pairing { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unit { detail } => write!(f, "unit axiom: {detail}"),
            Violation::Commutativity { a, b } => {
                write!(f, "commutativity: D{a} * D{b} != D{b} * D{a}")
            }
            Violation::Associativity { a, b, c } => {
                write!(f, "associativity: (D{a} * D{b}) * D{c} != D{a} * (D{b} * D{c})")
            }
            Violation::Grading { a, b, target, q_power } => write!(
                f,
                "grading: term q^{q_power} D{target} in D{a} * D{b} breaks homogeneity"
            ),
            Violation::Frobenius { a, b, c } => {
                write!(f, "frobenius: (D{a} * D{b}, D{c}) != (D{a}, D{b} * D{c})")
            }
            Violation::Pairing { detail } => write!(f, "pairing: {detail}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VerifyReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub grading_terms_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Finite-dimensional algebra with named graded basis and one
/// multiplication matrix per basis class, over Q[q].
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraSpec {
    pub basis: Vec<BasisLabel>,
    /// Grading weight of `q` (positive).
    pub q_degree: usize,
    /// Grading weight of the deformation parameter.
    pub t_degree: i64,
    pub unit: usize,
    pub point: usize,
    /// `mats[i]` is the matrix of multiplication by `basis[i]`, columns
    /// indexed by the right factor.
    pub mats: Vec<Mat<QPoly>>,
    /// Grading checks apply only while the structure constants are genuine
    /// q-polynomials; a specialization turns this off.
    pub graded: bool,
}

impl AlgebraSpec {
    pub fn new(
        basis: Vec<BasisLabel>,
        q_degree: usize,
        t_degree: i64,
        unit_name: &str,
        point_name: &str,
        mats: Vec<Mat<QPoly>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis.len();
        if dim == 0 {
            return Err(AlgebraError::Inconsistent("empty basis".into()));
        }
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                if a.name == b.name {
                    return Err(AlgebraError::Inconsistent(format!(
                        "duplicate basis label D{}",
                        a.name
                    )));
                }
            }
        }
        if mats.len() != dim {
            return Err(AlgebraError::Inconsistent(format!(
                "{} matrices for {dim} basis classes",
                mats.len()
            )));
        }
        if let Some(m) = mats.iter().find(|m| m.rows() != dim || m.cols() != dim) {
            return Err(AlgebraError::Inconsistent(format!(
                "matrix of shape {}x{} in a {dim}-dimensional algebra",
                m.rows(),
                m.cols()
            )));
        }
        let unit = basis
            .iter()
            .position(|l| l.name == unit_name)
            .ok_or_else(|| AlgebraError::Inconsistent(format!("unknown unit D{unit_name}")))?;
        let point = basis
            .iter()
            .position(|l| l.name == point_name)
            .ok_or_else(|| AlgebraError::Inconsistent(format!("unknown point D{point_name}")))?;
        if basis[unit].degree != 0 {
            return Err(AlgebraError::Inconsistent(
                "unit class must have degree 0".into(),
            ));
        }
        if q_degree == 0 {
            return Err(AlgebraError::Inconsistent("q_degree must be positive".into()));
        }
        Ok(AlgebraSpec {
            basis,
            q_degree,
            t_degree,
            unit,
            point,
            mats,
            graded: true,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|l| l.name == name)
    }

    /// Coordinate vector of a single basis class.
    pub fn basis_vector(&self, index: usize) -> Vec<QPoly> {
        let mut v = vec![QPoly::zero(); self.dim()];
        v[index] = QPoly::one();
        v
    }

    /// Matrix of multiplication by an element given in basis coordinates.
    pub fn multiplication_matrix(&self, v: &[QPoly]) -> Mat<QPoly> {
        assert_eq!(v.len(), self.dim(), "element dimension mismatch");
        let mut out: Mat<QPoly> = Mat::zero(self.dim(), self.dim());
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.mats[i].scale(c));
            }
        }
        out
    }

    /// Exhaustive axiom check; violations are collected, never thrown.
    pub fn verify_axioms(&self) -> VerifyReport {
        let dim = self.dim();
        let mut report = VerifyReport::default();

        if self.mats[self.unit] != Mat::identity(dim) {
            report.violations.push(Violation::Unit {
                detail: format!(
                    "multiplication by D{} is not the identity",
                    self.basis[self.unit].name
                ),
            });
        }

        // Commutativity over unordered pairs.
        for a in 0..dim {
            for b in a + 1..dim {
                report.pairs_checked += 1;
                if self.mats[a].col(b) != self.mats[b].col(a) {
                    report.violations.push(Violation::Commutativity {
                        a: self.basis[a].name.clone(),
                        b: self.basis[b].name.clone(),
                    });
                }
            }
        }

        // Associativity: the operator of (a*b) must equal M_a M_b; compare
        // column by column so a violation names the full triple.
        for a in 0..dim {
            for b in 0..dim {
                let product = self.mats[a].col(b);
                let op_of_product = self.multiplication_matrix(&product);
                let composed = self.mats[a].mul(&self.mats[b]);
                for c in 0..dim {
                    report.triples_checked += 1;
                    if op_of_product.col(c) != composed.col(c) {
                        report.violations.push(Violation::Associativity {
                            a: self.basis[a].name.clone(),
                            b: self.basis[b].name.clone(),
                            c: self.basis[c].name.clone(),
                        });
                    }
                }
            }
        }

        // Grading: every structure constant c q^k in (a*b)_target obeys
        // deg a + deg b = deg target + k q_degree.
        if self.graded {
            for a in 0..dim {
                for b in 0..dim {
                    for target in 0..dim {
                        let entry = &self.mats[a][(target, b)];
                        for (k, coeff) in entry.coeffs().iter().enumerate() {
                            if coeff.is_zero() {
                                continue;
                            }
                            report.grading_terms_checked += 1;
                            let lhs = self.basis[a].degree + self.basis[b].degree;
                            let rhs = self.basis[target].degree + k * self.q_degree;
                            if lhs != rhs {
                                report.violations.push(Violation::Grading {
                                    a: self.basis[a].name.clone(),
                                    b: self.basis[b].name.clone(),
                                    target: self.basis[target].name.clone(),
                                    q_power: k,
                                });
                            }
                        }
                    }
                }
            }
        }

        report
    }

    /// Poincare pairing from the classical (q = 0) products against the
    /// point class: `(a, b) = [point] (a * b)|_{q=0}`.
    pub fn derive_pairing(&self) -> Result<Mat<QPoly>, AlgebraError> {
        let dim = self.dim();
        let pairing = Mat::from_fn(dim, dim, |a, b| {
            QPoly::constant(self.mats[a][(self.point, b)].coeff(0))
        });
        for a in 0..dim {
            for b in a + 1..dim {
                if pairing[(a, b)] != pairing[(b, a)] {
                    return Err(AlgebraError::PairingAsymmetric(
                        self.basis[a].name.clone(),
                        self.basis[b].name.clone(),
                    ));
                }
            }
        }
        let rows: Vec<Vec<Rat>> = (0..dim)
            .map(|a| (0..dim).map(|b| pairing[(a, b)].coeff(0)).collect())
            .collect();
        let rank = rational_rank(&rows);
        if rank < dim {
            return Err(AlgebraError::PairingSingular { rank, dim });
        }
        Ok(pairing)
    }

    /// Frobenius compatibility `(a*b, c) = (a, b*c)` over Q[q] for every
    /// triple, against the given pairing.
    pub fn verify_frobenius(&self, pairing: &Mat<QPoly>) -> VerifyReport {
        let dim = self.dim();
        let mut report = VerifyReport::default();
        // products[a] = M_a, columns are a*b
        for a in 0..dim {
            for b in 0..dim {
                let ab = self.mats[a].col(b);
                for c in 0..dim {
                    report.triples_checked += 1;
                    let lhs: QPoly = ab
                        .iter()
                        .enumerate()
                        .fold(QPoly::zero(), |acc, (l, coeff)| {
                            acc.add(&coeff.mul(&pairing[(l, c)]))
                        });
                    let bc = self.mats[b].col(c);
                    let rhs: QPoly = bc
                        .iter()
                        .enumerate()
                        .fold(QPoly::zero(), |acc, (l, coeff)| {
                            acc.add(&pairing[(a, l)].mul(coeff))
                        });
                    if lhs != rhs {
                        report.violations.push(Violation::Frobenius {
                            a: self.basis[a].name.clone(),
                            b: self.basis[b].name.clone(),
                            c: self.basis[c].name.clone(),
                        });
                    }
                }
            }
        }
        report
    }

    /// `true` when the multiplication operator of `v` is nilpotent,
    /// witnessed by the dim-th power vanishing.
    pub fn is_nilpotent(&self, v: &[QPoly]) -> bool {
        self.multiplication_matrix(v).pow(self.dim()).is_zero_matrix()
    }

    /// Substitute a rational value for q in every structure constant.
    /// Grading checks are disabled on the result.
    pub fn specialize(&self, q: &Rat) -> AlgebraSpec {
        AlgebraSpec {
            basis: self.basis.clone(),
            q_degree: self.q_degree,
            t_degree: self.t_degree,
            unit: self.unit,
            point: self.point,
            mats: self
                .mats
                .iter()
                .map(|m| m.map(|p| QPoly::constant(p.eval(q))))
                .collect(),
            graded: false,
        }
    }

    /// Dimension of the nilradical, computed as the kernel of the trace
    /// form `T(a, b) = tr(M_a M_b)`. Requires constant structure constants
    /// (specialize q first); valid over a field of characteristic zero.
    pub fn radical_dimension(&self) -> Result<usize, AlgebraError> {
        let rows = self.trace_form()?;
        Ok(self.dim() - rational_rank(&rows))
    }

    /// The trace form as a rational matrix.
    pub fn trace_form(&self) -> Result<Vec<Vec<Rat>>, AlgebraError> {
        let dim = self.dim();
        let constant = |p: &QPoly| -> Result<Rat, AlgebraError> {
            if p.degree().map_or(false, |d| d > 0) {
                return Err(AlgebraError::NonConstant);
            }
            Ok(p.coeff(0))
        };
        let mut rows = vec![vec![Rat::zero(); dim]; dim];
        for a in 0..dim {
            for b in a..dim {
                let t = constant(&self.mats[a].mul(&self.mats[b]).trace())?;
                rows[a][b] = t.clone();
                rows[b][a] = t;
            }
        }
        Ok(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    /// Q[e]/e^2 with basis {1, e}: a minimal commutative Frobenius algebra.
    fn dual_numbers() -> AlgebraSpec {
        let basis = vec![BasisLabel::new("0", 0), BasisLabel::new("e", 1)];
        let one = Mat::identity(2);
        let e = Mat::from_rows(vec![
            vec![QPoly::zero(), QPoly::zero()],
            vec![QPoly::one(), QPoly::zero()],
        ]);
        let mut spec = AlgebraSpec::new(basis, 1, 0, "0", "e", vec![one, e]).unwrap();
        spec.graded = false; // e^2 = 0 is not graded-homogeneous data
        spec
    }

    #[test]
    fn trivial_algebra_is_clean() {
        let basis = vec![BasisLabel::new("0", 0)];
        let spec =
            AlgebraSpec::new(basis, 1, 0, "0", "0", vec![Mat::identity(1)]).unwrap();
        let report = spec.verify_axioms();
        assert!(report.is_clean());
        let pairing = spec.derive_pairing().unwrap();
        assert!(spec.verify_frobenius(&pairing).is_clean());
        assert!(!spec.is_nilpotent(&[QPoly::one()]));
        assert!(spec.is_nilpotent(&[QPoly::zero()]));
    }

    #[test]
    fn dual_numbers_axioms_and_radical() {
        let spec = dual_numbers();
        assert!(spec.verify_axioms().is_clean());
        let pairing = spec.derive_pairing().unwrap();
        assert!(spec.verify_frobenius(&pairing).is_clean());
        // e is nilpotent, 1 is not
        assert!(spec.is_nilpotent(&spec.basis_vector(1)));
        assert!(!spec.is_nilpotent(&spec.basis_vector(0)));
        assert_eq!(spec.radical_dimension().unwrap(), 1);
    }

    /// Q[a]/a^3 with basis {1, a, a^2}; graded with deg a = 1.
    fn truncated_poly_algebra() -> AlgebraSpec {
        let basis = vec![
            BasisLabel::new("0", 0),
            BasisLabel::new("1", 1),
            BasisLabel::new("2", 2),
        ];
        let z = QPoly::zero;
        let o = QPoly::one;
        let m0 = Mat::identity(3);
        let ma = Mat::from_rows(vec![
            vec![z(), z(), z()],
            vec![o(), z(), z()],
            vec![z(), o(), z()],
        ]);
        let ma2 = Mat::from_rows(vec![
            vec![z(), z(), z()],
            vec![z(), z(), z()],
            vec![o(), z(), z()],
        ]);
        AlgebraSpec::new(basis, 5, 0, "0", "2", vec![m0, ma, ma2]).unwrap()
    }

    #[test]
    fn truncated_polynomials_verify() {
        let spec = truncated_poly_algebra();
        let report = spec.verify_axioms();
        assert!(report.is_clean(), "{:?}", report.violations);
        assert_eq!(report.pairs_checked, 3);
        assert_eq!(report.triples_checked, 27);
        let pairing = spec.derive_pairing().unwrap();
        assert!(spec.verify_frobenius(&pairing).is_clean());
        assert_eq!(spec.radical_dimension().unwrap(), 2);
    }

    #[test]
    fn mutation_is_detected() {
        // a * a^2 = 1 in one table only: commutativity, associativity and
        // grading all break, and all of them are reported.
        let mut spec = truncated_poly_algebra();
        spec.mats[1][(0, 2)] = QPoly::one();
        let report = spec.verify_axioms();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Commutativity { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Grading { .. })));

        // a structure constant perturbed by +q breaks grading
        let mut spec = truncated_poly_algebra();
        spec.mats[1][(1, 1)] = QPoly::monomial(rat(1), 1);
        assert!(!spec.verify_axioms().is_clean());
    }

    #[test]
    fn multiplication_matrix_is_linear() {
        let spec = dual_numbers();
        let v = vec![QPoly::from_int(2), QPoly::from_int(-3)];
        let w = vec![QPoly::from_int(1), QPoly::from_int(5)];
        let sum: Vec<QPoly> = v.iter().zip(&w).map(|(a, b)| a.add(b)).collect();
        assert_eq!(
            spec.multiplication_matrix(&sum),
            spec.multiplication_matrix(&v).add(&spec.multiplication_matrix(&w))
        );
    }

    #[test]
    fn specialize_commutes_with_operators() {
        let mut spec = dual_numbers();
        // make e*e = q so specialization has something to do
        spec.mats[1][(0, 1)] = QPoly::monomial(rat(1), 1);
        let v = vec![QPoly::from_int(1), QPoly::from_int(4)];
        let at2 = spec.specialize(&rat(2));
        let lhs = at2.multiplication_matrix(&v);
        let rhs = spec
            .multiplication_matrix(&v)
            .map(|p| QPoly::constant(p.eval(&rat(2))));
        assert_eq!(lhs, rhs);
    }
}
