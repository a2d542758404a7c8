//! Hard-coded small quantum cohomology of IG(2,6).
//!
//! The twelve Schubert-type basis classes, the multiplication tables for
//! the three generators D1, D2, D3, and the recurrences that produce every
//! other multiplication matrix. Only the three generator tables are entered
//! by hand; the rest is computed, and the exhaustive axiom verifier is the
//! transcription guard: a single mistyped coefficient breaks associativity
//! or grading somewhere.
//!
//! Also here: the character table of the q = 1 specialization (values of
//! each class on the three components of the spectrum), and the
//! dimension-axiom oracle that tells the deformation engine which
//! multi-point invariants with only degree-2 insertions are forced to
//! vanish. The third component ring is written in the variable `u` to keep
//! it apart from the deformation parameter `t`.

use crate::algebra::{AlgebraError, AlgebraSpec, BasisLabel};
use crate::matrix::Mat;
use crate::qpoly::QPoly;
use crate::rational::{rat, ratio, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Ig26Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("small-ring construction failed verification: {0}")]
    Construction(String),
    #[error("character table applies to the IG(2,6) basis specialized at q=1: {0}")]
    NotApplicable(String),
    #[error("vanishing oracle needs at least 3 insertions, got {0}")]
    TooFewInsertions(usize),
}

/// Basis classes in the fixed order used for every matrix in this crate.
pub const BASIS: &[(&str, usize)] = &[
    ("0", 0),
    ("1", 1),
    ("2", 2),
    ("1,1", 2),
    ("3", 3),
    ("2,1", 3),
    ("4", 4),
    ("3,1", 4),
    ("4,1", 5),
    ("3,2", 5),
    ("4,2", 6),
    ("4,3", 7),
];

/// Grading weight of q: the anticanonical degree of the curve class.
pub const Q_DEGREE: usize = 5;
/// Grading weight of the deformation parameter dual to D2.
pub const T_DEGREE: i64 = -1;
/// Pairing of the degree-1 generator with the effective curve class.
pub const H_BETA: i64 = 1;

type Column<'a> = (&'a str, &'a [(i64, usize, &'a str)]);

/// Multiplication by D1: `(right factor, [(coeff, q power, target), ...])`.
const D1_COLUMNS: &[Column] = &[
    ("0", &[(1, 0, "1")]),
    ("1", &[(1, 0, "2"), (1, 0, "1,1")]),
    ("2", &[(1, 0, "3"), (1, 0, "2,1")]),
    ("1,1", &[(1, 0, "2,1")]),
    ("3", &[(2, 0, "4"), (1, 0, "3,1")]),
    ("2,1", &[(1, 0, "4"), (2, 0, "3,1")]),
    ("4", &[(1, 0, "4,1"), (1, 1, "0")]),
    ("3,1", &[(1, 0, "4,1"), (1, 0, "3,2")]),
    ("4,1", &[(1, 0, "4,2"), (1, 1, "1")]),
    ("3,2", &[(1, 0, "4,2")]),
    ("4,2", &[(1, 0, "4,3"), (1, 1, "2")]),
    ("4,3", &[(1, 1, "3")]),
];

/// Multiplication by D2. The unit and D1 columns follow from the unit
/// axiom and commutativity with the D1 table.
const D2_COLUMNS: &[Column] = &[
    ("0", &[(1, 0, "2")]),
    ("1", &[(1, 0, "3"), (1, 0, "2,1")]),
    ("2", &[(2, 0, "4"), (2, 0, "3,1")]),
    ("1,1", &[(1, 0, "4"), (1, 0, "3,1")]),
    ("3", &[(2, 0, "4,1"), (1, 0, "3,2"), (1, 1, "0")]),
    ("2,1", &[(2, 0, "4,1"), (1, 0, "3,2"), (1, 1, "0")]),
    ("4", &[(1, 0, "4,2"), (1, 1, "1")]),
    ("3,1", &[(1, 0, "4,2"), (1, 1, "1")]),
    ("4,1", &[(1, 0, "4,3"), (1, 1, "2"), (1, 1, "1,1")]),
    ("3,2", &[(1, 1, "2")]),
    ("4,2", &[(1, 1, "3"), (1, 1, "2,1")]),
    ("4,3", &[(1, 1, "4"), (1, 1, "3,1")]),
];

/// Multiplication by D3.
const D3_COLUMNS: &[Column] = &[
    ("0", &[(1, 0, "3")]),
    ("1", &[(2, 0, "4"), (1, 0, "3,1")]),
    ("2", &[(2, 0, "4,1"), (1, 0, "3,2"), (1, 1, "0")]),
    ("1,1", &[(1, 0, "4,1"), (1, 1, "0")]),
    ("3", &[(2, 0, "4,2"), (1, 1, "1")]),
    ("2,1", &[(1, 0, "4,2"), (2, 1, "1")]),
    ("4", &[(1, 0, "4,3"), (1, 1, "2")]),
    ("3,1", &[(1, 1, "2"), (1, 1, "1,1")]),
    ("4,1", &[(1, 1, "2,1"), (1, 1, "3")]),
    ("3,2", &[(1, 1, "2,1")]),
    ("4,2", &[(2, 1, "3,1"), (1, 1, "4")]),
    ("4,3", &[(1, 1, "4,1"), (1, 1, "3,2")]),
];

/// Names of the generator classes whose tables are data.
pub const GENERATOR_LABELS: &[&str] = &["1", "2", "3"];

/// Recurrences producing the remaining matrices, in dependency order.
/// These strings are also the DERIVED section of the dumped spec file.
pub const RECURRENCES: &[(&str, &str)] = &[
    ("1,1", "M[D1]*M[D1] - M[D2]"),
    ("2,1", "M[D1]*M[D2] - M[D3]"),
    ("3,1", "-1/3 * M[D1] * (M[D3] - 2*M[D2,1])"),
    ("4", "M[D1]*M[D2,1] - 2*M[D3,1]"),
    ("4,1", "M[D1]*M[D4] - q*M[D0]"),
    ("3,2", "M[D1]*M[D3,1] - M[D4,1]"),
    ("4,2", "M[D1]*M[D4,1] - q*M[D1]"),
    ("4,3", "M[D1]*M[D4,2] - q*M[D2]"),
];

fn basis_index(name: &str) -> usize {
    BASIS
        .iter()
        .position(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown basis label D{name}"))
}

fn matrix_from_columns(columns: &[Column]) -> Mat<QPoly> {
    let dim = BASIS.len();
    let mut m: Mat<QPoly> = Mat::zero(dim, dim);
    assert_eq!(columns.len(), dim, "every column must be given");
    for (col_name, entries) in columns {
        let col = basis_index(col_name);
        for &(coeff, q_pow, target) in *entries {
            let row = basis_index(target);
            m[(row, col)] = m[(row, col)].add(&QPoly::monomial(rat(coeff), q_pow));
        }
    }
    m
}

/// The 12-dimensional small quantum cohomology ring over Q[q].
///
/// The three generator tables are installed as data, the remaining
/// matrices come from the recurrences, and the result must pass the full
/// axiom, pairing and Frobenius verification; any violation is a
/// transcription bug and turns into a construction error.
pub fn build_small_qh() -> Result<AlgebraSpec, Ig26Error> {
    let basis: Vec<BasisLabel> = BASIS
        .iter()
        .map(|(name, degree)| BasisLabel::new(name, *degree))
        .collect();
    let dim = basis.len();
    let q = QPoly::monomial(rat(1), 1);

    let m0: Mat<QPoly> = Mat::identity(dim);
    let m1 = matrix_from_columns(D1_COLUMNS);
    let m2 = matrix_from_columns(D2_COLUMNS);
    let m3 = matrix_from_columns(D3_COLUMNS);

    let m11 = m1.mul(&m1).sub(&m2);
    let m21 = m1.mul(&m2).sub(&m3);
    let m31 = m1
        .mul(&m3.sub(&m21.scale(&QPoly::from_int(2))))
        .scale(&QPoly::constant(ratio(-1, 3)));
    let m4 = m1.mul(&m21).sub(&m31.scale(&QPoly::from_int(2)));
    let m41 = m1.mul(&m4).sub(&m0.scale(&q));
    let m32 = m1.mul(&m31).sub(&m41);
    let m42 = m1.mul(&m41).sub(&m1.scale(&q));
    let m43 = m1.mul(&m42).sub(&m2.scale(&q));

    let mats = vec![m0, m1, m2, m11, m3, m21, m4, m31, m41, m32, m42, m43];
    let spec = AlgebraSpec::new(basis, Q_DEGREE, T_DEGREE, "0", "4,3", mats)?;

    let axioms = spec.verify_axioms();
    if !axioms.is_clean() {
        return Err(Ig26Error::Construction(format!(
            "{} axiom violation(s), first: {}",
            axioms.violations.len(),
            axioms.violations[0]
        )));
    }
    let pairing = spec.derive_pairing()?;
    let frobenius = spec.verify_frobenius(&pairing);
    if !frobenius.is_clean() {
        return Err(Ig26Error::Construction(format!(
            "{} Frobenius violation(s), first: {}",
            frobenius.violations.len(),
            frobenius.violations[0]
        )));
    }
    Ok(spec)
}

/// The nilpotent witness `D4,3 - q D2 + q D1,1` in basis coordinates.
pub fn nilpotent_witness(spec: &AlgebraSpec) -> Vec<QPoly> {
    let q = QPoly::monomial(rat(1), 1);
    let mut v = vec![QPoly::zero(); spec.dim()];
    v[spec.index_of("4,3").expect("IG(2,6) basis")] = QPoly::one();
    v[spec.index_of("2").expect("IG(2,6) basis")] = q.neg();
    v[spec.index_of("1,1").expect("IG(2,6) basis")] = q;
    v
}

// ---------------------------------------------------------------------------
// Character table of the q = 1 specialization
// ---------------------------------------------------------------------------

/// One component of the spectrum at q = 1: a quotient ring Q[z]/(z^pow - fold).
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub name: &'static str,
    pub var: &'static str,
    pub pow: usize,
    pub fold: Rat,
    /// `(label, value)` with the value a single monomial `c * z^k`.
    values: Vec<(&'static str, Rat, usize)>,
}

impl Component {
    fn value_of(&self, label: &str) -> Vec<Rat> {
        let mut v = vec![rat(0); self.pow];
        if label == "0" {
            v[0] = rat(1);
            return v;
        }
        if let Some((_, c, k)) = self.values.iter().find(|(l, _, _)| *l == label) {
            v[*k] = c.clone();
        }
        v
    }

    fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut full = vec![rat(0); 2 * self.pow - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                full[i + j] = &full[i + j] + &(x * y);
            }
        }
        for k in (self.pow..full.len()).rev() {
            let carry = &full[k] * &self.fold;
            full[k - self.pow] = &full[k - self.pow] + &carry;
            full[k] = rat(0);
        }
        full.truncate(self.pow);
        full
    }

    fn render(&self, v: &[Rat]) -> String {
        let p = QPoly::from_coeffs(v.to_vec());
        crate::qpoly::format_poly(&p, self.var)
    }
}

/// The three spectrum components with the printed class values.
pub fn character_table() -> Vec<Component> {
    let z0 = vec![
        ("2", rat(1), 1),
        ("1,1", rat(-1), 1),
        ("4,1", rat(-1), 0),
        ("3,2", rat(1), 0),
        ("4,3", rat(-1), 1),
    ];
    let z1 = vec![
        ("1", rat(1), 1),
        ("1,1", rat(1), 2),
        ("2,1", rat(1), 3),
        ("3", rat(-1), 3),
        ("3,1", rat(1), 4),
        ("4", rat(-1), 4),
        ("3,2", rat(-1), 0),
        ("4,2", rat(-1), 1),
        ("4,3", rat(-1), 2),
    ];
    let z2 = vec![
        ("1", rat(1), 1),
        ("2", ratio(2, 3), 2),
        ("1,1", ratio(1, 3), 2),
        ("2,1", ratio(1, 3), 3),
        ("3", ratio(1, 3), 3),
        ("3,1", ratio(1, 9), 4),
        ("4", ratio(1, 9), 4),
        ("4,1", rat(2), 0),
        ("3,2", rat(1), 0),
        ("4,2", rat(1), 1),
        ("4,3", ratio(1, 3), 2),
    ];
    vec![
        Component {
            name: "Z0",
            var: "eps",
            pow: 2,
            fold: rat(0),
            values: z0,
        },
        Component {
            name: "Z1",
            var: "s",
            pow: 5,
            fold: rat(-1),
            values: z1,
        },
        Component {
            name: "Z2",
            var: "u",
            pow: 5,
            fold: rat(27),
            values: z2,
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct CharTableReport {
    pub components_checked: usize,
    pub products_checked: usize,
    pub mismatches: Vec<String>,
    /// Characteristic polynomial of multiplication by D1 at q = 1 equals
    /// x^2 (x^5 + 1)(x^5 - 27).
    pub charpoly_ok: bool,
}

impl CharTableReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.charpoly_ok
    }
}

/// Expected characteristic polynomial of multiplication by D1 at q = 1,
/// as a polynomial in the spectral variable.
pub fn d1_charpoly_at_q1() -> QPoly {
    let x2 = QPoly::monomial(rat(1), 2);
    let f1 = QPoly::from_coeffs(vec![rat(1), rat(0), rat(0), rat(0), rat(0), rat(1)]);
    let f2 = QPoly::from_coeffs(vec![rat(-27), rat(0), rat(0), rat(0), rat(0), rat(1)]);
    x2.mul(&f1).mul(&f2)
}

/// Check that every table row is a ring homomorphism into its component,
/// and that the spectrum accounts for the whole algebra via the D1
/// characteristic polynomial. `spec` must be the IG(2,6) ring specialized
/// at q = 1.
pub fn verify_character_table(spec: &AlgebraSpec) -> Result<CharTableReport, Ig26Error> {
    for (name, _) in BASIS {
        if spec.index_of(name).is_none() {
            return Err(Ig26Error::NotApplicable(format!("missing class D{name}")));
        }
    }
    if spec.dim() != BASIS.len() {
        return Err(Ig26Error::NotApplicable(format!(
            "dimension {} instead of {}",
            spec.dim(),
            BASIS.len()
        )));
    }
    let constant = |p: &QPoly| -> Result<Rat, Ig26Error> {
        if p.degree().map_or(false, |d| d > 0) {
            return Err(Ig26Error::NotApplicable(
                "structure constants still depend on q".into(),
            ));
        }
        Ok(p.coeff(0))
    };

    let mut report = CharTableReport::default();
    for comp in character_table() {
        report.components_checked += 1;
        let values: Vec<Vec<Rat>> = BASIS
            .iter()
            .map(|(name, _)| comp.value_of(name))
            .collect();
        for a in 0..spec.dim() {
            for b in a..spec.dim() {
                report.products_checked += 1;
                let lhs = comp.mul(&values[a], &values[b]);
                let mut rhs = vec![rat(0); comp.pow];
                let col = spec.mats[a].col(b);
                for (target, coeff) in col.iter().enumerate() {
                    let c = constant(coeff)?;
                    if c.is_zero() {
                        continue;
                    }
                    for (k, val) in values[target].iter().enumerate() {
                        rhs[k] = &rhs[k] + &(&c * val);
                    }
                }
                if lhs != rhs {
                    report.mismatches.push(format!(
                        "{}: value(D{}) * value(D{}) = {} but value(D{} * D{}) = {}",
                        comp.name,
                        BASIS[a].0,
                        BASIS[b].0,
                        comp.render(&lhs),
                        BASIS[a].0,
                        BASIS[b].0,
                        comp.render(&rhs)
                    ));
                }
            }
        }
    }

    let d1 = spec.index_of("1").expect("checked above");
    let (coeffs, _) = spec.mats[d1].charpoly_fl();
    let mut as_xpoly = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        as_xpoly.push(constant(c)?);
    }
    report.charpoly_ok = QPoly::from_coeffs(as_xpoly) == d1_charpoly_at_q1();
    Ok(report)
}

// ---------------------------------------------------------------------------
// Dimension-axiom vanishing oracle
// ---------------------------------------------------------------------------

/// Verdict for an n-point invariant whose insertions all sit in a single
/// degree: either it is forced to vanish (with the mathematical reason) or
/// nothing is claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GwVanishingVerdict {
    Zero(String),
    Unknown,
}

impl GwVanishingVerdict {
    pub fn is_zero(&self) -> bool {
        matches!(self, GwVanishingVerdict::Zero(_))
    }
}

/// General degree bookkeeping: an n-point invariant with all insertions of
/// Chow degree `insertion_degree` on a variety of dimension `dim_x` with
/// anticanonical curve weight `q_degree` can only be nonzero when
/// `n + (dim_x - 3) + q_degree * d = n * insertion_degree` has a solution
/// `d >= 0`; and degree-0 invariants with 4 or more points vanish as well.
pub fn vanishing_verdict(
    n: usize,
    insertion_degree: usize,
    dim_x: usize,
    q_degree: usize,
) -> Result<GwVanishingVerdict, Ig26Error> {
    if n < 3 {
        return Err(Ig26Error::TooFewInsertions(n));
    }
    let lhs = (n * insertion_degree) as i64 - (n as i64 + dim_x as i64 - 3);
    if lhs < 0 || lhs % q_degree as i64 != 0 {
        return Ok(GwVanishingVerdict::Zero(format!(
            "dimension axiom: no curve degree d >= 0 satisfies \
             {n} + {} + {q_degree}d = {}",
            dim_x - 3,
            n * insertion_degree
        )));
    }
    let d = lhs / q_degree as i64;
    if d == 0 && n >= 4 {
        return Ok(GwVanishingVerdict::Zero(format!(
            "degree-0 invariant with {n} insertions vanishes"
        )));
    }
    // d = 0 with n = 3 is a classical triple product; d >= 1 needs a genuine
    // curve count. Neither is a vanishing claim.
    Ok(GwVanishingVerdict::Unknown)
}

/// Vanishing oracle for `<D2, ..., D2>` with `n` insertions on IG(2,6):
/// the degree count reads `n + 4 + 5d = 2n`, i.e. `n = 4 + 5d`.
pub fn gw_power_vanishing(n: usize) -> Result<GwVanishingVerdict, Ig26Error> {
    vanishing_verdict(n, 2, 7, Q_DEGREE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{rational_kernel, rational_rank};

    #[test]
    fn small_ring_builds_clean() {
        let spec = build_small_qh().expect("transcription verified");
        assert_eq!(spec.dim(), 12);
        // printed column: D2 * D3,2 = q D2
        let d2 = spec.index_of("2").unwrap();
        let d32 = spec.index_of("3,2").unwrap();
        let col = spec.mats[d2].col(d32);
        assert_eq!(col[d2], QPoly::monomial(rat(1), 1));
        assert_eq!(col.iter().filter(|c| !c.is_zero()).count(), 1);
        // printed column: D3 * D4,2 = q(2 D3,1 + D4)
        let d3 = spec.index_of("3").unwrap();
        let d42 = spec.index_of("4,2").unwrap();
        let col = spec.mats[d3].col(d42);
        assert_eq!(col[spec.index_of("3,1").unwrap()], QPoly::monomial(rat(2), 1));
        assert_eq!(col[spec.index_of("4").unwrap()], QPoly::monomial(rat(1), 1));
        // recurrence spot check: M4,2 = M1 M4,1 - q M1
        let d1 = spec.index_of("1").unwrap();
        let d41 = spec.index_of("4,1").unwrap();
        let q = QPoly::monomial(rat(1), 1);
        let expected = spec.mats[d1]
            .mul(&spec.mats[d41])
            .sub(&spec.mats[d1].scale(&q));
        assert_eq!(spec.mats[d42], expected);
        // multiplication_matrix example: column of M1 at D4 is D4,1 + q D0
        let col = spec.mats[d1].col(spec.index_of("4").unwrap());
        assert_eq!(col[d41], QPoly::one());
        assert_eq!(col[spec.index_of("0").unwrap()], q);
    }

    #[test]
    fn structure_constant_q_degrees() {
        // The hand-entered generator tables only carry q^0 and q^1 terms.
        // Products of high-degree classes necessarily reach q^2 (for
        // instance D4,2 * D4,3 = q^2 D2,1, total degree 13 = 3 + 5*2), so
        // the bound on the full table is 2.
        let spec = build_small_qh().unwrap();
        let max_deg_of = |m: &Mat<QPoly>| {
            let mut max = 0;
            for i in 0..spec.dim() {
                for j in 0..spec.dim() {
                    if let Some(d) = m[(i, j)].degree() {
                        max = max.max(d);
                    }
                }
            }
            max
        };
        for name in GENERATOR_LABELS {
            assert_eq!(max_deg_of(&spec.mats[spec.index_of(name).unwrap()]), 1);
        }
        let overall = spec.mats.iter().map(max_deg_of).max().unwrap();
        assert_eq!(overall, 2);
        let a = spec.index_of("4,2").unwrap();
        let b = spec.index_of("4,3").unwrap();
        let col = spec.mats[a].col(b);
        assert_eq!(
            col[spec.index_of("2,1").unwrap()],
            QPoly::monomial(rat(1), 2)
        );
    }

    #[test]
    fn pairing_values_and_unimodularity() {
        let spec = build_small_qh().unwrap();
        let pairing = spec.derive_pairing().unwrap();
        let idx = |n: &str| spec.index_of(n).unwrap();
        // printed products force these values
        assert_eq!(pairing[(idx("1"), idx("4,2"))], QPoly::one());
        assert_eq!(pairing[(idx("2"), idx("4,1"))], QPoly::one());
        // grading forces zero off the complementary-degree pairs
        for a in 0..spec.dim() {
            for b in 0..spec.dim() {
                if spec.basis[a].degree + spec.basis[b].degree != 7 {
                    assert!(pairing[(a, b)].is_zero());
                }
            }
        }
        // unimodular on this basis
        let det = pairing.det();
        assert!(det == QPoly::one() || det == QPoly::one().neg());
    }

    #[test]
    fn nilpotent_witness_squares_to_zero() {
        let spec = build_small_qh().unwrap();
        let c0 = nilpotent_witness(&spec);
        let m = spec.multiplication_matrix(&c0);
        assert!(m.mul(&m).is_zero_matrix());
        assert!(spec.is_nilpotent(&c0));
        // the unit is not nilpotent
        assert!(!spec.is_nilpotent(&spec.basis_vector(spec.unit)));
    }

    #[test]
    fn q1_radical_is_one_dimensional() {
        let spec = build_small_qh().unwrap().specialize(&rat(1));
        assert_eq!(spec.radical_dimension().unwrap(), 1);
        let rows = spec.trace_form().unwrap();
        assert_eq!(rational_rank(&rows), 11);
        let kernel = rational_kernel(&rows);
        assert_eq!(kernel.len(), 1);
        // kernel is spanned by the q=1 nilpotent D4,3 - D2 + D1,1
        let c0: Vec<Rat> = nilpotent_witness(&spec)
            .iter()
            .map(|p| p.eval(&rat(1)))
            .collect();
        let k = &kernel[0];
        // proportionality: cross-ratios vanish
        let pivot = k
            .iter()
            .position(|x| !x.is_zero())
            .expect("nonzero kernel vector");
        assert!(!c0[pivot].is_zero());
        let scale = &c0[pivot] / &k[pivot];
        for (a, b) in k.iter().zip(&c0) {
            assert_eq!(&(a * &scale), b);
        }
    }

    #[test]
    fn character_table_is_a_homomorphism() {
        let spec = build_small_qh().unwrap().specialize(&rat(1));
        let report = verify_character_table(&spec).unwrap();
        assert!(report.is_clean(), "{:?}", report.mismatches);
        assert_eq!(report.components_checked, 3);
        // symbolic spec is rejected
        let symbolic = build_small_qh().unwrap();
        assert!(verify_character_table(&symbolic).is_err());
        // q = 0 specialization breaks the table
        let classical = build_small_qh().unwrap().specialize(&rat(0));
        let report = verify_character_table(&classical).unwrap();
        assert!(!report.is_clean());
    }

    #[test]
    fn vanishing_oracle() {
        for n in 3..=8 {
            assert!(gw_power_vanishing(n).unwrap().is_zero(), "n = {n}");
        }
        assert_eq!(gw_power_vanishing(9).unwrap(), GwVanishingVerdict::Unknown);
        assert_eq!(gw_power_vanishing(14).unwrap(), GwVanishingVerdict::Unknown);
        assert!(gw_power_vanishing(2).is_err());
        // the n = 4 case is the degree-0 many-point vanishing, not the
        // dimension count
        match gw_power_vanishing(4).unwrap() {
            GwVanishingVerdict::Zero(reason) => assert!(reason.contains("degree-0")),
            GwVanishingVerdict::Unknown => panic!("n = 4 must vanish"),
        }
    }

    #[test]
    fn all_multiplication_matrices_commute() {
        let spec = build_small_qh().unwrap();
        for a in 0..spec.dim() {
            for b in a + 1..spec.dim() {
                assert_eq!(
                    spec.mats[a].mul(&spec.mats[b]),
                    spec.mats[b].mul(&spec.mats[a]),
                    "M_{} and M_{} do not commute",
                    BASIS[a].0,
                    BASIS[b].0
                );
            }
        }
    }
}
