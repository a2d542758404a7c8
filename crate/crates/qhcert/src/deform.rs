//! Reconstruction of the one-parameter deformation of the small quantum
//! product along a chosen degree-2 direction, to finite order in `t`.
//!
//! Only small-quantum data goes in. The engine iterates two facts:
//!
//! 1. Multiplication by the degree-1 generator `h` integrates up from the
//!    direction matrix: `M~_h = M_h + q d/dq int_0^t M~_dir dt`, which is
//!    one order more precise than its input.
//! 2. In the frame `1, h, h^2, ..., h^(dim-2), dir` every product with the
//!    frame vectors is a power of `M~_h` applied to a known vector, except
//!    `dir * dir`, which is recovered from pairings: `(dir * dir, f_i) =
//!    (dir * f_i, dir)` for the power vectors, while `(dir * dir, dir)` is
//!    a series of multi-point invariants that the dimension axiom kills
//!    through the supported orders.
//!
//! The linear solves run in basis coordinates through the adjugate of the
//! frame's `t = 0` part, with exact polynomial division at every `t`-order;
//! a division failure would mean a non-polynomial structure constant and
//! aborts loudly. Associativity is never assumed: the commutation of the
//! two reconstructed operators is asserted after the fact.

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::ig26::{vanishing_verdict, GwVanishingVerdict, Ig26Error};
use crate::matrix::{qpoly_adjugate_det, Mat};
use crate::qpoly::QPoly;
use crate::ring::Ring;
use crate::series::TSeries;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DeformError {
    #[error("target order must be at least 1")]
    OrderTooSmall,
    #[error(
        "bootstrapping to order {order} requires the unknown {n}-point invariant \
         <D{dir}, ..., D{dir}> ({n} insertions); orders up to {max} are reconstructible"
    )]
    UnknownInvariant {
        order: usize,
        n: usize,
        dir: String,
        max: usize,
    },
    #[error("the frame 1, h, ..., h^(dim-2), D{0} is singular at t=0")]
    FrameSingular(String),
    #[error("the algebra has no unique degree-1 generator ({0} candidates)")]
    NoGenerator(usize),
    #[error("unknown deformation direction D{0}")]
    UnknownDirection(String),
    #[error("reconstruction produced a non-polynomial solution at t^{at}: {detail}")]
    Division { at: usize, detail: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Model(#[from] Ig26Error),
}

/// The deformed multiplication data at truncation order `order`:
/// `m_dir` (multiplication by the deformation direction) modulo `t^order`
/// and `m_h` (multiplication by the degree-1 generator) one order higher.
#[derive(Clone, Debug)]
pub struct DeformedProduct {
    pub order: usize,
    /// Multiplication by `h`, known modulo `t^(order+1)`.
    pub m_h: Mat<TSeries>,
    /// Multiplication by the deformation direction, known modulo `t^order`.
    pub m_dir: Mat<TSeries>,
    /// Frame vectors `1, h, ..., h^(dim-2), dir` as columns, in basis
    /// coordinates.
    pub frame: Mat<TSeries>,
    /// Pairing matrix of the frame vectors.
    pub gram: Mat<TSeries>,
    pub h_index: usize,
    pub dir_index: usize,
    pub unit_index: usize,
    pub q_degree: usize,
    pub t_degree: i64,
    pairing: Mat<QPoly>,
    frame0_adj: Mat<QPoly>,
    frame0_det: QPoly,
    b0_adj: Mat<QPoly>,
    b0_det: QPoly,
}

fn lift_qpoly_matrix(m: &Mat<QPoly>) -> Mat<TSeries> {
    m.map(|p| TSeries::constant(p.clone()))
}

fn coeff_matrix(m: &Mat<TSeries>, k: usize) -> Mat<QPoly> {
    m.map(|e| e.coeff(k))
}

fn series_from_coeff_mats(coeffs: &[Mat<QPoly>], order: usize) -> Mat<TSeries> {
    let rows = coeffs[0].rows();
    let cols = coeffs[0].cols();
    Mat::from_fn(rows, cols, |i, j| {
        TSeries::from_coeffs(coeffs.iter().map(|c| c[(i, j)].clone()).collect(), order)
    })
}

fn div_matrix_exact(
    m: &Mat<QPoly>,
    det: &QPoly,
    at: usize,
) -> Result<Mat<QPoly>, DeformError> {
    let mut out: Mat<QPoly> = Mat::zero(m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)].div_exact(det).ok_or_else(|| DeformError::Division {
                at,
                detail: format!("entry ({i}, {j}) is not divisible by det = {det}"),
            })?;
        }
    }
    Ok(out)
}

/// Solve `X * F = K` modulo `t^order`, coefficient matrices order by order.
fn solve_right(
    k_mat: &Mat<TSeries>,
    frame_coeffs: &[Mat<QPoly>],
    adj0: &Mat<QPoly>,
    det0: &QPoly,
    order: usize,
) -> Result<Mat<TSeries>, DeformError> {
    let mut x: Vec<Mat<QPoly>> = Vec::with_capacity(order);
    for m in 0..order {
        let mut r = coeff_matrix(k_mat, m);
        for (j, xj) in x.iter().enumerate() {
            r = r.sub(&xj.mul(&frame_coeffs[m - j]));
        }
        x.push(div_matrix_exact(&r.mul(adj0), det0, m)?);
    }
    Ok(series_from_coeff_mats(&x, order))
}

/// Solve `B * X = K` modulo `t^order`.
fn solve_left(
    k_mat: &Mat<TSeries>,
    b_coeffs: &[Mat<QPoly>],
    adj0: &Mat<QPoly>,
    det0: &QPoly,
    order: usize,
) -> Result<Mat<TSeries>, DeformError> {
    let mut x: Vec<Mat<QPoly>> = Vec::with_capacity(order);
    for m in 0..order {
        let mut r = coeff_matrix(k_mat, m);
        for (j, xj) in x.iter().enumerate() {
            r = r.sub(&b_coeffs[m - j].mul(xj));
        }
        x.push(div_matrix_exact(&adj0.mul(&r), det0, m)?);
    }
    Ok(series_from_coeff_mats(&x, order))
}

/// Divisor-axiom lift: `M~_h = M_h + q d/dq int_0^t m_dir dt`, one order
/// more precise than `m_dir`. The pairing `(h, beta) = 1` of the degree-1
/// generator with the effective curve class is baked in.
pub fn m1_from_m2(spec: &AlgebraSpec, h_index: usize, m_dir: &Mat<TSeries>) -> Mat<TSeries> {
    let correction = m_dir.map(|e| e.t_integrate().q_log_derivative());
    lift_qpoly_matrix(&spec.mats[h_index]).add(&correction)
}

/// Largest order the pairing argument supports for this direction: every
/// `t^m` coefficient of `(dir * dir, dir)` with `1 <= m < order` must be a
/// forced zero.
fn max_supported_order(spec: &AlgebraSpec, dir_degree: usize) -> usize {
    let dim_x = spec.basis.iter().map(|l| l.degree).max().unwrap_or(0);
    let mut order = 1;
    while order < 64 {
        match vanishing_verdict(order + 3, dir_degree, dim_x, spec.q_degree) {
            Ok(GwVanishingVerdict::Zero(_)) => order += 1,
            _ => break,
        }
    }
    order
}

/// Reconstruct the deformed product along `dir_label` modulo
/// `t^target_order` from the small-ring data alone.
pub fn bootstrap(
    spec: &AlgebraSpec,
    dir_label: &str,
    target_order: usize,
) -> Result<DeformedProduct, DeformError> {
    if target_order < 1 {
        return Err(DeformError::OrderTooSmall);
    }
    let dim = spec.dim();
    let degree_one: Vec<usize> = (0..dim).filter(|&i| spec.basis[i].degree == 1).collect();
    let [h_index] = degree_one[..] else {
        return Err(DeformError::NoGenerator(degree_one.len()));
    };
    let dir_index = spec
        .index_of(dir_label)
        .ok_or_else(|| DeformError::UnknownDirection(dir_label.to_string()))?;
    let unit_index = spec.unit;
    let pairing = spec.derive_pairing()?;

    // Guard: every pairing coefficient the iteration will set to zero must
    // actually be forced to vanish.
    let dir_degree = spec.basis[dir_index].degree;
    let dim_x = spec.basis.iter().map(|l| l.degree).max().unwrap_or(0);
    for m in 1..target_order {
        match vanishing_verdict(m + 3, dir_degree, dim_x, spec.q_degree)? {
            GwVanishingVerdict::Zero(_) => {}
            GwVanishingVerdict::Unknown => {
                return Err(DeformError::UnknownInvariant {
                    order: target_order,
                    n: m + 3,
                    dir: dir_label.to_string(),
                    max: max_supported_order(spec, dir_degree),
                });
            }
        }
    }

    // Frame at t = 0 and its inversion data; constant along the iteration
    // because m_h reduces to M_h at t = 0.
    let mut frame0: Mat<QPoly> = Mat::zero(dim, dim);
    let mut power = spec.basis_vector(unit_index);
    for i in 0..dim - 1 {
        frame0.set_col(i, &power);
        power = spec.mats[h_index].mul_vec(&power);
    }
    frame0.set_col(dim - 1, &spec.basis_vector(dir_index));
    let (frame0_adj, frame0_det) = qpoly_adjugate_det(&frame0);
    if frame0_det.is_zero() {
        return Err(DeformError::FrameSingular(dir_label.to_string()));
    }
    let b0 = frame0.transpose().mul(&pairing);
    let (b0_adj, b0_det) = qpoly_adjugate_det(&b0);
    debug_assert!(!b0_det.is_zero(), "pairing is invertible, so B0 is too");

    // Small 3-point pairing (dir * dir, dir): the t^0 coefficient of the
    // pairing series; all higher coefficients are forced zeros.
    let small_triple: QPoly = {
        let col = spec.mats[dir_index].col(dir_index);
        col.iter()
            .enumerate()
            .fold(QPoly::zero(), |acc, (a, c)| {
                acc.add(&c.mul(&pairing[(a, dir_index)]))
            })
    };

    let pairing_ts = lift_qpoly_matrix(&pairing);
    let e_dir: Vec<TSeries> = (0..dim)
        .map(|i| {
            if i == dir_index {
                TSeries::one()
            } else {
                <TSeries as Ring>::zero()
            }
        })
        .collect();
    let e_unit: Vec<TSeries> = (0..dim)
        .map(|i| {
            if i == unit_index {
                TSeries::one()
            } else {
                <TSeries as Ring>::zero()
            }
        })
        .collect();

    let build_frame_and_products = |m_h: &Mat<TSeries>| -> (Mat<TSeries>, Mat<TSeries>) {
        let mut frame: Mat<TSeries> = Mat::zero(dim, dim);
        let mut products: Mat<TSeries> = Mat::zero(dim, dim);
        let mut f = e_unit.clone();
        let mut k = e_dir.clone();
        for i in 0..dim - 1 {
            frame.set_col(i, &f);
            products.set_col(i, &k);
            f = m_h.mul_vec(&f);
            k = m_h.mul_vec(&k);
        }
        frame.set_col(dim - 1, &e_dir);
        (frame, products)
    };

    let mut m_dir = lift_qpoly_matrix(&spec.mats[dir_index]).truncate(1);
    for k in 1..target_order {
        let next_order = k + 1;
        let m_h = m1_from_m2(spec, h_index, &m_dir);
        let (frame, mut products) = build_frame_and_products(&m_h);
        let frame_coeffs: Vec<Mat<QPoly>> =
            (0..next_order).map(|m| coeff_matrix(&frame, m)).collect();

        // Pairing right-hand side: (dir*dir, f_i) for the power vectors,
        // and the invariant series for the frame's last vector.
        let mut rhs: Mat<TSeries> = Mat::zero(dim, 1);
        for i in 0..dim - 1 {
            let ki = products.col(i);
            let mut acc = <TSeries as Ring>::zero();
            for (a, v) in ki.iter().enumerate() {
                acc = acc.add(&v.mul(&pairing_ts[(a, dir_index)]));
            }
            rhs[(i, 0)] = acc.truncate(next_order);
        }
        rhs[(dim - 1, 0)] = TSeries::from_qpoly_at_order(small_triple.clone(), next_order);

        let b = frame.transpose().mul(&pairing_ts);
        let b_coeffs: Vec<Mat<QPoly>> = (0..next_order).map(|m| coeff_matrix(&b, m)).collect();
        let w = solve_left(&rhs, &b_coeffs, &b0_adj, &b0_det, next_order)?;
        products.set_col(dim - 1, &w.col(0));

        m_dir = solve_right(&products, &frame_coeffs, &frame0_adj, &frame0_det, next_order)?;
        debug_assert_eq!(
            coeff_matrix(&m_dir, 0),
            spec.mats[dir_index],
            "deformation must reduce to the small product at t = 0"
        );
    }

    let m_h = m1_from_m2(spec, h_index, &m_dir);
    debug_assert!(
        m_h.mul(&m_dir)
            .sub(&m_dir.mul(&m_h))
            .truncate(target_order)
            .is_zero_matrix(),
        "reconstructed operators must commute modulo t^{target_order}"
    );
    let (frame, _) = build_frame_and_products(&m_h);
    let gram = frame.transpose().mul(&pairing_ts).mul(&frame);

    Ok(DeformedProduct {
        order: target_order,
        m_h,
        m_dir,
        frame,
        gram,
        h_index,
        dir_index,
        unit_index,
        q_degree: spec.q_degree,
        t_degree: spec.t_degree,
        pairing,
        frame0_adj,
        frame0_det,
        b0_adj: b0_adj.clone(),
        b0_det,
    })
}

impl DeformedProduct {
    pub fn dim(&self) -> usize {
        self.m_h.rows()
    }

    pub fn pairing(&self) -> &Mat<QPoly> {
        &self.pairing
    }

    /// Multiplication by `h + dir`, at the common order of the two
    /// operators.
    pub fn gamma_matrix(&self) -> Mat<TSeries> {
        self.m_h.add(&self.m_dir)
    }

    /// Multiplication by the Euler element `q_degree * h + t_degree * t * dir`;
    /// the `t`-shift makes both summands precise to order + 1.
    pub fn euler_matrix(&self) -> Mat<TSeries> {
        let scaled_h = self.m_h.scale(&TSeries::int(self.q_degree as i64));
        let shifted_dir = self
            .m_dir
            .map(|e| e.shift_t(1))
            .scale(&TSeries::int(self.t_degree));
        scaled_h.add(&shifted_dir)
    }

    /// Multiplication operator of an arbitrary constant element, recovered
    /// through the frame: `M_v f_i = f_i * v` is a power of `m_h` (or
    /// `m_dir`) applied to `v`. Known modulo `t^order`.
    pub fn operator_for(&self, v: &[QPoly]) -> Result<Mat<TSeries>, DeformError> {
        let dim = self.dim();
        assert_eq!(v.len(), dim, "element dimension mismatch");
        let order = self.order;
        let vts: Vec<TSeries> = v
            .iter()
            .map(|p| TSeries::constant(p.clone()))
            .collect();
        let mut k_mat: Mat<TSeries> = Mat::zero(dim, dim);
        let mut col = vts;
        for i in 0..dim - 1 {
            k_mat.set_col(i, &col);
            col = self.m_h.mul_vec(&col);
        }
        let last = self.m_dir.mul_vec(&k_mat.col(0));
        k_mat.set_col(dim - 1, &last);
        let frame_coeffs: Vec<Mat<QPoly>> =
            (0..order).map(|m| coeff_matrix(&self.frame, m)).collect();
        solve_right(&k_mat, &frame_coeffs, &self.frame0_adj, &self.frame0_det, order)
    }

    /// Product of two elements given in basis coordinates over the series
    /// ring, via the operator of the first.
    pub fn frame_vector(&self, i: usize) -> Vec<TSeries> {
        self.frame.col(i)
    }
}

/// Check the grading homogeneity of a deformed operator of pure degree
/// `op_degree`: every monomial `c q^j t^m` in entry `(a, b)` must satisfy
/// `op_degree + deg(b) - deg(a) = q_degree * j + t_degree * m`.
/// Returns the offending entries.
pub fn operator_grading_violations(
    spec: &AlgebraSpec,
    m: &Mat<TSeries>,
    op_degree: i64,
) -> Vec<String> {
    let mut out = Vec::new();
    for a in 0..spec.dim() {
        for b in 0..spec.dim() {
            let entry = &m[(a, b)];
            for (t_pow, qp) in entry.known_coeffs().iter().enumerate() {
                for (q_pow, c) in qp.coeffs().iter().enumerate() {
                    if num_traits::Zero::is_zero(c) {
                        continue;
                    }
                    let lhs = op_degree + spec.basis[b].degree as i64
                        - spec.basis[a].degree as i64;
                    let rhs =
                        spec.q_degree as i64 * q_pow as i64 + spec.t_degree * t_pow as i64;
                    if lhs != rhs {
                        out.push(format!(
                            "entry (D{}, D{}): term q^{q_pow} t^{t_pow} breaks degree-{op_degree} homogeneity",
                            spec.basis[a].name, spec.basis[b].name
                        ));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ig26::build_small_qh;
    use crate::rational::rat;

    fn ig26() -> AlgebraSpec {
        build_small_qh().unwrap()
    }

    #[test]
    fn base_case_is_small_data() {
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 1).unwrap();
        assert_eq!(dp.order, 1);
        let d2 = spec.index_of("2").unwrap();
        assert_eq!(coeff_matrix(&dp.m_dir, 0), spec.mats[d2]);
        assert_eq!(dp.m_dir.order(), 1);
        assert_eq!(dp.m_h.order(), 2);
        // t-part of m_h is q d/dq M2
        assert_eq!(
            coeff_matrix(&dp.m_h, 1),
            spec.mats[d2].map(|p| p.q_log_derivative())
        );
    }

    #[test]
    fn divisor_axiom_column_check() {
        // column of M~_h at D4,3 is q D3 + t q (D4 + D3,1) modulo t^2
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 1).unwrap();
        let col = dp.m_h.col(spec.index_of("4,3").unwrap());
        let q = QPoly::monomial(rat(1), 1);
        let idx3 = spec.index_of("3").unwrap();
        let idx4 = spec.index_of("4").unwrap();
        let idx31 = spec.index_of("3,1").unwrap();
        assert_eq!(col[idx3], TSeries::from_coeffs(vec![q.clone()], 2));
        assert_eq!(
            col[idx4],
            TSeries::from_coeffs(vec![QPoly::zero(), q.clone()], 2)
        );
        assert_eq!(col[idx31], TSeries::from_coeffs(vec![QPoly::zero(), q], 2));
        for (i, c) in col.iter().enumerate() {
            if ![idx3, idx4, idx31].contains(&i) {
                assert!(c.is_zero(), "unexpected entry at row {i}: {c}");
            }
        }
    }

    #[test]
    fn q_independent_input_stays_small() {
        // The Euler operator kills q-constants, so a q-free direction
        // matrix deforms nothing.
        let spec = ig26();
        let d2 = spec.index_of("2").unwrap();
        let q_free = spec.mats[d2].map(|p| QPoly::constant(p.eval(&rat(0))));
        let lifted = q_free.map(|p| TSeries::from_qpoly_at_order(p.clone(), 3));
        let m_h = m1_from_m2(&spec, spec.index_of("1").unwrap(), &lifted);
        assert_eq!(coeff_matrix(&m_h, 1), Mat::zero(12, 12));
        assert_eq!(coeff_matrix(&m_h, 0), spec.mats[spec.index_of("1").unwrap()]);
    }

    #[test]
    fn gamma_charpoly_first_deformed_coefficient() {
        // The x^10 coefficient of the t-linear part of charpoly(M~_gamma)
        // is -30q: the first genuinely deformed number.
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 2).unwrap();
        let gamma = dp.gamma_matrix();
        assert_eq!(gamma.order(), 2);
        let (coeffs, _) = gamma.charpoly_fl();
        let x10_t1 = coeffs[10].coeff(1);
        assert_eq!(x10_t1, QPoly::monomial(rat(-30), 1));
    }

    #[test]
    fn order_stability_and_reduction() {
        let spec = ig26();
        let dp2 = bootstrap(&spec, "2", 2).unwrap();
        let dp3 = bootstrap(&spec, "2", 3).unwrap();
        assert_eq!(dp3.m_dir.truncate(2), dp2.m_dir);
        assert_eq!(dp3.m_h.truncate(3), dp2.m_h);
        let d1 = spec.index_of("1").unwrap();
        let d2 = spec.index_of("2").unwrap();
        assert_eq!(coeff_matrix(&dp3.m_h, 0), spec.mats[d1]);
        assert_eq!(coeff_matrix(&dp3.m_dir, 0), spec.mats[d2]);
    }

    #[test]
    fn operators_commute() {
        let spec = ig26();
        for order in 2..=4 {
            let dp = bootstrap(&spec, "2", order).unwrap();
            let ab = dp.m_h.mul(&dp.m_dir).truncate(order);
            let ba = dp.m_dir.mul(&dp.m_h).truncate(order);
            assert_eq!(ab, ba, "commutation fails at order {order}");
        }
    }

    #[test]
    fn grading_homogeneity_of_operators() {
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 3).unwrap();
        assert!(operator_grading_violations(&spec, &dp.m_h, 1).is_empty());
        assert!(operator_grading_violations(&spec, &dp.m_dir, 2).is_empty());
    }

    #[test]
    fn order_guard_refuses_unknown_invariants() {
        let spec = ig26();
        let err = bootstrap(&spec, "2", 7).unwrap_err();
        match &err {
            DeformError::UnknownInvariant { n, max, .. } => {
                assert_eq!(*n, 9);
                assert_eq!(*max, 6);
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(err.to_string().contains("9-point"));
        assert!(bootstrap(&spec, "2", 6).is_ok());
        assert!(bootstrap(&spec, "2", 0).is_err());
        assert!(bootstrap(&spec, "nope", 2).is_err());
    }

    #[test]
    fn operator_reconstruction_matches_direct_routes() {
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 3).unwrap();
        let e_h = spec.basis_vector(dp.h_index);
        let rebuilt_h = dp.operator_for(&e_h).unwrap();
        assert_eq!(rebuilt_h, dp.m_h.truncate(3));
        let e_dir = spec.basis_vector(dp.dir_index);
        let rebuilt_dir = dp.operator_for(&e_dir).unwrap();
        assert_eq!(rebuilt_dir, dp.m_dir.truncate(3));
        let gamma: Vec<QPoly> = e_h
            .iter()
            .zip(&e_dir)
            .map(|(a, b)| a.add(b))
            .collect();
        assert_eq!(
            dp.operator_for(&gamma).unwrap(),
            dp.gamma_matrix().truncate(3)
        );
    }

    #[test]
    fn frame_products_respect_frobenius_symmetry() {
        // (f_i * f_j, f_k) = (f_i, f_j * f_k) on a sample of triples.
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 2).unwrap();
        let pairing = lift_qpoly_matrix(dp.pairing());
        let dim = dp.dim();
        let op_of = |i: usize| -> Mat<TSeries> {
            if i == dim - 1 {
                dp.m_dir.clone()
            } else {
                dp.m_h.pow(i)
            }
        };
        let pair = |u: &[TSeries], v: &[TSeries]| -> TSeries {
            let gu = pairing.mul_vec(v);
            u.iter()
                .zip(&gu)
                .fold(<TSeries as Ring>::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        };
        for &(i, j, k) in &[(2, 3, 11), (11, 4, 2), (5, 11, 11), (0, 11, 7)] {
            let fi = dp.frame_vector(i);
            let fj = dp.frame_vector(j);
            let fk = dp.frame_vector(k);
            let fij = op_of(i).mul_vec(&fj);
            let fjk = op_of(j).mul_vec(&fk);
            let lhs = pair(&fij, &fk).truncate(2);
            let rhs = pair(&fi, &fjk).truncate(2);
            assert_eq!(lhs, rhs, "triple ({i}, {j}, {k})");
        }
    }

    #[test]
    fn euler_matrix_orders() {
        let spec = ig26();
        let dp = bootstrap(&spec, "2", 2).unwrap();
        let e = dp.euler_matrix();
        // both summands reach order 3: m_h directly, t * m_dir by the shift
        assert_eq!(e.order(), 3);
        // at t = 0 the Euler operator is 5 M_h
        let d1 = spec.index_of("1").unwrap();
        assert_eq!(
            coeff_matrix(&e, 0),
            spec.mats[d1].scale(&QPoly::from_int(5))
        );
    }
}
