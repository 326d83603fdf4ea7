//! Extrinsic geometry of the quaternionic triple space Ω_{4n,4} (definite) in
//! the sphere of radius √3: the 14-member normal frame, the minimality trace
//! identity, the shape operator at the standard basis point, and the austere
//! test.
//!
//! The 14th normal carries a 1/√6 factor that leaves Q(√2), so every matrix is
//! stored as √(s²)·A with its squared scale s² ∈ {2, 6} tracked separately;
//! all exact checks are phrased in the scaled quantities, whose vanishing or
//! orthogonality is equivalent to the unscaled statements.

use crate::clifford::{build_system, CliffordSystem, Family};
use crate::frames::{oct_matmul, OctFrame};
use crate::linalg::{dot, Mat};
use crate::octonion::Octonion;
use crate::omega::{is_member, OmegaPoint};
use crate::scalar::{rat, QSqrt2, Rational, Scalar, Tol};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExtGeomError {
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("point is not a member of the quaternionic triple space")]
    NotAMember,
    #[error("normal index must be 1..=14, got {0}")]
    BadNormalIndex(usize),
}

/// One normal-frame matrix, stored as scaled = √(s²)·A with s² ∈ {2, 6}.
#[derive(Clone)]
pub struct ScaledNormal<S> {
    pub scaled: Mat<S>,
    pub scale_sq: i64,
}

/// The 14 symmetric traceless matrices A_β whose fields x ↦ A_β·x form an
/// orthonormal normal frame of Ω_{4n,4} inside the sphere, ordered
/// (A_0^f, A_1^f, A_2^f, A_3^f, A_0^g, …, A_3^h, A_13, A_14).
#[derive(Clone)]
pub struct NormalFrame<S> {
    pub n: usize,
    mats: Vec<ScaledNormal<S>>,
}

impl<S: Scalar> NormalFrame<S> {
    pub const COUNT: usize = 14;

    /// β is 1-based, matching the ξ_β subscripts.
    pub fn normal(&self, beta: usize) -> Result<&ScaledNormal<S>, ExtGeomError> {
        if (1..=Self::COUNT).contains(&beta) {
            Ok(&self.mats[beta - 1])
        } else {
            Err(ExtGeomError::BadNormalIndex(beta))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &ScaledNormal<S>> {
        self.mats.iter()
    }

    /// √(s²)·ξ_β at the point x, i.e. the scaled matrix applied to x.
    pub fn scaled_normal_at(&self, beta: usize, x: &[S]) -> Result<Vec<S>, ExtGeomError> {
        Ok(self.normal(beta)?.scaled.mul_vec(x))
    }
}

impl NormalFrame<f64> {
    /// The honest unit normal ξ_β(x) = A_β·x in float coordinates.
    pub fn normal_at(&self, beta: usize, x: &[f64]) -> Result<Vec<f64>, ExtGeomError> {
        let sn = self.normal(beta)?;
        let inv = 1.0 / (sn.scale_sq as f64).sqrt();
        Ok(sn.scaled.mul_vec(x).into_iter().map(|v| v * inv).collect())
    }
}

/// The n-fold block diagonal of the 4×4 row-convention quaternion blocks D_i
/// (the transposes of the column-convention left multiplications E_i).
fn d_tilde<S: Scalar>(sys: &CliffordSystem<S>, i: usize) -> Mat<S> {
    sys.generator(i - 1).transpose()
}

/// Assembles the 14 displayed matrices on R^{12n}, exactly.
pub fn normal_frame<S: Scalar>(n: usize) -> Result<NormalFrame<S>, ExtGeomError> {
    if n < 3 {
        return Err(ExtGeomError::BadDimension(
            "the triple space needs n ≥ 3 quaternion slots".into(),
        ));
    }
    let sys: CliffordSystem<S> = build_system(4, n, Family::Definite).expect("definite m=4 system");
    let l = 4 * n;
    let id = Mat::<S>::identity(l);
    let zero = Mat::<S>::zeros(l, l);
    let neg_id = id.neg();
    let mut mats = Vec::with_capacity(14);
    // √2·A_0^f, then √2·A_i^f for i = 1..3; same pattern for g and h.
    let push2 = |mats: &mut Vec<ScaledNormal<S>>, grid: Vec<Vec<&Mat<S>>>| {
        mats.push(ScaledNormal {
            scaled: Mat::from_blocks(&grid),
            scale_sq: 2,
        });
    };
    push2(
        &mut mats,
        vec![
            vec![&zero, &id, &zero],
            vec![&id, &zero, &zero],
            vec![&zero, &zero, &zero],
        ],
    );
    let ds: Vec<Mat<S>> = (1..4).map(|i| d_tilde(&sys, i)).collect();
    let neg_ds: Vec<Mat<S>> = ds.iter().map(Mat::neg).collect();
    for i in 0..3 {
        push2(
            &mut mats,
            vec![
                vec![&zero, &neg_ds[i], &zero],
                vec![&ds[i], &zero, &zero],
                vec![&zero, &zero, &zero],
            ],
        );
    }
    push2(
        &mut mats,
        vec![
            vec![&zero, &zero, &zero],
            vec![&zero, &zero, &id],
            vec![&zero, &id, &zero],
        ],
    );
    for i in 0..3 {
        push2(
            &mut mats,
            vec![
                vec![&zero, &zero, &zero],
                vec![&zero, &zero, &neg_ds[i]],
                vec![&zero, &ds[i], &zero],
            ],
        );
    }
    push2(
        &mut mats,
        vec![
            vec![&zero, &zero, &id],
            vec![&zero, &zero, &zero],
            vec![&id, &zero, &zero],
        ],
    );
    for i in 0..3 {
        push2(
            &mut mats,
            vec![
                vec![&zero, &zero, &neg_ds[i]],
                vec![&zero, &zero, &zero],
                vec![&ds[i], &zero, &zero],
            ],
        );
    }
    // √2·A_13 = diag(I, 0, −I)
    push2(
        &mut mats,
        vec![
            vec![&id, &zero, &zero],
            vec![&zero, &zero, &zero],
            vec![&zero, &zero, &neg_id],
        ],
    );
    // √6·A_14 = diag(I, −2I, I)
    let minus_two = id.scale(&S::from_int(-2));
    mats.push(ScaledNormal {
        scaled: Mat::from_blocks(&[
            vec![&id, &zero, &zero],
            vec![&zero, &minus_two, &zero],
            vec![&zero, &zero, &id],
        ]),
        scale_sq: 6,
    });
    Ok(NormalFrame { n, mats })
}

/// Checks, in scaled form, that the normal fields are symmetric, traceless,
/// unit, pairwise orthogonal and orthogonal to the position at a member x.
pub fn verify_normal_frame<S: Scalar>(frame: &NormalFrame<S>, x: &[S], tol: Tol) -> bool {
    let vals: Vec<(Vec<S>, i64)> = frame
        .mats
        .iter()
        .map(|sn| (sn.scaled.mul_vec(x), sn.scale_sq))
        .collect();
    for sn in &frame.mats {
        if !sn.scaled.trace().within(tol.residual) {
            return false;
        }
        if !sn.scaled.is_symmetric(tol) {
            return false;
        }
    }
    for (v, _) in &vals {
        if !dot(v, &x.to_vec()).within(tol.residual) {
            return false;
        }
    }
    for (i, (vi, si)) in vals.iter().enumerate() {
        for (j, (vj, _)) in vals.iter().enumerate() {
            let form = dot(vi, vj);
            if i == j {
                if !(form - &S::from_int(*si)).within(tol.residual * 10.0) {
                    return false;
                }
            } else if !form.within(tol.residual * 10.0) {
                return false;
            }
        }
    }
    true
}

/// The mean-curvature trace term for the β-th normal, scaled by √(s_β²):
/// −Trace(M_β) + (1/3)⟨M_β x, x⟩ + Σ_α s_α⁻²·⟨M_β(M_α x), M_α x⟩, which
/// vanishes exactly iff the honest component does. Minimality makes it 0 at
/// every member.
pub fn mean_curvature_scaled<S: Scalar>(
    frame: &NormalFrame<S>,
    p: &OmegaPoint<S>,
    beta: usize,
    tol: Tol,
) -> Result<S, ExtGeomError> {
    let sys: CliffordSystem<S> =
        build_system(4, frame.n, Family::Definite).expect("definite m=4 system");
    if !is_member(&sys, p, tol).map_err(|_| ExtGeomError::NotAMember)? {
        return Err(ExtGeomError::NotAMember);
    }
    let x = p.concat();
    let m_beta = &frame.normal(beta)?.scaled;
    let mbx = m_beta.mul_vec(&x);
    let third = S::from_int(3).recip().expect("3 is invertible");
    let mut acc = -m_beta.trace() + (dot(&mbx, &x) * &third);
    for sn in &frame.mats {
        let xi = sn.scaled.mul_vec(&x);
        let term = dot(&m_beta.mul_vec(&xi), &xi);
        let inv_s2 = S::from_int(sn.scale_sq).recip().expect("scale nonzero");
        acc = acc + term * &inv_s2;
    }
    Ok(acc)
}

/// The honest (unscaled) mean-curvature component in float coordinates.
pub fn mean_curvature_component(
    frame: &NormalFrame<f64>,
    p: &OmegaPoint<f64>,
    beta: usize,
    tol: Tol,
) -> Result<f64, ExtGeomError> {
    let scaled = mean_curvature_scaled(frame, p, beta, tol)?;
    Ok(scaled / (frame.normal(beta)?.scale_sq as f64).sqrt())
}

/// Eigenvalues as exact multiples of 1/√6, with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub entries: Vec<(Rational, usize)>,
}

impl Spectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn trace_coeff(&self) -> Rational {
        self.entries
            .iter()
            .map(|(c, m)| c * Rational::from_integer((*m as i64).into()))
            .sum()
    }
}

/// "c/√6" for integer c, "p/(q√6)" otherwise; matches the usual notation.
pub fn eigenvalue_string(c: &Rational) -> String {
    if c.denom() == &num_bigint::BigInt::from(1) {
        format!("{}/√6", c.numer())
    } else {
        format!("{}/({}√6)", c.numer(), c.denom())
    }
}

impl Serialize for Spectrum {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (c, m) in &self.entries {
            let mut item = serde_json::Map::new();
            item.insert(
                "eigenvalue".into(),
                serde_json::Value::String(eigenvalue_string(c)),
            );
            item.insert("multiplicity".into(), serde_json::Value::from(*m as u64));
            seq.serialize_element(&item)?;
        }
        seq.end()
    }
}

/// The eigenvalue multiset is invariant under negation (with multiplicities).
pub fn austere_test(s: &Spectrum) -> bool {
    s.entries
        .iter()
        .all(|(c, m)| s.entries.iter().any(|(c2, m2)| *c2 == -c && m2 == m))
}

/// Basis of the tangent space at x_0 = I_3, identified with the
/// skew-Hermitian quaternion matrices {X | X + conj(X)ᵗ = 0}: three imaginary
/// diagonal slots and four quaternion units per strict upper entry, 21 in all.
pub fn tangent_basis_x0<S: Scalar>() -> Vec<OctFrame<S>> {
    let mut basis = Vec::with_capacity(21);
    let zero = Octonion::<S>::zero();
    let mut mat = |entries: Vec<(usize, usize, Octonion<S>)>| {
        let mut rows = vec![vec![zero.clone(); 3]; 3];
        for (r, c, v) in entries {
            rows[r][c] = v;
        }
        basis.push(OctFrame::from_rows(rows));
    };
    for r in 0..3 {
        for q in 1..4 {
            mat(vec![(r, r, Octonion::basis(q))]);
        }
    }
    for r in 0..3 {
        for s in (r + 1)..3 {
            for q in 0..4 {
                let u: Octonion<S> = Octonion::basis(q);
                mat(vec![(r, s, u.clone()), (s, r, -u.conj())]);
            }
        }
    }
    basis
}

fn conj_transpose<S: Scalar>(m: &OctFrame<S>) -> OctFrame<S> {
    OctFrame::from_rows(
        (0..m.n)
            .map(|c| (0..m.k).map(|r| m.at(r, c).conj()).collect())
            .collect(),
    )
}

/// Matrix of the scaled shape operator √(s²)·A_{ξ_β} at x_0 (n = 3) on the
/// orthonormalized 21-dimensional tangent basis: X ↦ −(Y − conj(Y)ᵗ)/2 with
/// Y = Q_β·X, where Q_β is the quaternion-matrix form of the β-th normal
/// field. The off-diagonal basis matrices carry a 1/√2 so the basis is
/// orthonormal and the operator matrix comes out exactly symmetric.
pub fn shape_operator_scaled<S: Scalar>(beta: usize) -> Result<Mat<S>, ExtGeomError> {
    let q = normal_quaternion_matrix::<S>(beta)?;
    let h = S::inv_sqrt2();
    let sqrt2 = S::from_int(2) * &S::inv_sqrt2();
    let basis: Vec<OctFrame<S>> = tangent_basis_x0::<S>()
        .into_iter()
        .enumerate()
        .map(|(i, b)| if i < 9 { b } else { b.map(|v| v.clone() * &h) })
        .collect();
    let half = S::from_int(2).recip().expect("2 is invertible");
    let columns: Vec<Vec<S>> = basis
        .iter()
        .map(|x| {
            let y = oct_matmul(&q, x);
            let yct = conj_transpose(&y);
            // −(Y − conj(Y)ᵗ)/2, then read coefficients off the basis slots.
            let mut coeffs = Vec::with_capacity(21);
            let entry = |r: usize, c: usize, t: usize| -> S {
                let v = y.at(r, c).coeff(t).clone() - yct.at(r, c).coeff(t);
                -(v * &half)
            };
            for r in 0..3 {
                for t in 1..4 {
                    coeffs.push(entry(r, r, t));
                }
            }
            for r in 0..3 {
                for s in (r + 1)..3 {
                    for t in 0..4 {
                        // unit off-diagonal basis: B' = B/√2, so c = √2·entry
                        coeffs.push(entry(r, s, t) * &sqrt2);
                    }
                }
            }
            coeffs
        })
        .collect();
    Ok(Mat::from_fn(21, 21, |r, c| columns[c][r].clone()))
}

/// Q_β ∈ M_3(H) with ξ_β(x) = Q_β·x under the row-stacking identification
/// R^36 ≅ M_3(H); returned scaled by √(s_β²).
fn normal_quaternion_matrix<S: Scalar>(beta: usize) -> Result<OctFrame<S>, ExtGeomError> {
    if !(1..=14).contains(&beta) {
        return Err(ExtGeomError::BadNormalIndex(beta));
    }
    let zero = Octonion::<S>::zero();
    let one = Octonion::<S>::one();
    let build = |entries: Vec<(usize, usize, Octonion<S>)>| {
        let mut rows = vec![vec![zero.clone(); 3]; 3];
        for (r, c, v) in entries {
            rows[r][c] = v;
        }
        OctFrame::from_rows(rows)
    };
    let q = match beta {
        // f-block couples rows a and b, g-block b and c, h-block c and a.
        1..=4 => {
            let u: Octonion<S> = Octonion::basis(beta - 1);
            if beta == 1 {
                build(vec![(0, 1, one.clone()), (1, 0, one.clone())])
            } else {
                build(vec![(0, 1, u.clone()), (1, 0, -u)])
            }
        }
        5..=8 => {
            let u: Octonion<S> = Octonion::basis(beta - 5);
            if beta == 5 {
                build(vec![(1, 2, one.clone()), (2, 1, one.clone())])
            } else {
                build(vec![(1, 2, u.clone()), (2, 1, -u)])
            }
        }
        9..=12 => {
            let u: Octonion<S> = Octonion::basis(beta - 9);
            if beta == 9 {
                build(vec![(2, 0, one.clone()), (0, 2, one.clone())])
            } else {
                // mirrors the displayed A_i^h, which negates the gradient form
                build(vec![(2, 0, -u.clone()), (0, 2, u)])
            }
        }
        13 => build(vec![(0, 0, one.clone()), (2, 2, -one.clone())]),
        _ => build(vec![
            (0, 0, one.clone()),
            (1, 1, one.scale(&S::from_int(-2))),
            (2, 2, one.clone()),
        ]),
    };
    Ok(q)
}

/// Certified spectrum of the shape operator for ξ_14 at x_0 (n = 3): for each
/// claimed eigenvalue c/√6 the rank deficiency of √6·A − c·I is computed by
/// exact elimination, and the multiplicities must exhaust all 21 dimensions.
pub fn certified_xi14_spectrum() -> Result<Spectrum, ExtGeomError> {
    let op: Mat<QSqrt2> = shape_operator_scaled(14)?;
    debug_assert_eq!(op, op.transpose());
    let claims = [rat(-1, 1), rat(1, 2), rat(2, 1)];
    let tol = Tol::default();
    let mut entries = Vec::new();
    for c in claims {
        let shifted = op.sub(&Mat::identity(21).scale(&QSqrt2::from_rational(c.clone())));
        let deficiency = 21 - shifted.rank(tol);
        entries.push((c, deficiency));
    }
    let spectrum = Spectrum { entries };
    if spectrum.total_multiplicity() != 21 {
        return Err(ExtGeomError::BadDimension(format!(
            "claimed multiplicities cover {} of 21 dimensions",
            spectrum.total_multiplicity()
        )));
    }
    Ok(spectrum)
}

/// Scaled shape-operator matrix for any normal in float mode, for exploration.
/// Only the ξ_14 spectrum is certified; everything else is advisory.
pub fn shape_operator_advisory(beta: usize) -> Result<Mat<f64>, ExtGeomError> {
    let scaled: Mat<f64> = shape_operator_scaled(beta)?;
    let s2 = if beta == 14 { 6.0f64 } else { 2.0 };
    Ok(scaled.scale(&(1.0 / s2.sqrt())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::seeded_exact_orthogonal;
    use crate::omega::sample;
    use crate::witness;

    #[test]
    fn frame_matrices_match_displays() {
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        // √2·A_13 = diag(I, 0, −I) and √6·A_14 = diag(I, −2I, I).
        let a13 = &frame.normal(13).unwrap().scaled;
        let a14 = &frame.normal(14).unwrap().scaled;
        for j in 0..12 {
            assert_eq!(a13[(j, j)], QSqrt2::one());
            assert_eq!(a13[(12 + j, 12 + j)], QSqrt2::zero());
            assert_eq!(a13[(24 + j, 24 + j)], -QSqrt2::one());
            assert_eq!(a14[(j, j)], QSqrt2::one());
            assert_eq!(a14[(12 + j, 12 + j)], QSqrt2::from_int(-2));
            assert_eq!(a14[(24 + j, 24 + j)], QSqrt2::one());
        }
        assert!(normal_frame::<QSqrt2>(2).is_err());
    }

    #[test]
    fn normals_orthonormal_at_members() {
        let tol = Tol::default();
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        let x0 = witness::x0_quaternionic(3);
        assert!(verify_normal_frame(&frame, &x0.concat(), tol));
        // still orthonormal after an exact rotation of the member
        let moved = x0.rotate(&seeded_exact_orthogonal(3, 2));
        assert!(verify_normal_frame(&frame, &moved.concat(), tol));
    }

    #[test]
    fn scaled_normals_match_gradients() {
        // The f/g/h normals are the corresponding constraint gradients: check
        // √2·ξ_1 = ∇f_0 and √2·ξ_2 = ∇f_1 at x_0.
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        let sys = build_system::<QSqrt2>(4, 3, Family::Definite).unwrap();
        let x0 = witness::x0_quaternionic(3);
        let grads = crate::omega::gradients(&sys, &x0).unwrap();
        let x = x0.concat();
        // canonical order: f_0 at index 3, f_1 at 4
        assert_eq!(frame.scaled_normal_at(1, &x).unwrap(), grads[3]);
        assert_eq!(frame.scaled_normal_at(2, &x).unwrap(), grads[4]);
        // g_0 at 3 + m = 7, h_0 at 3 + 2m = 11
        assert_eq!(frame.scaled_normal_at(5, &x).unwrap(), grads[7]);
        assert_eq!(frame.scaled_normal_at(9, &x).unwrap(), grads[11]);
    }

    #[test]
    fn minimality_at_x0_exact() {
        let tol = Tol::default();
        for n in [3usize, 4] {
            let frame: NormalFrame<QSqrt2> = normal_frame(n).unwrap();
            let x0 = witness::x0_quaternionic(n);
            for beta in 1..=14 {
                let v = mean_curvature_scaled(&frame, &x0, beta, tol).unwrap();
                assert!(v.is_zero(), "n={n} β={beta}: {v}");
            }
        }
    }

    #[test]
    fn minimality_at_rotated_members_exact() {
        let tol = Tol::default();
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        let x0 = witness::x0_quaternionic(3);
        for seed in 0..2u64 {
            let p = x0.rotate(&seeded_exact_orthogonal(3, seed));
            for beta in [1usize, 4, 13, 14] {
                let v = mean_curvature_scaled(&frame, &p, beta, tol).unwrap();
                assert!(v.is_zero(), "seed={seed} β={beta}");
            }
        }
    }

    #[test]
    fn minimality_on_float_samples() {
        let tol = Tol::default();
        let frame: NormalFrame<f64> = normal_frame(3).unwrap();
        let sys = build_system::<f64>(4, 3, Family::Definite).unwrap();
        for seed in 0..5u64 {
            let p = sample(&sys, seed, tol).unwrap();
            for beta in 1..=14 {
                let scaled = mean_curvature_scaled(&frame, &p, beta, tol).unwrap();
                let s2 = frame.normal(beta).unwrap().scale_sq as f64;
                assert!(
                    (scaled / s2.sqrt()).abs() <= 1e-8,
                    "seed={seed} β={beta}: {scaled}"
                );
            }
        }
    }

    #[test]
    fn non_members_are_rejected() {
        let tol = Tol::default();
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        let x0 = witness::x0_quaternionic(3);
        let bad = OmegaPoint::new(x0.a.clone(), x0.a.clone(), x0.c.clone());
        assert_eq!(
            mean_curvature_scaled(&frame, &bad, 1, tol).unwrap_err(),
            ExtGeomError::NotAMember
        );
    }

    #[test]
    fn tangent_space_matches_kernel_of_differential() {
        // The 21 skew-Hermitian basis matrices all lie in ker(dF) at x_0, and
        // the kernel has dimension exactly 21: the two descriptions agree.
        let tol = Tol::default();
        let sys = build_system::<QSqrt2>(4, 3, Family::Definite).unwrap();
        let x0 = witness::x0_quaternionic(3);
        let jac = crate::omega::jacobian(&sys, &x0).unwrap();
        assert_eq!(jac.kernel_basis(tol).len(), 21);
        for (i, x) in tangent_basis_x0::<QSqrt2>().iter().enumerate() {
            let coords: Vec<QSqrt2> = (0..3)
                .flat_map(|r| crate::octonion::to_reals(x.row(r)))
                .map(|v: QSqrt2| {
                    // quaternion coordinates: drop the four zero octonion slots
                    v
                })
                .collect();
            // Keep only the 4 quaternion coefficients per entry.
            let mut quat_coords = Vec::with_capacity(36);
            for chunk in coords.chunks(8) {
                quat_coords.extend_from_slice(&chunk[..4]);
                assert!(chunk[4..].iter().all(QSqrt2::is_zero));
            }
            let image = jac.mul_vec(&quat_coords);
            assert!(image.iter().all(QSqrt2::is_zero), "basis element {i}");
        }
    }

    #[test]
    fn certified_spectrum_values() {
        let s = certified_xi14_spectrum().unwrap();
        assert_eq!(
            s.entries,
            vec![(rat(-1, 1), 10), (rat(1, 2), 8), (rat(2, 1), 3)]
        );
        assert_eq!(s.total_multiplicity(), 21);
        // trace consistency with minimality: −10 + 4 + 6 = 0
        assert_eq!(s.trace_coeff(), rat(0, 1));
        assert!(!austere_test(&s), "the spectrum is not negation-symmetric");
    }

    #[test]
    fn shape_operator_is_symmetric() {
        let op: Mat<QSqrt2> = shape_operator_scaled(14).unwrap();
        assert_eq!(op, op.transpose());
        // √6·A has integer spectrum {−1, 1/2, 2}: (A+1)(A−1/2)(A−2) = 0.
        let id = Mat::<QSqrt2>::identity(21);
        let p1 = op.add(&id);
        let p2 = op.sub(&id.scale(&QSqrt2::new(rat(1, 2), rat(0, 1))));
        let p3 = op.sub(&id.scale(&QSqrt2::from_int(2)));
        let zero = p1.matmul(&p2).matmul(&p3);
        assert!(zero.entries().iter().all(QSqrt2::is_zero));
    }

    #[test]
    fn austere_test_cases() {
        let symmetric = Spectrum {
            entries: vec![(rat(-1, 1), 2), (rat(1, 1), 2)],
        };
        assert!(austere_test(&symmetric));
        let zero_only = Spectrum {
            entries: vec![(rat(0, 1), 5)],
        };
        assert!(austere_test(&zero_only));
        let lopsided = Spectrum {
            entries: vec![(rat(-1, 1), 2), (rat(1, 1), 3)],
        };
        assert!(!austere_test(&lopsided));
    }

    #[test]
    fn advisory_operators_exist_for_all_normals() {
        for beta in 1..=14 {
            let op = shape_operator_advisory(beta).unwrap();
            assert_eq!(op.rows(), 21);
            // self-adjointness survives the float scaling
            let defect = op.sub(&op.transpose());
            assert!(defect.entries().iter().all(|v| v.abs() < 1e-12));
        }
        assert!(shape_operator_advisory(0).is_err());
        assert!(shape_operator_advisory(15).is_err());
    }

    #[test]
    fn quaternion_normal_matrices_act_like_the_big_ones() {
        // Q_β·x under row stacking must reproduce A_β·x on quaternion input.
        let frame: NormalFrame<QSqrt2> = normal_frame(3).unwrap();
        let x0 = witness::x0_quaternionic(3);
        let x = x0.concat();
        for beta in 1..=14usize {
            let q = normal_quaternion_matrix::<QSqrt2>(beta).unwrap();
            let x_mat = crate::omega::point_to_frame(&OmegaPoint::new(
                pad_quat(&x0.a),
                pad_quat(&x0.b),
                pad_quat(&x0.c),
            ))
            .unwrap();
            let y = oct_matmul(&q, &x_mat);
            let via_big = frame.scaled_normal_at(beta, &x).unwrap();
            let mut via_quat = Vec::with_capacity(36);
            for r in 0..3 {
                for c in 0..3 {
                    let o = y.at(r, c);
                    via_quat.extend(o.coeffs()[..4].to_vec());
                    assert!(o.coeffs()[4..].iter().all(QSqrt2::is_zero));
                }
            }
            assert_eq!(via_quat, via_big, "β={beta}");
        }
    }

    fn pad_quat(v: &[QSqrt2]) -> Vec<QSqrt2> {
        // H^n coordinates → O^n coordinates with zero upper half per slot.
        let mut out = Vec::with_capacity(v.len() * 2);
        for chunk in v.chunks(4) {
            out.extend_from_slice(chunk);
            out.extend(std::iter::repeat(QSqrt2::zero()).take(4));
        }
        out
    }
}
