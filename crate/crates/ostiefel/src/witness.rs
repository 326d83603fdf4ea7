//! Distinguished exact points used across the verification suites: the 2×2
//! blocks with octonion entries whose frame identities drive every explicit
//! computation, the 3×2 and 4×2 frames witnessing nonemptiness, the critical
//! points B_4 and B_4′ with the explicit annihilator ξ, and the base points of
//! the extrinsic-geometry and projection analyses.

use crate::frames::{OctFrame, SkewImCertificate};
use crate::octonion::Octonion;
use crate::omega::OmegaPoint;
use crate::scalar::QSqrt2;

type Oct = Octonion<QSqrt2>;

fn e(i: usize) -> Oct {
    Octonion::basis(i)
}

fn h() -> QSqrt2 {
    QSqrt2::inv_sqrt2()
}

fn scaled_rows(rows: Vec<Vec<Oct>>) -> OctFrame<QSqrt2> {
    let s = h();
    OctFrame::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(|o| o.scale(&s)).collect())
            .collect(),
    )
}

/// (1/√2)[[e7, e3], [e2, −e6]] ∈ V_2(O²); its right kernel is 4-dimensional,
/// which makes the fiber over diag-padded copies jump in dimension.
pub fn fiber_block() -> OctFrame<QSqrt2> {
    scaled_rows(vec![vec![e(7), e(3)], vec![e(2), -e(6)]])
}

/// (1/√2)[[e7, e3], [1, e4]] ∈ V_2(O²), the block whose doubling B_4 is a
/// critical point annihilated by [`b4_xi`].
pub fn b4_block() -> OctFrame<QSqrt2> {
    scaled_rows(vec![vec![e(7), e(3)], vec![Oct::one(), e(4)]])
}

/// B_4 = diag(A, A) ∈ V_4(O⁴) with A = [`b4_block`]; critical with kernel
/// dimension 80 = 22 + 22 + 22 + 14 against the regular 76.
pub fn b4() -> OctFrame<QSqrt2> {
    let a = b4_block();
    OctFrame::block_diag(&a, &a)
}

/// (1/√2)[[e2, −e6], [e1, −e5]]; its doubling B_4′ is also critical.
pub fn b4_prime_block() -> OctFrame<QSqrt2> {
    scaled_rows(vec![vec![e(2), -e(6)], vec![e(1), -e(5)]])
}

pub fn b4_prime() -> OctFrame<QSqrt2> {
    let a = b4_prime_block();
    OctFrame::block_diag(&a, &a)
}

/// The explicit annihilator of B_4:
/// ξ = [[0,0,e1,−e6],[0,0,−e6,−e1],[−e1,e6,0,0],[e6,e1,0,0]].
pub fn b4_xi() -> SkewImCertificate<QSqrt2> {
    SkewImCertificate::from_upper(
        4,
        &[(0, 2, e(1)), (0, 3, -e(6)), (1, 2, -e(6)), (1, 3, -e(1))],
    )
}

/// (1/√2)[[e7, e3], [e2, −e6], [1, e4]] ∈ V_3(O²): a 3-frame in O² — more
/// orthonormal rows than the octonion dimension count suggests possible.
pub fn frame_v32() -> OctFrame<QSqrt2> {
    scaled_rows(vec![
        vec![e(7), e(3)],
        vec![e(2), -e(6)],
        vec![Oct::one(), e(4)],
    ])
}

/// (1/√2)[[e7, e3], [e2, −e6], [e1, −e5], [1, e4]] ∈ V_4(O²).
pub fn frame_v42() -> OctFrame<QSqrt2> {
    scaled_rows(vec![
        vec![e(7), e(3)],
        vec![e(2), -e(6)],
        vec![e(1), -e(5)],
        vec![Oct::one(), e(4)],
    ])
}

/// U = (1/√2)[[1, e1], [e2, e3]] ∈ Sp(2): a quaternion-unitary 2-frame whose
/// doubling is nevertheless critical (U annihilates the column (−e5, e4)).
pub fn sp2_u() -> OctFrame<QSqrt2> {
    scaled_rows(vec![vec![Oct::one(), e(1)], vec![e(2), e(3)]])
}

/// The non-submersive base point of the projection π(a,b,c) = c on V_3(O^n):
/// A_0 = (1/√2)[[e2, −e6, 0…], [e1, −e5, 0…], [1, e4, 0…]].
pub fn nonsubmersive_a0(n: usize) -> OctFrame<QSqrt2> {
    assert!(n >= 2);
    scaled_rows(vec![
        vec![e(2), -e(6)],
        vec![e(1), -e(5)],
        vec![Oct::one(), e(4)],
    ])
    .pad_cols(n - 2)
}

/// The standard-basis member x_0 = (e^(1), e^(2), e^(3)) of Ω_{4n,4} definite,
/// n ≥ 3, in quaternion coordinates.
pub fn x0_quaternionic(n: usize) -> OmegaPoint<QSqrt2> {
    assert!(n >= 3);
    let l = 4 * n;
    let basis = |j: usize| {
        let mut v = vec![QSqrt2::zero(); l];
        v[j] = QSqrt2::one();
        v
    };
    OmegaPoint::new(basis(0), basis(4), basis(8))
}

/// The explicit member ((1,1), (i,i), (j,j))/√2 of the l=8, m=4 indefinite
/// space.
pub fn omega84_witness() -> OmegaPoint<QSqrt2> {
    let s = h();
    let mut a = vec![QSqrt2::zero(); 8];
    let mut b = vec![QSqrt2::zero(); 8];
    let mut c = vec![QSqrt2::zero(); 8];
    a[0] = s.clone();
    a[4] = s.clone();
    b[1] = s.clone();
    b[5] = s.clone();
    c[2] = s.clone();
    c[6] = s.clone();
    OmegaPoint::new(a, b, c)
}
