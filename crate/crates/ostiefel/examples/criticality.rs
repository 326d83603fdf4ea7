//! Regular and critical points of F(A) = A·conj(A)ᵗ − I on V_4(O⁴): exact
//! kernel dimensions, ξ-certificates, and the equivalent 42×42 Gram route.
//!
//!     cargo run -p ostiefel --release --example criticality

use ostiefel::frames::OctFrame;
use ostiefel::witness;
use ostiefel::{QSqrt2, Tol};

fn main() {
    let tol = Tol::default();

    for (name, frame) in [
        ("I_4", OctFrame::<QSqrt2>::identity(4, 4)),
        (
            "B_4  = diag(A, A),  A = (1/√2)[[e7,e3],[1,e4]]",
            witness::b4(),
        ),
        (
            "B_4' = diag(A',A'), A' = (1/√2)[[e2,−e6],[e1,−e5]]",
            witness::b4_prime(),
        ),
    ] {
        let report = frame.classify().unwrap();
        println!("{name}");
        println!(
            "  {:?}: dim V_A = {} (regular points have {})",
            report.classification, report.va_dim, report.expected_regular_dim
        );
        if let Some(xi) = &report.certificate {
            println!(
                "  certificate: skew ξ with imaginary entries, ξ·A = 0 verified: {}",
                xi.annihilates(&frame, 0.0)
            );
        }
        let det = frame.gram_g4(tol).unwrap().det().unwrap();
        println!("  det of the 42×42 gradient Gram: {det}\n");
    }

    let b4 = witness::b4();
    let xi = witness::b4_xi();
    println!("the explicit annihilator ξ = [[0,0,e1,−e6],[0,0,−e6,−e1],[−e1,e6,0,0],[e6,e1,0,0]]");
    println!("  ξ·B_4 = 0 exactly: {}", xi.annihilates(&b4, 0.0));

    let u = witness::sp2_u();
    println!("\nU = (1/√2)[[1,e1],[e2,e3]] is quaternion-unitary, yet diag(U,U) is");
    let doubled = OctFrame::block_diag(&u, &u);
    let r = doubled.classify().unwrap();
    println!(
        "  {:?} (det(I − φᵗφ) = 0: {})",
        r.classification,
        u.diag_double_critical(tol).unwrap()
    );
}
