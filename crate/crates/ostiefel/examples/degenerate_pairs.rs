//! The degenerate locus of the pair space W_{l,m}: Gram determinants,
//! reconstruction certificates (λ, μ, c), and the deformation curves that
//! leave the locus immediately.
//!
//!     cargo run -p ostiefel --example degenerate_pairs

use ostiefel::clifford::Family;
use ostiefel::omega::{
    deformation_curve, degeneracy, sample_w, w_member, CurveBase, CurveKind, CurvePoint, PairNorm,
};
use ostiefel::{build_system, QSqrt2, Tol};

fn main() {
    let tol = Tol::default();

    // m = 3: every unit c yields the degenerate pair (E_1 c, E_2 c).
    let sys = build_system::<QSqrt2>(3, 2, Family::NotApplicable).unwrap();
    let h = QSqrt2::inv_sqrt2();
    let mut c = vec![QSqrt2::zero(); 8];
    c[0] = h.clone();
    c[4] = h;
    let a = sys.apply(1, &c);
    let b = sys.apply(2, &c);
    let rep = degeneracy(&sys, &a, &b, tol).unwrap();
    println!("m = 3 constructed pair (E_1 c, E_2 c):");
    println!("  det of the 2m×2m Gram: {}", rep.det);
    let cert = rep.certificate.unwrap();
    println!(
        "  certificate λ = [{}, {}], μ = [{}, {}], |c| = 1, reconstruction verified",
        cert.lambda[0], cert.lambda[1], cert.mu[0], cert.mu[1]
    );

    // The definite m = 4 space has no degenerate pairs at all.
    let sys4 = build_system::<f64>(4, 3, Family::Definite).unwrap();
    let mut min_det = f64::INFINITY;
    for seed in 0..10u64 {
        let (a, b) = sample_w(&sys4, seed).unwrap();
        let det = degeneracy(&sys4, &a, &b, tol).unwrap().det;
        min_det = min_det.min(det.abs());
    }
    println!("\nm = 4 definite, 10 sampled pairs: smallest |det| = {min_det:.3e} (never zero)");

    // Deformation off the locus: the interior curve for the m = 3 base above.
    let sysf = build_system::<f64>(3, 2, Family::NotApplicable).unwrap();
    let base = CurveBase::Pair {
        a: a.iter().map(QSqrt2::to_f64).collect(),
        b: b.iter().map(QSqrt2::to_f64).collect(),
    };
    println!("\ninterior deformation curve from the degenerate base (x = 1/√2):");
    for t in [0.0, 0.2, 0.7] {
        match deformation_curve(&sysf, CurveKind::PairInterior, &base, t).unwrap() {
            CurvePoint::Pair { a: at, b: bt } => {
                let member = w_member(&sysf, &at, &bt, PairNorm::Unit, tol);
                let det = degeneracy(&sysf, &at, &bt, tol).unwrap().det;
                println!("  t = {t:>4}: in W = {member}, det g = {det:.3e}");
            }
            _ => unreachable!(),
        }
    }
    println!("\nThe curve stays inside W while the Gram determinant leaves zero for t ≠ 0.");
}
