//! The last-row projection π(a, b, c) = c of V_3(O^n) onto the unit sphere:
//! onto (every unit vector lifts), but not submersive (the differential drops
//! rank at an explicit point).
//!
//!     cargo run -p ostiefel --example lift_and_rank

use ostiefel::clifford::Family;
use ostiefel::octonion::{from_reals, to_reals};
use ostiefel::omega::{frame_to_point, is_member, pi_differential_rank, pi_lift, sample};
use ostiefel::witness;
use ostiefel::{build_system, Octonion, QSqrt2, Tol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let tol = Tol::default();
    let n = 3;
    let sys = build_system::<QSqrt2>(8, n, Family::Definite).unwrap();

    println!("exact lifts through the three construction branches:");
    let h = QSqrt2::inv_sqrt2();
    let cases: Vec<(&str, Vec<Octonion<QSqrt2>>)> = vec![
        (
            "c = (0, 0, 1)      ",
            vec![Octonion::zero(), Octonion::zero(), Octonion::one()],
        ),
        (
            "c = (1, 0, 0)      ",
            vec![Octonion::one(), Octonion::zero(), Octonion::zero()],
        ),
        (
            "c = (1/√2, 0, e4/√2)",
            vec![
                Octonion::from_scalar(h.clone()),
                Octonion::zero(),
                Octonion::basis(4).scale(&h),
            ],
        ),
    ];
    for (label, c) in &cases {
        let frame = pi_lift(c, tol).unwrap();
        let p = frame_to_point(&frame);
        let ok = is_member(&sys, &p, tol).unwrap() && p.c == to_reals(c);
        println!("  {label} → member lifting back to c: {ok}");
    }

    let sysf = build_system::<f64>(8, n, Family::Definite).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let raw: Vec<f64> = (0..8 * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm: f64 = raw.iter().map(|v| v * v).sum::<f64>().sqrt();
        let unit: Vec<f64> = raw.iter().map(|v| v / norm).collect();
        let frame = pi_lift(&from_reals(&unit), tol).unwrap();
        let p = frame_to_point(&frame);
        let residual =
            p.c.iter()
                .zip(&unit)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
        worst = worst.max(residual);
    }
    println!("\n100 random unit vectors lifted; worst projection residual {worst:.2e}");

    let a0 = frame_to_point(&witness::nonsubmersive_a0(n));
    let rank0 = pi_differential_rank(&sys, &a0, tol).unwrap();
    println!(
        "\ndifferential rank at the obstruction point A₀ = (1/√2)[[e2,−e6,0],[e1,−e5,0],[1,e4,0]]: {rank0} (full rank is {})",
        8 * n - 1
    );
    for seed in 0..3u64 {
        let p = sample(&sysf, seed, tol).unwrap();
        println!(
            "  sampled member, seed {seed}: rank {}",
            pi_differential_rank(&sysf, &p, tol).unwrap()
        );
    }
    println!("\nThe projection is onto, yet fails to be a submersion at A₀: the tangent");
    println!("vector e2·a of the sphere is not attained by any tangent vector upstairs.");
}
