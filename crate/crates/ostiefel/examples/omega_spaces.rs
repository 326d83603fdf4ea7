//! The triple spaces of a Clifford system: dimensions, emptiness, and
//! deterministic witnesses wherever the general construction applies.
//!
//!     cargo run -p ostiefel --example omega_spaces

use ostiefel::clifford::Family;
use ostiefel::omega::{dimension_and_emptiness, SpaceStatus};
use ostiefel::{build_system, QSqrt2};

fn main() {
    println!(
        "{:>4} {:>4} {:>14} {:>6} {:>14}",
        "l", "m", "family", "dim", "status"
    );
    for m in 1..=8usize {
        for n in 1..=4usize {
            let families: Vec<Family> = if m % 4 == 0 {
                let mut v = vec![Family::Definite];
                v.extend((1..n).map(Family::Indefinite));
                v
            } else {
                vec![Family::NotApplicable]
            };
            for fam in families {
                let sys = build_system::<QSqrt2>(m, n, fam).unwrap();
                let c = dimension_and_emptiness(&sys);
                let status = match &c.status {
                    SpaceStatus::NonEmpty(_) => "nonempty+witness",
                    other => other.name(),
                };
                println!(
                    "{:>4} {:>4} {:>14} {:>6} {:>16}",
                    sys.l,
                    m,
                    fam.to_string(),
                    c.dim,
                    status
                );
            }
        }
    }
    println!("\nEvery `nonempty+witness` row carries a constructed point that passes the");
    println!("exact membership check; `unclassified` rows fall outside the settled");
    println!("parameter ranges (the l=16, m=8 space among them, whose nonemptiness is");
    println!("witnessed separately by the special 3×2 frame).");
}
