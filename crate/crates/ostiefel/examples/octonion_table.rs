//! Exact octonion arithmetic: the basis multiplication table, the identities
//! that drive the 2×2 block computations, and a non-associativity witness.
//!
//!     cargo run -p ostiefel --example octonion_table

use ostiefel::{Octonion, QSqrt2};

type Oct = Octonion<QSqrt2>;

fn e(i: usize) -> Oct {
    Octonion::basis(i)
}

fn main() {
    println!("octonion basis products e_i · e_j (rows i, columns j):\n");
    print!("{:>6}", "");
    for j in 0..8 {
        print!("{:>6}", if j == 0 { "1".into() } else { format!("e{j}") });
    }
    println!();
    for i in 0..8 {
        print!("{:>6}", if i == 0 { "1".into() } else { format!("e{i}") });
        for j in 0..8 {
            let p = e(i) * &e(j);
            let (idx, sign) = (0..8)
                .find_map(|t| {
                    if p.coeff(t) == &QSqrt2::one() {
                        Some((t, ""))
                    } else if p.coeff(t) == &(-QSqrt2::one()) {
                        Some((t, "-"))
                    } else {
                        None
                    }
                })
                .expect("basis product is a signed basis element");
            let name = if idx == 0 {
                "1".into()
            } else {
                format!("e{idx}")
            };
            print!("{:>6}", format!("{sign}{name}"));
        }
        println!();
    }

    println!("\nidentities behind the block computations:");
    for (lhs, i, j) in [
        ("e7·e2", 7, 2),
        ("e3·e6", 3, 6),
        ("e7·e3", 7, 3),
        ("e2·e6", 2, 6),
    ] {
        println!("  {lhs} = {}", e(i) * &e(j));
    }

    let left = (e(1) * &e(2)) * &e(4);
    let right = e(1) * &(e(2) * &e(4));
    println!("\nnon-associativity: (e1·e2)·e4 = {left}, but e1·(e2·e4) = {right}");

    let x = (Oct::one() + &e(4)).scale(&QSqrt2::inv_sqrt2());
    println!("\n|(1 + e4)/√2|² = {}", x.norm2());
}
