//! The projection that drops the first row of a (k+1)-frame has fibers of
//! different dimension over different base points, so it cannot be any kind of
//! fibration: kernel dimension 8(n−k) over (I_k, 0), but 8(n−k)+4 over the
//! block-diagonal point built from the special 2×2 block.
//!
//!     cargo run -p ostiefel --example fiber_jump

use ostiefel::frames::OctFrame;
use ostiefel::witness;
use ostiefel::{QSqrt2, Tol};

fn main() {
    let tol = Tol::default();
    println!("fibers of the drop-a-row projection V_(k+1)(O^n) → V_k(O^n):\n");
    println!(
        "{:>4} {:>4} {:>16} {:>16} {:>8}",
        "k", "n", "over (I_k, 0)", "over diag block", "jump"
    );
    for (k, n) in [(2usize, 3usize), (2, 4), (3, 4), (3, 5)] {
        let z0 = OctFrame::<QSqrt2>::identity(k, n);
        let d0 = z0.fiber_kernel_dim(tol).unwrap();
        let mut z1 = witness::fiber_block();
        if k > 2 {
            z1 = OctFrame::block_diag(&z1, &OctFrame::identity(k - 2, k - 2));
        }
        let z1 = z1.pad_cols(n - k);
        let d1 = z1.fiber_kernel_dim(tol).unwrap();
        println!(
            "{k:>4} {n:>4} {:>16} {:>16} {:>8}",
            format!("S^{}", d0 as i64 - 1),
            format!("S^{}", d1 as i64 - 1),
            d1 - d0
        );
    }
    println!("\nBoth fibers are spheres, but of different dimension: the fibers over");
    println!("two connected base points are not homotopy equivalent.");
}
