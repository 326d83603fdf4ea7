//! Frames with more rows than octonion columns: the 3×2 and 4×2 witnesses,
//! certified exactly via A·conj(A)ᵗ = I.
//!
//!     cargo run -p ostiefel --example frame_witnesses

use ostiefel::witness;
use ostiefel::Tol;

fn main() {
    let tol = Tol::default();

    let block = witness::fiber_block();
    println!("2×2 block A = (1/√2)[[e7, e3], [e2, −e6]]:");
    println!("  A·conj(A)ᵗ = I₂ exactly: {}", block.defect().is_zero());
    let gram = block.conj_transpose_product();
    println!(
        "  conj(A)ᵗ·A = [[{}, {}], [{}, {}]]",
        gram.at(0, 0),
        gram.at(0, 1),
        gram.at(1, 0),
        gram.at(1, 1)
    );
    println!(
        "  right kernel of A (real dimension): {}",
        block.right_null_dim(tol)
    );

    let v32 = witness::frame_v32();
    println!(
        "\n3×2 witness (1/√2)[[e7,e3],[e2,−e6],[1,e4]] ∈ V_3(O²): {}",
        v32.is_frame(tol)
    );
    let v42 = witness::frame_v42();
    println!(
        "4×2 witness with the extra row (e1, −e5) ∈ V_4(O²): {}",
        v42.is_frame(tol)
    );
    println!("\nThree (even four) orthonormal rows fit into O², something no");
    println!("associative coordinate algebra allows.");
}
