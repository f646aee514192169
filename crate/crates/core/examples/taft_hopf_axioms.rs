//! Build the Taft algebra of order 3, check its axioms and expand coproducts.

use taftlie::hopf::{make_dual_idempotent, make_taft};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h = make_taft(3)?;
    println!("dim H_9 = {}", h.dim());
    for check in &h.verify_hopf_axioms().checks {
        println!("  {:<28} {:?}", check.check, check.status);
    }

    let v = h.basis_vector(h.taft_index(0, 1).unwrap());
    for n in 1..=3 {
        let terms = h.iterated_coproduct(&v, n)?;
        println!("Delta^({n})(v) = {}", h.format_terms(&terms));
    }
    let cv2 = h.basis_vector(h.taft_index(1, 2).unwrap());
    println!("Delta(cv^2) = {}", h.format_terms(&h.iterated_coproduct(&cv2, 2)?));

    let d = make_dual_idempotent(2)?;
    println!("(FZ_2)* passes its axioms: {}", d.verify_hopf_axioms().passed());
    Ok(())
}
