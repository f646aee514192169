//! Construct members of both families over sl_2 and inspect the action.

use taftlie::construct::{build_l_alpha, build_l_gamma};
use taftlie::cyclotomic::CyclotomicField;
use taftlie::liealg::make_sl;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(3)?;
    let sl2 = make_sl(2, &f)?;

    let a = build_l_alpha(&sl2, 3, &f.one())?;
    println!("L_alpha(sl2), alpha = 1: dim {}", a.dim());
    println!("  labels: {}", a.lie().labels().join(" "));
    println!("  module axioms: {}", a.verify_module_axioms().passed());
    println!("  grading: {:?}", a.grading()?.dims());

    for gamma in [f.zero(), f.from_int(2), f.zeta()] {
        let g = build_l_gamma(&sl2, 3, &gamma)?;
        let v = g.v_matrix().unwrap();
        println!("L(sl2, {gamma}): Lie axioms {} module axioms {} rank V = {}",
            g.lie().check_lie_axioms().passed(),
            g.verify_module_axioms().passed(),
            taftlie::exactla::rank(v));
    }

    let json = serde_json::to_string(&build_l_gamma(&sl2, 3, &f.zero())?.to_json())?;
    println!("serialized L(sl2, 0): {} bytes", json.len());
    Ok(())
}
