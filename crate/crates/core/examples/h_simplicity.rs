//! Decide H-simplicity for a few algebras and print the certificates.

use taftlie::construct::{build_l_alpha, build_l_gamma};
use taftlie::cyclotomic::CyclotomicField;
use taftlie::hmod::{make_dual_idempotent_example, HModuleLie};
use taftlie::liealg::{make_sl, LieAlgebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(2)?;
    let sl2 = make_sl(2, &f)?;

    let cases: Vec<(&str, HModuleLie)> = vec![
        ("L_alpha(sl2, 1)", build_l_alpha(&sl2, 2, &f.one())?),
        ("L_alpha(sl2, 0)", build_l_alpha(&sl2, 2, &f.zero())?),
        ("L(sl2, 0)", build_l_gamma(&sl2, 2, &f.zero())?),
        ("sl2 + sl2, trivial", HModuleLie::trivial_taft(sl2.direct_sum(&sl2)?)?),
        ("abelian 2, trivial", HModuleLie::trivial_taft(LieAlgebra::abelian(&f, 2))?),
        ("gl2 with idempotents", make_dual_idempotent_example()?),
    ];
    for (name, m) in &cases {
        let verdict = m.is_h_simple();
        println!("{name:<22} {}", serde_json::to_string(&verdict.to_json())?);
    }
    Ok(())
}
