//! Classify a small corpus and print the recovered invariants.

use taftlie::classify::classify;
use taftlie::construct::{build_l_alpha, build_l_gamma};
use taftlie::cyclotomic::CyclotomicField;
use taftlie::liealg::make_sl;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in [2usize, 3] {
        let f = CyclotomicField::get(m)?;
        for n in [2usize, 3] {
            let b = make_sl(n, &f)?;
            let corpus = [
                (format!("L_alpha(sl{n}, 0)"), build_l_alpha(&b, m, &f.zero())?),
                (format!("L_alpha(sl{n}, 1)"), build_l_alpha(&b, m, &f.one())?),
                (format!("L(sl{n}, zeta)"), build_l_gamma(&b, m, &f.zeta())?),
                (format!("L(sl{n}, 0)"), build_l_gamma(&b, m, &f.zero())?),
            ];
            for (name, alg) in &corpus {
                let r = classify(alg)?;
                let gamma = r.gamma.as_ref().map(|g| g.to_string()).unwrap_or_else(|| "-".into());
                println!("m={m} {name:<18} {:<22} gamma={gamma:<14} t={:?} B={:?}",
                    r.case.name(), r.t, r.b_profile);
            }
        }
    }
    Ok(())
}
