//! The isomorphism between the two families and the shift isomorphisms.

use taftlie::classify::are_isomorphic_family;
use taftlie::construct::{iso_equivdef, iso_shift, verify_iso, Family, FamilyParams};
use taftlie::cyclotomic::CyclotomicField;
use taftlie::exactla::Mat;
use taftlie::liealg::make_sl;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(3)?;
    let sl2 = make_sl(2, &f)?;

    let alpha = f.from_int(2);
    let iso = iso_equivdef(&sl2, 3, &alpha)?;
    println!("L(sl2, gamma) -> L_alpha(sl2), alpha = {alpha}");
    for c in &verify_iso(&iso).checks {
        println!("  {:<16} {:?}", c.check, c.status);
    }

    for k in 0..3 {
        let iso = iso_shift(&sl2, 3, &f.one(), k, &Mat::identity(&f, 3))?;
        println!("shift by {k}: verified {}", verify_iso(&iso).passed());
    }

    let p = |a| FamilyParams::new(Family::LAlpha, sl2.clone(), 3, a);
    for (a, b) in [(f.one(), f.zeta()), (f.one(), f.from_int(2))] {
        let (label_a, label_b) = (a.to_string(), b.to_string());
        let c = are_isomorphic_family(&p(a)?, &p(b)?)?;
        println!("alpha {label_a} vs {label_b}: isomorphic={} shift={:?}", c.isomorphic, c.shift);
    }
    Ok(())
}
