//! H-codimensions of L(sl2, 0) and of sl2 with the trivial action.

use taftlie::codim::{check_bound, enumerate_spanning, DEFAULT_BUDGET};
use taftlie::construct::build_l_gamma;
use taftlie::cyclotomic::CyclotomicField;
use taftlie::hmod::HModuleLie;
use taftlie::liealg::make_sl;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(2)?;
    let sl2 = make_sl(2, &f)?;
    let l = build_l_gamma(&sl2, 2, &f.zero())?;

    let words = enumerate_spanning(2, l.hopf())?;
    println!("{} spanning words in degree 2, first: {}", words.len(), words[0].display(l.hopf()));

    for n in 1..=2 {
        let (r, _) = check_bound(&l, n, DEFAULT_BUDGET)?;
        println!("L(sl2, 0): c_{n} = {} <= {}", r.c_n, r.bound);
    }
    let triv = HModuleLie::trivial_taft(sl2)?;
    for n in 1..=2 {
        let (r, _) = check_bound(&triv, n, DEFAULT_BUDGET)?;
        println!("sl2, trivial: c_{n} = {} <= {}", r.c_n, r.bound);
    }

    match check_bound(&l, 4, 1_000_000) {
        Err(e) => println!("n = 4 with a small budget: {e}"),
        Ok((r, _)) => println!("c_4 = {}", r.c_n),
    }
    Ok(())
}
