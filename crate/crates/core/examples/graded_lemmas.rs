//! Run the graded structure checks on an H-simple algebra.

use taftlie::construct::build_l_gamma;
use taftlie::cyclotomic::CyclotomicField;
use taftlie::hmod::HModuleLie;
use taftlie::liealg::make_sl;
use taftlie::report::Status;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(3)?;
    let sl2 = make_sl(2, &f)?;

    let m = build_l_gamma(&sl2, 3, &f.from_int(7))?;
    let report = m.verify_graded_lemmas_with_seed(2024)?;
    for c in &report.checks {
        println!("{:<34} {:?}", c.check, c.status);
    }

    // with v = 0 most lemmas have nothing to say
    let trivial = HModuleLie::trivial_taft(sl2)?;
    let report = trivial.verify_graded_lemmas()?;
    let skipped = report.checks.iter().filter(|c| c.status == Status::NotApplicable).count();
    println!("trivial action: passed={} ({} of {} checks n/a)", report.passed(), skipped, report.len());
    Ok(())
}
