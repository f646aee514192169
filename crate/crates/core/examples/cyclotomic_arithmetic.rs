//! Arithmetic in Q(ζ_m) and the ζ-analogues of integers and binomials.

use taftlie::cyclotomic::{parse_scalar, q_binom, q_factorial, q_int, CyclotomicField};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = CyclotomicField::get(5)?;
    println!("Q(zeta_5) has degree {}", f.degree());

    let z = f.zeta();
    let x = parse_scalar(&f, "1 + 2*zeta - 1/3*zeta^3")?;
    let y = &x * &z.pow(4);
    println!("x = {x}");
    println!("x * zeta^4 = {y}");
    println!("1/x = {}", x.inv()?);
    println!("sum of all powers of zeta = {}", (0..5).fold(f.zero(), |acc, k| &acc + &f.zeta_pow(k)));

    let f = CyclotomicField::get(4)?;
    for n in 0..=4 {
        println!("[{n}]_zeta = {:<12} {n}!_zeta = {}", q_int(&f, n).to_string(), q_factorial(&f, n));
    }
    for k in 0..=3 {
        println!("binom(3, {k})_zeta = {}", q_binom(&f, 3, k)?);
    }
    Ok(())
}
