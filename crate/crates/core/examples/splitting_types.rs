//! Splitting types of small primes in Q(cbrt 2), Q(zeta3) and their compositum.

use arithsim::numfield::{splitting_type, IntPolynomial, NumberFieldSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let closure = NumberFieldSpec::new(
        "Q(cbrt 2, zeta3)",
        IntPolynomial::from_i64(&[9, 9, 0, 3, 6, 3, 1]),
    )?
    .with_alt_generator(3, IntPolynomial::from_i64(&[3, 0, 3, 0, -3, 0, 1]))?;
    let fields = [
        NumberFieldSpec::new("Q(cbrt 2)", IntPolynomial::from_i64(&[-2, 0, 0, 1]))?,
        NumberFieldSpec::new("Q(zeta3)", IntPolynomial::from_i64(&[1, -1, 1]))?,
        closure,
    ];
    for field in &fields {
        println!("{} = Q[x]/({})", field.label(), field.poly());
        for p in [2, 3, 5, 7, 11, 13, 31] {
            let (s, shape) = splitting_type(field, p)?;
            println!("  p = {p:>2}: S = {s:<10} (f, e) = {shape}");
        }
    }
    Ok(())
}
