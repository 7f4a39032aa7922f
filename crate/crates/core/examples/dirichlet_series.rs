//! Dirichlet coefficients of the Dedekind zeta function of Q(i) and of the
//! series attached to coarser statistics.

use arithsim::numfield::{IntPolynomial, NumberFieldSpec};
use arithsim::statistics::{dirichlet_coefficients, SplittingStatistic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let gaussian = NumberFieldSpec::new("Q(i)", IntPolynomial::from_i64(&[1, 0, 1]))?;
    for stat in [
        SplittingStatistic::FullType,
        SplittingStatistic::Min,
        SplittingStatistic::OneIndicator,
    ] {
        let d = dirichlet_coefficients(&gaussian, stat, 30)?;
        let shown: Vec<String> = d.coeffs.iter().map(u64::to_string).collect();
        println!("{:<5} {}", stat.as_str(), shown.join(" "));
    }
    Ok(())
}
