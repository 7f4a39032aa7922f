//! Exceptional sets of two field pairs: an lcm-equivalent pair that differs at 2,
//! and Q(i) against Q(zeta12) for total ramification.

use arithsim::numfield::{IntPolynomial, NumberFieldSpec};
use arithsim::statistics::{scan, SplittingStatistic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cbrt2 = NumberFieldSpec::new("Q(cbrt 2)", IntPolynomial::from_i64(&[-2, 0, 0, 1]))?;
    let closure = NumberFieldSpec::new(
        "Q(cbrt 2, zeta3)",
        IntPolynomial::from_i64(&[9, 9, 0, 3, 6, 3, 1]),
    )?
    .with_alt_generator(3, IntPolynomial::from_i64(&[3, 0, 3, 0, -3, 0, 1]))?;
    for stat in SplittingStatistic::ALL {
        let report = scan(&cbrt2, &closure, stat, 500);
        let outside = report.unramified_exceptional();
        if outside.is_empty() {
            println!(
                "{:<7} exceptional set {:?}",
                stat.as_str(),
                report.exceptional_primes
            );
        } else {
            println!(
                "{:<7} not an equivalence for this pair: {} unramified primes differ",
                stat.as_str(),
                outside.len()
            );
        }
    }
    let one = scan(&cbrt2, &closure, SplittingStatistic::OneIndicator, 500);
    let min = scan(&cbrt2, &closure, SplittingStatistic::Min, 500);
    println!(
        "one and min disagree at the same primes: {}",
        one.exceptional_primes == min.exceptional_primes
    );

    let gaussian = NumberFieldSpec::new("Q(i)", IntPolynomial::from_i64(&[1, 0, 1]))?;
    let zeta12 = NumberFieldSpec::new("Q(zeta12)", IntPolynomial::from_i64(&[1, 0, -1, 0, 1]))?;
    let report = scan(
        &gaussian,
        &zeta12,
        SplittingStatistic::TotallyRamified,
        1000,
    );
    println!(
        "totram for Q(i) vs Q(zeta12): exceptional {:?}",
        report.exceptional_primes
    );
    Ok(())
}
