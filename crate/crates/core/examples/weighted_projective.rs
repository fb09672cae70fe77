//! Normal forms of branch divisors and points of the weighted projective stacks.
use adcover::singularity::{normal_form, wps_equal, wps_weights};
use adcover::symkernel::Rational;

fn main() -> adcover::Result<()> {
    let f = "x^3 - 3*x^2 + 5".parse()?;
    let nf = normal_form(&f)?;
    let coeffs: Vec<String> = nf.coeffs.iter().map(ToString::to_string).collect();
    println!("{f}: shift {}, coefficients [{}]", nf.shift, coeffs.join(", "));

    let w = wps_weights(4, false)?;
    println!("unpointed n = 4 weights {w:?}");
    let p: Vec<Rational> = (1..=w.len() as i64).map(Rational::from_int).collect();
    let lambda = Rational::new(-2, 3);
    let q: Vec<Rational> = p.iter().zip(&w).map(|(c, &e)| c.clone() * lambda.pow(e)).collect();
    println!("{p:?} ~ {q:?}: {}", wps_equal(&p, &q, &w)?);
    Ok(())
}
