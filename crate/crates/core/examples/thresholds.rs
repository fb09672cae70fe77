//! Which singularities a weight (α, β) allows, and the lct coincidence.
use adcover::singularity::{lct_window_check, thresholds_to_types};
use adcover::symkernel::Rational;

fn main() -> adcover::Result<()> {
    let n = 6;
    for (a, b) in [("1/2", None), ("1/3", None), ("1/4", Some("1/2")), ("1/5", Some("1/3"))] {
        let alpha: Rational = a.parse()?;
        let beta: Option<Rational> = b.map(str::parse).transpose()?;
        let t = thresholds_to_types(&alpha, beta.as_ref(), n)?;
        println!(
            "n = {n}, alpha = {a}, beta = {}: k = {}, l = {:?}",
            b.unwrap_or("-"),
            t.k,
            t.l
        );
    }
    for k in 1..=5 {
        let w = lct_window_check(k)?;
        println!("A_{k}: window end {} vs lct {}", w.threshold, w.lct);
    }
    Ok(())
}
