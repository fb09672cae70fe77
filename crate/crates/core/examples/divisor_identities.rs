//! Symbolic divisor classes: canonical class, transport, ample forms, log MMP models.
use adcover::divcalc::{canonical_class, log_canonical_divisor, log_mmp_model, transport, verify_identities};
use adcover::symkernel::Rational;

fn main() -> adcover::Result<()> {
    println!("K unpointed = {}", canonical_class(false));
    println!("K pointed   = {}", canonical_class(true));
    for pointed in [false, true] {
        let h = log_canonical_divisor(pointed);
        println!("{h}  ->  {}", transport(&h)?);
    }
    for c in verify_identities() {
        println!("[{}] {}", if c.holds { "ok" } else { "FAIL" }, c.name);
    }
    for k in 3..=8i64 {
        let (a, b) = (Rational::new(1, k), Rational::new(k - 2, 2 * k));
        match log_mmp_model(6, &a, Some(&b)) {
            Ok(m) => println!("alpha = {a}, beta = {b}: {}", m.model),
            Err(e) => println!("alpha = {a}, beta = {b}: {e}"),
        }
    }
    Ok(())
}
