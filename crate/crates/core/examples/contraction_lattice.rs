//! Reduction morphisms on strata: tails collapse to A and D points.
use adcover::trees::{contract, enumerate_strata, WeightVector};

fn main() -> adcover::Result<()> {
    let n = 6;
    let w = WeightVector::for_window(n, 2, Some(2))?;
    let steps = [(3, Some(2)), (3, Some(3)), (5, Some(5))];
    for t in enumerate_strata(n, &w, Some(2))?
        .iter()
        .filter(|t| t.components.len() > 1)
    {
        let mut line = t.certificate();
        let mut cur = (t.clone(), w.clone());
        for (k, l) in steps {
            let next = WeightVector::for_window(n, k, l)?;
            let c = contract(&cur.0, &cur.1, &next)?;
            line.push_str(&format!("  ->({k},{}) {}", l.unwrap(), c.certificate()));
            cur = (c, next);
        }
        println!("{line}");
    }
    Ok(())
}
