//! Boundary strata of H_n[k] and H_n[k, l] by codimension.
use std::collections::BTreeMap;

use adcover::trees::{enumerate_strata, WeightVector};

fn main() -> adcover::Result<()> {
    let n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5).max(3);
    for (k, l) in [(1, None), (2, None), (n - 1, None), (1, Some(1)), (2, Some(2))] {
        let w = WeightVector::for_window(n, k, l)?;
        let strata = enumerate_strata(n, &w, None)?;
        let mut by_codim: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &strata {
            *by_codim.entry(t.components.len() - 1).or_default() += 1;
        }
        println!(
            "n = {n}, window ({k}, {l:?}): {} strata, by codim {by_codim:?}",
            strata.len()
        );
    }
    let w = WeightVector::for_window(n, 1, None)?;
    for t in enumerate_strata(n, &w, Some(1))? {
        println!("  {}", t.certificate());
    }
    Ok(())
}
