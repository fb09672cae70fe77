//! Weighted blow-up charts of the base-changed versal A_k family, and the D side.
use std::collections::BTreeMap;

use adcover::stablered::{base_change, central_fiber, charts, d_stable_reduction, tail_family, verify_tail_membership};
use adcover::symkernel::Rational;

fn main() -> adcover::Result<()> {
    let k = 3;
    println!("base change: {}", base_change(k)?.equation);
    for c in charts(k)? {
        let tail = tail_family(&c)?;
        let fib = central_fiber(&c)?;
        println!("chart {}: {}", c.j, c.equation);
        println!("  tail branch form {}", tail.branch_polynomial()?);
        println!(
            "  tail genus {}, attaching points {}",
            fib.tail_genus, fib.attaching_points
        );
    }
    let tail = tail_family(&charts(k)?[1])?;
    let spec: BTreeMap<String, Rational> = [
        ("e0".to_string(), Rational::new(-3, 16)),
        ("e2".to_string(), Rational::new(-3, 2)),
    ]
    .into();
    println!(
        "special tail: {:?}",
        verify_tail_membership(&tail, &spec)?.singularities
    );

    let d = d_stable_reduction(4, 1, 2)?;
    for line in &d.provenance {
        println!("D_4: {line}");
    }
    for c in &d.charts {
        println!(
            "  chart {}: section on chart {}, generic tail within target {}",
            c.j, c.section_on_chart, c.within_target
        );
    }
    Ok(())
}
