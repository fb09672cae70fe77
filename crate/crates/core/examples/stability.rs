//! W-stability, parity and genus of a marked tree.
use adcover::symkernel::Rational;
use adcover::trees::{
    arithmetic_genus, is_stable, parity_certificate, stratum_label, Component, MarkedPoint, MarkedTree, WeightVector,
};

fn main() -> adcover::Result<()> {
    // τ and two simple points on the root, a tail with three simple points
    let tree = MarkedTree {
        components: vec![
            Component {
                points: vec![MarkedPoint::tau(), MarkedPoint::branch(1), MarkedPoint::branch(1)],
            },
            Component {
                points: vec![MarkedPoint::branch(1); 3],
            },
        ],
        edges: vec![(0, 1)],
    };
    for alpha in ["1/2", "1/3", "1/4"] {
        let w = WeightVector::unpointed(4, alpha.parse::<Rational>()?)?;
        let report = is_stable(&tree, &w)?;
        print!("alpha = {alpha}: stable {}", report.stable);
        if report.stable {
            print!(", {:?}", stratum_label(&tree, &w)?);
        }
        println!();
    }
    println!("parity certificate {:?}", parity_certificate(&tree)?);
    println!("genus {}", arithmetic_genus(&tree)?.genus);
    Ok(())
}
