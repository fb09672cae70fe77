//! Versal deformations of A_n and D_n with their G_m weights.
use adcover::singularity::{versal, SingType};

fn main() -> adcover::Result<()> {
    for t in [SingType::a(2), SingType::a(3), SingType::d(4), SingType::d(5)] {
        let fam = versal(t)?;
        let weights: Vec<String> = fam.weights.iter().map(|(v, w)| format!("{v}:{w}")).collect();
        println!("{t:?}");
        println!("  {}", fam.equation);
        println!("  weights {}  degree {:?}", weights.join(" "), fam.weighted_degree()?);
    }
    Ok(())
}
