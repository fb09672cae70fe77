//! Monomial bases of Tjurina algebras.
use adcover::singularity::{tjurina_basis, SingType};

fn main() -> adcover::Result<()> {
    for t in [
        SingType::a(2),
        SingType::a(5),
        SingType::d(2),
        SingType::d(4),
        SingType::d(7),
    ] {
        let basis = tjurina_basis(t)?;
        let shown: Vec<String> = basis.iter().map(ToString::to_string).collect();
        println!("{t:?}: dim {} = {{{}}}", basis.len(), shown.join(", "));
    }
    Ok(())
}
