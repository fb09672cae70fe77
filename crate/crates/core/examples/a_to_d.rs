//! The A_{n-1} family with a section becomes the versal D_n family.
use adcover::singularity::{a_to_d_transform, versal, versal_with_section, SingType};
use adcover::symkernel::MPoly;

fn main() -> adcover::Result<()> {
    for n in 3..=6 {
        let with_section = versal_with_section(n)?;
        let d = a_to_d_transform(&with_section)?;
        let renamed = d.equation.subs(&[("u", MPoly::var("y"))])?;
        println!("n = {n}");
        println!("  {}", with_section.equation);
        println!("  -> {}", d.equation);
        println!(
            "  central fibre {}, versal D_{n}: {}",
            d.central_fiber(),
            renamed == versal(SingType::d(n))?.equation
        );
    }
    Ok(())
}
