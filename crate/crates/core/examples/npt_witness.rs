//! The optimal "same" element is entangled: its partial transpose has a
//! negative eigenvalue, while the separable measurement stays positive.

use qcompare::baselines::separable_solution;
use qcompare::hermlin::partial_transpose;
use qcompare::solver2oo2::{assemble_povm, TwoTwoInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>5} {:>5} {:>12} {:>12}",
        "q1", "cos", "opt F_a^T", "sep F_a^T"
    );
    for (q1, c) in [(0.5, 0.5), (0.5, 0.2), (0.7, 0.5), (0.9, 0.3), (0.5, 0.9)] {
        let inst = TwoTwoInstance::new(q1, c)?;
        let opt = assemble_povm(&inst)?;
        let sep = separable_solution(&inst)?;
        let min_opt = partial_transpose(opt.f_a(), 1)?.min_eigenvalue();
        let min_sep = partial_transpose(sep.f_a(), 1)?.min_eigenvalue();
        println!("{q1:>5.2} {c:>5.2} {min_opt:>12.6} {min_sep:>12.6}");
    }
    Ok(())
}
