//! Whether unambiguous comparison is possible at all, with the witness
//! measurement for a feasible ensemble.

use qcompare::ensemble::{is_comparable, witness_povm, witness_table, MixedEnsemble, PureEnsemble};
use qcompare::hermlin::{c64, ComplexVector, HermitianOperator};

fn ket(amps: &[f64]) -> ComplexVector {
    let v = ComplexVector::from_iterator(amps.len(), amps.iter().map(|&a| c64(a, 0.0)));
    let n = v.norm();
    v / c64(n, 0.0)
}

fn report(name: &str, ens: &MixedEnsemble) -> Result<(), Box<dyn std::error::Error>> {
    let r = is_comparable(ens)?;
    println!("{name}: comparable = {}", r.comparable);
    if r.comparable {
        let povm = witness_povm(ens)?;
        for row in witness_table(&povm, ens) {
            let cells: Vec<String> = row.iter().map(|t| format!("{t:8.4}")).collect();
            println!("    {}", cells.join(" "));
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let independent = PureEnsemble::uniform(vec![
        ket(&[1.0, 0.0, 0.0]),
        ket(&[1.0, 1.0, 0.0]),
        ket(&[1.0, 1.0, 1.0]),
    ])?;
    report("three independent qutrit states", &independent.to_mixed())?;

    let dependent =
        PureEnsemble::uniform(vec![ket(&[1.0, 0.0]), ket(&[0.0, 1.0]), ket(&[1.0, 1.0])])?;
    report("three qubit states", &dependent.to_mixed())?;

    let noisy = |v: &ComplexVector| {
        HermitianOperator::outer(v, &[2])
            .scale(0.9)
            .add(&HermitianOperator::identity(&[2]).scale(0.05))
    };
    let admixed = MixedEnsemble::new(
        vec![noisy(&ket(&[1.0, 0.0])), noisy(&ket(&[0.6, 0.8]))],
        vec![0.5, 0.5],
    )?;
    report("two states with white noise", &admixed)?;
    Ok(())
}
