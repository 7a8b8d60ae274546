//! Simulated comparison experiments against the exact success probability.
//!
//! Usage: `cargo run --release --example monte_carlo -- [trials] [seed]`

use qcompare::baselines::separable_solution;
use qcompare::montecarlo::{exact_success, simulate_parallel, SimConfig};
use qcompare::solver2oo2::{assemble_povm, TwoTwoInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let trials: u64 = args.next().map_or(Ok(1_000_000), |a| a.parse())?;
    let seed: u64 = args.next().map_or(Ok(1), |a| a.parse())?;

    let inst = TwoTwoInstance::new(0.5, 0.5)?;
    let ens = inst.ensemble().to_mixed();
    let optimal = assemble_povm(&inst)?.povm;
    let separable = separable_solution(&inst)?.povm;
    for (name, povm) in [("optimal", optimal), ("separable", separable)] {
        let exact = exact_success(&povm, &ens, 2)?;
        let config = SimConfig::new(povm, ens.clone(), 2, trials, seed).with_shards(8);
        let r = simulate_parallel(&config)?;
        println!(
            "{name:>9}: {:.5} +/- {:.5} (exact {exact:.5}, {:.2} sigma), errors {}",
            r.empirical_p,
            r.std_error,
            r.deviation_sigmas(exact),
            r.error_count
        );
        for (truth, outcome, count) in r.count_rows() {
            println!("           {truth:?} -> {outcome}: {count}");
        }
    }
    Ok(())
}
