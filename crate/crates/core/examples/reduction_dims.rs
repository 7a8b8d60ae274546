//! Subspace reductions for two copies of equal-overlap ensembles: the
//! dimensions of `H`, `K∩_a`, `K∩_b` and `H′`, and the weight `ζ` left in `H′`.

use qcompare::ensemble::{build_problem, PureEnsemble};
use qcompare::reduction::{h_prime_upper_bound, reduce};
use qcompare::solver2oo3::equal_overlap_states;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>2} {:>5} {:>4} {:>4} {:>4} {:>4} {:>6} {:>8}",
        "N", "cos", "H", "K_a", "K_b", "H'", "bound", "zeta"
    );
    for n in [2, 3, 4] {
        for c in [0.0, 0.2, 0.6] {
            let ens = PureEnsemble::uniform(equal_overlap_states(n, c)?)?.to_mixed();
            let r = reduce(&build_problem(&ens, 2)?)?;
            println!(
                "{n:>2} {c:>5.1} {:>4} {:>4} {:>4} {:>4} {:>6} {:>8.4}",
                r.h.dim(),
                r.kcap_a.dim(),
                r.kcap_b.dim(),
                r.h_prime.dim(),
                h_prime_upper_bound(n),
                r.zeta
            );
        }
    }
    Ok(())
}
