//! Optimal and separable comparison of two copies drawn from two pure states.
//!
//! Usage: `cargo run --example two_of_two -- [q1] [cos_theta]`

use qcompare::baselines::{check_separable_unambiguous, separable_solution};
use qcompare::ensemble::check_unambiguous;
use qcompare::solver2oo2::{assemble_povm, TwoTwoInstance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let q1 = args.first().copied().unwrap_or(0.5);
    let c = args.get(1).copied().unwrap_or(0.5);

    let inst = TwoTwoInstance::new(q1, c)?;
    let opt = assemble_povm(&inst)?;
    let sep = separable_solution(&inst)?;
    let ens = inst.ensemble().to_mixed();

    println!("q1 = {q1}, cos(theta) = {c}");
    println!("optimal    P = {:.6} ({:?})", opt.p_opt, opt.branch);
    println!("separable  P = {:.6} ({:?})", sep.p_sep, sep.branch);
    println!("gain         = {:.6}", opt.p_opt - sep.p_sep);
    println!("weights alpha = {:.6}, beta = {:.6}", opt.alpha, opt.beta);

    let report = check_unambiguous(&opt.povm, &ens, 2)?;
    println!(
        "optimal POVM: min eigenvalue {:.1e}, completeness defect {:.1e}, unambiguous {}",
        opt.povm.min_eigenvalue(),
        opt.povm.completeness_defect(),
        report.passed
    );
    let report = check_separable_unambiguous(&inst, &sep)?;
    println!(
        "separable POVM: unambiguous {}{}",
        report.passed,
        if report.epsilon_limit {
            " (as a limit)"
        } else {
            ""
        }
    );
    Ok(())
}
