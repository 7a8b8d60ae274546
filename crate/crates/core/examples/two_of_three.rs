//! Two copies drawn from three equiprobable states with equal overlaps.

use qcompare::solver2oo3::{p_opt3, region_boundary, separable_heuristic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = region_boundary();
    println!(
        "closed form available up to cos = {b:.6} (theta/pi = {:.4})",
        b.acos() / std::f64::consts::PI
    );
    println!(
        "{:>6} {:>12} {:>10} {:>12}",
        "cos", "dims", "P_opt", "separable"
    );
    for c in [0.05, 0.1, 0.2, 0.3, 0.38, 0.5, 0.7] {
        let r = p_opt3(c)?;
        let p = r.p_opt.map_or("-".to_string(), |p| format!("{p:.6}"));
        println!(
            "{c:>6.2} {:>12} {p:>10} {:>12.6}",
            format!("({},{},{})", r.dim_h_prime, r.dim_kcap_a, r.dim_kcap_b),
            separable_heuristic(c)?
        );
    }
    Ok(())
}
