//! Gain of the coherent over the separable strategy on a coarse grid, with
//! the row maxima for a few priors.

use qcompare::baselines::{gain_grid, gain_row_maxima};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let steps = 10;
    let cells = gain_grid(steps, steps)?;
    print!("q1 \\ cos ");
    for cell in &cells[..steps] {
        print!("{:>7.3}", cell.cos_theta);
    }
    println!();
    for row in cells.chunks(steps) {
        print!("{:>9.3}", row[0].q1);
        for cell in row {
            print!("{:>7.3}", cell.gain);
        }
        println!();
    }

    for q1 in [0.5, 0.7, 0.85, 0.9] {
        let maxima = gain_row_maxima(q1, 4000)?;
        let list: Vec<String> = maxima
            .iter()
            .map(|m| format!("{:.4} at cos = {:.3}", m.gain, m.cos_theta))
            .collect();
        println!("q1 = {q1}: {}", list.join(", "));
    }
    Ok(())
}
