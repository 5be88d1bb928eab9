//! Load spaces from JSON, inspect them, and see what validation rejects.

use msgeo::io::load_space;
use msgeo::metric::{FiniteMetricSpace, DEFAULT_TOLERANCE};

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() -> msgeo::Result<()> {
    for file in ["square.json", "line.json", "tripod.json"] {
        let x = load_space(data(file), DEFAULT_TOLERANCE)?;
        println!(
            "{file}: {} points {:?}, diam {}, eps_min {}",
            x.len(),
            x.labels(),
            x.diameter(),
            x.eps_min()?
        );
    }

    let bad = [
        vec![vec![0.0, 1.0], vec![2.0, 0.0]],
        vec![vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]],
        vec![vec![0.0, 0.0], vec![0.0, 0.0]],
    ];
    for table in &bad {
        match FiniteMetricSpace::from_matrix(table) {
            Ok(_) => println!("accepted {table:?}"),
            Err(e) => println!("rejected: {e}"),
        }
    }
    Ok(())
}
