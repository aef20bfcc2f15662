//! Posets up to isomorphism and duality, and how many give smooth polytopes.

use poset_fano::enumerate::{build_table, write_table_csv};

fn main() -> poset_fano::Result<()> {
    let d_max = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    let rows = build_table(d_max, None)?;
    write_table_csv(&rows, std::io::stdout())
}
