//! Which (d, c, n) can a cuspidal curve of degree d have? Run every
//! necessary condition over all candidate triples.

use plucker::census::{check_triple, enumerate};

fn main() -> Result<(), plucker::Error> {
    for d in 3..=7 {
        let census = enumerate(d)?;
        println!(
            "degree {d}: {} triples, {} admissible",
            census.records.len(),
            census.admissible().count()
        );
        for (name, n) in census.histogram().into_values() {
            println!("  {n:4} violate {name}");
        }
    }
    for (d, c, n) in [(6, 9, 0), (6, 10, 0), (5, 6, 0)] {
        let r = check_triple(d, c, n)?;
        let names: Vec<_> = r.violated.iter().map(|v| v.name).collect();
        println!("({d}, {c}, {n}): {}  {}", r.verdict, names.join(", "));
    }
    Ok(())
}
