//! Local invariants of the simple singularities: multiplicity, Milnor
//! number, branches, delta and the split of delta into virtual cusps and
//! virtual nodes.

use plucker::algebra::ExtensionConfig;
use plucker::fixtures::{self, Kind};
use plucker::local::analyze_germ;

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    println!("{:16} {:24} m  mu  r  delta  c_vp  n_vp", "germ", "class");
    for fx in fixtures::all().iter().filter(|f| f.kind == Kind::Germ) {
        let l = analyze_germ(&fx.germ()?, &cfg)?;
        println!(
            "{:16} {:24} {}  {:2}  {}  {:5}  {:4}  {:4}",
            fx.name,
            l.class_tag.to_string(),
            l.m_p,
            l.mu,
            l.r,
            l.delta,
            l.c_vp,
            l.n_vp
        );
    }
    Ok(())
}
