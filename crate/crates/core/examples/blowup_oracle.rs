//! Delta by repeated blow-ups, compared with delta from the Milnor number and
//! the branch count.

use plucker::algebra::ExtensionConfig;
use plucker::fixtures::{self, Kind};
use plucker::local::analyze_germ;
use plucker::oracle::blowup_delta;

fn main() -> Result<(), plucker::Error> {
    let cfg = ExtensionConfig::default();
    for fx in fixtures::all().iter().filter(|f| f.kind == Kind::Germ) {
        let germ = fx.germ()?;
        let (delta, tree) = blowup_delta(&germ, &cfg)?;
        let milnor = analyze_germ(&germ, &cfg)?.delta;
        let seq: Vec<String> = tree
            .multiplicity_sequence()
            .iter()
            .map(|(m, k)| format!("{m}x{k}"))
            .collect();
        println!(
            "{:16} blow-up delta {delta}  milnor delta {milnor}  {}  multiplicities {}",
            fx.name,
            if delta == milnor { "agree" } else { "DIFFER" },
            seq.join(" ")
        );
    }
    Ok(())
}
