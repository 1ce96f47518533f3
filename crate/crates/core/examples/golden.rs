//! Regenerates the stored certificates: `cargo run --example golden -- crates/core/data/certificates`.

use crosscap::classifier::computed_class;
use crosscap::graph::{build_comaximal, gamma_with_units};
use crosscap::ring::{compile_ring, RingSpec};
use crosscap::surface::SearchConfig;

fn main() {
    let dir = std::env::args().nth(1).unwrap();
    let z33 = compile_ring(&RingSpec::parse("Z3 x Z3").unwrap()).unwrap();
    let z24 = compile_ring(&RingSpec::parse("Z2 x Z4").unwrap()).unwrap();
    let graphs = [
        ("gamma_z3xz3_s22.cert", gamma_with_units(&z33, &[8], false).unwrap()),
        ("gamma_z3xz3_s12_22.cert", gamma_with_units(&z33, &[5, 8], false).unwrap()),
        ("comaximal_z2xz4.cert", build_comaximal(&z24)),
    ];
    for (name, g) in graphs {
        let c = computed_class(&g, SearchConfig::default()).unwrap();
        let cert = c.witness.certificate().unwrap();
        std::fs::write(format!("{dir}/{name}"), cert.to_text()).unwrap();
    }
}
