use cuboids_core::eulerchar::{bruce_h_generic, milnor_number, BruceInput, JetConfig, MilnorConfig};
use cuboids_core::poly::{parse_poly, MonomialOrder, PolyRing};
use cuboids_core::scalar::QQ;
use std::time::Instant;

fn main() {
    // circle (n=2) and sphere (n=3), Mora certified + jet separately
    for (name, vars, f) in [
        ("circle", vec!["x", "y"], "x^2 + y^2 - 1"),
        ("sphere", vec!["x", "y", "z"], "x^2 + y^2 + z^2 - 1"),
    ] {
        let ring = PolyRing::new(QQ, &vars, MonomialOrder::grevlex(vars.len())).unwrap();
        let fp = parse_poly(f, &ring).unwrap();
        let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "t".into() }).unwrap();

        let t0 = Instant::now();
        let cfg = MilnorConfig { budget: 3_000_000, jet: JetConfig::default(), run_jet: false, max_truncation: 64 };
        let m = milnor_number(&h, &cfg).unwrap();
        eprintln!("{name} MORA: mu={:?} complete={} steps={} trunc={:?} in {:?}",
            m.mu, m.mora.complete, m.mora.steps, m.mora.truncation, t0.elapsed());

        let t0 = Instant::now();
        let cfg = MilnorConfig { budget: 1, jet: JetConfig { cap: 40, max_monomials: 200_000 }, run_jet: true, max_truncation: 6 };
        let m = milnor_number(&h, &cfg).unwrap();
        eprintln!("{name} JET: stab={:?} last_dims={:?} in {:?}",
            m.jet.as_ref().and_then(|j| j.stabilized),
            m.jet.as_ref().map(|j| j.dims.iter().rev().take(4).cloned().collect::<Vec<_>>()),
            t0.elapsed());
    }
}
