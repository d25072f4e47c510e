use cuboids_core::eulerchar::{bruce_h_generic, milnor_number, BruceInput, JetConfig, MilnorConfig};
use cuboids_core::poly::{parse_poly, MonomialOrder, PolyRing};
use cuboids_core::scalar::QQ;
use std::time::Instant;

#[test]
fn probe_two_points() { probe("two-points", vec!["x"], "x^2 - 1"); }
#[test]
fn probe_circle() { probe("circle", vec!["x", "y"], "x^2 + y^2 - 1"); }
#[test]
fn probe_sphere_mora_only() {
    let ring = PolyRing::new(QQ, &["x","y","z"], MonomialOrder::grevlex(3)).unwrap();
    let fp = parse_poly("x^2 + y^2 + z^2 - 1", &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    let t0 = Instant::now();
    let cfg = MilnorConfig { budget: 30_000_000, jet: JetConfig::default(), run_jet: false, max_truncation: 64 };
    let m = milnor_number(&h, &cfg).unwrap();
    eprintln!("sphere MORA ONLY: mu={:?} steps={} basis={} in {:?}", m.mu, m.mora.steps, m.mora.basis_size, t0.elapsed());
}
#[test]
fn probe_sphere_jet_only() {
    let ring = PolyRing::new(QQ, &["x","y","z"], MonomialOrder::grevlex(3)).unwrap();
    let fp = parse_poly("x^2 + y^2 + z^2 - 1", &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    let t0 = Instant::now();
    let cfg = MilnorConfig { budget: 1, jet: JetConfig { cap: 32, max_monomials: 60_000 }, run_jet: true, max_truncation: 64 };
    let m = milnor_number(&h, &cfg).unwrap();
    eprintln!("sphere JET ONLY: stab={:?} dims={:?} in {:?}",
        m.jet.as_ref().and_then(|j| j.stabilized), m.jet.as_ref().map(|j| j.dims.clone()), t0.elapsed());
}

fn probe(name: &str, vars: Vec<&str>, f: &str) {
    let ring = PolyRing::new(QQ, &vars, MonomialOrder::grevlex(vars.len())).unwrap();
    let fp = parse_poly(f, &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    let t0 = Instant::now();
    let cfg = MilnorConfig { budget: 30_000_000, jet: JetConfig::default(), run_jet: true, max_truncation: 64 };
    let m = milnor_number(&h, &cfg).unwrap();
    eprintln!("{name}: mu={:?} agree={:?} mora_steps={} jet_stab={:?} in {:?}",
        m.mu, m.methods_agree, m.mora.steps, m.jet.as_ref().and_then(|j| j.stabilized), t0.elapsed());
}

#[test]
fn probe_circle_jet_only() {
    let ring = PolyRing::new(QQ, &["x","y"], MonomialOrder::grevlex(2)).unwrap();
    let fp = parse_poly("x^2 + y^2 - 1", &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    let t0 = Instant::now();
    let cfg = MilnorConfig { budget: 1, jet: JetConfig::default(), run_jet: true, max_truncation: 64 };
    let m = milnor_number(&h, &cfg).unwrap();
    eprintln!("circle JET ONLY: stab={:?} in {:?}", m.jet.as_ref().and_then(|j| j.stabilized), t0.elapsed());
}

#[test]
fn probe_circle_mora_only() {
    let ring = PolyRing::new(QQ, &["x","y"], MonomialOrder::grevlex(2)).unwrap();
    let fp = parse_poly("x^2 + y^2 - 1", &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    let t0 = Instant::now();
    let cfg = MilnorConfig { budget: 2_000_000, jet: JetConfig::default(), run_jet: false, max_truncation: 64 };
    let m = milnor_number(&h, &cfg).unwrap();
    eprintln!("circle MORA ONLY: mu={:?} complete={} steps={} basis={} in {:?}", m.mu, m.mora.complete, m.mora.steps, m.mora.basis_size, t0.elapsed());
}

#[test]
fn probe_circle_mora_small_budget() {
    let ring = PolyRing::new(QQ, &["x","y"], MonomialOrder::grevlex(2)).unwrap();
    let fp = parse_poly("x^2 + y^2 - 1", &ring).unwrap();
    let h = bruce_h_generic(&BruceInput { fs: vec![fp], d: 2, homog_var: "hy".into() }).unwrap();
    for budget in [1_000u64, 5_000, 20_000, 50_000] {
        let t0 = Instant::now();
        let cfg = MilnorConfig { budget, jet: JetConfig::default(), run_jet: false, max_truncation: 64 };
        let m = milnor_number(&h, &cfg).unwrap();
        eprintln!("budget {budget}: mu={:?} complete={} steps={} basis={} in {:?}",
            m.mu, m.mora.complete, m.mora.steps, m.mora.basis_size, t0.elapsed());
    }
}
