use cuboids_core::variety::{builtin, census, CensusConfig};
use std::time::Instant;

#[test]
fn upsilon_census_counts() {
    let u = builtin("upsilon").unwrap();
    let t0 = Instant::now();
    let cfg = CensusConfig { corroborate_primes: vec![], ..Default::default() };
    let c = census(&u, &cfg).unwrap();
    eprintln!("exact census took {:?}", t0.elapsed());
    for s in &c.strata {
        eprintln!(
            "stratum {} zeros {:?}: complex {} real {} (staircase {}, elim deg {})",
            s.chart, s.zeros, s.complex_count, s.real_count, s.staircase_size, s.eliminant_degree
        );
    }
    assert_eq!(c.complex, 48);
    assert_eq!(c.real, 24);
    assert_eq!(c.points_verified, Some(true));
}
