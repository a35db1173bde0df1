use std::time::Instant;
use tildeh_core::harness::{random_pattern_free, GenMethod, GenSpec};
use tildeh_core::patterns;

fn main() {
    for (name, pat) in [
        ("two_k2", patterns::two_k2()),
        ("h2", patterns::h_family(2, 2)),
        ("m2*", patterns::m_star_family(2, 2)),
    ] {
        for n in [20usize, 40, 60] {
            for d in [0.03, 0.1, 0.18, 2.0 / n as f64] {
                for method in [GenMethod::Repair, GenMethod::Rejection] {
                    let start = Instant::now();
                    let spec = GenSpec { n, pattern: pat.clone(), density: d, seed: 99, method };
                    let r = random_pattern_free(&spec);
                    println!(
                        "{name} n={n} d={d:.3} {method:?}: {} in {:?}",
                        if r.is_ok() { "ok" } else { "TIMEOUT" },
                        start.elapsed()
                    );
                    if start.elapsed().as_secs() > 20 { break; }
                }
            }
        }
    }
}
