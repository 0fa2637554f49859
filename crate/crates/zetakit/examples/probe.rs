fn main() {
    let t0 = std::time::Instant::now();
    let config = zetakit::suites::RunConfig::default();
    let reports = zetakit::suites::run_all(&config).unwrap();
    let all = reports.iter().all(|r| r.passed());
    println!("run_all: {:?} suites={} passed={}", t0.elapsed(), reports.len(), all);
    for r in &reports {
        if !r.passed() {
            println!("  FAILED suite: {} ({:?})", r.suite, r.first_failure());
        }
    }
    let json = zetakit::report::VerificationReport::to_json(&reports);
    println!("json bytes: {}", json.len());
}
