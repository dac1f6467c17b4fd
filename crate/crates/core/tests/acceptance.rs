use srm_core::verify::{run_suite, SUITES};

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for &(id, _) in SUITES.iter() {
        let report = run_suite(id).expect("known suite");
        println!("{report}");
        for line in &report.details {
            println!("      {line}");
        }
        if !report.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
