use std::process::ExitCode;

use bruhat_core::checks::run_all;

fn main() -> ExitCode {
    let results = run_all();
    for r in &results {
        println!(
            "{} [{:>2}] {}: {} ({:.2?})",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.detail,
            r.elapsed
        );
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", results.len(), results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
