//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;

use wavechan_cli::verify;

fn main() -> ExitCode {
    let ids: Vec<u8> = (1..=12).collect();
    let results = verify::run_all(&ids, |o| println!("{o}"));
    let failed: Vec<u8> = results.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    println!(
        "{} of {} criteria passed",
        results.len() - failed.len(),
        results.len()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing: {failed:?}");
        ExitCode::FAILURE
    }
}
