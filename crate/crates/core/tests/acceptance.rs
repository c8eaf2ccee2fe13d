//! Runs every acceptance criterion, one line per criterion.

use distinguishing::corpus::{run_all, CorpusConfig};

fn main() {
    let reports = run_all(&CorpusConfig::default());
    for r in &reports {
        println!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{}/{} criteria passed", reports.len() - failed, reports.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
