use clap::Parser;
use rgw_split::cli::{self, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let outcome = cli::run(&config);
    if let Err(e) = cli::emit(&config, &outcome) {
        eprintln!("rgw: cannot write report: {e}");
        std::process::exit(cli::EXIT_CHECK_FAILED);
    }
    std::process::exit(outcome.code);
}
