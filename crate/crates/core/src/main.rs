use clap::Parser;

use minorkit::cli::{run, Cli, JobConfig};

fn main() {
    let config = JobConfig::from_cli(Cli::parse());
    let code = run(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
