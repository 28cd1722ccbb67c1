use clap::Parser;
use jtwist_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(jtwist_cli::run(&cli));
}
