use clap::Parser;
use wres::cli::{main_with, Args};

fn main() {
    let args = Args::parse();
    env_logger::Builder::new().filter_level(args.log_level).init();
    std::process::exit(main_with(&args));
}
