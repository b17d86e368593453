use clap::Parser;

fn main() {
    let cli = kjdt::cli::Cli::parse();
    std::process::exit(kjdt::cli::run(cli));
}
