//! Command-line entry point; see `coble --help`.

fn main() {
    let code = coble::cli::run_cli(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
