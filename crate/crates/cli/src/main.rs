fn main() {
    let outcome = removal_cli::dispatch(std::env::args().skip(1));
    std::process::exit(outcome.code);
}
