fn main() {
    let outcome = lefdet::cli::run_args(std::env::args_os());
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
