fn main() {
    std::process::exit(pnpair::cli::run_from(std::env::args_os()));
}
