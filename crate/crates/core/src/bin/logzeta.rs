fn main() {
    std::process::exit(logzeta::cli::run(std::env::args_os()));
}
