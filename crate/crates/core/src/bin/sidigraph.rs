fn main() {
    std::process::exit(sidigraph::cli::run(std::env::args_os()));
}
