fn main() {
    std::process::exit(unigraph::cli::run(std::env::args_os()));
}
