fn main() {
    std::process::exit(spearlab::cli::run(std::env::args()));
}
