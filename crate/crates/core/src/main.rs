fn main() {
    std::process::exit(thintree::cli::run(std::env::args()));
}
