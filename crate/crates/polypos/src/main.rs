fn main() {
    std::process::exit(polypos::cli::run());
}
