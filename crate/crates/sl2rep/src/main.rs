fn main() {
    std::process::exit(sl2rep::cli::run());
}
