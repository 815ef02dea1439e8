fn main() {
    std::process::exit(littlewood::cli::run())
}
