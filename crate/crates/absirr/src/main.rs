fn main() {
    std::process::exit(absirr::cli::run());
}
