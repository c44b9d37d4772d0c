fn main() {
    std::process::exit(cycpart::cli::run_from_env());
}
