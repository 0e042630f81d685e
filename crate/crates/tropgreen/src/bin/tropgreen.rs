fn main() {
    std::process::exit(tropgreen::cli::run_from_env());
}
