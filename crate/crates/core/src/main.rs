fn main() {
    std::process::exit(qkfact::cli::parse_and_run(std::env::args_os()));
}
