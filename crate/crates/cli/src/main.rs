fn main() {
    std::process::exit(turankit_cli::run(std::env::args_os()));
}
