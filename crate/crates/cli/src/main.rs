fn main() {
    std::process::exit(kripto_cli::run(std::env::args_os()));
}
