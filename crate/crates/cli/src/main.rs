fn main() {
    std::process::exit(hosens_cli::run(std::env::args_os()));
}
