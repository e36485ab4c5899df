fn main() {
    std::process::exit(qwalk_cli::run(std::env::args_os()));
}
