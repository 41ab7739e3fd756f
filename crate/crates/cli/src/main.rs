fn main() {
    std::process::exit(reflquot_cli::run(std::env::args_os()));
}
