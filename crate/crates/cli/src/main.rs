fn main() {
    let code = hker_cli::run(std::env::args_os());
    std::process::exit(code);
}
