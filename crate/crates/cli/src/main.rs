fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = groupoid_cli::run(&argv);
    std::process::exit(code);
}
