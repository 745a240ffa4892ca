fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(reesbound_cli::run(&argv));
}
