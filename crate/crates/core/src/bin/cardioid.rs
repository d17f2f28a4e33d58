fn main() {
    let code = cardioid::cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
