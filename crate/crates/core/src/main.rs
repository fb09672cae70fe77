fn main() {
    let (code, out) = adcover::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
