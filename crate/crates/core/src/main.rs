fn main() {
    std::process::exit(divzeta::cli::run(std::env::args_os()));
}
