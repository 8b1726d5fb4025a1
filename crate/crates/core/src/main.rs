fn main() {
    std::process::exit(binpade::cli::run(std::env::args_os()));
}
