fn main() {
    std::process::exit(surd_equiv::cli::run(std::env::args_os()));
}
