fn main() {
    std::process::exit(ffeis::cli::main_with_args(std::env::args_os()));
}
