fn main() {
    std::process::exit(qtenum::cli::main_with_args(std::env::args_os()));
}
