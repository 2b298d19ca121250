fn main() {
    std::process::exit(vpinterp::cli::main_with(std::env::args_os()));
}
