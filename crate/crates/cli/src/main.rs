fn main() {
    std::process::exit(torus2dd_cli::main_with_args(std::env::args_os()));
}
