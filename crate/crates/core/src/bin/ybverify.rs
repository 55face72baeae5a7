fn main() {
    std::process::exit(yb_maps::cli::main_with_args(std::env::args_os()));
}
