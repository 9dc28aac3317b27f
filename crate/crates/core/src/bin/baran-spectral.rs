fn main() {
    std::process::exit(baran_spectral::cli::main_with_args(std::env::args_os()));
}
