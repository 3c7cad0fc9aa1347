fn main() {
    std::process::exit(affine_phi::cli::run(std::env::args_os()));
}
