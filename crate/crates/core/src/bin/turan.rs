fn main() {
    std::process::exit(turan_core::cli::run_command(std::env::args_os()));
}
