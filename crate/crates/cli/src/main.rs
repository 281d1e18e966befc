fn main() {
    std::process::exit(anomalab_cli::run(std::env::args_os()));
}
