fn main() {
    std::process::exit(confsec_cli::run());
}
