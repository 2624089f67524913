fn main() {
    std::process::exit(rootscope::cli::run());
}
