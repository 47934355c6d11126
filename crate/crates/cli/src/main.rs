fn main() {
    std::process::exit(rbx::run(std::env::args_os()));
}
