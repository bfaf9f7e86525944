fn main() {
    std::process::exit(strongnear_cli::app::main_with(std::env::args_os()));
}
