fn main() {
    std::process::exit(invforge::cli::main_entry());
}
