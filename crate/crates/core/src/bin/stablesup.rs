use stablesup_core::cli;

fn main() {
    std::process::exit(cli::main_entry());
}
