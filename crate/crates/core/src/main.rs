use std::process::ExitCode;

fn main() -> ExitCode {
    kbound::cli::main()
}
