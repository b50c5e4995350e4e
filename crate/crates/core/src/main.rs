use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(harmonia::cli::run(std::env::args_os()))
}
