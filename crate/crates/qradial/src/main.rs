use std::process::ExitCode;

fn main() -> ExitCode {
    qradial::cli::run()
}
