use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(spinor_spectra::cli::run() as u8)
}
