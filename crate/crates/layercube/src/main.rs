use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = layercube::cli::run(std::env::args());
    let out = result.stdout();
    if result.exit_code == layercube::cli::EXIT_USAGE || result.payload.get("error").is_some() {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(result.exit_code as u8)
}
