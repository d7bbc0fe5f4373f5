use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let outcome = qdual::cli::dispatch(&args);
    if !outcome.output.is_empty() {
        println!("{}", outcome.output);
    }
    ExitCode::from(outcome.code.clamp(0, 255) as u8)
}
