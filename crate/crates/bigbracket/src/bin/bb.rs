use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout();
    ExitCode::from(bigbracket::frontend::cli::run(&args[1..], &mut stdout))
}
