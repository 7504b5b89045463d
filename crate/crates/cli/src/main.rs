use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = fnnn_cli::run(std::env::args_os(), &fnnn_cli::Env::from_process(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
