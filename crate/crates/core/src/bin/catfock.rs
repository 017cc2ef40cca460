use std::io::{self, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let stdout = io::stdout();
    let is_tty = stdout.is_terminal();
    let code = catalan_fock::cli::run(&argv, &mut stdout.lock(), &mut io::stderr(), is_tty);
    ExitCode::from(code as u8)
}
