use std::io::{self, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let color = polyarc_cli::output::use_color(std::env::var_os("NO_COLOR").as_deref(), io::stdout().is_terminal());
    let code = polyarc_cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock(), color);
    ExitCode::from(code as u8)
}
