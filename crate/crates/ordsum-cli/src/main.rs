use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let capacity = std::env::var("ORDSUM_CAPACITY").ok();
    let out = ordsum_cli::run(std::env::args_os(), capacity.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code as u8)
}
