use std::process::ExitCode;

fn main() -> ExitCode {
    let result = tvo_cli::run(std::env::args_os());
    for line in &result.lines {
        println!("{line}");
    }
    for line in &result.errors {
        eprintln!("{line}");
    }
    ExitCode::from(result.code as u8)
}
