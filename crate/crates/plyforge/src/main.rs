use std::process::ExitCode;

fn main() -> ExitCode {
    match plyforge::cli::run(std::env::args_os()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                plyforge::cli::CliError::Usage(msg) => eprintln!("{}", msg.trim_end()),
                _ => eprintln!("plyforge: {e}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
