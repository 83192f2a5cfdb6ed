use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use sdgamma_cli::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads(cli.threads).and_then(|()| run(&cli));
    match result {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(outcome.render(cli.format).as_bytes());
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("sdgamma: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
