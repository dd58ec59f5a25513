use clap::Parser;

use semigrowth_cli::{configure_threads, run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match configure_threads().and_then(|()| run(cli)) {
        Ok(outcome) => match outcome.emit() {
            Ok(()) => outcome.exit_code(),
            Err(e) => {
                eprintln!("semigrowth: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("semigrowth: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
