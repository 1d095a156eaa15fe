use clap::Parser;

use bilinear_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("bilinear: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}
