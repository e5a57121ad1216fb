use clap::Parser;
use magic_compound_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    if let Err(e) = run(&cli, &mut lock) {
        eprintln!("magicsq: {e}");
        std::process::exit(e.exit_code());
    }
}
