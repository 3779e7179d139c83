use clap::Parser;
use phonon_casimir_cli::args::{Cli, Command};
use phonon_casimir_cli::run::{cmd_materials, cmd_point, cmd_sweep};

fn main() {
    let cli = Cli::parse();
    let exit = match &cli.command {
        Command::Materials(args) => cmd_materials(args),
        Command::Point(args) => cmd_point(args),
        Command::Sweep(args) => cmd_sweep(args),
    };
    std::process::exit(exit as i32);
}
