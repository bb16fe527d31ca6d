use std::process::ExitCode;

fn main() -> ExitCode {
    dirichlet_hp_lab::cli::main_with(std::env::args_os(), &mut std::io::stdout())
}
