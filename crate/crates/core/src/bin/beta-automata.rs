use std::process::ExitCode;

fn main() -> ExitCode {
    beta_automata::cli::main_with_args(std::env::args_os())
}
