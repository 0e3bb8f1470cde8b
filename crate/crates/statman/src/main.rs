use statman::cli;
use statman::report;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut root = clap::Command::new("statman")
        .about("exact dual-connection geometry and claim audits on frame-presented manifolds")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for c in cli::registry() {
        root = root.subcommand(c.clap());
    }
    let matches = root.get_matches();
    let (name, sub) = matches.subcommand().expect("subcommand required");
    let command = cli::command_by_name(name).expect("registered subcommand");
    match command.run(sub) {
        Ok(rep) => {
            print!("{}", report::emit(&rep, cli::emit_format(sub)));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
