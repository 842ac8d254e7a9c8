use std::process::ExitCode;

use clap::Parser;

use qpdom::commands::{self, Cli, Output};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = qpdom::with_big_stack(|| match commands::run(&cli) {
        Ok(Output::Raw(s)) => {
            print!("{s}");
            0
        }
        Ok(Output::Report(r)) => {
            emit(&r, cli.json);
            0
        }
        Err(e) => {
            if let Some(r) = &e.report {
                emit(r, cli.json);
            }
            eprintln!("error: {}", e.msg);
            e.code()
        }
    });
    ExitCode::from(code as u8)
}

fn emit(r: &qpdom::RunReport, json: bool) {
    if json {
        println!("{}", r.to_json());
    } else {
        print!("{}", r.to_text());
    }
}
