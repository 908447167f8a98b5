mod args;
mod commands;
mod output;

use std::process::ExitCode;

use brace_forge::catalog::Catalog;
use brace_forge::Bounds;
use clap::Parser;

use crate::args::Cli;
use crate::commands::Ctx;

fn bounds(g: &args::Global) -> Bounds {
    let mut b = Bounds::default();
    if let Some(n) = g.max_order {
        b.rb_enumeration = n;
        b.regular_search = n;
    }
    if let Some(n) = g.max_hol {
        b.holomorph = n;
    }
    b
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.jobs > 0 {
        // Only fails if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build_global();
    }
    let result = Catalog::from_env().and_then(|catalog| {
        let ctx = Ctx {
            catalog,
            bounds: bounds(&cli.global),
            max_order: cli.global.max_order,
            seed: cli.global.seed,
        };
        commands::run(cli.command, &ctx)
    });
    match result {
        Ok(out) => {
            let text = out.render(cli.global.format);
            if let Err(e) = output::emit(&text, cli.global.out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_user_error() { 2 } else { 1 })
        }
    }
}
