use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use diopkit::commands::{Cli, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let ctx = diopkit::commands::Context::new(&cli.opts);
    let report = match diopkit::commands::run_with(&ctx, &cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.opts.format {
        Format::Json => print!("{}", report.to_json()),
        Format::Table => print!("{}", report.to_table()),
    }
    eprintln!(
        "elapsed {:.3}s, cache hits {}, misses {}",
        start.elapsed().as_secs_f64(),
        ctx.cache.hits(),
        ctx.cache.misses()
    );
    ExitCode::from(report.exit_code as u8)
}
