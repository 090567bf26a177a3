use std::process::ExitCode;

fn main() -> ExitCode {
    // Worker count: AUTOPT_THREADS overrides the rayon default.
    if let Ok(threads) = std::env::var("AUTOPT_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global();
        }
    }
    match autopt::cli::run() {
        Ok(()) => ExitCode::from(0),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                autopt::Error::BudgetExceeded(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
