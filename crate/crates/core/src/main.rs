use clap::Parser;

fn main() {
    env_logger::init();
    if let Some(n) = std::env::var("PROXISKEL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            log::warn!("PROXISKEL_THREADS ignored: {e}");
        }
    }
    std::process::exit(proxiskel::cli::run(proxiskel::cli::Cli::parse()));
}
