fn main() { std::process::exit(qctree::cli::run(std::env::args_os(), &mut std::io::stdout())) }
