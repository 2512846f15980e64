fn main() { std::process::exit(hyptree::cli::run()) }
