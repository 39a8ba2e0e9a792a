use std::panic;
use std::process;

fn main() {
    // any panic reaching this frame is an internal fault, not a usage or
    // domain problem; keep it distinguishable by exit status
    let code = match panic::catch_unwind(altwords_cli::run) {
        Ok(code) => code,
        Err(_) => {
            eprintln!("error: internal fault (this is a bug)");
            5
        }
    };
    process::exit(code);
}
