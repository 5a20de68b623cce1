use std::io::{stderr, stdin, stdout};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = gnum_cli::run_with_io(&args, &mut stdout(), &mut stderr(), &mut stdin().lock());
    std::process::exit(code);
}
