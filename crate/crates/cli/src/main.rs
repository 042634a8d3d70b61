use std::io::Write;

fn main() {
    let outcome = tropconv_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    std::io::stdout().write_all(outcome.stdout.as_bytes()).ok();
    std::io::stderr().write_all(outcome.stderr.as_bytes()).ok();
    std::process::exit(outcome.code);
}
