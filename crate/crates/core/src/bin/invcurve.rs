use std::io::Write;

fn main() {
    let (output, code) = invcurve::cli::run(std::env::args().skip(1));
    let mut stdout = std::io::stdout();
    let _ = stdout.write_all(output.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
