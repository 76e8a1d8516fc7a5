use std::io;

fn main() {
    let code = lsseq::run(std::env::args_os().collect(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
