use std::io::{stderr, stdout};

fn main() {
    let env_config = std::env::var_os(ucr_cli::CONFIG_ENV).map(Into::into);
    let code = ucr_cli::run(std::env::args_os(), env_config, &mut stdout().lock(), &mut stderr().lock());
    std::process::exit(code);
}
