use std::io::Write;
use std::process::ExitCode;
use std::thread;

// Normal forms may reach a million literals, nested as deeply; the
// recursive printers and evaluators need room for that.
const STACK_BYTES: usize = 1 << 30;

fn main() -> ExitCode {
    let worker = thread::Builder::new()
        .stack_size(STACK_BYTES)
        .spawn(|| logicbench_cli::run(std::env::args_os()))
        .expect("spawn the worker thread");
    let outcome = worker.join().expect("worker thread panicked");
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
