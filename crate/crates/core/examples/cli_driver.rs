//! Runs CLI subcommands in-process.

use baran_spectral::cli::main_with_args;

fn main() {
    let runs: [&[&str]; 3] = [
        &["baran-spectral", "collar", "--n", "2", "--format", "csv"],
        &["baran-spectral", "geodesic", "--domain", "ball", "--n", "2", "--x", "0.1,0.2", "--y", "-0.3,0.4"],
        &["baran-spectral", "sphere-extremal", "--t", "0.5,1", "--format", "csv"],
    ];
    for args in runs {
        let code = main_with_args(args.iter().copied());
        eprintln!("exit code {code}");
    }
}
