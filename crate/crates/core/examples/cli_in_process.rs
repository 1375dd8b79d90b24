//! Drives the command-line front end without spawning a process.

fn main() {
    let runs: [&[&str]; 3] = [
        &["spectra", "analyze", "--family", "morse-ab", "--A", "1", "--B", "1", "--gamma-p", "3", "--delta-p", "3", "--format", "csv"],
        &["spectra", "scan", "--family", "scarf2", "--v1", "9.75", "--sweep", "v2", "--from", "9", "--to", "11", "--step", "0.5"],
        &["spectra", "analyze", "--family", "scarf2", "--v1", "-1", "--v2", "1"],
    ];
    for args in runs {
        let out = spectra::cli::run(args.iter().copied());
        println!("$ {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("exit {}\n", out.exit_code);
    }
}
