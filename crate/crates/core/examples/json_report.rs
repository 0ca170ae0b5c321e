//! Drive the command-line front end in-process and read back its JSON.

use vwcalc::cli::{run, OutputRecord};

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(["vwcalc", "compare-vw", "--surface", "quintic", "--json"], &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let rec = OutputRecord::from_json(&text).unwrap();
    println!("exit {code}, status {:?}", rec.status);
    println!("coefficients {:?}", rec.coefficients);
    assert_eq!(rec.to_json() + "\n", text);
}
