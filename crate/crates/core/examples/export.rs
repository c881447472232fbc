//! Batch export: every nilradical of a type to JSON and CSV, read back and
//! compared.
//!
//!     cargo run --example export -- B4 /tmp/b4

use std::fs::File;
use std::path::PathBuf;

use cascade_lab::lab::{AnalyzeOptions, Filter, Lab, DEFAULT_MAX_SUBSETS};
use cascade_lab::report::{read_csv, read_json, write_csv, write_json};
use cascade_lab::rootsys::SimpleType;

fn main() -> cascade_lab::Result<()> {
    let mut args = std::env::args().skip(1);
    let stype: SimpleType = args.next().unwrap_or_else(|| "B4".into()).parse()?;
    let stem = PathBuf::from(args.next().unwrap_or_else(|| std::env::temp_dir().join(stype.to_string()).display().to_string()));

    let lab = Lab::new(stype);
    let records = lab.enumerate(Filter::All, DEFAULT_MAX_SUBSETS, &AnalyzeOptions::default())?;
    let (json, csv) = (stem.with_extension("json"), stem.with_extension("csv"));
    write_json(&records, File::create(&json)?)?;
    write_csv(&records, File::create(&csv)?)?;

    let from_json = read_json(File::open(&json)?)?;
    let from_csv = read_csv(File::open(&csv)?)?;
    println!("{} records -> {} and {}", records.len(), json.display(), csv.display());
    println!("JSON round trip exact: {}", from_json == records);
    println!("CSV  round trip exact: {}", from_csv == records);
    let generic = records.iter().filter(|r| r.generic).count();
    println!("{generic} of them have a generic stabiliser");
    Ok(())
}
