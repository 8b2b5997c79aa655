//! Writes a few series as b-files into a scratch directory and scans them
//! for roots of order 2 to 8.

use series_roots::bfile::BFile;
use series_roots::codes::fixture_enumerator;
use series_roots::lattices::{builtin_theta, psi_series};
use series_roots::scan::{scan_dir, FileOutcome};
use series_roots::IntSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("series-roots-scan-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let files: Vec<(&str, IntSeries)> = vec![
        ("d4", builtin_theta("D4", 40)?.into_series()),
        ("e8", psi_series(60).into_series()),
        ("golay", fixture_enumerator("golay")?.series().clone()),
        ("ones", IntSeries::geometric(30)),
    ];
    for (name, s) in &files {
        std::fs::write(
            dir.join(format!("{name}.txt")),
            BFile::from_series(s).to_string(),
        )?;
    }
    std::fs::write(dir.join("broken.txt"), "0 1\n2 5\n")?;

    let ns: Vec<u64> = (2..=8).collect();
    for report in scan_dir(&dir, &ns, 1000)? {
        let name = report
            .path
            .file_name()
            .unwrap_or_default()
            .to_string_lossy()
            .into_owned();
        match report.outcome {
            FileOutcome::Unreadable(e) => println!("{name}: unreadable ({e})"),
            FileOutcome::Skipped(why) => println!("{name}: skipped ({why})"),
            FileOutcome::Tested {
                order,
                one_mod_4,
                verdicts,
            } => {
                let members: Vec<u64> = verdicts.iter().filter(|v| v.member).map(|v| v.n).collect();
                println!("{name}: {order} terms, 1 mod 4: {one_mod_4}, roots of order {members:?}");
            }
        }
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
