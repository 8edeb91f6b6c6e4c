//! Writes every built-in fixture to a directory (default `fixtures`).

fn main() -> Result<(), birack::Error> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    std::fs::create_dir_all(&dir)?;
    for (name, file) in birack::fixtures::all() {
        let path = format!("{dir}/{name}.tbl");
        file.save(&path)?;
        println!("{path}");
    }
    Ok(())
}
