//! Writes the sporadic generator files into a data directory (default
//! `data/`) and re-ingests each one to check its order annotation.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::{ensure, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use reflaut::catalog::{fixture_path, ingest_generators, GeneratorFile};
use reflaut::perm::PermGroup;
use reflaut_fixtures::{graph, hexagon, janko, mathieu};

fn write(dir: &std::path::Path, name: &str, g: &PermGroup, order: u64, comments: &[&str]) -> Result<()> {
    let computed = g.order()?;
    ensure!(computed == order, "{name}: order {computed}, expected {order}");
    let file = GeneratorFile {
        degree: g.degree(),
        order: Some(order),
        generators: g.generators().to_vec(),
    };
    let path = fixture_path(dir, name);
    std::fs::write(&path, file.render(comments)).with_context(|| format!("writing {}", path.display()))?;
    let back = ingest_generators(&path)?;
    ensure!(back.order()? == order, "{name}: re-ingested order differs");
    println!("{name}: degree {}, {} generators, order {order} -> {}", g.degree(), g.generators().len(), path.display());
    Ok(())
}

fn main() -> Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    std::fs::create_dir_all(&dir)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let t = Instant::now();

    write(&dir, "M11", &mathieu::m11()?, mathieu::M11_ORDER, &["Mathieu group M11 on 11 points"])?;
    write(&dir, "M23", &mathieu::m23()?, mathieu::M23_ORDER, &["Mathieu group M23 on 23 points"])?;

    let hs = mathieu::higman_sims_graph()?.automorphism_group(mathieu::HS2_ORDER, &mut rng)?;
    write(
        &dir,
        "HS.2",
        &hs,
        mathieu::HS2_ORDER,
        &["HS.2: automorphism group of the Higman-Sims graph on 100 vertices"],
    )?;

    let hj = hexagon::hall_janko_graph()?.automorphism_group(hexagon::J2_2_ORDER, &mut rng)?;
    write(
        &dir,
        "J2.2",
        &hj,
        hexagon::J2_2_ORDER,
        &["J2.2: automorphism group of the Hall-Janko graph on 100 vertices"],
    )?;

    let j1 = graph::reduce_generators(janko::j1(&mut rng)?, &mut rng)?;
    write(
        &dir,
        "J1",
        &j1,
        janko::J1_ORDER,
        &["Janko group J1 on the 266 cosets of PSL2(11), from its 7-dimensional representation over F11"],
    )?;

    println!("done in {:.1} s", t.elapsed().as_secs_f64());
    Ok(())
}
