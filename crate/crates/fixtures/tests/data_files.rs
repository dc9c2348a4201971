use std::path::PathBuf;

use reflaut::catalog::{fixture_path, ingest_generators};
use reflaut_fixtures::{hexagon, mathieu};

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[test]
fn graph_fixtures_are_automorphism_groups() {
    for (name, graph) in [
        ("HS.2", mathieu::higman_sims_graph().unwrap()),
        ("J2.2", hexagon::hall_janko_graph().unwrap()),
    ] {
        let g = ingest_generators(&fixture_path(&data_dir(), name)).unwrap();
        assert!(g.generators().iter().all(|x| graph.is_automorphism(x)), "{name}");
    }
}

#[test]
fn committed_files_match_their_models() {
    let m23 = ingest_generators(&fixture_path(&data_dir(), "M23")).unwrap();
    assert_eq!(m23.order().unwrap(), mathieu::m23().unwrap().order().unwrap());
    let j1 = ingest_generators(&fixture_path(&data_dir(), "J1")).unwrap();
    // J1 is simple and acts primitively on 266 points with stabilizer of order 660.
    assert_eq!(j1.order().unwrap() / 266, 660);
}
