//! The fixture directory override. Lives in its own test binary so the
//! process-global environment variable cannot race other fixture reads.

use wonderlat_core::oracle::{cartan_fixture, fixture_dir};
use wonderlat_core::rootsys::Series;
use wonderlat_core::Error;

#[test]
fn wonderlat_fixtures_overrides_the_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("A1.txt"), "2\n").unwrap();
    // A2 deliberately absent.
    std::env::set_var("WONDERLAT_FIXTURES", dir.path());
    assert_eq!(fixture_dir(), dir.path());
    assert_eq!(cartan_fixture(Series::A, 1).unwrap(), vec![vec![2]]);
    assert!(matches!(
        cartan_fixture(Series::A, 2),
        Err(Error::FixtureMissing { .. })
    ));
    std::env::remove_var("WONDERLAT_FIXTURES");
    // Back on the default directory the full table set is available.
    assert_eq!(cartan_fixture(Series::A, 2).unwrap().len(), 2);
}
