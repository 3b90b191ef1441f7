mod common;

use common::properties;

fn report(r: Result<String, String>) {
    match r {
        Ok(line) => println!("{line}"),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn simplicial_identities() {
    report(properties::simplicial_identities());
}

#[test]
fn ez_uniqueness() {
    report(properties::ez_uniqueness());
}

#[test]
fn filler_restricts_to_horn() {
    report(properties::filler_restricts_to_horn());
}

#[test]
fn degenerate_extension_validity() {
    report(properties::degenerate_extension_validity());
}

#[test]
fn gf2_solver() {
    report(properties::gf2_solver());
}
