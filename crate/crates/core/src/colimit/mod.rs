//! Diagrams of A∞-categories over the nondegenerate simplices of a finite
//! base, their extension to degenerate simplices, and the colimit `L` of
//! their nerves with its projection to the base.

mod diagram;
mod global;

use std::collections::BTreeMap;

pub use diagram::{DegenerateValue, Diagram, DiagramJson};
pub use global::{build_colimit, Cocone, GlobalCellJson, GlobalComplex, GlobalComplexJson};

use crate::ainf::{AInfCategory, CategoryJson, FunctorJson, MuJson};
use crate::error::Result;
use crate::simplicial::{OrdinalMap, SimplicialSet};

fn copy_name(name: &str, v: usize) -> String {
    format!("{name}@{v}")
}

fn copy_label(label: &str, v: usize, w: usize) -> String {
    format!("{label}@{v}-{w}")
}

/// `A` with one copy of each object per vertex of `[n]` and every hom space
/// between copies equal to that of `A`.
fn spread(a: &AInfCategory, n: usize) -> CategoryJson {
    let mut json = CategoryJson::default();
    for v in 0..=n {
        for x in a.objects() {
            json.objects.push(copy_name(x, v));
        }
    }
    for x in 0..a.object_count() {
        for v in 0..=n {
            json.units
                .insert(copy_name(a.object_name(x), v), copy_label(a.label(a.unit_id(x)), v, v));
            for y in 0..a.object_count() {
                for w in 0..=n {
                    let basis = a.hom_basis(x, y);
                    if !basis.is_empty() {
                        json.hom.insert(
                            format!("{}->{}", copy_name(a.object_name(x), v), copy_name(a.object_name(y), w)),
                            basis.iter().map(|&b| copy_label(a.label(b), v, w)).collect(),
                        );
                    }
                }
            }
        }
    }
    let mut entries: Vec<_> = a.mu_entries().filter(|(_, o)| !o.is_zero()).collect();
    entries.sort();
    for (inputs, output) in entries {
        let chain = a.chain_of(inputs).expect("stored entries compose");
        let d = inputs.len();
        let mut seqs: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..=d {
            seqs = seqs
                .into_iter()
                .flat_map(|s| {
                    (0..=n).map(move |v| {
                        let mut s = s.clone();
                        s.push(v);
                        s
                    })
                })
                .collect();
        }
        for s in seqs {
            json.mu.push(MuJson {
                d,
                inputs: (0..d).map(|k| copy_label(a.label(inputs[k]), s[k], s[k + 1])).collect(),
                output: a
                    .labels_of(chain[0], chain[d], output)
                    .iter()
                    .map(|l| copy_label(l, s[0], s[d]))
                    .collect(),
            });
        }
    }
    json
}

/// The diagram assigning to an `n`-cell the category `A` spread over `[n]`,
/// with face embeddings relabelling copies. Every embedding is a
/// quasi-equivalence.
pub fn constant_diagram(base: &SimplicialSet, a: &AInfCategory) -> Result<Diagram> {
    let mut json = DiagramJson {
        base: base.to_json(),
        f: BTreeMap::new(),
        categories: BTreeMap::new(),
        embeddings: BTreeMap::new(),
        tags: BTreeMap::new(),
    };
    for n in 0..=base.cap() {
        if base.count(n) > 0 {
            json.categories.insert(format!("A{n}"), spread(a, n));
        }
        for cell in base.cells(n) {
            json.f.insert(cell.id.clone(), format!("A{n}"));
            for i in (0..=n).filter(|_| n > 0) {
                let delta = OrdinalMap::coface(n, i);
                let mut fj = FunctorJson::default();
                for v in 0..n {
                    let w = delta.apply(v);
                    for x in 0..a.object_count() {
                        fj.objects
                            .insert(copy_name(a.object_name(x), v), copy_name(a.object_name(x), w));
                        for y in 0..a.object_count() {
                            for v2 in 0..n {
                                let w2 = delta.apply(v2);
                                for &b in a.hom_basis(x, y) {
                                    fj.hom
                                        .insert(copy_label(a.label(b), v, v2), vec![copy_label(a.label(b), w, w2)]);
                                }
                            }
                        }
                    }
                }
                json.embeddings.insert(format!("{}:{i}", cell.id), fj);
            }
        }
    }
    Diagram::from_json(&json)
}
