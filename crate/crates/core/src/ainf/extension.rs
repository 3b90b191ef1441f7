use std::collections::HashSet;

use super::category::{hom_key, AInfCategory, CategoryJson, MuJson};
use super::functor::{is_fully_faithful_embedding, StrictFunctor};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Where an object of an extended category comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Old(usize),
    Copy(usize),
}

/// The category `E` with `obj E = obj C ⊔ obj D` and homs pulled back from
/// `C` through the projection, together with its structure functors.
#[derive(Clone, Debug)]
pub struct Extension {
    pub category: AInfCategory,
    pub origin: Vec<Origin>,
    pub projection: StrictFunctor,
    pub embed_old: StrictFunctor,
    pub embed_copy: StrictFunctor,
}

/// Adjoins a copy of every object of `D` to `C`, identified with its image
/// under the fully faithful `i : D → C`. All homs and operations are those of
/// `C` after projecting each copy onto its image.
pub fn degenerate_extension(c: &AInfCategory, d: &AInfCategory, i: &StrictFunctor) -> Result<Extension> {
    if !is_fully_faithful_embedding(i, d, c) {
        return Err(Error::NotFullyFaithful(
            "extension requires a fully faithful embedding".into(),
        ));
    }
    let mut names: HashSet<String> = c.objects().iter().cloned().collect();
    let mut objects: Vec<String> = c.objects().to_vec();
    let mut origin: Vec<Origin> = (0..c.object_count()).map(Origin::Old).collect();
    for (k, name) in d.objects().iter().enumerate() {
        let mut fresh = format!("{name}'");
        while !names.insert(fresh.clone()) {
            fresh.push('\'');
        }
        objects.push(fresh);
        origin.push(Origin::Copy(k));
    }
    let pi: Vec<usize> = origin
        .iter()
        .map(|o| match *o {
            Origin::Old(x) => x,
            Origin::Copy(k) => i.map_object(k),
        })
        .collect();
    let both_old = |a: usize, b: usize| matches!((origin[a], origin[b]), (Origin::Old(_), Origin::Old(_)));
    let label_in = |a: usize, b: usize, l: &str| -> String {
        if both_old(a, b) {
            l.to_string()
        } else {
            format!("{l}[{}->{}]", objects[a], objects[b])
        }
    };

    let n = objects.len();
    let mut json = CategoryJson {
        objects: objects.clone(),
        ..Default::default()
    };
    for a in 0..n {
        for b in 0..n {
            let basis = c.hom_basis(pi[a], pi[b]);
            if !basis.is_empty() {
                json.hom.insert(
                    hom_key(&objects[a], &objects[b]),
                    basis.iter().map(|&id| label_in(a, b, c.label(id))).collect(),
                );
            }
        }
        json.units
            .insert(objects[a].clone(), label_in(a, a, c.label(c.unit_id(pi[a]))));
    }
    let mut fiber = vec![Vec::new(); c.object_count()];
    for (a, &p) in pi.iter().enumerate() {
        fiber[p].push(a);
    }
    let mut entries: Vec<(&[u32], &crate::gf2::Gf2Vector)> = c.mu_entries().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort();
    for (inputs, output) in entries {
        let chain = c.chain_of(inputs).expect("stored entries compose");
        let mut lifted = vec![Vec::new()];
        for &x in &chain {
            lifted = lifted
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    fiber[x].iter().map(move |&a| {
                        let mut q = p.clone();
                        q.push(a);
                        q
                    })
                })
                .collect();
        }
        for e_chain in lifted {
            let d = inputs.len();
            json.mu.push(MuJson {
                d,
                inputs: (0..d)
                    .map(|k| label_in(e_chain[k], e_chain[k + 1], c.label(inputs[k])))
                    .collect(),
                output: c
                    .labels_of(chain[0], chain[d], output)
                    .iter()
                    .map(|l| label_in(e_chain[0], e_chain[d], l))
                    .collect(),
            });
        }
    }
    let category = AInfCategory::from_json(&json)?;

    let projection = StrictFunctor::new(
        pi.clone(),
        (0..n)
            .map(|a| (0..n).map(|b| Gf2Matrix::identity(c.hom_dim(pi[a], pi[b]))).collect())
            .collect(),
    );
    let old = c.object_count();
    let embed_old = StrictFunctor::new(
        (0..old).collect(),
        (0..old)
            .map(|x| (0..old).map(|y| Gf2Matrix::identity(c.hom_dim(x, y))).collect())
            .collect(),
    );
    let embed_copy = StrictFunctor::new(
        (0..d.object_count()).map(|k| old + k).collect(),
        (0..d.object_count())
            .map(|x| (0..d.object_count()).map(|y| i.component(x, y).clone()).collect())
            .collect(),
    );
    Ok(Extension {
        category,
        origin,
        projection,
        embed_old,
        embed_copy,
    })
}

/// The full subcategory on `objects` (in the given order) with its
/// inclusion functor.
pub fn full_subcategory(c: &AInfCategory, objects: &[usize]) -> Result<(AInfCategory, StrictFunctor)> {
    let keep: HashSet<usize> = objects.iter().copied().collect();
    if keep.len() != objects.len() || objects.iter().any(|&x| x >= c.object_count()) {
        return Err(Error::Invalid(
            "subcategory objects must be distinct objects of the category".into(),
        ));
    }
    let mut json = CategoryJson {
        objects: objects.iter().map(|&x| c.object_name(x).to_string()).collect(),
        ..Default::default()
    };
    for &x in objects {
        for &y in objects {
            let basis = c.hom_basis(x, y);
            if !basis.is_empty() {
                json.hom.insert(
                    hom_key(c.object_name(x), c.object_name(y)),
                    basis.iter().map(|&b| c.label(b).to_string()).collect(),
                );
            }
        }
        json.units
            .insert(c.object_name(x).to_string(), c.label(c.unit_id(x)).to_string());
    }
    let mut entries: Vec<(&[u32], &crate::gf2::Gf2Vector)> = c.mu_entries().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort();
    for (inputs, output) in entries {
        let chain = c.chain_of(inputs).expect("stored entries compose");
        if chain.iter().all(|x| keep.contains(x)) {
            json.mu.push(MuJson {
                d: inputs.len(),
                inputs: inputs.iter().map(|&b| c.label(b).to_string()).collect(),
                output: c.labels_of(chain[0], chain[inputs.len()], output),
            });
        }
    }
    let sub = AInfCategory::from_json(&json)?;
    let inclusion = StrictFunctor::new(
        objects.to_vec(),
        objects
            .iter()
            .map(|&x| objects.iter().map(|&y| Gf2Matrix::identity(c.hom_dim(x, y))).collect())
            .collect(),
    );
    Ok((sub, inclusion))
}
