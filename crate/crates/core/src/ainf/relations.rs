use serde::{Deserialize, Serialize};

use super::category::{AInfCategory, BasisId};
use crate::gf2::Gf2Vector;

/// A composable basis tuple on which the A∞ relation fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationViolation {
    pub d: usize,
    pub inputs: Vec<String>,
    pub residual: Vec<String>,
}

/// A failed strict-unit law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitViolation {
    pub law: String,
    pub inputs: Vec<String>,
    pub expected: Vec<String>,
    pub found: Vec<String>,
}

/// Left-hand side of the A∞ relation of arity `tuple.len()` on a basis tuple.
pub fn relation_residual(cat: &AInfCategory, chain: &[usize], tuple: &[BasisId]) -> Gf2Vector {
    let d = tuple.len();
    let top = cat.max_arity();
    let mut out = Gf2Vector::zero(cat.hom_dim(chain[0], chain[d]));
    let basis: Vec<Gf2Vector> = tuple.iter().map(|&b| cat.basis_vector(b)).collect();
    for m in 1..=d.min(top) {
        if d - m + 1 > top {
            continue;
        }
        for n in 0..=d - m {
            let Some(inner) = cat.mu_basis(&tuple[n..n + m]) else {
                continue;
            };
            if inner.is_zero() {
                continue;
            }
            let mut outer_chain = Vec::with_capacity(d - m + 2);
            outer_chain.extend_from_slice(&chain[..=n]);
            outer_chain.extend_from_slice(&chain[n + m..]);
            let mut args: Vec<&Gf2Vector> = Vec::with_capacity(d - m + 1);
            args.extend(basis[..n].iter());
            args.push(inner);
            args.extend(basis[n + m..].iter());
            out.xor_in(&cat.mu(&outer_chain, &args));
        }
    }
    out
}

/// Checks the A∞ relations on every composable basis tuple of length at most
/// `d_max`, returning the first failure in a deterministic order.
pub fn check_ainf_relations(cat: &AInfCategory, d_max: usize) -> Option<RelationViolation> {
    for d in 1..=d_max {
        for (chain, tuple) in cat.composable_tuples(d) {
            let r = relation_residual(cat, &chain, &tuple);
            if !r.is_zero() {
                return Some(RelationViolation {
                    d,
                    inputs: tuple.iter().map(|&b| cat.label(b).to_string()).collect(),
                    residual: cat.labels_of(chain[0], chain[d], &r),
                });
            }
        }
    }
    None
}

/// The arity bound sufficient for all relations among stored operations.
pub fn sufficient_dmax(cat: &AInfCategory) -> usize {
    (2 * cat.max_arity()).max(1)
}

/// Checks `μ¹(e) = 0`, `μ²(e, f) = f = μ²(f, e)` and vanishing of higher
/// operations with a unit argument.
pub fn check_strict_units(cat: &AInfCategory) -> Option<UnitViolation> {
    let labels = |ids: &[BasisId]| ids.iter().map(|&b| cat.label(b).to_string()).collect::<Vec<_>>();
    for x in 0..cat.object_count() {
        let e = cat.unit_id(x);
        if let Some(v) = cat.mu_basis(&[e]) {
            if !v.is_zero() {
                return Some(UnitViolation {
                    law: "differential".into(),
                    inputs: labels(&[e]),
                    expected: vec![],
                    found: cat.labels_of(x, x, v),
                });
            }
        }
    }
    for x in 0..cat.object_count() {
        for y in 0..cat.object_count() {
            for &b in cat.hom_basis(x, y) {
                let expect = cat.basis_vector(b);
                for (law, inputs) in [("left", [cat.unit_id(x), b]), ("right", [b, cat.unit_id(y)])] {
                    let found = cat
                        .mu_basis(&inputs)
                        .cloned()
                        .unwrap_or_else(|| Gf2Vector::zero(expect.len()));
                    if found != expect {
                        return Some(UnitViolation {
                            law: law.into(),
                            inputs: labels(&inputs),
                            expected: labels(&[b]),
                            found: cat.labels_of(x, y, &found),
                        });
                    }
                }
            }
        }
    }
    let mut higher: Vec<(&[BasisId], &Gf2Vector)> = cat
        .mu_entries()
        .filter(|(k, v)| k.len() >= 3 && !v.is_zero() && k.iter().any(|&b| cat.is_unit(b)))
        .collect();
    higher.sort();
    if let Some((k, v)) = higher.first() {
        let chain = cat.chain_of(k).expect("stored entries compose");
        return Some(UnitViolation {
            law: format!("arity {}", k.len()),
            inputs: labels(k),
            expected: vec![],
            found: cat.labels_of(chain[0], *chain.last().unwrap(), v),
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::catalog;
    use crate::ainf::category::CategoryJson;

    #[test]
    fn discrete_category_passes() {
        let c = catalog::discrete(2);
        assert_eq!(check_ainf_relations(&c, 4), None);
        assert_eq!(check_strict_units(&c), None);
    }

    #[test]
    fn poset_passes() {
        let c = catalog::poset(1);
        assert_eq!(check_ainf_relations(&c, 4), None);
        assert_eq!(check_strict_units(&c), None);
    }

    #[test]
    fn nonsquare_zero_differential_detected_at_arity_one() {
        let mut j = CategoryJson::default();
        j.object("X")
            .hom("X", "X", &["e", "a", "b"])
            .unit("X", "e")
            .mu(&["a"], &["b"])
            .mu(&["b"], &["a"])
            .with_unit_laws();
        let c = j.build().unwrap();
        let v = check_ainf_relations(&c, 1).unwrap();
        assert_eq!(v.d, 1);
    }

    #[test]
    fn deleting_left_unit_entry_is_witnessed() {
        let c = catalog::poset(1);
        let e0 = c.basis_id("e_0").unwrap();
        let f = c.basis_id("a_0_1").unwrap();
        let broken = c.with_mu_value(&[e0, f], Gf2Vector::zero(1)).unwrap();
        let w = check_strict_units(&broken).unwrap();
        assert_eq!(w.inputs, vec!["e_0".to_string(), "a_0_1".to_string()]);
    }

    #[test]
    fn higher_operation_on_unit_is_witnessed() {
        let c = catalog::poset(1);
        let e0 = c.basis_id("e_0").unwrap();
        let f = c.basis_id("a_0_1").unwrap();
        let e1 = c.basis_id("e_1").unwrap();
        let broken = c.with_mu_value(&[e0, f, e1], Gf2Vector::unit(1, 0)).unwrap();
        let w = check_strict_units(&broken).unwrap();
        assert_eq!(w.law, "arity 3");
    }

    #[test]
    fn flipped_mu3_coefficient_detected() {
        let c = catalog::linear_mu3();
        assert_eq!(check_ainf_relations(&c, sufficient_dmax(&c)), None);
        let key: Vec<BasisId> = ["h01", "h12", "h23"].iter().map(|l| c.basis_id(l).unwrap()).collect();
        let mut out = c.mu_basis(&key).unwrap().clone();
        out.flip(0);
        let broken = c.with_mu_value(&key, out).unwrap();
        let v = check_ainf_relations(&broken, sufficient_dmax(&broken)).unwrap();
        assert!(v.d <= 4);
    }
}
