//! Small hand-built categories used in examples and tests.

use super::category::{AInfCategory, CategoryJson};

/// The poset `[n]` as a strict category: one morphism `a_i_j` for `i < j`,
/// units `e_i`, composition `a_i_j · a_j_k = a_i_k`.
pub fn poset(n: usize) -> AInfCategory {
    let mut j = CategoryJson::default();
    let name = |i: usize, k: usize| if i == k { format!("e_{i}") } else { format!("a_{i}_{k}") };
    for i in 0..=n {
        j.object(&i.to_string());
    }
    for i in 0..=n {
        for k in i..=n {
            j.hom(&i.to_string(), &k.to_string(), &[&name(i, k)]);
        }
        j.unit(&i.to_string(), &name(i, i));
    }
    for i in 0..=n {
        for k in i..=n {
            for l in k..=n {
                j.mu(&[&name(i, k), &name(k, l)], &[&name(i, l)]);
            }
        }
    }
    j.build().expect("poset categories are well formed")
}

/// `k` objects with only their units.
pub fn discrete(k: usize) -> AInfCategory {
    let mut j = CategoryJson::default();
    for i in 0..k {
        let (o, e) = (format!("P{i}"), format!("e_P{i}"));
        j.object(&o).hom(&o, &o, &[&e]).unit(&o, &e);
    }
    j.with_unit_laws();
    j.build().expect("discrete categories are well formed")
}

/// Two objects `X`, `Y` with mutually inverse morphisms `u : X → Y`,
/// `v : Y → X`.
pub fn iso_pair() -> AInfCategory {
    let mut j = CategoryJson::default();
    j.object("X")
        .object("Y")
        .hom("X", "X", &["e_X"])
        .hom("Y", "Y", &["e_Y"])
        .hom("X", "Y", &["u"])
        .hom("Y", "X", &["v"])
        .unit("X", "e_X")
        .unit("Y", "e_Y")
        .mu(&["u", "v"], &["e_X"])
        .mu(&["v", "u"], &["e_Y"])
        .with_unit_laws();
    j.build().expect("well formed")
}

/// Two objects with `hom(X, Y) = ⟨a, b⟩` and `μ¹(a) = b`, so `H(X, Y) = 0`.
pub fn acyclic_pair() -> AInfCategory {
    let mut j = CategoryJson::default();
    j.object("X")
        .object("Y")
        .hom("X", "X", &["e_X"])
        .hom("Y", "Y", &["e_Y"])
        .hom("X", "Y", &["a", "b"])
        .unit("X", "e_X")
        .unit("Y", "e_Y")
        .mu(&["a"], &["b"])
        .with_unit_laws();
    j.build().expect("well formed")
}

/// A linear quiver `X0 → X1 → X2 → X3` with `hom(X0, X3) = ⟨a, b⟩`,
/// `μ¹(a) = b` and `μ³(h01, h12, h23) = b`; all other composites vanish.
pub fn linear_mu3() -> AInfCategory {
    let mut j = CategoryJson::default();
    for i in 0..4 {
        let (o, e) = (format!("X{i}"), format!("e{i}"));
        j.object(&o).hom(&o, &o, &[&e]).unit(&o, &e);
    }
    j.hom("X0", "X1", &["h01"])
        .hom("X1", "X2", &["h12"])
        .hom("X2", "X3", &["h23"])
        .hom("X0", "X3", &["a", "b"])
        .mu(&["a"], &["b"])
        .mu(&["h01", "h12", "h23"], &["b"])
        .with_unit_laws();
    j.build().expect("well formed")
}
