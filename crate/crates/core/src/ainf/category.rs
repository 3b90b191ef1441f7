use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Global id of a basis element across all hom spaces.
pub type BasisId = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BasisInfo {
    pub source: usize,
    pub target: usize,
    pub index: usize,
    pub label: String,
}

/// A finite, strictly unital, ungraded A∞-category over F₂.
///
/// Hom spaces carry chosen bases whose labels are unique across the whole
/// category, so a tuple of labels determines its object chain. The
/// operations `μ^d` are stored sparsely on basis tuples; absent entries are
/// zero.
#[derive(Clone, Debug)]
pub struct AInfCategory {
    objects: Vec<String>,
    object_index: HashMap<String, usize>,
    // hom[x][y] = global ids of the basis of hom(x, y)
    hom: Vec<Vec<Vec<BasisId>>>,
    basis: Vec<BasisInfo>,
    label_index: HashMap<String, BasisId>,
    units: Vec<BasisId>,
    mu: HashMap<Vec<BasisId>, Gf2Vector>,
    max_arity: usize,
}

/// One stored operation value `μ^d(inputs) = output`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuJson {
    pub d: usize,
    pub inputs: Vec<String>,
    pub output: Vec<String>,
}

/// Wire form of an A∞-category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub objects: Vec<String>,
    pub hom: BTreeMap<String, Vec<String>>,
    pub units: BTreeMap<String, String>,
    pub mu: Vec<MuJson>,
}

pub(crate) fn hom_key(x: &str, y: &str) -> String {
    format!("{x}->{y}")
}

impl CategoryJson {
    pub fn object(&mut self, name: &str) -> &mut Self {
        self.objects.push(name.to_string());
        self
    }

    pub fn hom(&mut self, x: &str, y: &str, basis: &[&str]) -> &mut Self {
        self.hom
            .insert(hom_key(x, y), basis.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn unit(&mut self, x: &str, label: &str) -> &mut Self {
        self.units.insert(x.to_string(), label.to_string());
        self
    }

    pub fn mu(&mut self, inputs: &[&str], output: &[&str]) -> &mut Self {
        self.mu.push(MuJson {
            d: inputs.len(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            output: output.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    /// Adds the strict unit laws `μ²(e, b) = b = μ²(b, e)` for every basis
    /// element `b` not already covered by an entry.
    pub fn with_unit_laws(&mut self) -> &mut Self {
        let mut existing: std::collections::HashSet<Vec<String>> = self.mu.iter().map(|m| m.inputs.clone()).collect();
        let mut extra = Vec::new();
        for (key, basis) in &self.hom {
            let Some((x, y)) = key.split_once("->") else { continue };
            for b in basis {
                for inputs in [
                    self.units.get(x).map(|e| vec![e.clone(), b.clone()]),
                    self.units.get(y).map(|e| vec![b.clone(), e.clone()]),
                ]
                .into_iter()
                .flatten()
                {
                    if existing.insert(inputs.clone()) {
                        extra.push(MuJson {
                            d: 2,
                            inputs,
                            output: vec![b.clone()],
                        });
                    }
                }
            }
        }
        self.mu.extend(extra);
        self
    }

    pub fn build(&self) -> Result<AInfCategory> {
        AInfCategory::from_json(self)
    }
}

impl AInfCategory {
    pub fn from_json(json: &CategoryJson) -> Result<Self> {
        let mut object_index = HashMap::new();
        for (i, o) in json.objects.iter().enumerate() {
            if o.contains("->") || o.is_empty() {
                return Err(Error::Invalid(format!("object name `{o}` is not allowed")));
            }
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::Duplicate {
                    kind: "object",
                    name: o.clone(),
                });
            }
        }
        let n = json.objects.len();
        let mut hom = vec![vec![Vec::new(); n]; n];
        let mut basis = Vec::new();
        let mut label_index = HashMap::new();
        for (key, labels) in &json.hom {
            let (x, y) = key
                .split_once("->")
                .ok_or_else(|| Error::Invalid(format!("hom key `{key}` is not of the form X->Y")))?;
            let xi = *object_index.get(x).ok_or_else(|| Error::Unknown {
                kind: "object",
                name: x.to_string(),
            })?;
            let yi = *object_index.get(y).ok_or_else(|| Error::Unknown {
                kind: "object",
                name: y.to_string(),
            })?;
            for (idx, l) in labels.iter().enumerate() {
                let id = basis.len() as BasisId;
                if label_index.insert(l.clone(), id).is_some() {
                    return Err(Error::Duplicate {
                        kind: "basis label",
                        name: l.clone(),
                    });
                }
                basis.push(BasisInfo {
                    source: xi,
                    target: yi,
                    index: idx,
                    label: l.clone(),
                });
                hom[xi][yi].push(id);
            }
        }
        let mut units = Vec::with_capacity(n);
        for (xi, x) in json.objects.iter().enumerate() {
            let label = json.units.get(x).ok_or_else(|| Error::MissingUnit(x.clone()))?;
            let id = *label_index.get(label).ok_or_else(|| Error::Unknown {
                kind: "basis label",
                name: label.clone(),
            })?;
            let info = &basis[id as usize];
            if info.source != xi || info.target != xi {
                return Err(Error::Invalid(format!(
                    "unit `{label}` of `{x}` does not lie in hom({x}, {x})"
                )));
            }
            units.push(id);
        }
        if let Some(extra) = json.units.keys().find(|k| !object_index.contains_key(*k)) {
            return Err(Error::Unknown {
                kind: "object",
                name: extra.clone(),
            });
        }
        let mut cat = Self {
            objects: json.objects.clone(),
            object_index,
            hom,
            basis,
            label_index,
            units,
            mu: HashMap::new(),
            max_arity: 0,
        };
        for entry in &json.mu {
            if entry.d != entry.inputs.len() || entry.d == 0 {
                return Err(Error::MalformedEntry(format!(
                    "arity {} does not match {} inputs",
                    entry.d,
                    entry.inputs.len()
                )));
            }
            let inputs = entry
                .inputs
                .iter()
                .map(|l| cat.basis_id(l))
                .collect::<Result<Vec<_>>>()?;
            let chain = cat
                .chain_of(&inputs)
                .ok_or_else(|| Error::MalformedEntry(format!("inputs {:?} are not composable", entry.inputs)))?;
            let (s, t) = (chain[0], *chain.last().unwrap());
            let mut output = Gf2Vector::zero(cat.hom_dim(s, t));
            for l in &entry.output {
                let id = cat.basis_id(l)?;
                let info = &cat.basis[id as usize];
                if info.source != s || info.target != t {
                    return Err(Error::MalformedEntry(format!(
                        "output `{l}` of μ^{}({:?}) is not in hom({}, {})",
                        entry.d, entry.inputs, cat.objects[s], cat.objects[t]
                    )));
                }
                output.flip(info.index);
            }
            if cat.mu.contains_key(&inputs) {
                return Err(Error::Duplicate {
                    kind: "operation entry",
                    name: format!("μ^{}({})", entry.d, entry.inputs.join(", ")),
                });
            }
            cat.mu.insert(inputs, output);
        }
        cat.refresh_arity();
        Ok(cat)
    }

    pub fn to_json(&self) -> CategoryJson {
        let mut hom = BTreeMap::new();
        for x in 0..self.objects.len() {
            for y in 0..self.objects.len() {
                if !self.hom[x][y].is_empty() {
                    hom.insert(
                        hom_key(&self.objects[x], &self.objects[y]),
                        self.hom[x][y].iter().map(|&id| self.label(id).to_string()).collect(),
                    );
                }
            }
        }
        let units = self
            .objects
            .iter()
            .zip(&self.units)
            .map(|(o, &u)| (o.clone(), self.label(u).to_string()))
            .collect();
        let mut entries: Vec<(&Vec<BasisId>, &Gf2Vector)> = self.mu.iter().collect();
        entries.sort_by(|a, b| (a.0.len(), a.0).cmp(&(b.0.len(), b.0)));
        let mu = entries
            .into_iter()
            .map(|(inputs, out)| {
                let chain = self.chain_of(inputs).expect("stored entries compose");
                MuJson {
                    d: inputs.len(),
                    inputs: inputs.iter().map(|&i| self.label(i).to_string()).collect(),
                    output: self.labels_of(chain[0], *chain.last().unwrap(), out),
                }
            })
            .collect();
        CategoryJson {
            objects: self.objects.clone(),
            hom,
            units,
            mu,
        }
    }

    fn refresh_arity(&mut self) {
        self.max_arity = self
            .mu
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.objects[x]
    }

    pub fn object(&self, name: &str) -> Result<usize> {
        self.object_index.get(name).copied().ok_or_else(|| Error::Unknown {
            kind: "object",
            name: name.to_string(),
        })
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom[x][y].len()
    }

    pub fn hom_basis(&self, x: usize, y: usize) -> &[BasisId] {
        &self.hom[x][y]
    }

    pub fn max_hom_dim(&self) -> usize {
        self.hom.iter().flatten().map(Vec::len).max().unwrap_or(0)
    }

    pub fn basis_id(&self, label: &str) -> Result<BasisId> {
        self.label_index.get(label).copied().ok_or_else(|| Error::Unknown {
            kind: "basis label",
            name: label.to_string(),
        })
    }

    pub fn label(&self, id: BasisId) -> &str {
        &self.basis[id as usize].label
    }

    /// `(source, target, index within hom)` of a basis element.
    pub fn basis_position(&self, id: BasisId) -> (usize, usize, usize) {
        let b = &self.basis[id as usize];
        (b.source, b.target, b.index)
    }

    pub fn basis_vector(&self, id: BasisId) -> Gf2Vector {
        let b = &self.basis[id as usize];
        Gf2Vector::unit(self.hom_dim(b.source, b.target), b.index)
    }

    /// Labels of the nonzero coefficients of `v ∈ hom(x, y)`.
    pub fn labels_of(&self, x: usize, y: usize, v: &Gf2Vector) -> Vec<String> {
        v.ones().map(|i| self.label(self.hom[x][y][i]).to_string()).collect()
    }

    /// Parses a list of labels (summed over F₂) into a vector of `hom(x, y)`.
    pub fn vector_from_labels(&self, x: usize, y: usize, labels: &[String]) -> Result<Gf2Vector> {
        let mut v = Gf2Vector::zero(self.hom_dim(x, y));
        for l in labels {
            let (s, t, idx) = self.basis_position(self.basis_id(l)?);
            if s != x || t != y {
                return Err(Error::Invalid(format!(
                    "label `{l}` is not in hom({}, {})",
                    self.objects[x], self.objects[y]
                )));
            }
            v.flip(idx);
        }
        Ok(v)
    }

    pub fn unit_id(&self, x: usize) -> BasisId {
        self.units[x]
    }

    pub fn unit(&self, x: usize) -> Gf2Vector {
        self.basis_vector(self.units[x])
    }

    pub fn is_unit(&self, id: BasisId) -> bool {
        let b = &self.basis[id as usize];
        b.source == b.target && self.units[b.source] == id
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// Object chain `X₀, …, X_d` of a composable basis tuple.
    pub fn chain_of(&self, inputs: &[BasisId]) -> Option<Vec<usize>> {
        let first = self.basis.get(*inputs.first()? as usize)?;
        let mut chain = vec![first.source];
        for &id in inputs {
            let b = self.basis.get(id as usize)?;
            if b.source != *chain.last().unwrap() {
                return None;
            }
            chain.push(b.target);
        }
        Some(chain)
    }

    /// Stored value on a basis tuple (zero if absent).
    pub fn mu_basis(&self, inputs: &[BasisId]) -> Option<&Gf2Vector> {
        self.mu.get(inputs)
    }

    pub fn mu_entries(&self) -> impl Iterator<Item = (&[BasisId], &Gf2Vector)> {
        self.mu.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// `μ^d(args)` for `args[i] ∈ hom(chain[i], chain[i+1])`, extended
    /// multilinearly from the stored basis values.
    pub fn mu(&self, chain: &[usize], args: &[&Gf2Vector]) -> Gf2Vector {
        debug_assert_eq!(chain.len(), args.len() + 1);
        let (s, t) = (chain[0], chain[args.len()]);
        let mut out = Gf2Vector::zero(self.hom_dim(s, t));
        if args.is_empty() || args.len() > self.max_arity || args.iter().any(|a| a.is_zero()) {
            return out;
        }
        let mut key: SmallVec<[BasisId; 8]> = SmallVec::new();
        self.mu_rec(chain, args, &mut key, &mut out);
        out
    }

    fn mu_rec(&self, chain: &[usize], args: &[&Gf2Vector], key: &mut SmallVec<[BasisId; 8]>, out: &mut Gf2Vector) {
        let pos = key.len();
        if pos == args.len() {
            if let Some(v) = self.mu.get(key.as_slice()) {
                out.xor_in(v);
            }
            return;
        }
        let basis = &self.hom[chain[pos]][chain[pos + 1]];
        for i in args[pos].ones() {
            key.push(basis[i]);
            self.mu_rec(chain, args, key, out);
            key.pop();
        }
    }

    /// The differential `μ¹` on `hom(x, y)` as a matrix.
    pub fn differential(&self, x: usize, y: usize) -> Gf2Matrix {
        let dim = self.hom_dim(x, y);
        let cols: Vec<Gf2Vector> = self.hom[x][y]
            .iter()
            .map(|&b| self.mu.get(&vec![b]).cloned().unwrap_or_else(|| Gf2Vector::zero(dim)))
            .collect();
        Gf2Matrix::from_columns(dim, &cols).expect("outputs live in the same hom")
    }

    /// A copy with the stored value on `inputs` replaced (zero removes it).
    pub fn with_mu_value(&self, inputs: &[BasisId], output: Gf2Vector) -> Result<Self> {
        let chain = self
            .chain_of(inputs)
            .ok_or_else(|| Error::MalformedEntry("inputs are not composable".into()))?;
        let dim = self.hom_dim(chain[0], *chain.last().unwrap());
        if output.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: output.len(),
            });
        }
        let mut out = self.clone();
        if output.is_zero() {
            out.mu.remove(inputs);
        } else {
            out.mu.insert(inputs.to_vec(), output);
        }
        out.refresh_arity();
        Ok(out)
    }

    /// Every basis tuple of length `d` along composable chains, with its chain.
    pub fn composable_tuples(&self, d: usize) -> Vec<(Vec<usize>, Vec<BasisId>)> {
        let mut out = Vec::new();
        let n = self.objects.len();
        let mut chain = Vec::with_capacity(d + 1);
        let mut tuple = Vec::with_capacity(d);
        fn rec(
            cat: &AInfCategory,
            d: usize,
            n: usize,
            chain: &mut Vec<usize>,
            tuple: &mut Vec<BasisId>,
            out: &mut Vec<(Vec<usize>, Vec<BasisId>)>,
        ) {
            if tuple.len() == d {
                out.push((chain.clone(), tuple.clone()));
                return;
            }
            let x = *chain.last().unwrap();
            for y in 0..n {
                for &b in &cat.hom[x][y] {
                    chain.push(y);
                    tuple.push(b);
                    rec(cat, d, n, chain, tuple, out);
                    tuple.pop();
                    chain.pop();
                }
            }
        }
        for x in 0..n {
            chain.push(x);
            rec(self, d, n, &mut chain, &mut tuple, &mut out);
            chain.pop();
        }
        out
    }
}
