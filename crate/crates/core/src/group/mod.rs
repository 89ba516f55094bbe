//! Permutation groups: construction by closure, conjugacy classes and exact
//! character tables.

mod character;
mod modp;
mod perm;

pub use character::{character_table, verify_orthogonality, CharacterError, CharacterTable};
pub use perm::Perm;

use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

pub const DEFAULT_CAP: usize = 5000;

/// Above this order products are computed from permutations instead of a
/// stored table.
const TABLE_LIMIT: usize = 2048;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator is not a bijection: {0}")]
    NotBijective(String),
    #[error("group order exceeds the cap of {0} elements")]
    SizeExceeded(usize),
    #[error("invalid group spec: {0}")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    Symmetric,
    Alternating,
    Dihedral,
    #[serde(rename = "quaternion-8", alias = "quaternion")]
    Quaternion8,
    #[serde(rename = "klein-4", alias = "klein4")]
    Klein4,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preset {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

/// Group description as accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset { preset: Preset },
    Generators { degree: usize, generators: Vec<Vec<Vec<u32>>> },
}

impl GroupSpec {
    pub fn preset(family: Family, n: u32) -> Self {
        GroupSpec::Preset { preset: Preset { family, n: Some(n) } }
    }

    /// Short names: Z<n>, S<n>, A<n>, D<n> (dihedral of the n-gon, order 2n),
    /// Q8, V4 (also K4 / klein-4).
    pub fn from_short(name: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::BadSpec(format!("unknown preset {name:?}"));
        match name {
            "Q8" => return Ok(GroupSpec::Preset { preset: Preset { family: Family::Quaternion8, n: None } }),
            "V4" | "K4" | "klein-4" => return Ok(GroupSpec::Preset { preset: Preset { family: Family::Klein4, n: None } }),
            _ => {}
        }
        let (head, tail) = name.split_at(1.min(name.len()));
        let n: u32 = tail.parse().map_err(|_| bad())?;
        let family = match head {
            "Z" | "C" => Family::Cyclic,
            "S" => Family::Symmetric,
            "A" => Family::Alternating,
            "D" => Family::Dihedral,
            _ => return Err(bad()),
        };
        Ok(GroupSpec::preset(family, n))
    }

    /// Label used in reports.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Preset { preset } => {
                let n = preset.n.unwrap_or(0);
                match preset.family {
                    Family::Cyclic => format!("Z{n}"),
                    Family::Symmetric => format!("S{n}"),
                    Family::Alternating => format!("A{n}"),
                    Family::Dihedral => format!("D{n}"),
                    Family::Quaternion8 => "Q8".into(),
                    Family::Klein4 => "V4".into(),
                }
            }
            GroupSpec::Generators { degree, generators } => {
                let gens: Vec<String> = generators
                    .iter()
                    .map(|g| Perm::from_cycles(*degree, g).map(|p| p.to_string()).unwrap_or_else(|_| "?".into()))
                    .collect();
                format!("<{}> on {degree} points", gens.join(", "))
            }
        }
    }

    fn degree_and_generators(&self) -> Result<(usize, Vec<Perm>), GroupError> {
        let need_n = |p: &Preset| p.n.ok_or_else(|| GroupError::BadSpec(format!("preset {:?} needs n", p.family)));
        match self {
            GroupSpec::Generators { degree, generators } => {
                let gens = generators.iter().map(|g| Perm::from_cycles(*degree, g)).collect::<Result<_, _>>()?;
                Ok((*degree, gens))
            }
            GroupSpec::Preset { preset } => {
                let cyc = |deg: usize, cs: Vec<Vec<u32>>| Perm::from_cycles(deg, &cs);
                match preset.family {
                    Family::Cyclic => {
                        let n = need_n(preset)? as usize;
                        if n == 0 {
                            return Err(GroupError::BadSpec("cyclic group needs n >= 1".into()));
                        }
                        let gens = if n > 1 { vec![cyc(n, vec![(1..=n as u32).collect()])?] } else { vec![] };
                        Ok((n, gens))
                    }
                    Family::Symmetric => {
                        let n = need_n(preset)? as usize;
                        if n == 0 {
                            return Err(GroupError::BadSpec("symmetric group needs n >= 1".into()));
                        }
                        let mut gens = Vec::new();
                        if n >= 2 {
                            gens.push(cyc(n, vec![vec![1, 2]])?);
                        }
                        if n >= 3 {
                            gens.push(cyc(n, vec![(1..=n as u32).collect()])?);
                        }
                        Ok((n, gens))
                    }
                    Family::Alternating => {
                        let n = need_n(preset)? as usize;
                        if n == 0 {
                            return Err(GroupError::BadSpec("alternating group needs n >= 1".into()));
                        }
                        let gens = (3..=n as u32).map(|k| cyc(n, vec![vec![1, 2, k]])).collect::<Result<_, _>>()?;
                        Ok((n, gens))
                    }
                    Family::Dihedral => {
                        let n = need_n(preset)? as usize;
                        if n < 3 {
                            return Err(GroupError::BadSpec("dihedral group needs n >= 3".into()));
                        }
                        let rot = cyc(n, vec![(1..=n as u32).collect()])?;
                        // reflection i -> n + 1 - i
                        let refl = Perm::from_images((0..n as u32).map(|i| n as u32 - 1 - i).collect())?;
                        Ok((n, vec![rot, refl]))
                    }
                    Family::Quaternion8 => Ok((8, quaternion_generators())),
                    Family::Klein4 => Ok((4, vec![cyc(4, vec![vec![1, 2], vec![3, 4]])?, cyc(4, vec![vec![1, 3], vec![2, 4]])?])),
                }
            }
        }
    }
}

/// Right-regular action of i and j on the units {±1, ±i, ±j, ±k}, labelled
/// 2*unit + sign_bit.
fn quaternion_generators() -> Vec<Perm> {
    // unit products: table[a][b] = (sign, unit) with 0=1, 1=i, 2=j, 3=k
    const T: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let right_mul = |g: usize| {
        let images = (0..8u32)
            .map(|x| {
                let (u, neg) = (x as usize / 2, x % 2 == 1);
                let (s, w) = T[u][g];
                (2 * w + usize::from(neg ^ s)) as u32
            })
            .collect();
        Perm::from_images(images).expect("quaternion table is a bijection")
    };
    vec![right_mul(1), right_mul(2)]
}

/// Conjugacy classes ordered by their smallest element index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassSet {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub class_of: Vec<usize>,
    /// Class containing the inverses of each class.
    pub inverse_class: Vec<usize>,
}

impl ConjClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// A finite permutation group with its elements enumerated breadth-first
/// from the identity (index 0), right-multiplying by generators in order.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    label: String,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    classes: ConjClassSet,
}

pub fn group_from_spec(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup, GroupError> {
    let (degree, generators) = spec.degree_and_generators()?;
    FiniteGroup::generate(spec.label(), degree, generators, cap)
}

impl FiniteGroup {
    pub fn generate(label: String, degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self, GroupError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::BadSpec(format!("generator {g} has degree {} not {degree}", g.degree())));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            for g in &generators {
                let y = elements[head].then(g);
                if !index.contains_key(&y) {
                    if elements.len() == cap {
                        return Err(GroupError::SizeExceeded(cap));
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.then(b)] as u32);
                }
            }
            t
        });
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let orders = elements.iter().map(|p| p.order()).collect();
        let mut g = FiniteGroup {
            label,
            degree,
            generators,
            elements,
            index,
            table,
            inverses,
            orders,
            classes: ConjClassSet { classes: vec![], representatives: vec![], class_of: vec![], inverse_class: vec![] },
        };
        g.classes = g.compute_classes();
        Ok(g)
    }

    fn compute_classes(&self) -> ConjClassSet {
        let n = self.order();
        let gens: Vec<usize> = self.generators.iter().map(|p| self.index[p]).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut orbit = vec![start];
            class_of[start] = c;
            let mut head = 0;
            while head < orbit.len() {
                let x = orbit[head];
                for &g in &gens {
                    let y = self.mul(self.mul(self.inverse(g), x), g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = c;
                        orbit.push(y);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let representatives: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let inverse_class = representatives.iter().map(|&r| class_of[self.inverse(r)]).collect();
        ConjClassSet { classes, representatives, class_of, inverse_class }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|p| self.index[p]).collect()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the product "first a, then b".
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g x g^-1
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn conjugacy_classes(&self) -> &ConjClassSet {
        &self.classes
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Cycle notation of an element.
    pub fn name(&self, i: usize) -> String {
        self.elements[i].to_string()
    }

    pub fn parse_element(&self, s: &str) -> Result<usize, GroupError> {
        let p = Perm::parse(self.degree, s)?;
        self.index_of(&p).ok_or_else(|| GroupError::BadSpec(format!("{s} is not an element of {}", self.label)))
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjClassSet {
    g.conjugacy_classes().clone()
}

pub fn exponent(g: &FiniteGroup) -> u64 {
    g.exponent()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset(s: &str) -> FiniteGroup {
        group_from_spec(&GroupSpec::from_short(s).unwrap(), DEFAULT_CAP).unwrap()
    }

    #[test]
    fn orders_of_presets() {
        for (s, n) in [("Z1", 1), ("Z4", 4), ("S1", 1), ("S3", 6), ("S4", 24), ("A4", 12), ("D4", 8), ("D5", 10), ("Q8", 8), ("V4", 4)] {
            assert_eq!(preset(s).order(), n, "{s}");
        }
    }

    #[test]
    fn s3_enumeration_order() {
        let g = preset("S3");
        let names: Vec<String> = (0..6).map(|i| g.name(i)).collect();
        assert_eq!(names, ["()", "(1,2)", "(1,2,3)", "(1,3)", "(2,3)", "(1,3,2)"]);
    }

    #[test]
    fn cap_is_enforced() {
        let spec = GroupSpec::from_short("S5").unwrap();
        assert_eq!(group_from_spec(&spec, 100).unwrap_err(), GroupError::SizeExceeded(100));
    }

    #[test]
    fn spec_json_forms() {
        let a: GroupSpec = serde_json::from_str(r#"{"preset":{"family":"symmetric","n":3}}"#).unwrap();
        let b: GroupSpec = serde_json::from_str(r#"{"degree":3,"generators":[[[1,2]],[[1,2,3]]]}"#).unwrap();
        assert_eq!(group_from_spec(&a, DEFAULT_CAP).unwrap().order(), 6);
        assert_eq!(group_from_spec(&b, DEFAULT_CAP).unwrap().order(), 6);
        let q: GroupSpec = serde_json::from_str(r#"{"preset":{"family":"quaternion-8"}}"#).unwrap();
        assert_eq!(group_from_spec(&q, DEFAULT_CAP).unwrap().order(), 8);
    }

    #[test]
    fn class_basics() {
        let s3 = preset("S3");
        assert_eq!(s3.conjugacy_classes().sizes(), vec![1, 3, 2]);
        assert_eq!(s3.exponent(), 6);
        assert_eq!(preset("S4").conjugacy_classes().len(), 5);
        assert_eq!(preset("V4").exponent(), 2);
        let q8 = preset("Q8");
        let mut sizes = q8.conjugacy_classes().sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }
}
