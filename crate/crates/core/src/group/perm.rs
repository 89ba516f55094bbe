use super::GroupError;
use std::fmt;

/// Permutation of the points 0..degree (printed 1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    /// From 0-based images; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::NotBijective(format!("{images:?}")));
            }
        }
        Ok(Perm { images })
    }

    /// From 1-based cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self, GroupError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (k, &p) in cyc.iter().enumerate() {
                if p == 0 || p as usize > degree {
                    return Err(GroupError::NotBijective(format!("point {p} outside 1..{degree}")));
                }
                let idx = p as usize - 1;
                if std::mem::replace(&mut touched[idx], true) {
                    return Err(GroupError::NotBijective(format!("point {p} repeated in {cycles:?}")));
                }
                images[idx] = cyc[(k + 1) % cyc.len()] - 1;
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation such as `(1,2)(3,4)` or `()`.
    pub fn parse(degree: usize, s: &str) -> Result<Self, GroupError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || GroupError::BadSpec(format!("cannot parse cycle notation {s:?}"));
        if !s.starts_with('(') || !s.ends_with(')') {
            return Err(bad());
        }
        let mut cycles = Vec::new();
        for chunk in s[1..s.len() - 1].split(")(") {
            if chunk.is_empty() {
                continue;
            }
            let cyc = chunk.split(',').map(|t| t.parse::<u32>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
            cycles.push(cyc);
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image array, as serialized.
    pub fn images_one_based(&self) -> Vec<u32> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// Product read left to right: first `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint cycles of length > 1, 1-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p as u32 + 1);
                p = self.images[p] as usize;
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}
