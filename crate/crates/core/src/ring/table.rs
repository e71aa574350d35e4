//! Rings given by structure constants over a finite abelian group
//! Z_{m_1} x .. x Z_{m_k}.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Structure constants of a ring whose additive group is
/// `Z_{m_1} x .. x Z_{m_k}` with generators `e_1..e_k`.
///
/// `products[i][j]` is the coordinate vector of `e_i * e_j`; multiplication
/// of arbitrary elements is the bilinear extension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRingSpec {
    pub name: String,
    pub moduli: Vec<u64>,
    pub one: Vec<u64>,
    pub products: Vec<Vec<Vec<u64>>>,
    /// Display names for the generators, e.g. `["1", "X", "Y"]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

impl TableRingSpec {
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u128 {
        self.moduli.iter().map(|&m| m as u128).product()
    }

    /// Checks shape, symmetry, well-definedness over the moduli and
    /// associativity on generator triples.
    pub fn check(&self) -> Result<()> {
        let k = self.rank();
        let bad = |msg: String| Err(Error::TableSpec(format!("{}: {msg}", self.name)));
        if k == 0 {
            return bad("no generators".into());
        }
        if let Some(i) = self.moduli.iter().position(|&m| m == 0) {
            return bad(format!("modulus {i} is zero"));
        }
        if self.one.len() != k {
            return bad(format!("one has {} coordinates, expected {k}", self.one.len()));
        }
        if self.products.len() != k || self.products.iter().any(|row| row.len() != k) {
            return bad(format!("products must be a {k}x{k} array"));
        }
        for i in 0..k {
            for j in 0..k {
                if self.products[i][j].len() != k {
                    return bad(format!("products[{i}][{j}] must have {k} coordinates"));
                }
            }
        }
        if let Some(b) = &self.basis {
            if b.len() != k {
                return bad(format!("basis has {} names, expected {k}", b.len()));
            }
        }
        for i in 0..k {
            for j in 0..k {
                let pij = self.reduce(&self.products[i][j]);
                let pji = self.reduce(&self.products[j][i]);
                if pij != pji {
                    return bad(format!("e{i}*e{j} != e{j}*e{i}"));
                }
                let scaled: Vec<u64> = pij.iter().map(|&c| c * self.moduli[i]).collect();
                if self.reduce(&scaled).iter().any(|&c| c != 0) {
                    return bad(format!(
                        "{} * (e{i}*e{j}) is nonzero, so the product is not well defined",
                        self.moduli[i]
                    ));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = self.mul_coords(&self.products[i][j], &unit(k, l));
                    let right = self.mul_coords(&unit(k, i), &self.products[j][l]);
                    if left != right {
                        return bad(format!("(e{i}*e{j})*e{l} != e{i}*(e{j}*e{l})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        v.iter().zip(&self.moduli).map(|(&c, &m)| c % m).collect()
    }

    pub fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.moduli)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect()
    }

    pub fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.rank();
        let mut out = vec![0u64; k];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                if b[j] == 0 {
                    continue;
                }
                let coef = a[i] * b[j];
                for (l, o) in out.iter_mut().enumerate() {
                    *o = (*o + coef % self.moduli[l] * self.products[i][j][l]) % self.moduli[l];
                }
            }
        }
        out
    }

    /// Coordinates of element `index`; the first coordinate is most significant.
    pub fn coords(&self, mut index: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.rank()];
        for (c, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *c = index % m;
            index /= m;
        }
        out
    }

    pub fn index(&self, coords: &[u64]) -> u64 {
        coords
            .iter()
            .zip(&self.moduli)
            .fold(0, |acc, (&c, &m)| acc * m + c % m)
    }

    pub fn render(&self, coords: &[u64]) -> String {
        let names: Vec<String> = match &self.basis {
            Some(b) => b.clone(),
            None => (0..self.rank()).map(|i| format!("e{i}")).collect(),
        };
        let terms: Vec<String> = coords
            .iter()
            .zip(&names)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, name)| match (c, name.as_str()) {
                (c, "1") => c.to_string(),
                (1, n) => n.to_string(),
                (c, n) => format!("{c}{n}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

fn unit(k: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}
