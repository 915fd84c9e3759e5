//! Type-1 finite-dimensional representations of U_q(sl_2) and U_q(gl_k).
//!
//! Generators act through the coproduct
//! `ΔE = E⊗K⁻¹ + 1⊗E`, `ΔF = F⊗1 + K⊗F`, `ΔK = K⊗K`.

mod decompose;
mod registry;
mod rep;
mod tensor_power;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) use decompose::block_inverse;
pub use decompose::{decompose, highest_weight_vectors, ColumnLabel, Constituent, Decomposition, HighestWeightVector};
pub use registry::{irrep, IrrepModel};
pub use rep::{check_relations, tensor_rep, trivial_rep, vector_rep, RelationReport, Rep};
pub use tensor_power::TensorPower;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sl2,
    Gl,
}

/// Which quantum group: `sl2`, or `gl_k` for some `k ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    pub family: Family,
    pub k: usize,
}

impl AlgebraSpec {
    pub fn sl2() -> Self {
        AlgebraSpec { family: Family::Sl2, k: 2 }
    }

    pub fn gl(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("gl_k needs k >= 2, got {k}")));
        }
        Ok(AlgebraSpec { family: Family::Gl, k })
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.k - 1
    }

    /// Length of a weight vector: 1 for sl2 (the H-eigenvalue), k for gl_k.
    pub fn weight_len(&self) -> usize {
        match self.family {
            Family::Sl2 => 1,
            Family::Gl => self.k,
        }
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        match self.family {
            Family::Sl2 => vec![2],
            Family::Gl => {
                let mut a = vec![0; self.k];
                a[i] = 1;
                a[i + 1] = -1;
                a
            }
        }
    }

    /// `⟨weight, α_i^∨⟩`, the exponent of `q` by which `K_i` acts.
    pub fn coroot_pairing(&self, weight: &[i64], i: usize) -> i64 {
        match self.family {
            Family::Sl2 => weight[0],
            Family::Gl => weight[i] - weight[i + 1],
        }
    }

    pub fn check_same(&self, other: &AlgebraSpec) -> Result<()> {
        if self != other {
            return Err(Error::AlgebraMismatch(self.to_string(), other.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Sl2 => f.write_str("sl2"),
            Family::Gl => write!(f, "gl{}", self.k),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "sl2" {
            return Ok(AlgebraSpec::sl2());
        }
        if let Some(k) = s.strip_prefix("gl") {
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad algebra {s:?}")))?;
            return AlgebraSpec::gl(k);
        }
        Err(Error::Parse(format!("unknown algebra {s:?}")))
    }
}

impl Serialize for AlgebraSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for AlgebraSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Highest weight of an irreducible: `[n]` for sl2, a partition padded to
/// length `k` for gl_k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub algebra: AlgebraSpec,
    pub hw: Vec<i64>,
}

impl IrrepLabel {
    pub fn sl2(n: i64) -> Result<Self> {
        IrrepLabel::new(AlgebraSpec::sl2(), vec![n])
    }

    /// Partition label; shorter inputs are padded with zeros.
    pub fn gl(k: usize, parts: &[i64]) -> Result<Self> {
        let mut hw = parts.to_vec();
        if hw.len() < k {
            hw.resize(k, 0);
        }
        IrrepLabel::new(AlgebraSpec::gl(k)?, hw)
    }

    pub fn trivial(algebra: AlgebraSpec) -> Self {
        IrrepLabel { algebra, hw: vec![0; algebra.weight_len()] }
    }

    pub fn vector(algebra: AlgebraSpec) -> Self {
        let mut hw = vec![0; algebra.weight_len()];
        hw[0] = 1;
        IrrepLabel { algebra, hw }
    }

    pub fn new(algebra: AlgebraSpec, hw: Vec<i64>) -> Result<Self> {
        let label = IrrepLabel { algebra, hw };
        label.validate()?;
        Ok(label)
    }

    pub fn validate(&self) -> Result<()> {
        if self.hw.len() != self.algebra.weight_len() {
            return Err(Error::InvalidLabel(format!("{self}: expected {} entries", self.algebra.weight_len())));
        }
        if self.hw.iter().any(|&x| x < 0) {
            return Err(Error::InvalidLabel(format!("{self}: negative entry")));
        }
        if self.hw.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidLabel(format!("{self}: entries must be weakly decreasing")));
        }
        Ok(())
    }

    /// Number of boxes (gl) or the highest weight n (sl2); the tensor degree
    /// of the minimal power of the vector representation containing it
    /// (for gl), and the grading used by weight bounds.
    pub fn size(&self) -> usize {
        self.hw.iter().sum::<i64>() as usize
    }

    /// Classical dimension (Weyl dimension formula).
    pub fn dim(&self) -> usize {
        match self.algebra.family {
            Family::Sl2 => self.hw[0] as usize + 1,
            Family::Gl => {
                let k = self.algebra.k;
                let mut num: u128 = 1;
                let mut den: u128 = 1;
                for i in 0..k {
                    for j in i + 1..k {
                        num *= (self.hw[i] - self.hw[j] + (j - i) as i64) as u128;
                        den *= (j - i) as u128;
                    }
                }
                (num / den) as usize
            }
        }
    }
}

/// Serialized as its integer array; the algebra travels separately.
impl Serialize for IrrepLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.hw.serialize(s)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hw.iter().map(|x| x.to_string()).collect();
        write!(f, "{}({})", self.algebra, parts.join(","))
    }
}

/// A Chevalley generator of U_q, by 0-based simple-root index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
}

impl Generator {
    /// All generators of an algebra, in the order E, F, K, K⁻¹ per root.
    pub fn all(algebra: AlgebraSpec) -> Vec<Generator> {
        (0..algebra.rank())
            .flat_map(|i| [Generator::E(i), Generator::F(i), Generator::K(i), Generator::Kinv(i)])
            .collect()
    }

    pub fn index(&self) -> usize {
        match *self {
            Generator::E(i) | Generator::F(i) | Generator::K(i) | Generator::Kinv(i) => i,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::E(i) => write!(f, "E{}", i + 1),
            Generator::F(i) => write!(f, "F{}", i + 1),
            Generator::K(i) => write!(f, "K{}", i + 1),
            Generator::Kinv(i) => write!(f, "Kinv{}", i + 1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_dimensions() {
        assert_eq!(IrrepLabel::gl(3, &[2, 1]).unwrap().dim(), 8);
        assert_eq!(IrrepLabel::gl(3, &[3]).unwrap().dim(), 10);
        assert_eq!(IrrepLabel::gl(3, &[1, 1, 1]).unwrap().dim(), 1);
        assert_eq!(IrrepLabel::gl(2, &[2]).unwrap().dim(), 3);
        assert_eq!(IrrepLabel::gl(3, &[4, 2]).unwrap().dim(), 27);
        assert_eq!(IrrepLabel::sl2(3).unwrap().dim(), 4);
    }

    #[test]
    fn label_validation() {
        assert!(IrrepLabel::gl(2, &[1, 2]).is_err());
        assert!(IrrepLabel::gl(2, &[1, 0, 0]).is_err());
        assert!(IrrepLabel::sl2(-1).is_err());
    }

    #[test]
    fn algebra_strings() {
        assert_eq!("gl3".parse::<AlgebraSpec>().unwrap(), AlgebraSpec::gl(3).unwrap());
        assert_eq!(AlgebraSpec::sl2().to_string(), "sl2");
        assert!("gl1".parse::<AlgebraSpec>().is_err());
    }
}
