use crate::groebner::{ideal_member, IdealPresentation};
use crate::polycore::{same_ring, Polynomial};

use super::{Construction, RadgenError, WitnessSet};

/// A ground set `P` with subsets `P_0, .., P_r` (given by indices into the
/// ground set) and an exponent for every element.
#[derive(Clone, Debug)]
pub struct SVPartition {
    pub ground: Vec<Polynomial>,
    pub subsets: Vec<Vec<usize>>,
    pub exponents: Vec<u32>,
}

impl SVPartition {
    /// Partition with every exponent equal to 1.
    pub fn new(ground: Vec<Polynomial>, subsets: Vec<Vec<usize>>) -> Self {
        let exponents = vec![1; ground.len()];
        SVPartition {
            ground,
            subsets,
            exponents,
        }
    }

    /// Builds the ground set from the subsets themselves, merging equal
    /// polynomials.
    pub fn from_levels(levels: Vec<Vec<Polynomial>>) -> Self {
        let mut ground: Vec<Polynomial> = Vec::new();
        let subsets = levels
            .into_iter()
            .map(|level| {
                level
                    .into_iter()
                    .map(|p| match ground.iter().position(|g| *g == p) {
                        Some(i) => i,
                        None => {
                            ground.push(p);
                            ground.len() - 1
                        }
                    })
                    .collect()
            })
            .collect();
        SVPartition::new(ground, subsets)
    }

    pub fn with_exponents(mut self, exponents: Vec<u32>) -> Self {
        self.exponents = exponents;
        self
    }

    /// Checks the three conditions; the first violating pair in level order
    /// is reported.
    pub fn validate(&self) -> Result<(), RadgenError> {
        let ring = match self.ground.first() {
            Some(p) => p.ring().clone(),
            None => return Err(RadgenError::InvalidArgument("empty ground set".into())),
        };
        if self.ground.iter().any(|p| !same_ring(p.ring(), &ring)) {
            return Err(RadgenError::Poly(crate::polycore::PolyError::RingMismatch));
        }
        if self.ground.iter().any(|p| p.is_zero()) {
            return Err(RadgenError::InvalidArgument("zero polynomial in the ground set".into()));
        }
        if self.exponents.len() != self.ground.len() || self.exponents.contains(&0) {
            return Err(RadgenError::InvalidArgument("one positive exponent per element is required".into()));
        }
        let n = self.ground.len();
        let mut covered = vec![false; n];
        for &i in self.subsets.iter().flatten() {
            if i >= n {
                return Err(RadgenError::InvalidArgument(format!("subset index {i} out of range")));
            }
            covered[i] = true;
        }
        if let Some(i) = covered.iter().position(|c| !c) {
            return Err(RadgenError::UnionMismatch(self.ground[i].to_string()));
        }
        let first = self.subsets.first().map_or(0, |s| s.len());
        if first != 1 {
            return Err(RadgenError::FirstNotSingleton(first));
        }
        for (level, subset) in self.subsets.iter().enumerate() {
            for (a, &i) in subset.iter().enumerate() {
                for &j in &subset[a + 1..] {
                    if i == j {
                        continue;
                    }
                    let prod = &self.ground[i] * &self.ground[j];
                    if !self.covered_below(level, &prod)? {
                        return Err(RadgenError::ConditionViolated {
                            level,
                            p: self.ground[i].to_string(),
                            p2: self.ground[j].to_string(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether some element of an earlier level divides `prod`.
    fn covered_below(&self, level: usize, prod: &Polynomial) -> Result<bool, RadgenError> {
        for subset in &self.subsets[..level] {
            for &k in subset {
                let d = &self.ground[k];
                if divides(d, prod)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

fn divides(d: &Polynomial, f: &Polynomial) -> Result<bool, RadgenError> {
    if d.len() == 1 {
        let m = d.leading_monomial().expect("nonzero");
        return Ok(f.terms().iter().all(|(t, _)| m.divides(t)));
    }
    let principal = IdealPresentation::new(d.ring(), [d.clone()])?;
    Ok(ideal_member(f, &principal)?)
}

/// `q_l = sum of p^e(p)` over each level, after validating the partition.
pub fn schmitt_vogel(partition: &SVPartition) -> Result<WitnessSet, RadgenError> {
    partition.validate()?;
    let ring = partition.ground[0].ring().clone();
    let polys = partition
        .subsets
        .iter()
        .map(|subset| {
            subset.iter().fold(Polynomial::zero(&ring), |acc, &i| {
                &acc + &partition.ground[i].pow(partition.exponents[i])
            })
        })
        .collect();
    let target = IdealPresentation::new(&ring, partition.ground.iter().cloned())?;
    Ok(WitnessSet::new(polys, target, Construction::SchmittVogel))
}
