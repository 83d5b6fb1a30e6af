//! Graph families with closed-form spanning tree counts.
//!
//! Built graphs list vertices as `p_1..p_n`, then `q_1..q_m`, then the apex
//! `p` when the family has one. For multipartite graphs the parts are laid
//! out consecutively.
//!
//! Specs have a compact text form used on the command line:
//!
//! ```text
//! cone:m=3:n=3
//! modified-bipartite:k=2:m=3:n=4
//! generalized-bipartite:ks=3,2:n=3
//! half-cone:k=2:ks=1,3:n=3
//! multipartite:parts=2,2,2
//! ```

mod formulas;
mod recurrences;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

pub use formulas::{
    formula_bipartite, formula_complete, formula_cone, formula_generalized_bipartite,
    formula_half_cone, formula_half_cone_uniform, formula_modified_bipartite,
    formula_multipartite,
};
pub use recurrences::{cone_recurrence_dp, modified_bipartite_recurrence_dp};
pub use symmetric::{
    binomial, elementary_symmetric, half_cone_derivative_identity, lemma_complement_product_sum,
    lemma_sum_over_subsets,
};

use crate::error::{Error, Result};
use crate::multigraph::{GraphSummary, MultiGraph};
use crate::BigCount;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Cone,
    ModifiedBipartite,
    GeneralizedBipartite,
    HalfCone,
    Multipartite,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Cone,
        FamilyKind::ModifiedBipartite,
        FamilyKind::GeneralizedBipartite,
        FamilyKind::HalfCone,
        FamilyKind::Multipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cone => "cone",
            FamilyKind::ModifiedBipartite => "modified-bipartite",
            FamilyKind::GeneralizedBipartite => "generalized-bipartite",
            FamilyKind::HalfCone => "half-cone",
            FamilyKind::Multipartite => "multipartite",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `C^m K_n`: an apex joined to every vertex of `K_n` by `m` edges.
    Cone { m: u32, n: u32 },
    /// `M^k K_{m,n}`: `K_{m,n}` with the edges at `q_m` replaced by `k` parallel edges.
    ModifiedBipartite { k: u32, m: u32, n: u32 },
    /// `M^{k_1..k_m} K_{m,n}`: each `q_i - p_j` pair carries `k_i` edges.
    GeneralizedBipartite { ks: Vec<u32>, n: u32 },
    /// `F^k M^{k_1..k_m} K_{m,n}`: the above plus an apex joined to each `q_i` by `k` edges.
    HalfCone { k: u32, ks: Vec<u32>, n: u32 },
    /// `K_{n_1..n_k}`.
    Multipartite { parts: Vec<u32> },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Cone { .. } => FamilyKind::Cone,
            FamilySpec::ModifiedBipartite { .. } => FamilyKind::ModifiedBipartite,
            FamilySpec::GeneralizedBipartite { .. } => FamilyKind::GeneralizedBipartite,
            FamilySpec::HalfCone { .. } => FamilyKind::HalfCone,
            FamilySpec::Multipartite { .. } => FamilyKind::Multipartite,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |name: &str, v: u32| {
            if v == 0 {
                Err(Error::InvalidSpec(format!("{name} must be at least 1")))
            } else {
                Ok(())
            }
        };
        let positive_list = |name: &str, vs: &[u32]| {
            if vs.is_empty() {
                return Err(Error::InvalidSpec(format!("{name} must not be empty")));
            }
            vs.iter().try_for_each(|&v| positive(name, v))
        };
        match self {
            FamilySpec::Cone { m, .. } => positive("m", *m),
            FamilySpec::ModifiedBipartite { k, m, n } => {
                positive("k", *k)?;
                positive("m", *m)?;
                positive("n", *n)
            }
            FamilySpec::GeneralizedBipartite { ks, n } => {
                positive_list("ks", ks)?;
                positive("n", *n)
            }
            FamilySpec::HalfCone { k, ks, n } => {
                positive("k", *k)?;
                positive_list("ks", ks)?;
                positive("n", *n)
            }
            FamilySpec::Multipartite { parts } => {
                if parts.len() < 2 {
                    return Err(Error::InvalidPartition(parts.len()));
                }
                positive_list("parts", parts)
            }
        }
    }

    /// Bipartite multiplicity of each `q_i`, for the bipartite-based families.
    fn q_multiplicities(&self) -> Option<(Vec<u32>, u32)> {
        match self {
            FamilySpec::ModifiedBipartite { k, m, n } => {
                let mut ks = vec![1; *m as usize];
                ks[*m as usize - 1] = *k;
                Some((ks, *n))
            }
            FamilySpec::GeneralizedBipartite { ks, n } | FamilySpec::HalfCone { ks, n, .. } => {
                Some((ks.clone(), *n))
            }
            _ => None,
        }
    }

    /// The literal multigraph.
    pub fn build(&self) -> Result<MultiGraph> {
        self.validate()?;
        let mut edges: Vec<(usize, usize, u32)> = Vec::new();
        let vertex_count;
        match self {
            FamilySpec::Cone { m, n } => {
                let n = *n as usize;
                vertex_count = n + 1;
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v, 1));
                    }
                    edges.push((u, n, *m));
                }
            }
            FamilySpec::Multipartite { parts } => {
                let mut part_of = Vec::new();
                for (i, &size) in parts.iter().enumerate() {
                    part_of.extend(std::iter::repeat_n(i, size as usize));
                }
                vertex_count = part_of.len();
                for u in 0..vertex_count {
                    for v in u + 1..vertex_count {
                        if part_of[u] != part_of[v] {
                            edges.push((u, v, 1));
                        }
                    }
                }
            }
            _ => {
                let (ks, n) = self.q_multiplicities().expect("bipartite family");
                let (n, m) = (n as usize, ks.len());
                vertex_count = n + m + usize::from(self.kind() == FamilyKind::HalfCone);
                for (i, &k) in ks.iter().enumerate() {
                    for p in 0..n {
                        edges.push((n + i, p, k));
                    }
                }
                if let FamilySpec::HalfCone { k, .. } = self {
                    for i in 0..m {
                        edges.push((n + m, n + i, *k));
                    }
                }
            }
        }
        MultiGraph::from_edges(vertex_count, edges)
    }

    /// Size of the built graph, computed without building it.
    pub fn summary(&self) -> Result<GraphSummary> {
        self.validate()?;
        let big = |v: u64| BigUint::from(v);
        let summary = match self {
            FamilySpec::Cone { m, n } => {
                let (m, n) = (*m as u64, *n as u64);
                let clique = n * n.saturating_sub(1) / 2;
                GraphSummary {
                    vertices: n as usize + 1,
                    support_edges: (clique + n) as usize,
                    total_multiplicity: big(clique) + big(m) * n,
                }
            }
            FamilySpec::Multipartite { parts } => {
                let total: u64 = parts.iter().map(|&p| p as u64).sum();
                let squares: u64 = parts.iter().map(|&p| p as u64 * p as u64).sum();
                let pairs = (total * total - squares) / 2;
                GraphSummary {
                    vertices: total as usize,
                    support_edges: pairs as usize,
                    total_multiplicity: big(pairs),
                }
            }
            _ => {
                let (ks, n) = self.q_multiplicities().expect("bipartite family");
                let m = ks.len() as u64;
                let n = n as u64;
                let bipartite: BigUint = ks.iter().map(|&k| big(k as u64)).sum::<BigUint>() * n;
                match self {
                    FamilySpec::HalfCone { k, .. } => GraphSummary {
                        vertices: (m + n + 1) as usize,
                        support_edges: (m * n + m) as usize,
                        total_multiplicity: bipartite + big(m) * *k,
                    },
                    _ => GraphSummary {
                        vertices: (m + n) as usize,
                        support_edges: (m * n) as usize,
                        total_multiplicity: bipartite,
                    },
                }
            }
        };
        Ok(summary)
    }

    /// Closed-form count.
    pub fn formula(&self) -> Result<BigCount> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Cone { m, n } => formula_cone(*m, *n),
            FamilySpec::ModifiedBipartite { k, m, n } => formula_modified_bipartite(*k, *m, *n),
            FamilySpec::GeneralizedBipartite { ks, n } => formula_generalized_bipartite(ks, *n),
            FamilySpec::HalfCone { k, ks, n } => formula_half_cone(*k, ks, *n),
            FamilySpec::Multipartite { parts } => formula_multipartite(parts)?,
        })
    }

    /// Count via the proof recurrence, for the families that have one.
    pub fn recurrence(&self) -> Result<Option<BigCount>> {
        self.validate()?;
        Ok(match self {
            FamilySpec::Cone { m, n } => Some(cone_recurrence_dp(*m, *n)),
            FamilySpec::ModifiedBipartite { k, m, n } => {
                Some(modified_bipartite_recurrence_dp(*k, *m, *n))
            }
            _ => None,
        })
    }

    /// The uniform half cone count when every `k_i` is equal.
    pub fn uniform_half_cone(&self) -> Option<BigCount> {
        match self {
            FamilySpec::HalfCone { k, ks, n } if self.validate().is_ok() => {
                let s = ks[0];
                ks.iter()
                    .all(|&x| x == s)
                    .then(|| formula_half_cone_uniform(*k, s, ks.len() as u32, *n))
            }
            _ => None,
        }
    }
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = self.kind();
        match self {
            FamilySpec::Cone { m, n } => write!(f, "{kind}:m={m}:n={n}"),
            FamilySpec::ModifiedBipartite { k, m, n } => write!(f, "{kind}:k={k}:m={m}:n={n}"),
            FamilySpec::GeneralizedBipartite { ks, n } => {
                write!(f, "{kind}:ks={}:n={n}", join(ks))
            }
            FamilySpec::HalfCone { k, ks, n } => write!(f, "{kind}:k={k}:ks={}:n={n}", join(ks)),
            FamilySpec::Multipartite { parts } => write!(f, "{kind}:parts={}", join(parts)),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields = s.split(':');
        let kind: FamilyKind = fields.next().unwrap_or_default().parse()?;
        let mut params = BTreeMap::new();
        for field in fields {
            let (name, value) = field
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("expected name=value, got `{field}`")))?;
            let values = value
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidSpec(format!("bad number `{v}` for {name}")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if params.insert(name, values).is_some() {
                return Err(Error::InvalidSpec(format!("{name} given twice")));
            }
        }
        let mut take = |name: &str| {
            params
                .remove(name)
                .ok_or_else(|| Error::InvalidSpec(format!("{kind} needs {name}")))
        };
        let scalar = |name: &str, vs: Vec<u32>| match vs.as_slice() {
            [v] => Ok(*v),
            _ => Err(Error::InvalidSpec(format!("{name} takes a single value"))),
        };
        let spec = match kind {
            FamilyKind::Cone => FamilySpec::Cone {
                m: scalar("m", take("m")?)?,
                n: scalar("n", take("n")?)?,
            },
            FamilyKind::ModifiedBipartite => FamilySpec::ModifiedBipartite {
                k: scalar("k", take("k")?)?,
                m: scalar("m", take("m")?)?,
                n: scalar("n", take("n")?)?,
            },
            FamilyKind::GeneralizedBipartite => FamilySpec::GeneralizedBipartite {
                ks: take("ks")?,
                n: scalar("n", take("n")?)?,
            },
            FamilyKind::HalfCone => FamilySpec::HalfCone {
                k: scalar("k", take("k")?)?,
                ks: take("ks")?,
                n: scalar("n", take("n")?)?,
            },
            FamilyKind::Multipartite => FamilySpec::Multipartite {
                parts: take("parts")?,
            },
        };
        if let Some(extra) = params.keys().next() {
            return Err(Error::InvalidSpec(format!("{kind} does not take {extra}")));
        }
        spec.validate()?;
        Ok(spec)
    }
}
