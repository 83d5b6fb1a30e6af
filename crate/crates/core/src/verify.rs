//! Cross-checks every counting route over grids of family parameters.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::deletion::{count_by_deletion, DeletionConfig};
use crate::error::{Error, Result};
use crate::families::{FamilyKind, FamilySpec};
use crate::oracles::{brute_force_count, matrix_tree_count, BruteForceConfig};
use crate::{par, BigCount, Method};

/// Optional overrides of the per-family default bounds.
///
/// `max_n` bounds `n` (part size for multipartite graphs), `max_m` bounds `m`
/// (number of parts for multipartite graphs), `max_k` bounds every edge
/// multiplicity parameter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridBounds {
    pub max_n: Option<u32>,
    pub max_m: Option<u32>,
    pub max_k: Option<u32>,
}

fn tuples(len: u32, max: u32) -> Vec<Vec<u32>> {
    (0..len).map(|_| 1..=max).multi_cartesian_product().collect()
}

/// Parameter grid for one family, in a fixed order.
pub fn family_grid(kind: FamilyKind, bounds: &GridBounds) -> Vec<FamilySpec> {
    let n_or = |d| bounds.max_n.unwrap_or(d);
    let m_or = |d| bounds.max_m.unwrap_or(d);
    let k_or = |d| bounds.max_k.unwrap_or(d);
    let mut specs = Vec::new();
    match kind {
        FamilyKind::Cone => {
            for m in 1..=m_or(4) {
                for n in 0..=n_or(5) {
                    specs.push(FamilySpec::Cone { m, n });
                }
            }
        }
        FamilyKind::ModifiedBipartite => {
            for k in 1..=k_or(3) {
                for m in 1..=m_or(4) {
                    for n in 1..=n_or(4) {
                        specs.push(FamilySpec::ModifiedBipartite { k, m, n });
                    }
                }
            }
        }
        FamilyKind::GeneralizedBipartite => {
            for m in 1..=m_or(3) {
                for ks in tuples(m, k_or(3)) {
                    for n in 1..=n_or(4) {
                        specs.push(FamilySpec::GeneralizedBipartite { ks: ks.clone(), n });
                    }
                }
            }
        }
        FamilyKind::HalfCone => {
            for k in 1..=k_or(3) {
                for m in 1..=m_or(3) {
                    for ks in tuples(m, k_or(3)) {
                        for n in 1..=n_or(3) {
                            specs.push(FamilySpec::HalfCone { k, ks: ks.clone(), n });
                        }
                    }
                }
            }
        }
        FamilyKind::Multipartite => {
            for parts in 2..=m_or(3) {
                for sizes in tuples(parts, n_or(3)) {
                    specs.push(FamilySpec::Multipartite { parts: sizes });
                }
            }
        }
    }
    specs
}

pub fn grid(families: &[FamilyKind], bounds: &GridBounds) -> Vec<FamilySpec> {
    families.iter().flat_map(|&k| family_grid(k, bounds)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub deletion: DeletionConfig,
    pub brute_force: BruteForceConfig,
    /// Spread grid points over the rayon pool.
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            deletion: DeletionConfig::pure(),
            brute_force: BruteForceConfig::default(),
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub method: Method,
    pub value: Result<BigCount>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointOutcome {
    pub spec: FamilySpec,
    /// The closed form every other method is compared with.
    pub expected: Result<BigCount>,
    pub checks: Vec<Check>,
}

impl PointOutcome {
    fn skipped(check: &Check) -> bool {
        check.method == Method::BruteForce
            && matches!(check.value, Err(Error::TooLargeForBruteForce { .. }))
    }

    pub fn passed(&self) -> bool {
        let Ok(expected) = &self.expected else {
            return false;
        };
        self.checks
            .iter()
            .all(|c| Self::skipped(c) || c.value.as_ref() == Ok(expected))
    }

    pub fn brute_force_skipped(&self) -> bool {
        self.checks.iter().any(Self::skipped)
    }

    pub fn brute_force_checked(&self) -> bool {
        self.checks
            .iter()
            .any(|c| c.method == Method::BruteForce && c.value.is_ok())
    }

    /// One line naming the spec and every value that was computed.
    pub fn describe(&self) -> String {
        let show = |v: &Result<BigCount>| match v {
            Ok(c) => c.to_string(),
            Err(e) => format!("error ({e})"),
        };
        let mut line = format!("{}: formula={}", self.spec, show(&self.expected));
        for c in &self.checks {
            let _ = write!(line, " {}={}", c.method, show(&c.value));
        }
        line
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTally {
    pub kind: FamilyKind,
    pub points: usize,
    pub passed: usize,
    pub brute_force_checked: usize,
    pub brute_force_skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub outcomes: Vec<PointOutcome>,
}

impl VerifyReport {
    pub fn discrepancies(&self) -> impl Iterator<Item = &PointOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn is_ok(&self) -> bool {
        self.discrepancies().next().is_none()
    }

    /// 0 when every point agrees, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_ok() {
            0
        } else {
            1
        }
    }

    pub fn tallies(&self) -> Vec<FamilyTally> {
        FamilyKind::ALL
            .into_iter()
            .filter_map(|kind| {
                let points: Vec<_> = self.outcomes.iter().filter(|o| o.spec.kind() == kind).collect();
                (!points.is_empty()).then(|| FamilyTally {
                    kind,
                    points: points.len(),
                    passed: points.iter().filter(|o| o.passed()).count(),
                    brute_force_checked: points.iter().filter(|o| o.brute_force_checked()).count(),
                    brute_force_skipped: points.iter().filter(|o| o.brute_force_skipped()).count(),
                })
            })
            .collect()
    }

    pub fn render_table(&self) -> String {
        let mut out = format!(
            "{:<22} {:>7} {:>7} {:>7} {:>12}\n",
            "family", "points", "passed", "failed", "brute-force"
        );
        for t in self.tallies() {
            let _ = writeln!(
                out,
                "{:<22} {:>7} {:>7} {:>7} {:>12}",
                t.kind.name(),
                t.points,
                t.passed,
                t.points - t.passed,
                t.brute_force_checked
            );
        }
        out
    }
}

pub fn verify_grid(specs: &[FamilySpec], options: &VerifyOptions) -> VerifyReport {
    verify_grid_with(specs, options, FamilySpec::formula)
}

/// Like [`verify_grid`] with a caller-supplied closed form.
pub fn verify_grid_with<F>(specs: &[FamilySpec], options: &VerifyOptions, formula: F) -> VerifyReport
where
    F: Fn(&FamilySpec) -> Result<BigCount> + Sync + Send,
{
    let outcomes = par::map(specs, options.parallel, |spec| check_point(spec, options, &formula));
    VerifyReport { outcomes }
}

fn check_point<F>(spec: &FamilySpec, options: &VerifyOptions, formula: &F) -> PointOutcome
where
    F: Fn(&FamilySpec) -> Result<BigCount>,
{
    let expected = formula(spec);
    let mut checks = Vec::new();
    match spec.recurrence() {
        Ok(Some(value)) => checks.push(Check {
            method: Method::Recurrence,
            value: Ok(value),
        }),
        Ok(None) => {}
        Err(e) => checks.push(Check {
            method: Method::Recurrence,
            value: Err(e),
        }),
    }
    if let Some(value) = spec.uniform_half_cone() {
        checks.push(Check {
            method: Method::UniformFormula,
            value: Ok(value),
        });
    }
    match spec.build() {
        Ok(g) => {
            checks.push(Check {
                method: Method::MatrixTree,
                value: Ok(matrix_tree_count(&g)),
            });
            checks.push(Check {
                method: Method::Deletion,
                value: count_by_deletion(&g, &options.deletion),
            });
            checks.push(Check {
                method: Method::BruteForce,
                value: brute_force_count(&g, &options.brute_force),
            });
        }
        Err(e) => checks.push(Check {
            method: Method::MatrixTree,
            value: Err(e),
        }),
    }
    PointOutcome {
        spec: spec.clone(),
        expected,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_sizes() {
        let b = GridBounds::default();
        assert_eq!(family_grid(FamilyKind::Cone, &b).len(), 24);
        assert_eq!(family_grid(FamilyKind::ModifiedBipartite, &b).len(), 48);
        assert_eq!(family_grid(FamilyKind::GeneralizedBipartite, &b).len(), (3 + 9 + 27) * 4);
        assert_eq!(family_grid(FamilyKind::HalfCone, &b).len(), 3 * (3 + 9 + 27) * 3);
        assert_eq!(family_grid(FamilyKind::Multipartite, &b).len(), 9 + 27);
    }

    #[test]
    fn overrides_apply() {
        let b = GridBounds {
            max_n: Some(2),
            ..Default::default()
        };
        let cones = family_grid(FamilyKind::Cone, &b);
        assert_eq!(cones.len(), 4 * 3);
        assert!(cones.contains(&FamilySpec::Cone { m: 4, n: 2 }));
    }

    #[test]
    fn small_grid_passes() {
        let b = GridBounds {
            max_n: Some(2),
            max_m: Some(2),
            max_k: Some(2),
        };
        let specs = grid(&FamilyKind::ALL, &b);
        let report = verify_grid(&specs, &VerifyOptions::default());
        assert!(report.is_ok(), "{:?}", report.discrepancies().next());
        assert_eq!(report.exit_code(), 0);
        let tallies = report.tallies();
        assert_eq!(tallies.len(), 5);
        assert!(tallies.iter().all(|t| t.points == t.passed));
    }

    #[test]
    fn corrupted_formula_is_reported() {
        let specs = family_grid(
            FamilyKind::Cone,
            &GridBounds {
                max_n: Some(3),
                max_m: Some(2),
                max_k: None,
            },
        );
        let report = verify_grid_with(&specs, &VerifyOptions::default(), |spec| {
            let value = spec.formula()?;
            Ok(match spec {
                FamilySpec::Cone { m: 2, n: 3 } => value + 1u32,
                _ => value,
            })
        });
        assert_eq!(report.exit_code(), 1);
        let bad: Vec<_> = report.discrepancies().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].spec, FamilySpec::Cone { m: 2, n: 3 });
        assert!(bad[0].describe().starts_with("cone:m=2:n=3: formula=51 "));
        assert!(report.render_table().contains("cone"));
    }

    #[test]
    fn brute_force_over_budget_is_skipped_not_failed() {
        let options = VerifyOptions {
            brute_force: BruteForceConfig {
                budget: 1,
                parallel: false,
            },
            ..Default::default()
        };
        let report = verify_grid(&[FamilySpec::Cone { m: 2, n: 3 }], &options);
        assert!(report.is_ok());
        assert_eq!(report.tallies()[0].brute_force_skipped, 1);
    }
}
