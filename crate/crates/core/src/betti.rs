//! Normalized Betti data of a presentation over a finite realization, and
//! sweeps of those numbers across families of realizations.
//!
//! All dimensions are normalized by the group order, so the reported numbers
//! are exact rationals: `beta0 = 1 - rank(d1)/|Q|` and
//! `beta1 = (dim ker(d1) - rank(d2))/|Q|`. The derived invariant
//! `delta2 = beta1 - beta0 + 1` always equals `n - rank(d2)/|Q|`; the report
//! carries both routes and a flag confirming they met.
//!
//! A sweep evaluates one presentation against a growing family of
//! realizations. Each member's numbers are exact for that member; a sweep is
//! a sequence of such data points, and reading a limit off the sequence is
//! an act of interpretation the caller performs, not something this module
//! certifies. Sweep results are therefore labelled approximations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{BoundaryMode, CayleyComplex};
use crate::error::{Error, Result};
use crate::linalg::rank_exact;
use crate::rational::Rational;
use crate::realization::{realize_with_cap, FiniteGroupRealization};
use crate::words::Presentation;

/// Exact Betti data of one complex. `relator_count` is the number of
/// *active* relators, i.e. the number of face blocks in the complex the
/// report was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub order: usize,
    pub generator_count: usize,
    pub relator_count: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub dim_ker_d1: usize,
    pub beta0: Rational,
    pub beta1: Rational,
    pub delta2: Rational,
    /// `delta2` recomputed as `n - rank(d2)/|Q|`, bypassing the Betti
    /// numbers entirely.
    pub delta2_alt: Rational,
    /// Whether the two `delta2` routes agreed.
    pub consistent: bool,
}

fn ratio(numer: usize, denom: usize) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Computes the full report for a complex.
pub fn betti_invariants(complex: &CayleyComplex) -> BettiReport {
    let order = complex.vertex_count();
    let n = complex.presentation().generator_count();
    let rank_d1 = rank_exact(&complex.boundary1());
    let rank_d2 = rank_exact(&complex.boundary2(BoundaryMode::Path));
    let dim_ker_d1 = complex.edge_count() - rank_d1;
    assert!(
        rank_d2 <= dim_ker_d1,
        "face boundaries are cycles, so rank(d2) cannot exceed dim ker(d1)"
    );
    let one = Rational::from_integer(1.into());
    let beta0 = &one - ratio(rank_d1, order);
    let beta1 = ratio(dim_ker_d1 - rank_d2, order);
    let delta2 = &beta1 - &beta0 + &one;
    let delta2_alt = Rational::from_integer(n.into()) - ratio(rank_d2, order);
    let consistent = delta2 == delta2_alt;
    BettiReport {
        order,
        generator_count: n,
        relator_count: complex.active_relators().len(),
        rank_d1,
        rank_d2,
        dim_ker_d1,
        beta0,
        beta1,
        delta2,
        delta2_alt,
        consistent,
    }
}

/// Report for the complex using only the first `j` relators. Walking `j`
/// upward shows how each extra relator sheet eats into `beta1`; `beta0`
/// never moves, since it only sees the 1-skeleton.
pub fn betti1_exhaustion(
    realization: &FiniteGroupRealization,
    presentation: &Presentation,
    j: usize,
) -> Result<BettiReport> {
    let active: Vec<usize> = (0..j).collect();
    let complex = CayleyComplex::build(realization, presentation, &active)?;
    Ok(betti_invariants(&complex))
}

/// A permutation assignment in serialized form: each generator name maps to
/// the one-line image of its permutation on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationSpec {
    pub kind: String,
    pub degree: usize,
    pub images: BTreeMap<String, Vec<usize>>,
}

impl RealizationSpec {
    /// Orders the images by the presentation's generator list. Every
    /// declared generator needs an image and no extra images are allowed.
    pub fn resolve(&self, presentation: &Presentation) -> Result<Vec<Vec<usize>>> {
        if self.kind != "permutation" {
            return Err(Error::UnsupportedRealizationKind {
                kind: self.kind.clone(),
            });
        }
        let mut images = Vec::with_capacity(presentation.generator_count());
        for name in presentation.generator_names() {
            let image = self
                .images
                .get(name)
                .ok_or_else(|| Error::MissingGeneratorImage { name: name.clone() })?;
            images.push(image.clone());
        }
        for name in self.images.keys() {
            if !presentation.generator_names().contains(name) {
                return Err(Error::UnexpectedGeneratorImage { name: name.clone() });
            }
        }
        Ok(images)
    }

    pub fn realize(
        &self,
        presentation: &Presentation,
        cap: usize,
    ) -> Result<FiniteGroupRealization> {
        let images = self.resolve(presentation)?;
        realize_with_cap(&images, self.degree, cap)
    }
}

/// A family of realizations to sweep a presentation over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum QuotientFamilySpec {
    /// Generator `i` acts as the unit translation of coordinate `i` on the
    /// grid `(Z/m)^n`, for `m` in `from..=to`. The realization degree is
    /// `m^n`.
    #[serde(rename = "abelian-grid")]
    AbelianGrid { from: usize, to: usize },
    /// Every generator acts as the unit translation on `Z/m`, for `m` in
    /// `from..=to`.
    #[serde(rename = "cyclic")]
    Cyclic { from: usize, to: usize },
    /// A hand-picked list of realizations.
    #[serde(rename = "explicit")]
    Explicit { members: Vec<RealizationSpec> },
}

/// One data point of a sweep. The report is an approximation attached to
/// this member's finite quotient, not a certified value for the presented
/// group.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepMember {
    pub label: String,
    pub approximation: std::result::Result<BettiReport, Error>,
}

/// All members computed before the sweep stopped, in family order.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepOutcome {
    pub members: Vec<SweepMember>,
    /// True when a member overflowed the element cap; that member is the
    /// last one listed and nothing after it was attempted.
    pub stopped_by_order_cap: bool,
}

struct PreparedMember {
    label: String,
    input: Result<(usize, Vec<Vec<usize>>)>,
}

fn grid_images(n: usize, m: usize, degree: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| {
            let stride = m.pow(i as u32);
            (0..degree)
                .map(|point| {
                    if (point / stride) % m + 1 == m {
                        point - (m - 1) * stride
                    } else {
                        point + stride
                    }
                })
                .collect()
        })
        .collect()
}

fn prepare_members(
    presentation: &Presentation,
    family: &QuotientFamilySpec,
    cap: usize,
) -> Vec<PreparedMember> {
    let n = presentation.generator_count();
    match family {
        QuotientFamilySpec::AbelianGrid { from, to } => (*from..=*to)
            .map(|m| {
                let input = match m.checked_pow(n as u32) {
                    Some(degree) if degree <= cap => Ok((degree, grid_images(n, m, degree))),
                    _ => Err(Error::OrderCapExceeded { cap }),
                };
                PreparedMember {
                    label: format!("m={m}"),
                    input,
                }
            })
            .collect(),
        QuotientFamilySpec::Cyclic { from, to } => (*from..=*to)
            .map(|m| {
                let shift: Vec<usize> = (0..m).map(|i| (i + 1) % m).collect();
                let input = if m <= cap {
                    Ok((m, vec![shift; n]))
                } else {
                    Err(Error::OrderCapExceeded { cap })
                };
                PreparedMember {
                    label: format!("m={m}"),
                    input,
                }
            })
            .collect(),
        QuotientFamilySpec::Explicit { members } => members
            .iter()
            .enumerate()
            .map(|(i, spec)| PreparedMember {
                label: format!("member={i}"),
                input: spec.resolve(presentation).map(|images| (spec.degree, images)),
            })
            .collect(),
    }
}

fn member_report(
    presentation: &Presentation,
    degree: usize,
    images: &[Vec<usize>],
    cap: usize,
) -> Result<BettiReport> {
    let realization = realize_with_cap(images, degree, cap)?;
    let active: Vec<usize> = (0..presentation.relator_count()).collect();
    let complex = CayleyComplex::build(&realization, presentation, &active)?;
    Ok(betti_invariants(&complex))
}

/// Evaluates the presentation on every family member, in parallel. Members
/// are reported in family order whatever the thread schedule. A member that
/// fails for a reason other than the element cap (an unsatisfied relator, a
/// malformed explicit realization) is recorded and the sweep moves on; the
/// element cap is different, because it means every later member of a
/// growing family is out of reach, so it stops the sweep.
pub fn sweep_quotients(
    presentation: &Presentation,
    family: &QuotientFamilySpec,
    cap: usize,
) -> SweepOutcome {
    let prepared = prepare_members(presentation, family, cap);
    let computed: Vec<SweepMember> = prepared
        .into_par_iter()
        .map(|member| {
            let approximation = member
                .input
                .and_then(|(degree, images)| member_report(presentation, degree, &images, cap));
            SweepMember {
                label: member.label,
                approximation,
            }
        })
        .collect();

    let mut members = Vec::with_capacity(computed.len());
    let mut stopped_by_order_cap = false;
    for member in computed {
        let stop = matches!(member.approximation, Err(Error::OrderCapExceeded { .. }));
        members.push(member);
        if stop {
            stopped_by_order_cap = true;
            break;
        }
    }
    SweepOutcome {
        members,
        stopped_by_order_cap,
    }
}
