//! Attach regions and their disk certificates.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{ConeChamber, DavisError};
use crate::complex::{Simplex, Subcomplex};
use crate::coxeter::{Generator, ReducedWord};
use crate::homology::HomologyProfile;

/// Union of the mirrors `X_v`, `v` in a generator set, inside `sd(T)`.
#[derive(Clone, Debug)]
pub struct AttachRegion<'a> {
    mirrors: Vec<Generator>,
    region: Subcomplex<'a>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    Verified,
    /// Every homological check passed, but in dimension ≥ 3 they do not imply a ball.
    Inconclusive,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiskCertificate {
    pub status: CertificateStatus,
    pub dimension: usize,
    pub nonempty: bool,
    pub connected: bool,
    pub acyclic: bool,
    pub euler_characteristic: i64,
    pub frontier: HomologyProfile,
    pub expected_frontier: HomologyProfile,
}

impl<'a> AttachRegion<'a> {
    /// The region where the chamber `w` meets earlier chambers: mirrors of the
    /// descent set of `w`.
    pub fn from_word(chamber: &'a ConeChamber, w: &ReducedWord) -> Result<Self, DavisError> {
        if w.is_identity() {
            return Err(DavisError::IdentityWord);
        }
        let descents = chamber.nerve().descent_set(w)?;
        Ok(Self::from_mirrors(chamber, descents.iter()))
    }

    pub fn from_mirrors(chamber: &'a ConeChamber, mirrors: impl IntoIterator<Item = Generator>) -> Self {
        let mirrors: Vec<Generator> = mirrors.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let region = mirrors.iter().fold(Subcomplex::empty(chamber.boundary()), |acc, &v| acc.union(&chamber.mirror(v)));
        AttachRegion { mirrors, region }
    }

    pub fn mirrors(&self) -> &[Generator] {
        &self.mirrors
    }

    pub fn region(&self) -> &Subcomplex<'a> {
        &self.region
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        self.region.simplices()
    }

    /// Checks that the region is a homology disk of full dimension in `sd(T)`
    /// whose frontier is a homology sphere one dimension down.
    pub fn disk_certificate(&self) -> DiskCertificate {
        let dimension = self.region.parent().dimension().unwrap_or(0);
        let homology = self.region.homology();
        let nonempty = !self.region.is_empty();
        let connected = homology.rank(0) == 1;
        let acyclic = homology == HomologyProfile::point();
        let euler_characteristic = self.region.euler_characteristic();
        let frontier = self.region.frontier().homology();
        let expected_frontier = HomologyProfile::sphere(dimension as isize - 1);
        let passed = nonempty && connected && acyclic && euler_characteristic == 1 && frontier == expected_frontier;
        let status = match (passed, dimension >= 3) {
            (false, _) => CertificateStatus::Failed,
            (true, true) => CertificateStatus::Inconclusive,
            (true, false) => CertificateStatus::Verified,
        };
        DiskCertificate { status, dimension, nonempty, connected, acyclic, euler_characteristic, frontier, expected_frontier }
    }
}
