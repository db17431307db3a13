//! Moment images of fixed points for a line bundle built from a weight and a
//! level, and the paraboloid all the images lie on.

use crate::affweyl::{aw_enumerate, AffineWeylElement};
use crate::error::{Error, Result};
use crate::groupoid::LineBundleClass;
use crate::linalg::{vec_add, vec_dot, vec_from_int, vec_scale};
use crate::rat::{rat_int, Rat};
use crate::rootsys::RootSystem;

/// Image `(m0, m1)`: height along the imaginary direction plus a finite
/// weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentPoint {
    pub m0: Rat,
    pub m1: Vec<Rat>,
}

/// Moment image of the fixed point labelled by `a = (lambda, w)`:
/// `(-<w chi, lambda> - kappa/2 |lambda|^2, w chi + kappa sigma(lambda))`.
/// The equivariant structure is normalized so the base point maps to `(0, chi)`.
pub fn moment_image(rs: &RootSystem, a: &AffineWeylElement, l: &LineBundleClass) -> MomentPoint {
    let lambda = vec_from_int(&a.lambda);
    let chi = vec_from_int(&l.chi);
    let kappa = rat_int(l.kappa);
    let wchi = a.w.apply_weight(&chi);
    let m0 = -vec_dot(&wchi, &lambda) - &kappa * rs.norm_sq(&lambda) / rat_int(2);
    let m1 = vec_add(&wchi, &vec_scale(&kappa, &rs.sigma(&lambda)));
    MomentPoint { m0, m1 }
}

/// `m0 + (|m1|^2 - |chi|^2) / (2 kappa)`; zero exactly when the point lies
/// on the paraboloid. Undefined at level zero.
pub fn paraboloid_residual(rs: &RootSystem, m: &MomentPoint, l: &LineBundleClass) -> Result<Rat> {
    if l.kappa == 0 {
        return Err(Error::ZeroLevel);
    }
    let chi = vec_from_int(&l.chi);
    let diff = rs.weight_norm_sq(&m.m1) - rs.weight_norm_sq(&chi);
    Ok(&m.m0 + diff / (rat_int(2) * rat_int(l.kappa)))
}

/// One row of the tabulated point cloud.
#[derive(Debug, Clone)]
pub struct MomentCloudRow {
    pub element: AffineWeylElement,
    pub length: u32,
    pub point: MomentPoint,
}

/// Moment images over all fixed points of length at most `maxlen`, in the
/// canonical enumeration order. Level zero is allowed here; the residual is
/// simply not defined in that case.
pub fn moment_cloud(rs: &RootSystem, l: &LineBundleClass, maxlen: u32) -> Vec<MomentCloudRow> {
    aw_enumerate(rs, maxlen)
        .into_iter()
        .map(|(element, length)| {
            let point = moment_image(rs, &element, l);
            MomentCloudRow {
                element,
                length,
                point,
            }
        })
        .collect()
}
