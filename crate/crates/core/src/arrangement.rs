//! The fixed-point arrangement in degree-two equivariant homology: sections
//! over fixed points, the quadric cone they sweep out, the associated
//! cocycles, and recognition of arrangement subspaces inside the space of
//! maximal isotropics via rigid affine transformations.

use num_traits::Zero;

use crate::affweyl::{act_h, aw_inverse, AffineWeylElement, CartanPoint};
use crate::error::{Error, Result};
use crate::linalg::{vec_from_int, QMat};
use crate::rat::{rat_int, rat_zero, Rat};
use crate::rootsys::RootSystem;

/// Ambient point `(u, xi, eta, v)` of degree-two equivariant homology in the
/// canonical coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2TPoint {
    pub u: Rat,
    pub xi: Vec<Rat>,
    pub eta: Vec<Rat>,
    pub v: Rat,
}

impl H2TPoint {
    pub fn new(u: Rat, xi: Vec<Rat>, eta: Vec<Rat>, v: Rat) -> Self {
        assert_eq!(xi.len(), eta.len());
        H2TPoint { u, xi, eta, v }
    }

    pub fn rank(&self) -> usize {
        self.xi.len()
    }

    pub fn to_coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(2 * self.xi.len() + 2);
        out.push(self.u.clone());
        out.extend(self.xi.iter().cloned());
        out.extend(self.eta.iter().cloned());
        out.push(self.v.clone());
        out
    }

    pub fn from_coords(coords: &[Rat]) -> Self {
        let r = (coords.len() - 2) / 2;
        H2TPoint {
            u: coords[0].clone(),
            xi: coords[1..=r].to_vec(),
            eta: coords[r + 1..=2 * r].to_vec(),
            v: coords[2 * r + 1].clone(),
        }
    }
}

/// Section over the fixed point labelled by `a`, evaluated at `(u, xi)`:
/// `(u, xi, w^-1(xi - u lambda), (xi|lambda) - u/2 |lambda|^2)`.
pub fn mu_section(rs: &RootSystem, a: &AffineWeylElement, u: &Rat, xi: &[Rat]) -> H2TPoint {
    let lambda = vec_from_int(&a.lambda);
    let winv = a.w.inverse();
    let shifted: Vec<Rat> = xi.iter().zip(&lambda).map(|(x, l)| x - u * l).collect();
    let eta = winv.apply(&shifted);
    let v = rs.killing(xi, &lambda).expect("rank-length vectors")
        - u * rs.norm_sq(&lambda) / rat_int(2);
    H2TPoint::new(u.clone(), xi.to_vec(), eta, v)
}

/// The quadric `q(u, xi, eta, v) = |xi|^2 - |eta|^2 - 2uv`.
pub fn quadric_eval(rs: &RootSystem, p: &H2TPoint) -> Rat {
    rs.norm_sq(&p.xi) - rs.norm_sq(&p.eta) - rat_int(2) * &p.u * &p.v
}

/// Polarization of the quadric: `b(p,p) = q(p)`.
pub fn quadric_polar(rs: &RootSystem, p: &H2TPoint, q: &H2TPoint) -> Rat {
    rs.killing(&p.xi, &q.xi).expect("rank-length vectors")
        - rs.killing(&p.eta, &q.eta).expect("rank-length vectors")
        - &p.u * &q.v
        - &q.u * &p.v
}

/// Group action on the ambient space that moves sections between fixed
/// points: `(u, xi, eta, v) -> (u, w xi + u lambda, eta, v + (w xi|lambda) + u/2 |lambda|^2)`.
pub fn four_term_action(rs: &RootSystem, a: &AffineWeylElement, p: &H2TPoint) -> H2TPoint {
    let lambda = vec_from_int(&a.lambda);
    let wxi = a.w.apply(&p.xi);
    let v = &p.v
        + rs.killing(&wxi, &lambda).expect("rank-length vectors")
        + &p.u * rs.norm_sq(&lambda) / rat_int(2);
    let xi: Vec<Rat> = wxi.iter().zip(&lambda).map(|(x, l)| x + &p.u * l).collect();
    H2TPoint::new(p.u.clone(), xi, p.eta.clone(), v)
}

/// Central coefficient of the action cocycle: `(w xi|lambda) + u/2 |lambda|^2`.
pub fn cocycle_b(rs: &RootSystem, a: &AffineWeylElement, u: &Rat, xi: &[Rat]) -> Rat {
    let lambda = vec_from_int(&a.lambda);
    let wxi = a.w.apply(xi);
    rs.killing(&wxi, &lambda).expect("rank-length vectors") + u * rs.norm_sq(&lambda) / rat_int(2)
}

/// Section cocycle: the difference `mu_section(a) - mu_section(identity)`
/// landing in the `(eta, v)` block.
pub fn cocycle_a(rs: &RootSystem, a: &AffineWeylElement, u: &Rat, xi: &[Rat]) -> (Vec<Rat>, Rat) {
    let moved = mu_section(rs, a, u, xi);
    let eta_diff: Vec<Rat> = moved.eta.iter().zip(xi).map(|(e, x)| e - x).collect();
    (eta_diff, moved.v)
}

/// Determinant of the finite Weyl part; the label of the isotropic-family
/// component containing the graph subspace of `a`.
pub fn component_sign(a: &AffineWeylElement) -> i64 {
    a.w.det()
}

/// Linear subspace of the ambient space given by a spanning set.
#[derive(Debug, Clone)]
pub struct ArrangementSubspace {
    basis: Vec<H2TPoint>,
}

impl ArrangementSubspace {
    pub fn from_points(basis: Vec<H2TPoint>) -> Self {
        ArrangementSubspace { basis }
    }

    pub fn basis(&self) -> &[H2TPoint] {
        &self.basis
    }

    /// Canonical reduced-echelon basis matrix of the span; equal subspaces
    /// produce equal matrices.
    pub fn canonical(&self) -> QMat {
        let rows: Vec<Vec<Rat>> = self.basis.iter().map(H2TPoint::to_coords).collect();
        QMat::from_rows(rows).rref().drop_zero_rows()
    }

    pub fn dim(&self) -> usize {
        self.canonical().nrows()
    }

    pub fn same_subspace(&self, other: &ArrangementSubspace) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_totally_isotropic(&self, rs: &RootSystem) -> bool {
        for (i, p) in self.basis.iter().enumerate() {
            for q in &self.basis[i..] {
                if !quadric_polar(rs, p, q).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// The base subspace: image of the identity section, spanned by
/// `(1,0,0,0)` and `(0, e_i, e_i, 0)`.
pub fn base_subspace(rs: &RootSystem) -> ArrangementSubspace {
    let r = rs.rank();
    let mut pts = Vec::with_capacity(r + 1);
    pts.push(H2TPoint::new(
        rat_int(1),
        vec![rat_zero(); r],
        vec![rat_zero(); r],
        rat_zero(),
    ));
    for i in 0..r {
        let mut e = vec![rat_zero(); r];
        e[i] = rat_int(1);
        pts.push(H2TPoint::new(rat_zero(), e.clone(), e, rat_zero()));
    }
    ArrangementSubspace::from_points(pts)
}

/// Image in the two-copy model of the graph of `a^{-1}` acting on the affine
/// Cartan algebra: points `(u, xi, eta, v2 - v1)` where
/// `(u, eta, v2) = a^{-1} (u, xi, v1)`.
pub fn graph_subspace(rs: &RootSystem, a: &AffineWeylElement) -> ArrangementSubspace {
    let r = rs.rank();
    let inv = aw_inverse(a);
    let mut pts = Vec::with_capacity(r + 1);
    for j in 0..=r {
        let mut coords = vec![rat_zero(); r + 2];
        coords[j] = rat_int(1);
        let x = CartanPoint::from_coords(&coords);
        let y = act_h(rs, &inv, &x);
        pts.push(H2TPoint::new(x.u, x.xi, y.xi, y.v));
    }
    ArrangementSubspace::from_points(pts)
}

/// Subspace spanned by the section of `a` evaluated on a basis of its
/// domain.
pub fn section_span(rs: &RootSystem, a: &AffineWeylElement) -> ArrangementSubspace {
    let r = rs.rank();
    let mut pts = Vec::with_capacity(r + 1);
    pts.push(mu_section(rs, a, &rat_int(1), &vec![rat_zero(); r]));
    for i in 0..r {
        let mut e = vec![rat_zero(); r];
        e[i] = rat_int(1);
        pts.push(mu_section(rs, a, &rat_zero(), &e));
    }
    ArrangementSubspace::from_points(pts)
}

/// Rigid affine transformation `(lambda, S)` with `S` Killing-orthogonal:
/// `(u, xi, eta, v) -> (u, S xi + u lambda, eta, v + (S eta|lambda) + u/2 |lambda|^2)`.
pub fn rig_action(rs: &RootSystem, lambda: &[Rat], s: &QMat, p: &H2TPoint) -> Result<H2TPoint> {
    let g = rs.coroot_gram();
    if s.transpose().mul(g).mul(s) != *g {
        return Err(Error::NotOrthogonal);
    }
    let sxi = s.mul_vec(&p.xi);
    let seta = s.mul_vec(&p.eta);
    let v = &p.v
        + rs.killing(&seta, lambda).expect("rank-length vectors")
        + &p.u * rs.killing(lambda, lambda).expect("rank-length vectors") / rat_int(2);
    let xi: Vec<Rat> = sxi.iter().zip(lambda).map(|(x, l)| x + &p.u * l).collect();
    Ok(H2TPoint::new(p.u.clone(), xi, p.eta.clone(), v))
}

/// Applies a rigid transformation to a whole subspace.
pub fn rig_action_subspace(
    rs: &RootSystem,
    lambda: &[Rat],
    s: &QMat,
    sub: &ArrangementSubspace,
) -> Result<ArrangementSubspace> {
    let pts = sub
        .basis()
        .iter()
        .map(|p| rig_action(rs, lambda, s, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(ArrangementSubspace::from_points(pts))
}

/// Attempts to recognize a maximal isotropic subspace as a rigid translate
/// of the base subspace. Returns `None` when the subspace is not transversal
/// to the `(xi, v)` block or its central coordinates are inconsistent with a
/// rigid transformation.
pub fn recognize_rigid(rs: &RootSystem, sub: &ArrangementSubspace) -> Option<(Vec<Rat>, QMat)> {
    let r = rs.rank();
    let basis = sub.basis();
    if basis.len() != r + 1 {
        return None;
    }
    // projection to the (u, eta) coordinates
    let proj = QMat::from_rows(
        basis
            .iter()
            .map(|p| {
                let mut row = Vec::with_capacity(r + 1);
                row.push(p.u.clone());
                row.extend(p.eta.iter().cloned());
                row
            })
            .collect(),
    );
    let change = proj.inverse().ok()?;
    let full = QMat::from_rows(basis.iter().map(H2TPoint::to_coords).collect());
    let graph = change.mul(&full);
    // row 0 has (u, eta) = (1, 0); rows 1..=r have (u, eta) = (0, e_i)
    let g0 = H2TPoint::from_coords(graph.row(0));
    let lambda = g0.xi.clone();
    let lam_sq = rs.killing(&lambda, &lambda).expect("rank-length vectors");
    if g0.v != lam_sq / rat_int(2) {
        return None;
    }
    let mut s = QMat::zeros(r, r);
    for i in 0..r {
        let gi = H2TPoint::from_coords(graph.row(i + 1));
        for k in 0..r {
            s.set(k, i, gi.xi[k].clone());
        }
        let expected = rs.killing(&gi.xi, &lambda).expect("rank-length vectors");
        if gi.v != expected {
            return None;
        }
    }
    let g = rs.coroot_gram();
    if s.transpose().mul(g).mul(&s) != *g {
        return None;
    }
    Some((lambda, s))
}

/// Solves the central coordinate from the birational chart on the quadric:
/// `v = (|xi|^2 - |eta|^2) / (2u)` for `u != 0`.
pub fn quadric_chart_v(rs: &RootSystem, u: &Rat, xi: &[Rat], eta: &[Rat]) -> Result<Rat> {
    if u.is_zero() {
        return Err(Error::ZeroLoopParameter);
    }
    Ok((rs.norm_sq(xi) - rs.norm_sq(eta)) / (rat_int(2) * u))
}
