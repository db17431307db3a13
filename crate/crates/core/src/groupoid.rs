//! The relation variety `f_i(xi) - f_i(eta) = u v_i` carrying the full
//! equivariant cohomology ring, with its groupoid structure, involutions,
//! the two commuting affine Weyl actions, specializations, the projection to
//! the quadric, and the integral degree pairing.

use num_traits::Zero;

use crate::affweyl::AffineWeylElement;
use crate::arrangement::H2TPoint;
use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_from_int, vec_neg};
use crate::poly::difference_quotient_u;
use crate::rat::{rat, rat_zero, Rat};
use crate::rootsys::RootSystem;

/// Point `(u, xi, eta, v_1..v_r)` subject to the ring relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidPoint {
    pub u: Rat,
    pub xi: Vec<Rat>,
    pub eta: Vec<Rat>,
    pub vlist: Vec<Rat>,
}

impl GroupoidPoint {
    pub fn new(u: Rat, xi: Vec<Rat>, eta: Vec<Rat>, vlist: Vec<Rat>) -> Self {
        GroupoidPoint { u, xi, eta, vlist }
    }
}

/// True iff `f_i(xi) - f_i(eta) = u v_i` holds for every invariant.
pub fn gp_check(rs: &RootSystem, p: &GroupoidPoint) -> Result<bool> {
    if !rs.has_full_invariants() {
        return Err(Error::UnsupportedInvariants(rs.name()));
    }
    for (i, f) in rs.invariants().iter().enumerate() {
        let lhs = f.eval(&p.xi)? - f.eval(&p.eta)?;
        if lhs != &p.u * &p.vlist[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_valid(rs: &RootSystem, p: &GroupoidPoint) -> Result<()> {
    if gp_check(rs, p)? {
        Ok(())
    } else {
        let xi: Vec<String> = p.xi.iter().map(crate::rat::rat_to_string).collect();
        Err(Error::InvalidPoint(format!(
            "relations fail at u={}, xi=[{}]",
            p.u,
            xi.join(", ")
        )))
    }
}

/// Identity section `(u, xi, xi, 0)`.
pub fn identity_section(rs: &RootSystem, u: &Rat, xi: &[Rat]) -> GroupoidPoint {
    GroupoidPoint::new(
        u.clone(),
        xi.to_vec(),
        xi.to_vec(),
        vec![rat_zero(); rs.rank()],
    )
}

/// Composition over matching inner coordinates; the relation coordinates
/// add telescopically.
pub fn gp_compose(rs: &RootSystem, p: &GroupoidPoint, q: &GroupoidPoint) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    require_valid(rs, q)?;
    if p.u != q.u {
        return Err(Error::NotComposable("loop parameters differ".into()));
    }
    if p.eta != q.xi {
        return Err(Error::NotComposable(
            "target of first differs from source of second".into(),
        ));
    }
    Ok(GroupoidPoint::new(
        p.u.clone(),
        p.xi.clone(),
        q.eta.clone(),
        vec_add(&p.vlist, &q.vlist),
    ))
}

/// Groupoid inversion `(u, xi, eta, v) -> (u, eta, xi, -v)`.
pub fn gp_invert(rs: &RootSystem, p: &GroupoidPoint) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    Ok(GroupoidPoint::new(
        p.u.clone(),
        p.eta.clone(),
        p.xi.clone(),
        vec_neg(&p.vlist),
    ))
}

/// The involution induced by group inversion upstairs:
/// `(u, xi, eta, v_i) -> (u, -eta, -xi, (-1)^{d_i} v_i)`.
pub fn gp_tau(rs: &RootSystem, p: &GroupoidPoint) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    let vlist: Vec<Rat> = p
        .vlist
        .iter()
        .zip(rs.exponents())
        .map(|(v, d)| if d % 2 == 0 { v.clone() } else { -v.clone() })
        .collect();
    Ok(GroupoidPoint::new(
        p.u.clone(),
        vec_neg(&p.eta),
        vec_neg(&p.xi),
        vlist,
    ))
}

/// Action through the source leg:
/// `(u, xi, eta, v_i) -> (u, w xi + u lambda, eta, v_i + D_i)` where `D_i`
/// is the exact difference quotient `(f_i(w xi + u lambda) - f_i(xi))/u`,
/// read as a directional derivative at `u = 0`.
pub fn gp_rho1(rs: &RootSystem, a: &AffineWeylElement, p: &GroupoidPoint) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    let lambda = vec_from_int(&a.lambda);
    let wxi = a.w.apply(&p.xi);
    let new_xi: Vec<Rat> = wxi.iter().zip(&lambda).map(|(x, l)| x + &p.u * l).collect();
    let mut vlist = Vec::with_capacity(rs.rank());
    for (f, v) in rs.invariants().iter().zip(&p.vlist) {
        // f(w xi) = f(xi), so the quotient telescopes against the source leg
        let delta = difference_quotient_u(f, &wxi, &lambda, &p.u)?;
        vlist.push(v + delta);
    }
    Ok(GroupoidPoint::new(
        p.u.clone(),
        new_xi,
        p.eta.clone(),
        vlist,
    ))
}

/// Action through the target leg; conjugate of `gp_rho1` by `gp_invert`.
pub fn gp_rho2(rs: &RootSystem, a: &AffineWeylElement, p: &GroupoidPoint) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    let lambda = vec_from_int(&a.lambda);
    let weta = a.w.apply(&p.eta);
    let new_eta: Vec<Rat> = weta
        .iter()
        .zip(&lambda)
        .map(|(x, l)| x + &p.u * l)
        .collect();
    let mut vlist = Vec::with_capacity(rs.rank());
    for (f, v) in rs.invariants().iter().zip(&p.vlist) {
        let delta = difference_quotient_u(f, &weta, &lambda, &p.u)?;
        vlist.push(v - delta);
    }
    Ok(GroupoidPoint::new(
        p.u.clone(),
        p.xi.clone(),
        new_eta,
        vlist,
    ))
}

/// The scale on `v_1` that makes the projection to the quadric land on the
/// cone: with the first invariant equal to the Killing form, substituting the
/// relation `|xi|^2 - |eta|^2 = u v_1` into the quadric forces the central
/// coordinate to be `v_1 / 2`.
pub fn default_pi_scale() -> Rat {
    rat(1, 2)
}

/// Projection to the ambient quadric coordinates, `(u, xi, eta, c v_1)`.
/// `c = default_pi_scale()` lands on the cone; other values are accepted so
/// the effect of a different normalization can be exhibited.
pub fn gp_project_quadric(rs: &RootSystem, p: &GroupoidPoint, c: &Rat) -> Result<H2TPoint> {
    require_valid(rs, p)?;
    Ok(H2TPoint::new(
        p.u.clone(),
        p.xi.clone(),
        p.eta.clone(),
        c * &p.vlist[0],
    ))
}

/// Equivariant line bundle class: a weight in fundamental-weight coordinates
/// plus an integer level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineBundleClass {
    pub chi: Vec<i64>,
    pub kappa: i64,
}

impl LineBundleClass {
    pub fn new(chi: Vec<i64>, kappa: i64) -> Self {
        LineBundleClass { chi, kappa }
    }

    pub fn determinant(rank: usize) -> Self {
        LineBundleClass {
            chi: vec![0; rank],
            kappa: 1,
        }
    }

    pub fn weight_only(chi: Vec<i64>) -> Self {
        LineBundleClass { chi, kappa: 0 }
    }
}

/// Curve class in the basis of the one-dimensional orbit closures
/// `[C_0], ..., [C_r]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveClass {
    pub coeffs: Vec<i64>,
}

impl CurveClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        CurveClass { coeffs }
    }

    pub fn basis_curve(rank: usize, i: usize) -> Self {
        let mut coeffs = vec![0; rank + 1];
        coeffs[i] = 1;
        CurveClass { coeffs }
    }
}

/// Degree of a line bundle class on a curve class: the lattice pairing of
/// `chi + kappa L_0` against `sum c_i coroot_i` with `coroot_0 = K - theta_check`.
pub fn degree_pairing(rs: &RootSystem, l: &LineBundleClass, c: &CurveClass) -> i64 {
    let theta = rs.highest_root_coroot();
    let chi_theta: i64 = l.chi.iter().zip(theta).map(|(x, t)| x * t).sum();
    let finite: i64 = (1..=rs.rank()).map(|i| c.coeffs[i] * l.chi[i - 1]).sum();
    finite + c.coeffs[0] * (l.kappa - chi_theta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecializeMode {
    /// Locus `u = 0`: the relations degenerate to `f_i(xi) = f_i(eta)`.
    TEquivariant,
    /// Locus `u = 0, xi = 0`: the relations degenerate to `f_i(eta) = 0`.
    Ordinary,
}

/// Checks membership in the requested specialization locus and returns the
/// point unchanged.
pub fn specialize(
    rs: &RootSystem,
    p: &GroupoidPoint,
    mode: SpecializeMode,
) -> Result<GroupoidPoint> {
    require_valid(rs, p)?;
    if !p.u.is_zero() {
        return Err(Error::OutsideLocus("u != 0".into()));
    }
    if mode == SpecializeMode::Ordinary && !p.xi.iter().all(Zero::is_zero) {
        return Err(Error::OutsideLocus("xi != 0".into()));
    }
    Ok(p.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affweyl::simple_reflection_affine;
    use crate::arrangement::quadric_eval;
    use crate::rat::rat_int;
    use crate::rootsys::build_from_name;

    fn a1() -> RootSystem {
        build_from_name("A1").unwrap()
    }

    fn pt(u: i64, xi: i64, eta: i64, v: i64) -> GroupoidPoint {
        GroupoidPoint::new(
            rat_int(u),
            vec![rat_int(xi)],
            vec![rat_int(eta)],
            vec![rat_int(v)],
        )
    }

    #[test]
    fn check_examples() {
        let rs = a1();
        let id = identity_section(&rs, &rat(5, 3), &[rat(2, 7)]);
        assert!(gp_check(&rs, &id).unwrap());
        assert!(gp_check(&rs, &pt(1, 1, 0, 2)).unwrap());
        assert!(!gp_check(&rs, &pt(0, 1, 0, 0)).unwrap());

        let g2 = build_from_name("G2").unwrap();
        let p = GroupoidPoint::new(
            rat_int(1),
            vec![rat_zero(); 2],
            vec![rat_zero(); 2],
            vec![rat_zero(); 2],
        );
        assert!(matches!(
            gp_check(&g2, &p),
            Err(Error::UnsupportedInvariants(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let rs = a1();
        let p = pt(1, 1, 0, 2);
        let unit = identity_section(&rs, &rat_int(1), &[rat_zero()]);
        assert_eq!(gp_compose(&rs, &p, &unit).unwrap(), p);

        let q = pt(1, 0, 1, -2);
        assert_eq!(gp_compose(&rs, &p, &q).unwrap(), pt(1, 1, 1, 0));

        let bad_u = GroupoidPoint::new(
            rat_int(2),
            vec![rat_zero()],
            vec![rat_zero()],
            vec![rat_zero()],
        );
        assert!(matches!(
            gp_compose(&rs, &p, &bad_u),
            Err(Error::NotComposable(_))
        ));
    }

    #[test]
    fn invert_examples() {
        let rs = a1();
        let id = identity_section(&rs, &rat_int(3), &[rat(1, 2)]);
        assert_eq!(gp_invert(&rs, &id).unwrap(), id);
        assert_eq!(gp_invert(&rs, &pt(1, 1, 0, 2)).unwrap(), pt(1, 0, 1, -2));
        let p = pt(1, 1, 0, 2);
        assert_eq!(gp_invert(&rs, &gp_invert(&rs, &p).unwrap()).unwrap(), p);
        assert!(gp_invert(&rs, &pt(0, 1, 0, 0)).is_err());
    }

    #[test]
    fn tau_examples() {
        let rs = a1();
        let id = identity_section(&rs, &rat_int(2), &[rat_zero()]);
        assert_eq!(gp_tau(&rs, &id).unwrap(), id);
        // exponent 1: the relation coordinate flips sign
        assert_eq!(gp_tau(&rs, &pt(1, 1, 0, 2)).unwrap(), pt(1, 0, -1, -2));
        let p = pt(1, 1, 0, 2);
        assert_eq!(gp_tau(&rs, &gp_tau(&rs, &p).unwrap()).unwrap(), p);
    }

    #[test]
    fn rho_examples() {
        let rs = a1();
        let id = AffineWeylElement::identity(1);
        let p = pt(1, 0, 0, 0);
        assert_eq!(gp_rho1(&rs, &id, &p).unwrap(), p);

        let t1 = AffineWeylElement::translation(vec![1]);
        assert_eq!(gp_rho1(&rs, &t1, &p).unwrap(), pt(1, 1, 0, 2));
        assert_eq!(gp_rho2(&rs, &t1, &p).unwrap(), pt(1, 0, 1, -2));

        // u = 0 branch uses the directional derivative: 4x along the unit coroot
        let q = GroupoidPoint::new(
            rat_zero(),
            vec![rat_int(3)],
            vec![rat_int(3)],
            vec![rat_int(5)],
        );
        let moved = gp_rho1(&rs, &t1, &q).unwrap();
        assert_eq!(
            moved,
            GroupoidPoint::new(
                rat_zero(),
                vec![rat_int(3)],
                vec![rat_int(3)],
                vec![rat_int(17)]
            )
        );

        // rho2 at u = 0 subtracts the derivative at the moved target
        let s1 = simple_reflection_affine(&rs, 1).unwrap();
        let o = GroupoidPoint::new(
            rat_zero(),
            vec![rat_int(3)],
            vec![rat_int(-3)],
            vec![rat_int(5)],
        );
        assert!(gp_check(&rs, &o).unwrap());
        let t1s1 = crate::affweyl::aw_mul(&t1, &s1).unwrap();
        let moved = gp_rho2(&rs, &t1s1, &o).unwrap();
        // w eta = 3, derivative of 2x^2 at 3 along the unit coroot is 12
        assert_eq!(
            moved,
            GroupoidPoint::new(
                rat_zero(),
                vec![rat_int(3)],
                vec![rat_int(3)],
                vec![rat_int(-7)]
            )
        );
        assert!(gp_check(&rs, &moved).unwrap());
    }

    #[test]
    fn rho_results_stay_on_variety() {
        let rs = a1();
        let t1 = AffineWeylElement::translation(vec![2]);
        let p = pt(1, 1, 0, 2);
        assert!(gp_check(&rs, &gp_rho1(&rs, &t1, &p).unwrap()).unwrap());
        assert!(gp_check(&rs, &gp_rho2(&rs, &t1, &p).unwrap()).unwrap());
        assert!(gp_check(&rs, &gp_tau(&rs, &p).unwrap()).unwrap());
    }

    #[test]
    fn projection_examples() {
        let rs = a1();
        let id = identity_section(&rs, &rat_int(4), &[rat(5, 6)]);
        let img = gp_project_quadric(&rs, &id, &default_pi_scale()).unwrap();
        assert_eq!(quadric_eval(&rs, &img), rat_zero());

        let p = pt(1, 1, 0, 2);
        let img = gp_project_quadric(&rs, &p, &default_pi_scale()).unwrap();
        assert_eq!(img.v, rat_int(1));
        assert_eq!(quadric_eval(&rs, &img), rat_zero());

        // the doubled normalization misses the cone
        let img = gp_project_quadric(&rs, &p, &rat_int(2)).unwrap();
        assert_eq!(img.v, rat_int(4));
        assert_eq!(quadric_eval(&rs, &img), rat_int(-6));
    }

    #[test]
    fn degree_pairing_examples() {
        let rs = a1();
        let det = LineBundleClass::determinant(1);
        assert_eq!(degree_pairing(&rs, &det, &CurveClass::basis_curve(1, 0)), 1);
        assert_eq!(degree_pairing(&rs, &det, &CurveClass::basis_curve(1, 1)), 0);
        let l = LineBundleClass::weight_only(vec![3]);
        assert_eq!(degree_pairing(&rs, &l, &CurveClass::basis_curve(1, 1)), 3);
        assert_eq!(degree_pairing(&rs, &l, &CurveClass::basis_curve(1, 0)), -3);
    }

    #[test]
    fn specialize_examples() {
        let rs = a1();
        let teq = pt(0, 1, -1, 7);
        assert!(specialize(&rs, &teq, SpecializeMode::TEquivariant).is_ok());
        assert!(specialize(&rs, &teq, SpecializeMode::Ordinary).is_err());

        let ord = pt(0, 0, 0, 7);
        assert!(specialize(&rs, &ord, SpecializeMode::Ordinary).is_ok());

        let off = pt(1, 1, 0, 2);
        assert!(matches!(
            specialize(&rs, &off, SpecializeMode::TEquivariant),
            Err(Error::OutsideLocus(_))
        ));
    }
}
