//! Cross-module invariants checked on seeded random data, plus property
//! tests for the arithmetic substrate.

use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use afflag::affweyl::{
    act_h, act_h_dual, act_ttilde, aw_inverse, aw_mul, cartan_pairing, AffineWeylElement,
    CartanPoint, CocartanPoint,
};
use afflag::arrangement::{four_term_action, mu_section};
use afflag::groupoid::{gp_check, gp_project_quadric, gp_rho1, identity_section, LineBundleClass};
use afflag::linalg::{vec_dot, vec_from_int};
use afflag::moment::moment_image;
use afflag::poly::{difference_quotient_u, Poly};
use afflag::rat::{rat, rat_int, rat_zero, Rat};
use afflag::rootsys::build_from_name;
use afflag::verify::{rand_element, rand_finite, rand_rat, rand_vec};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn small_poly(nvars: usize, maxdeg: u32) -> impl Strategy<Value = Poly> {
    let term = (proptest::collection::vec(0..=maxdeg, nvars), small_rat());
    proptest::collection::vec(term, 0..6).prop_map(move |terms| {
        let mut p = Poly::zero(nvars);
        for (exp, c) in terms {
            let total: u32 = exp.iter().sum();
            if total <= maxdeg {
                p = p.add(&Poly::monomial(nvars, exp, c));
            }
        }
        p
    })
}

proptest! {
    // u * q(u) = f(a + u b) - f(a), exactly, for every nonzero u
    #[test]
    fn quotient_times_u_recovers_difference(
        f in small_poly(2, 4),
        a in proptest::collection::vec(small_rat(), 2),
        b in proptest::collection::vec(small_rat(), 2),
        u in small_rat(),
    ) {
        prop_assume!(!u.is_zero());
        let q = difference_quotient_u(&f, &a, &b, &u).unwrap();
        let shifted: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x + &u * y).collect();
        prop_assert_eq!(&u * q, f.eval(&shifted).unwrap() - f.eval(&a).unwrap());
    }

    // symmetric finite differences are exact for quadratics
    #[test]
    fn gradient_matches_symmetric_differences(
        f in small_poly(2, 2),
        a in proptest::collection::vec(small_rat(), 2),
        b in proptest::collection::vec(small_rat(), 2),
        h in small_rat(),
    ) {
        prop_assume!(!h.is_zero());
        let grad: Vec<Rat> = f.gradient().iter().map(|g| g.eval(&a).unwrap()).collect();
        let directional = vec_dot(&grad, &b);
        let plus: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x + &h * y).collect();
        let minus: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x - &h * y).collect();
        let symmetric =
            (f.eval(&plus).unwrap() - f.eval(&minus).unwrap()) / (rat_int(2) * &h);
        prop_assert_eq!(directional, symmetric);
    }
}

/// The exact quotient polynomial `g(t) = (f(a + t b) - f(a)) / t` in one
/// variable, used as an independent oracle for the quotient operation.
fn quotient_polynomial(f: &Poly, a: &[Rat], b: &[Rat]) -> Poly {
    // substitute x_i = a_i + t b_i
    let mut shifted = Poly::zero(1);
    for (exp, c) in f.terms() {
        let mut term = Poly::constant(1, c.clone());
        for (i, &e) in exp.iter().enumerate() {
            let lin = Poly::constant(1, a[i].clone()).add(&Poly::var(1, 0).scale(&b[i]));
            term = term.mul(&lin.pow(e));
        }
        shifted = shifted.add(&term);
    }
    let diff = shifted.sub(&Poly::constant(1, f.eval(a).unwrap()));
    // divide by t: every term has positive degree
    let mut out = Poly::zero(1);
    for (exp, c) in diff.terms() {
        assert!(exp[0] >= 1, "difference vanishes at t = 0");
        out = out.add(&Poly::monomial(1, vec![exp[0] - 1], c.clone()));
    }
    out
}

#[test]
fn quotient_converges_to_directional_derivative() {
    let mut rng = ChaCha20Rng::seed_from_u64(11);
    for _ in 0..50 {
        // random polynomial of total degree <= 3 in 3 variables
        let mut f = Poly::zero(3);
        while f.total_degree() < 2 {
            for _ in 0..6 {
                let exp: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=2)).collect();
                if exp.iter().sum::<u32>() <= 3 {
                    let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
                    f = f.add(&Poly::monomial(3, exp, c));
                }
            }
        }
        let a: Vec<Rat> = (0..3)
            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect();
        let b: Vec<Rat> = (0..3)
            .map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect();
        let g = quotient_polynomial(&f, &a, &b);

        // termwise agreement along u = 1, 1/2, 1/4, ... and the limit at 0
        let mut u = rat_int(1);
        for _ in 0..6 {
            let direct = difference_quotient_u(&f, &a, &b, &u).unwrap();
            assert_eq!(direct, g.eval(&[u.clone()]).unwrap());
            u /= rat_int(2);
        }
        let at_zero = difference_quotient_u(&f, &a, &b, &rat_zero()).unwrap();
        assert_eq!(at_zero, g.eval(&[rat_zero()]).unwrap());
    }
}

#[test]
fn chevalley_map_is_weyl_invariant() {
    for name in ["A1", "A2", "A3", "B2", "C3", "D4"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(23);
        for _ in 0..100 {
            let x = rand_vec(&mut rng, rs.rank());
            let w = rand_finite(&rs, &mut rng, 6);
            let moved = w.apply(&x);
            assert_eq!(
                rs.chevalley_map(&moved).unwrap(),
                rs.chevalley_map(&x).unwrap(),
                "invariance failed in {name}"
            );
        }
    }
}

#[test]
fn weyl_matrices_preserve_gram_on_random_words() {
    for name in ["A2", "B2", "C3", "G2", "F4"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let g = rs.coroot_gram();
        for _ in 0..50 {
            let w = rand_finite(&rs, &mut rng, 8);
            let m = w.to_qmat();
            assert_eq!(m.transpose().mul(g).mul(&m), *g, "in {name}");
        }
    }
}

#[test]
fn dual_action_preserves_pairing_randomly() {
    for name in ["A2", "B2", "G2"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(17);
        for _ in 0..100 {
            let a = rand_element(&rs, &mut rng, 8);
            let p = CartanPoint::new(
                rand_rat(&mut rng),
                rand_vec(&mut rng, rs.rank()),
                rand_rat(&mut rng),
            );
            let q = CocartanPoint::new(
                rand_rat(&mut rng),
                rand_vec(&mut rng, rs.rank()),
                rand_rat(&mut rng),
            );
            assert_eq!(
                cartan_pairing(&act_h_dual(&rs, &a, &q), &act_h(&rs, &a, &p)),
                cartan_pairing(&q, &p),
                "pairing in {name}"
            );
        }
    }
}

// The moment image of a fixed point is the readout of the dual class
// (0, 0, chi, kappa) along the section of that fixed point.
#[test]
fn moment_image_agrees_with_section_pairing() {
    for name in ["A1", "A2", "B2", "G2"] {
        let rs = build_from_name(name).unwrap();
        let r = rs.rank();
        let mut rng = ChaCha20Rng::seed_from_u64(31);
        for _ in 0..60 {
            let a = rand_element(&rs, &mut rng, 8);
            let chi: Vec<i64> = (0..r).map(|_| rng.gen_range(-2..=2)).collect();
            let kappa = [1i64, 2, -1][rng.gen_range(0..3)];
            let l = LineBundleClass::new(chi.clone(), kappa);
            let m = moment_image(&rs, &a, &l);

            let chi_rat = vec_from_int(&chi);
            let readout = |u: Rat, xi: Vec<Rat>| -> Rat {
                let p = mu_section(&rs, &a, &u, &xi);
                vec_dot(&chi_rat, &p.eta) + rat_int(kappa) * &p.v
            };
            // height: the coefficient on the loop direction
            assert_eq!(
                m.m0,
                readout(rat_int(1), vec![rat_zero(); r]),
                "m0 in {name}"
            );
            // weight: coordinates along the finite directions
            for j in 0..r {
                let mut e = vec![rat_zero(); r];
                e[j] = rat_int(1);
                assert_eq!(m.m1[j], readout(rat_zero(), e), "m1[{j}] in {name}");
            }
        }
    }
}

// Moving the identity section by the ambient action reproduces the section
// of the moved point, and projecting the moved identity section from the
// relation variety gives the same ambient point.
#[test]
fn groupoid_projection_matches_ambient_action() {
    for name in ["A1", "A2", "B2", "C3"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(47);
        let c = afflag::groupoid::default_pi_scale();
        for _ in 0..60 {
            let a = rand_element(&rs, &mut rng, 6);
            let u = rand_rat(&mut rng);
            let xi = rand_vec(&mut rng, rs.rank());
            let start = identity_section(&rs, &u, &xi);
            let moved = gp_rho1(&rs, &a, &start).unwrap();
            assert!(gp_check(&rs, &moved).unwrap());
            let img = gp_project_quadric(&rs, &moved, &c).unwrap();
            let ambient = four_term_action(
                &rs,
                &a,
                &mu_section(&rs, &AffineWeylElement::identity(rs.rank()), &u, &xi),
            );
            assert_eq!(img, ambient, "projection compatibility in {name}");
        }
    }
}

// Equivariance of sections written through the projected action.
#[test]
fn section_equivariance_random() {
    for name in ["A1", "B2", "G2", "D4"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(53);
        let id = AffineWeylElement::identity(rs.rank());
        for _ in 0..80 {
            let a = rand_element(&rs, &mut rng, 8);
            let u = rand_rat(&mut rng);
            let xi = rand_vec(&mut rng, rs.rank());
            let (u2, xi2) = act_ttilde(&rs, &aw_inverse(&a), &u, &xi);
            assert_eq!(
                four_term_action(&rs, &a, &mu_section(&rs, &id, &u2, &xi2)),
                mu_section(&rs, &a, &u, &xi),
                "equivariance in {name}"
            );
        }
    }
}

#[test]
fn group_axioms_many_samples() {
    for name in ["A1", "A2", "A3", "B2", "G2"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(67);
        for _ in 0..500 {
            let a = rand_element(&rs, &mut rng, 8);
            let b = rand_element(&rs, &mut rng, 8);
            let c = rand_element(&rs, &mut rng, 8);
            assert_eq!(
                aw_mul(&aw_mul(&a, &b).unwrap(), &c).unwrap(),
                aw_mul(&a, &aw_mul(&b, &c).unwrap()).unwrap(),
                "associativity in {name}"
            );
            assert!(
                aw_mul(&a, &aw_inverse(&a)).unwrap().is_identity(),
                "inverse law in {name}"
            );
        }
    }
}

// The first two coordinates of a section value are always the argument.
#[test]
fn section_projects_to_its_argument() {
    for name in ["A2", "C3", "G2"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(71);
        for _ in 0..100 {
            let a = rand_element(&rs, &mut rng, 8);
            let u = rand_rat(&mut rng);
            let xi = rand_vec(&mut rng, rs.rank());
            let p = mu_section(&rs, &a, &u, &xi);
            assert_eq!(p.u, u, "loop coordinate in {name}");
            assert_eq!(p.xi, xi, "finite coordinate in {name}");
        }
    }
}

// Projection to the quadric changes nothing but the central coordinate.
#[test]
fn projection_keeps_base_coordinates() {
    let rs = build_from_name("B2").unwrap();
    let mut rng = ChaCha20Rng::seed_from_u64(73);
    let c = afflag::groupoid::default_pi_scale();
    for _ in 0..100 {
        let p = afflag::verify::rand_variety_point(&rs, &mut rng);
        let img = gp_project_quadric(&rs, &p, &c).unwrap();
        assert_eq!(img.u, p.u);
        assert_eq!(img.xi, p.xi);
        assert_eq!(img.eta, p.eta);
    }
}

// The zeroth simple reflection, acting on the affine Cartan algebra, is the
// reflection x -> x - <alpha_0, x> coroot_0 with alpha_0 = delta - theta and
// coroot_0 = K - theta_check.
#[test]
fn zeroth_reflection_is_root_reflection() {
    for name in ["A1", "A2", "B2", "C3", "D4", "G2"] {
        let rs = build_from_name(name).unwrap();
        let r = rs.rank();
        let s0 = afflag::affweyl::simple_reflection_affine(&rs, 0).unwrap();
        let m = afflag::affweyl::act_h_matrix(&rs, &s0);

        let theta_check = vec_from_int(rs.highest_root_coroot());
        let theta_fw = vec_from_int(rs.theta_fw());
        let pair_alpha0 = |coords: &[Rat]| -> Rat {
            // <delta - theta, (u, xi, v)> = u - <theta, xi>
            coords[0].clone() - vec_dot(&theta_fw, &coords[1..=r])
        };
        for j in 0..r + 2 {
            let mut basis = vec![rat_zero(); r + 2];
            basis[j] = rat_int(1);
            let mut expect = basis.clone();
            let c = pair_alpha0(&basis);
            // subtract c * (K - theta_check)
            for i in 0..r {
                expect[1 + i] += &c * &theta_check[i];
            }
            expect[r + 1] -= &c;
            assert_eq!(m.col(j), expect, "column {j} in {name}");
        }
    }
}

#[test]
fn group_action_law_on_cartan_points() {
    for name in ["A2", "C3"] {
        let rs = build_from_name(name).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(61);
        for _ in 0..80 {
            let a = rand_element(&rs, &mut rng, 8);
            let b = rand_element(&rs, &mut rng, 8);
            let p = CartanPoint::new(
                rand_rat(&mut rng),
                rand_vec(&mut rng, rs.rank()),
                rand_rat(&mut rng),
            );
            assert_eq!(
                act_h(&rs, &aw_mul(&a, &b).unwrap(), &p),
                act_h(&rs, &a, &act_h(&rs, &b, &p)),
                "action law in {name}"
            );
        }
    }
}
