//! The affine Weyl group as translations by the coroot lattice extended by
//! the finite Weyl group, together with its action on the affine Cartan
//! algebra `C d + t + C K` and the dual action.

use std::collections::BTreeSet;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::linalg::{vec_dot, vec_from_int, QMat};
use crate::rat::{rat_int, rat_zero, Rat};
use crate::rootsys::{RootSystem, WeylElement};

/// Group element `(lambda, w)`: translation by a coroot-lattice vector
/// followed by a finite Weyl part. The pair is a unique normal form, so
/// equality is field-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub lambda: Vec<i64>,
    pub w: WeylElement,
}

impl AffineWeylElement {
    pub fn identity(rank: usize) -> Self {
        AffineWeylElement {
            lambda: vec![0; rank],
            w: WeylElement::identity(rank),
        }
    }

    pub fn translation(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        AffineWeylElement {
            lambda,
            w: WeylElement::identity(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.iter().all(|&x| x == 0) && self.w.is_identity()
    }

    /// Lexicographic sort key `(lambda, w-matrix)` used for canonical output
    /// order.
    pub fn sort_key(&self) -> (Vec<i64>, Vec<i64>) {
        (self.lambda.clone(), self.w.entries().to_vec())
    }
}

/// Semidirect product law: `(a.lambda + a.w b.lambda, a.w b.w)`.
pub fn aw_mul(a: &AffineWeylElement, b: &AffineWeylElement) -> Result<AffineWeylElement> {
    if a.rank() != b.rank() {
        return Err(Error::DimensionMismatch {
            expected: a.rank(),
            got: b.rank(),
        });
    }
    let moved = a.w.apply_int(&b.lambda);
    let lambda: Vec<i64> = a.lambda.iter().zip(&moved).map(|(x, y)| x + y).collect();
    Ok(AffineWeylElement {
        lambda,
        w: a.w.mul(&b.w),
    })
}

pub fn aw_inverse(a: &AffineWeylElement) -> AffineWeylElement {
    let winv = a.w.inverse();
    let lambda: Vec<i64> = winv.apply_int(&a.lambda).iter().map(|x| -x).collect();
    AffineWeylElement { lambda, w: winv }
}

/// Simple reflection `s_i` for `0 <= i <= rank`; `s_0` is realized as the
/// translation by the highest coroot composed with the reflection in the
/// highest root.
pub fn simple_reflection_affine(rs: &RootSystem, i: usize) -> Result<AffineWeylElement> {
    if i > rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: rs.rank(),
        });
    }
    if i == 0 {
        Ok(AffineWeylElement {
            lambda: rs.highest_root_coroot().to_vec(),
            w: rs.s_theta().clone(),
        })
    } else {
        Ok(AffineWeylElement {
            lambda: vec![0; rs.rank()],
            w: rs.simple_reflection_finite(i)?,
        })
    }
}

pub fn affine_generators(rs: &RootSystem) -> Vec<AffineWeylElement> {
    (0..=rs.rank())
        .map(|i| simple_reflection_affine(rs, i).expect("index in range"))
        .collect()
}

/// Point `(u, xi, v)` of the affine Cartan algebra in the coordinates of the
/// scaling element, the finite Cartan, and the central element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanPoint {
    pub u: Rat,
    pub xi: Vec<Rat>,
    pub v: Rat,
}

impl CartanPoint {
    pub fn new(u: Rat, xi: Vec<Rat>, v: Rat) -> Self {
        CartanPoint { u, xi, v }
    }

    pub fn to_coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.xi.len() + 2);
        out.push(self.u.clone());
        out.extend(self.xi.iter().cloned());
        out.push(self.v.clone());
        out
    }

    pub fn from_coords(coords: &[Rat]) -> Self {
        let n = coords.len() - 2;
        CartanPoint {
            u: coords[0].clone(),
            xi: coords[1..=n].to_vec(),
            v: coords[n + 1].clone(),
        }
    }
}

/// Point `(n, chi, m)` of the dual: multiples of the imaginary root, a
/// finite weight, and a multiple of the basic fundamental weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocartanPoint {
    pub n: Rat,
    pub chi: Vec<Rat>,
    pub m: Rat,
}

impl CocartanPoint {
    pub fn new(n: Rat, chi: Vec<Rat>, m: Rat) -> Self {
        CocartanPoint { n, chi, m }
    }

    pub fn delta(rank: usize) -> Self {
        CocartanPoint::new(rat_int(1), vec![rat_zero(); rank], rat_zero())
    }

    pub fn to_coords(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.chi.len() + 2);
        out.push(self.n.clone());
        out.extend(self.chi.iter().cloned());
        out.push(self.m.clone());
        out
    }

    pub fn from_coords(coords: &[Rat]) -> Self {
        let n = coords.len() - 2;
        CocartanPoint {
            n: coords[0].clone(),
            chi: coords[1..=n].to_vec(),
            m: coords[n + 1].clone(),
        }
    }
}

/// Pairing of the dual coordinates against the Cartan coordinates; in the
/// chosen bases this is the plain dot product.
pub fn cartan_pairing(q: &CocartanPoint, p: &CartanPoint) -> Rat {
    vec_dot(&q.to_coords(), &p.to_coords())
}

/// Action on the affine Cartan algebra:
/// `(u, xi, v) -> (u, w xi + u lambda, v - (w xi|lambda) - u/2 |lambda|^2)`.
pub fn act_h(rs: &RootSystem, a: &AffineWeylElement, p: &CartanPoint) -> CartanPoint {
    let lambda = vec_from_int(&a.lambda);
    let wxi = a.w.apply(&p.xi);
    let lam_sq = rs.norm_sq(&lambda);
    let cross = rs.killing(&wxi, &lambda).expect("rank-length vectors");
    let v = &p.v - &cross - &p.u * lam_sq / rat_int(2);
    let xi: Vec<Rat> = wxi.iter().zip(&lambda).map(|(x, l)| x + &p.u * l).collect();
    CartanPoint {
        u: p.u.clone(),
        xi,
        v,
    }
}

/// The projected action on `C d + t` (the central coordinate dropped):
/// `(u, xi) -> (u, w xi + u lambda)`.
pub fn act_ttilde(rs: &RootSystem, a: &AffineWeylElement, u: &Rat, xi: &[Rat]) -> (Rat, Vec<Rat>) {
    let _ = rs;
    let lambda = vec_from_int(&a.lambda);
    let wxi = a.w.apply(xi);
    let new_xi: Vec<Rat> = wxi.iter().zip(&lambda).map(|(x, l)| x + u * l).collect();
    (u.clone(), new_xi)
}

/// Matrix of `act_h(a, -)` on coordinates `(u, xi_1..xi_r, v)`.
pub fn act_h_matrix(rs: &RootSystem, a: &AffineWeylElement) -> QMat {
    let r = rs.rank();
    let mut m = QMat::zeros(r + 2, r + 2);
    let basis_images: Vec<CartanPoint> = (0..r + 2)
        .map(|j| {
            let mut coords = vec![rat_zero(); r + 2];
            coords[j] = rat_int(1);
            act_h(rs, a, &CartanPoint::from_coords(&coords))
        })
        .collect();
    for (j, img) in basis_images.iter().enumerate() {
        for (i, val) in img.to_coords().into_iter().enumerate() {
            m.set(i, j, val);
        }
    }
    m
}

/// Dual action, defined by `<act_h_dual(a,q), act_h(a,p)> = <q,p>`.
pub fn act_h_dual(rs: &RootSystem, a: &AffineWeylElement, q: &CocartanPoint) -> CocartanPoint {
    let minv = act_h_matrix(rs, &aw_inverse(a));
    CocartanPoint::from_coords(&minv.transpose().mul_vec(&q.to_coords()))
}

/// The affine simple roots: `alpha_0` is the imaginary root minus the
/// highest root, `alpha_i` for `i >= 1` are the finite simple roots.
pub fn affine_simple_root(rs: &RootSystem, i: usize) -> Result<CocartanPoint> {
    let r = rs.rank();
    if i > r {
        return Err(Error::IndexOutOfRange { index: i, max: r });
    }
    if i == 0 {
        let chi: Vec<Rat> = rs.theta_fw().iter().map(|&x| rat_int(-x)).collect();
        Ok(CocartanPoint::new(rat_int(1), chi, rat_zero()))
    } else {
        let chi: Vec<Rat> = (0..r).map(|j| rat_int(rs.cartan(j, i - 1))).collect();
        Ok(CocartanPoint::new(rat_zero(), chi, rat_zero()))
    }
}

/// Positivity of a real affine root `(n, chi, 0)`: positive iff `n > 0`, or
/// `n = 0` and the finite part is a positive root.
pub fn affine_root_is_positive(rs: &RootSystem, q: &CocartanPoint) -> bool {
    if q.n.is_positive() {
        return true;
    }
    if q.n.is_negative() {
        return false;
    }
    rs.finite_root_is_positive(&q.chi)
}

/// Coxeter length with respect to the affine simple reflections, computed by
/// the descent algorithm: strip a simple reflection whose root is sent
/// negative until the identity is reached.
pub fn aw_length(rs: &RootSystem, a: &AffineWeylElement) -> u32 {
    let mut cur = a.clone();
    let mut len = 0u32;
    let roots: Vec<CocartanPoint> = (0..=rs.rank())
        .map(|i| affine_simple_root(rs, i).expect("index in range"))
        .collect();
    while !cur.is_identity() {
        // cur^{-1}(alpha_i) = M(cur)^T alpha_i in the dual coordinates
        let mt = act_h_matrix(rs, &cur).transpose();
        let mut descended = false;
        for (i, alpha) in roots.iter().enumerate() {
            let img = CocartanPoint::from_coords(&mt.mul_vec(&alpha.to_coords()));
            if !affine_root_is_positive(rs, &img) {
                let s = simple_reflection_affine(rs, i).expect("index in range");
                cur = aw_mul(&s, &cur).expect("same rank");
                len += 1;
                descended = true;
                break;
            }
        }
        assert!(descended, "nontrivial element admits a descent");
    }
    len
}

/// All elements of length at most `maxlen`, paired with their length, in the
/// canonical order `(length, lambda, w-matrix)` ascending. The length here is
/// the word length over the Cayley graph, found by breadth-first search.
pub fn aw_enumerate(rs: &RootSystem, maxlen: u32) -> Vec<(AffineWeylElement, u32)> {
    let gens = affine_generators(rs);
    let mut seen: BTreeSet<(Vec<i64>, Vec<i64>)> = BTreeSet::new();
    let mut out: Vec<(AffineWeylElement, u32)> = Vec::new();
    let mut frontier = vec![AffineWeylElement::identity(rs.rank())];
    seen.insert(frontier[0].sort_key());
    out.push((frontier[0].clone(), 0));
    for depth in 1..=maxlen {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &gens {
                let y = aw_mul(x, s).expect("same rank");
                if seen.insert(y.sort_key()) {
                    out.push((y.clone(), depth));
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|(a, la), (b, lb)| (la, a.sort_key()).cmp(&(lb, b.sort_key())));
    out
}

/// Extended Killing form on the affine Cartan algebra evaluated at `p`:
/// `|xi|^2 + 2uv`. Preserved by `act_h`.
pub fn extended_norm_sq(rs: &RootSystem, p: &CartanPoint) -> Rat {
    rs.norm_sq(&p.xi) + rat_int(2) * &p.u * &p.v
}
