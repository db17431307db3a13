//! Finite root-system data for a simple simply-connected group: Cartan
//! matrix, Killing form normalized so the highest root has square length 2,
//! finite Weyl group generators, and fundamental invariant polynomials.
//!
//! Coordinates: the Cartan subalgebra is `Q^r` in the simple-coroot basis;
//! its dual uses the fundamental-weight basis, so `<chi, coroot_i>` is the
//! i-th coordinate of `chi` and all lattice pairings are plain dot products.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{vec_dot, QMat};
use crate::poly::Poly;
use crate::rat::{rat_int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// Parses a selector like "A1", "b2" or "G2" (case-insensitive).
pub fn parse_group(s: &str) -> Result<(Family, usize)> {
    let t = s.trim();
    let bad = || Error::InvalidGroup(s.to_string());
    let mut chars = t.chars();
    let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
        Some('A') => Family::A,
        Some('B') => Family::B,
        Some('C') => Family::C,
        Some('D') => Family::D,
        Some('E') => Family::E,
        Some('F') => Family::F,
        Some('G') => Family::G,
        _ => return Err(bad()),
    };
    let rest: String = chars.collect();
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let rank: usize = rest.parse().map_err(|_| bad())?;
    Ok((family, rank))
}

/// Element of the finite Weyl group as an integer matrix acting on the
/// Cartan subalgebra in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    mat: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement { n, mat }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        WeylElement {
            n,
            mat: rows.concat(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.mat[i * self.n + j]
    }

    pub fn entries(&self) -> &[i64] {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut mat = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    mat[i * n + j] += a * other.mat[k * n + j];
                }
            }
        }
        WeylElement { n, mat }
    }

    /// Inverse; entries stay integral because the matrix lies in a finite
    /// group of integer matrices.
    pub fn inverse(&self) -> WeylElement {
        let q = self.to_qmat().inverse().expect("Weyl matrix is invertible");
        let mut mat = vec![0i64; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let e = q.get(i, j);
                assert!(
                    e.denom().is_one() && e.numer().bits() < 63,
                    "non-integral inverse"
                );
                let num: i64 = e.numer().try_into().expect("entry fits i64");
                mat[i * self.n + j] = num;
            }
        }
        WeylElement { n: self.n, mat }
    }

    pub fn det(&self) -> i64 {
        let d = self.to_qmat().det();
        assert!(d.denom().is_one());
        let num: i64 = d.numer().try_into().expect("determinant fits i64");
        num
    }

    pub fn to_qmat(&self) -> QMat {
        let rows: Vec<Vec<i64>> = (0..self.n)
            .map(|i| self.mat[i * self.n..(i + 1) * self.n].to_vec())
            .collect();
        QMat::from_int_rows(&rows)
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.n {
                    let e = self.mat[i * self.n + j];
                    if e != 0 {
                        acc += rat_int(e) * &x[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn apply_int(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.mat[i * self.n + j] * x[j]).sum())
            .collect()
    }

    /// Action on the dual space in fundamental-weight coordinates:
    /// `<w.chi, xi> = <chi, w^-1.xi>`.
    pub fn apply_weight(&self, chi: &[Rat]) -> Vec<Rat> {
        let inv = self.inverse();
        (0..self.n)
            .map(|j| {
                let mut acc = Rat::zero();
                for k in 0..self.n {
                    let e = inv.mat[k * self.n + j];
                    if e != 0 {
                        acc += rat_int(e) * &chi[k];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Root-system data for one simple type, Killing-normalized.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: Vec<i64>,
    coroot_gram: QMat,
    highest_root_coroot: Vec<i64>,
    exponents: Vec<u32>,
    invariants: Vec<Poly>,
    theta_fw: Vec<i64>,
    cartan_inv: QMat,
    gram_inv: QMat,
    s_theta: WeylElement,
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let bad = || Error::InvalidGroup(format!("{family}{rank}"));
    let valid = match family {
        Family::A => rank >= 1,
        Family::B => rank >= 2,
        Family::C => rank >= 3,
        Family::D => rank >= 4,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !valid {
        return Err(bad());
    }

    let cartan = cartan_matrix(family, rank);
    let inv_len = inverse_root_lengths(family, rank);
    let r = rank;

    // (coroot_i | coroot_j) = a_ij / D_j with 1/D_j in {1,2,3}; always integral.
    let mut gram_rows = vec![vec![0i64; r]; r];
    for i in 0..r {
        for j in 0..r {
            gram_rows[i][j] = cartan[i * r + j] * inv_len[j];
        }
    }
    let coroot_gram = QMat::from_int_rows(&gram_rows);

    let highest_root_coroot = comarks(family, rank);
    let exponents = exponents_table(family, rank);

    // theta in fundamental-weight coordinates: <theta, coroot_j> = (theta_check | coroot_j).
    let theta_fw: Vec<i64> = (0..r)
        .map(|j| {
            (0..r)
                .map(|i| highest_root_coroot[i] * gram_rows[i][j])
                .sum()
        })
        .collect();

    // Normalization check |theta_check|^2 = 2.
    let norm: i64 = (0..r).map(|i| highest_root_coroot[i] * theta_fw[i]).sum();
    assert_eq!(
        norm, 2,
        "highest-coroot normalization failed for {family}{rank}"
    );

    let cartan_qm = {
        let rows: Vec<Vec<i64>> = (0..r)
            .map(|i| cartan[i * r..(i + 1) * r].to_vec())
            .collect();
        QMat::from_int_rows(&rows)
    };
    let cartan_inv = cartan_qm.inverse().expect("Cartan matrix invertible");
    let gram_inv = coroot_gram.inverse().expect("Killing form nondegenerate");

    // s_theta(coroot_j) = coroot_j - theta_fw[j] * theta_check.
    let mut s_theta_rows = vec![vec![0i64; r]; r];
    for k in 0..r {
        for j in 0..r {
            s_theta_rows[k][j] = i64::from(k == j) - theta_fw[j] * highest_root_coroot[k];
        }
    }
    let s_theta = WeylElement::from_rows(&s_theta_rows);

    let invariants = build_invariants(family, rank, &coroot_gram, &exponents);

    Ok(RootSystem {
        family,
        rank,
        cartan,
        coroot_gram,
        highest_root_coroot,
        exponents,
        invariants,
        theta_fw,
        cartan_inv,
        gram_inv,
        s_theta,
    })
}

pub fn build_from_name(name: &str) -> Result<RootSystem> {
    let (family, rank) = parse_group(name)?;
    build_root_system(family, rank)
}

impl RootSystem {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Cartan matrix entry `a_ij = <alpha_j, coroot_i>` (0-based indices).
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    pub fn coroot_gram(&self) -> &QMat {
        &self.coroot_gram
    }

    pub fn gram_inv(&self) -> &QMat {
        &self.gram_inv
    }

    pub fn cartan_inv(&self) -> &QMat {
        &self.cartan_inv
    }

    pub fn highest_root_coroot(&self) -> &[i64] {
        &self.highest_root_coroot
    }

    /// Highest root in fundamental-weight coordinates.
    pub fn theta_fw(&self) -> &[i64] {
        &self.theta_fw
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Fundamental invariants; full list for A-D, only the Killing form for
    /// E, F, G.
    pub fn invariants(&self) -> &[Poly] {
        &self.invariants
    }

    pub fn has_full_invariants(&self) -> bool {
        self.invariants.len() == self.rank
    }

    pub fn killing(&self, x: &[Rat], y: &[Rat]) -> Result<Rat> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: x.len(),
            });
        }
        if y.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: y.len(),
            });
        }
        Ok(vec_dot(x, &self.coroot_gram.mul_vec(y)))
    }

    pub fn norm_sq(&self, x: &[Rat]) -> Rat {
        self.killing(x, x).expect("vector has rank length")
    }

    /// Killing norm on the dual space in fundamental-weight coordinates.
    pub fn weight_norm_sq(&self, chi: &[Rat]) -> Rat {
        vec_dot(chi, &self.gram_inv.mul_vec(chi))
    }

    /// The Killing isomorphism from the Cartan to its dual:
    /// `<sigma(x), eta> = (x|eta)`, in fundamental-weight coordinates.
    pub fn sigma(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.rank);
        self.coroot_gram.mul_vec(x)
    }

    /// Simple reflection `s_i` for `1 <= i <= rank`.
    pub fn simple_reflection_finite(&self, i: usize) -> Result<WeylElement> {
        if i < 1 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.rank,
            });
        }
        let i0 = i - 1;
        let r = self.rank;
        let mut rows = vec![vec![0i64; r]; r];
        for k in 0..r {
            for j in 0..r {
                rows[k][j] = i64::from(k == j) - if k == i0 { self.cartan(j, i0) } else { 0 };
            }
        }
        Ok(WeylElement::from_rows(&rows))
    }

    /// Reflection in the highest root.
    pub fn s_theta(&self) -> &WeylElement {
        &self.s_theta
    }

    pub fn finite_generators(&self) -> Vec<WeylElement> {
        (1..=self.rank)
            .map(|i| self.simple_reflection_finite(i).expect("index in range"))
            .collect()
    }

    /// Values of all fundamental invariants at `x` (the invariant-quotient
    /// chart). Requires the full invariant list.
    pub fn chevalley_map(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if !self.has_full_invariants() {
            return Err(Error::UnsupportedInvariants(self.name()));
        }
        self.invariants.iter().map(|f| f.eval(x)).collect()
    }

    /// A finite root (fundamental-weight coordinates) is positive iff its
    /// simple-root coefficients are all non-negative.
    pub fn finite_root_is_positive(&self, chi: &[Rat]) -> bool {
        let coeffs = self.cartan_inv.mul_vec(chi);
        coeffs.iter().all(|c| !c.is_negative()) && coeffs.iter().any(|c| c.is_positive())
    }
}

fn cartan_matrix(family: Family, r: usize) -> Vec<i64> {
    let mut a = vec![0i64; r * r];
    for i in 0..r {
        a[i * r + i] = 2;
    }
    let mut link = |i: usize, j: usize, vij: i64, vji: i64| {
        a[i * r + j] = vij;
        a[j * r + i] = vji;
    };
    match family {
        Family::A => {
            for i in 0..r.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..r - 2 {
                link(i, i + 1, -1, -1);
            }
            // last simple root short: its row carries the -2
            link(r - 2, r - 1, -1, -2);
        }
        Family::C => {
            for i in 0..r - 2 {
                link(i, i + 1, -1, -1);
            }
            link(r - 2, r - 1, -2, -1);
        }
        Family::D => {
            for i in 0..r - 2 {
                link(i, i + 1, -1, -1);
            }
            link(r - 3, r - 1, -1, -1);
        }
        Family::E => {
            // chain 1-3-4-5-...-r with node 2 attached to node 4 (1-based)
            link(0, 2, -1, -1);
            for i in 2..r - 1 {
                link(i, i + 1, -1, -1);
            }
            link(1, 3, -1, -1);
        }
        Family::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Family::G => {
            // first simple root short
            link(0, 1, -3, -1);
        }
    }
    a
}

/// `1/D_i` where `D_i = (alpha_i|alpha_i)/2`; 1 for long roots.
fn inverse_root_lengths(family: Family, r: usize) -> Vec<i64> {
    let mut d = vec![1i64; r];
    match family {
        Family::B => d[r - 1] = 2,
        Family::C => {
            for di in d.iter_mut().take(r - 1) {
                *di = 2;
            }
        }
        Family::F => {
            d[2] = 2;
            d[3] = 2;
        }
        Family::G => d[0] = 3,
        _ => {}
    }
    d
}

/// Coordinates of the highest coroot in the simple-coroot basis.
fn comarks(family: Family, r: usize) -> Vec<i64> {
    match family {
        Family::A => vec![1; r],
        Family::B => {
            let mut c = vec![2; r];
            c[0] = 1;
            c[r - 1] = 1;
            c
        }
        Family::C => vec![1; r],
        Family::D => {
            let mut c = vec![2; r];
            c[0] = 1;
            c[r - 2] = 1;
            c[r - 1] = 1;
            c
        }
        Family::E => match r {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
            _ => unreachable!(),
        },
        Family::F => vec![2, 3, 2, 1],
        Family::G => vec![1, 2],
    }
}

fn exponents_table(family: Family, r: usize) -> Vec<u32> {
    let mut e: Vec<u32> = match family {
        Family::A => (1..=r as u32).collect(),
        Family::B | Family::C => (0..r as u32).map(|i| 2 * i + 1).collect(),
        Family::D => {
            let mut v: Vec<u32> = (0..r as u32 - 1).map(|i| 2 * i + 1).collect();
            v.push(r as u32 - 1);
            v
        }
        Family::E => match r {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            _ => unreachable!(),
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

/// Killing quadratic form as a polynomial in coroot coordinates.
fn gram_form(gram: &QMat) -> Poly {
    let r = gram.nrows();
    let mut f = Poly::zero(r);
    for i in 0..r {
        for j in 0..r {
            let c = gram.get(i, j);
            if c.is_zero() {
                continue;
            }
            let mut exp = vec![0u32; r];
            exp[i] += 1;
            exp[j] += 1;
            f = f.add(&Poly::monomial(r, exp, c.clone()));
        }
    }
    f
}

/// Linear forms expressing the standard chart coordinates of the classical
/// families in terms of simple-coroot coordinates.
fn standard_chart(family: Family, r: usize) -> Vec<Poly> {
    let var = |i: usize| Poly::var(r, i);
    match family {
        Family::A => {
            // trace-zero chart in r+1 coordinates
            let mut forms = Vec::with_capacity(r + 1);
            forms.push(var(0));
            for k in 1..r {
                forms.push(var(k).sub(&var(k - 1)));
            }
            forms.push(var(r - 1).neg());
            forms
        }
        Family::B => {
            let mut forms = Vec::with_capacity(r);
            forms.push(var(0));
            for k in 1..r - 1 {
                forms.push(var(k).sub(&var(k - 1)));
            }
            forms.push(var(r - 1).scale(&rat_int(2)).sub(&var(r - 2)));
            forms
        }
        Family::C => {
            let mut forms = Vec::with_capacity(r);
            forms.push(var(0));
            for k in 1..r {
                forms.push(var(k).sub(&var(k - 1)));
            }
            forms
        }
        Family::D => {
            let mut forms = Vec::with_capacity(r);
            forms.push(var(0));
            for k in 1..r - 2 {
                forms.push(var(k).sub(&var(k - 1)));
            }
            forms.push(var(r - 2).sub(&var(r - 3)).add(&var(r - 1)));
            forms.push(var(r - 1).sub(&var(r - 2)));
            forms
        }
        _ => unreachable!("no standard chart for exceptional families"),
    }
}

fn build_invariants(family: Family, r: usize, gram: &QMat, exponents: &[u32]) -> Vec<Poly> {
    let killing = gram_form(gram);
    let mut list: Vec<Poly> = match family {
        Family::A => {
            let chart = standard_chart(family, r);
            let e = Poly::elementary_symmetric(&chart, r + 1);
            // degree-2 generator replaced by the Killing form
            let mut v = vec![killing.clone()];
            v.extend(e.into_iter().skip(3));
            v
        }
        Family::B | Family::C => {
            let squares: Vec<Poly> = standard_chart(family, r).iter().map(|f| f.mul(f)).collect();
            let e = Poly::elementary_symmetric(&squares, r);
            let mut v = vec![killing.clone()];
            v.extend(e.into_iter().skip(2));
            v
        }
        Family::D => {
            let chart = standard_chart(family, r);
            let squares: Vec<Poly> = chart.iter().map(|f| f.mul(f)).collect();
            let e = Poly::elementary_symmetric(&squares, r - 1);
            let pfaffian = chart.iter().fold(Poly::one(r), |acc, f| acc.mul(f));
            let mut v = vec![killing.clone()];
            v.extend(e.into_iter().skip(2));
            v.push(pfaffian);
            // same-degree ties keep the symmetric-series polynomial first
            v.sort_by_key(|p| p.total_degree());
            v
        }
        Family::E | Family::F | Family::G => vec![killing.clone()],
    };
    // Degrees follow the exponents; each generator is homogeneous, which is
    // what the parity twist on the ring relies on.
    for (i, f) in list.iter_mut().enumerate() {
        let deg = f.homogeneous_degree().expect("invariants are homogeneous");
        assert_eq!(
            deg,
            exponents[i] + 1,
            "invariant degree mismatch for {family}{r}"
        );
    }
    list
}
