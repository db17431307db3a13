//! Multivariate polynomials over the rationals, dense exponent-map
//! representation. Degrees in play stay below ten, so no sparsity tricks.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::rat::{rat_one, rat_pow, rat_zero, Rat};

/// Polynomial in `nvars` variables with rational coefficients. Terms map an
/// exponent multi-index to a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, rat_one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(exp, rat_one());
        p
    }

    pub fn monomial(nvars: usize, exponents: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exponents.len(), nvars);
        let mut p = Self::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exp: Vec<u32>, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Exact value at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = rat_zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exp) {
                if e > 0 {
                    term *= rat_pow(x, e);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn partial(&self, i: usize) -> Poly {
        assert!(i < self.nvars);
        let mut out = Poly::zero(self.nvars);
        for (exp, c) in &self.terms {
            if exp[i] == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[i] -= 1;
            out.insert_term(e, c * Rat::from_integer(exp[i].into()));
        }
        out
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Substitutes `x_i := sum_j m[i][j] y_j`; `m` is `nvars x new_nvars`.
    pub fn compose_linear(&self, m: &QMat) -> Poly {
        assert_eq!(
            m.nrows(),
            self.nvars,
            "substitution matrix row count mismatch"
        );
        let new_nvars = m.ncols();
        let forms: Vec<Poly> = (0..self.nvars)
            .map(|i| {
                let mut f = Poly::zero(new_nvars);
                for j in 0..new_nvars {
                    f = f.add(&Poly::var(new_nvars, j).scale(m.get(i, j)));
                }
                f
            })
            .collect();
        let mut out = Poly::zero(new_nvars);
        for (exp, c) in &self.terms {
            let mut term = Poly::constant(new_nvars, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&forms[i].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Returns `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Elementary symmetric polynomials `e_0..e_k` of the given polynomials,
    /// built incrementally from the product generating function.
    pub fn elementary_symmetric(items: &[Poly], k: usize) -> Vec<Poly> {
        let nvars = items.first().map_or(0, Poly::nvars);
        let mut e: Vec<Poly> = vec![Poly::zero(nvars); k + 1];
        e[0] = Poly::one(nvars);
        for item in items {
            for j in (1..=k).rev() {
                let bump = e[j - 1].mul(item);
                e[j] = e[j].add(&bump);
            }
        }
        e
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

/// Difference quotient in the loop parameter: `(f(a + u*b) - f(a)) / u` for
/// `u != 0`, and the directional derivative `grad f(a) . b` at `u = 0`.
pub fn difference_quotient_u(f: &Poly, a: &[Rat], b: &[Rat], u: &Rat) -> Result<Rat> {
    if a.len() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            got: a.len(),
        });
    }
    if b.len() != f.nvars() {
        return Err(Error::DimensionMismatch {
            expected: f.nvars(),
            got: b.len(),
        });
    }
    if u.is_zero() {
        let mut acc = rat_zero();
        for (i, g) in f.gradient().iter().enumerate() {
            acc += g.eval(a)? * &b[i];
        }
        Ok(acc)
    } else {
        let shifted: Vec<Rat> = a.iter().zip(b).map(|(x, y)| x + u * y).collect();
        Ok((f.eval(&shifted)? - f.eval(a)?) / u)
    }
}
