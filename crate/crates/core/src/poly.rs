//! Dense univariate polynomials over the ground field; just enough for
//! minimal polynomials and idempotent extraction.

use crate::field::{FieldSpec, Scalar};

/// Coefficients in ascending degree, normalized (no trailing zeros).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly {
            field,
            coeffs: vec![field.one()],
        }
    }

    /// `t^n`
    pub fn monomial(field: FieldSpec, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        Poly { field, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Poly::new(self.field, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(
            self.field,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Poly::new(self.field, coeffs)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.field);
        let dlead = div.coeffs.last().unwrap().clone();
        while let (Some(rd), Some(dd)) = (rem.degree(), div.degree()) {
            if rd < dd {
                break;
            }
            let c = rem.coeffs.last().unwrap().div(&dlead);
            let shift = rd - dd;
            let term = Poly::monomial(self.field, shift).scale(&c);
            quo = quo.add(&term);
            rem = rem.sub(&term.mul(div));
        }
        (quo, rem)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.coeffs.last().unwrap().inv().unwrap();
        self.scale(&lead)
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, w)` with `u*self + w*other = g`.
    pub fn extended_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(self.field), Poly::zero(self.field));
        let (mut t0, mut t1) = (Poly::zero(self.field), Poly::one(self.field));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            (r0, r1) = (r1, r);
            let ns = s0.sub(&q.mul(&s1));
            (s0, s1) = (s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            (t0, t1) = (t1, nt);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lead = r0.coeffs.last().unwrap().inv().unwrap();
        let lead = Poly {
            field: self.field,
            coeffs: vec![lead],
        };
        (r0.mul(&lead).monic(), s0.mul(&lead), t0.mul(&lead))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        let f = FieldSpec::Rationals;
        Poly::new(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t + 1)(t - 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(a.gcd(&p(&[-1, 1])), p(&[-1, 1]));
    }

    #[test]
    fn extended_gcd_is_bezout() {
        let a = p(&[0, 0, 1]); // t^2
        let b = p(&[-1, 1]); // t - 1
        let (g, u, w) = a.extended_gcd(&b);
        assert_eq!(g, p(&[1]));
        assert_eq!(u.mul(&a).add(&w.mul(&b)), p(&[1]));
    }
}
