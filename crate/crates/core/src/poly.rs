//! Dense univariate polynomials over the field, little-endian coefficients.
//!
//! Support layer for polynomial-matrix determinants, gcds and primeness
//! tests; sizes here are tiny so everything is schoolbook.

use crate::gf::{Elem, FieldSpec};

pub type Poly = Vec<Elem>;

pub fn trim(p: &mut Poly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

pub fn is_zero(p: &Poly) -> bool {
    p.iter().all(|&c| c == 0)
}

/// Degree, with deg 0 for constants (including the zero polynomial).
pub fn degree(p: &Poly) -> usize {
    let mut d = p.len().saturating_sub(1);
    while d > 0 && p[d] == 0 {
        d -= 1;
    }
    d
}

pub fn add(a: &Poly, b: &Poly, f: &FieldSpec) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = f.add(x, y);
    }
    trim(&mut out);
    out
}

pub fn sub(a: &Poly, b: &Poly, f: &FieldSpec) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = f.sub(x, y);
    }
    trim(&mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly, f: &FieldSpec) -> Poly {
    if is_zero(a) || is_zero(b) {
        return vec![0];
    }
    let mut out = vec![0; degree(a) + degree(b) + 1];
    for i in 0..=degree(a) {
        if a[i] == 0 {
            continue;
        }
        for j in 0..=degree(b) {
            if b[j] != 0 {
                out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
            }
        }
    }
    out
}

pub fn scale(a: &Poly, c: Elem, f: &FieldSpec) -> Poly {
    let mut out: Poly = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    out
}

/// Remainder of a mod b; b nonzero.
pub fn rem(a: &Poly, b: &Poly, f: &FieldSpec) -> Poly {
    let db = degree(b);
    let lead_inv = f.inv(b[db]).expect("divisor nonzero");
    let mut r = a.clone();
    trim(&mut r);
    while !is_zero(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let c = f.mul(r[dr], lead_inv);
        for i in 0..=db {
            let idx = dr - db + i;
            r[idx] = f.sub(r[idx], f.mul(c, b[i]));
        }
        trim(&mut r);
        if degree(&r) == dr && !is_zero(&r) {
            break; // leading term canceled exactly once; trim already shrank
        }
    }
    r
}

/// Monic gcd.
pub fn gcd(a: &Poly, b: &Poly, f: &FieldSpec) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let r = rem(&x, &y, f);
        x = y;
        y = r;
    }
    if !is_zero(&x) {
        let inv = f.inv(x[degree(&x)]).unwrap();
        x = scale(&x, inv, f);
    }
    x
}

pub fn eval(p: &Poly, at: Elem, f: &FieldSpec) -> Elem {
    let mut acc = 0;
    for &c in p.iter().rev() {
        acc = f.add(f.mul(acc, at), c);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldSpec {
        FieldSpec::new(2, 2, None).unwrap()
    }

    #[test]
    fn mul_and_rem() {
        let f = gf4();
        // (1 + z)(1 + z) = 1 + z^2 over GF(2^k)
        let a = vec![1, 1];
        let sq = mul(&a, &a, &f);
        assert_eq!(sq, vec![1, 0, 1]);
        assert!(is_zero(&rem(&sq, &a, &f)));
    }

    #[test]
    fn gcd_common_factor() {
        let f = gf4();
        let z = vec![0, 1];
        let a = mul(&z, &vec![1, 1], &f); // z(1+z)
        let b = mul(&z, &z, &f); // z^2
        assert_eq!(gcd(&a, &b, &f), z);
    }

    #[test]
    fn eval_horner() {
        let f = gf4();
        let p = vec![1, 2, 3];
        let x = 2;
        let direct = f.add(f.add(1, f.mul(2, x)), f.mul(3, f.mul(x, x)));
        assert_eq!(eval(&p, x, &f), direct);
    }
}
