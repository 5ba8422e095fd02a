//! Exact arithmetic in GF(p^N) with a designated primitive element.
//!
//! Elements are canonical residues of polynomials of degree < N over GF(p),
//! packed base-p into a `u64`. Fields up to 2^16 elements get log/antilog
//! tables keyed to the primitive element; larger fields fall back to
//! schoolbook polynomial arithmetic with modular reduction.

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Canonical residue of a field element, packed base-p.
pub type Elem = u64;

/// Fields above this order skip table construction.
const TABLE_LIMIT: u128 = 1 << 16;
/// Hard cap so packed reps and intermediate products stay in word range.
const WORD_BUDGET: u128 = 1 << 48;

/// A concrete finite field GF(p^N) with primitive element `gamma`.
///
/// Immutable after creation; all operations are pure.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    /// Prime characteristic.
    pub p: u64,
    /// Extension degree.
    pub n: u32,
    /// Monic degree-N irreducible over GF(p), coefficients c_0..c_N.
    pub modulus: Vec<u64>,
    /// Designated primitive element (multiplicative order p^N - 1).
    pub gamma: Elem,
    /// p^N.
    pub order: u64,
    /// p^N - 1.
    pub group_order: u64,
    log: Option<Vec<u32>>,
    antilog: Option<Vec<u32>>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2u64;
    while d as u128 * d as u128 <= n as u128 {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

// --- dense polynomial helpers over GF(p), little-endian coefficient vecs ---

fn pp_trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn pp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    pp_trim(&mut out);
    out
}

/// Remainder of `a` mod monic-normalizable `m` over GF(p).
fn pp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    pp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(m[dm], p);
    while r.len() - 1 >= dm && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        if dr < dm {
            break;
        }
        let c = (r[dr] * lead_inv) % p;
        if c != 0 {
            for i in 0..=dm {
                let idx = dr - dm + i;
                let sub = (c * m[i]) % p;
                r[idx] = (r[idx] + p - sub) % p;
            }
        }
        pp_trim(&mut r);
        if r.len() - 1 == dr {
            // leading term was already zero; trim handled it
            break;
        }
    }
    r
}

fn pp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    pp_trim(&mut x);
    pp_trim(&mut y);
    while !(y.len() == 1 && y[0] == 0) {
        let r = pp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn pp_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// x^e mod m over GF(p), by square and multiply.
fn pp_powmod_x(e: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut base = pp_rem(&[0, 1], m, p);
    let mut acc = vec![1u64];
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = pp_rem(&pp_mul(&acc, &base, p), m, p);
        }
        if i + 1 < bits {
            base = pp_rem(&pp_mul(&base, &base, p), m, p);
        }
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a != 0 mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Rabin irreducibility test for a degree-N polynomial over GF(p).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = (f.len() - 1) as u32;
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^n) == x mod f
    let pn = BigUint::from(p).pow(n);
    let xpn = pp_powmod_x(&pn, f, p);
    let mut diff = xpn.clone();
    // subtract x
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = (diff[1] + p - 1) % p;
    pp_trim(&mut diff);
    if !pp_is_zero(&diff) {
        return false;
    }
    // gcd(x^(p^(n/q)) - x, f) constant for every prime q | n
    for q in factorize(n as u64) {
        let e = BigUint::from(p).pow(n / q as u32);
        let mut d = pp_powmod_x(&e, f, p);
        if d.len() < 2 {
            d.resize(2, 0);
        }
        d[1] = (d[1] + p - 1) % p;
        pp_trim(&mut d);
        let g = pp_gcd(f, &d, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

impl FieldSpec {
    /// Build GF(p^N). When `modulus` is omitted the lexicographically
    /// smallest monic irreducible of degree N is selected, and gamma is the
    /// lowest-rep element of full multiplicative order.
    pub fn new(p: u64, n: u32, modulus: Option<Vec<u64>>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n < 1 {
            return Err(Error::InvalidParameters("extension degree must be >= 1".into()));
        }
        let order128 = (p as u128).checked_pow(n).ok_or(Error::FieldTooLarge(u128::MAX))?;
        if order128 > WORD_BUDGET {
            return Err(Error::FieldTooLarge(order128));
        }
        let order = order128 as u64;

        let modulus = match modulus {
            Some(mut m) => {
                for c in m.iter_mut() {
                    *c %= p;
                }
                pp_trim(&mut m);
                if m.len() != n as usize + 1 {
                    return Err(Error::BadModulusDegree { got: m.len().saturating_sub(1), want: n as usize });
                }
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                m
            }
            None => {
                if n == 1 {
                    vec![0, 1] // x
                } else {
                    Self::default_modulus(p, n)?
                }
            }
        };

        let mut spec = FieldSpec {
            p,
            n,
            modulus,
            gamma: 0,
            order,
            group_order: order - 1,
            log: None,
            antilog: None,
        };
        spec.gamma = spec.find_primitive()?;
        if order128 <= TABLE_LIMIT {
            spec.build_tables();
        }
        Ok(spec)
    }

    fn default_modulus(p: u64, n: u32) -> Result<Vec<u64>> {
        // monic x^n + (packed low part); scan low parts in rep order
        let span = (p as u128).pow(n);
        let mut low = 0u128;
        while low < span {
            let mut f = unpack(low as u64, p, n as usize);
            f.push(1);
            if is_irreducible(&f, p) {
                return Ok(f);
            }
            low += 1;
        }
        Err(Error::NoPrimitiveElement)
    }

    fn find_primitive(&self) -> Result<Elem> {
        if self.group_order == 1 {
            return Ok(1);
        }
        let primes = factorize(self.group_order);
        'cand: for g in 1..self.order {
            for &q in &primes {
                if self.pow_raw(g, self.group_order / q) == 1 {
                    continue 'cand;
                }
            }
            return Ok(g);
        }
        Err(Error::NoPrimitiveElement)
    }

    fn build_tables(&mut self) {
        let ord = self.group_order as usize;
        let mut antilog = vec![0u32; ord];
        let mut log = vec![0u32; self.order as usize];
        let mut x: Elem = 1;
        for (i, slot) in antilog.iter_mut().enumerate() {
            *slot = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_raw(x, self.gamma);
        }
        debug_assert_eq!(x, 1);
        self.antilog = Some(antilog);
        self.log = Some(log);
    }

    // --- raw (table-free) arithmetic ---

    fn mul_raw(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.n == 1 {
            return (a as u128 * b as u128 % self.p as u128) as u64;
        }
        let pa = unpack(a, self.p, self.n as usize);
        let pb = unpack(b, self.p, self.n as usize);
        let prod = pp_mul(&pa, &pb, self.p);
        let r = pp_rem(&prod, &self.modulus, self.p);
        pack(&r, self.p)
    }

    fn pow_raw(&self, b: Elem, mut e: u64) -> Elem {
        let mut base = b;
        let mut acc: Elem = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    // --- public arithmetic ---

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return a ^ b;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut x, mut y) = (a, b);
        for _ in 0..self.n {
            let s = (x % self.p + y % self.p) % self.p;
            out += s * mult;
            mult *= self.p;
            x /= self.p;
            y /= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut x = a;
        for _ in 0..self.n {
            let d = x % self.p;
            out += if d == 0 { 0 } else { self.p - d } * mult;
            mult *= self.p;
            x /= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match (&self.log, &self.antilog) {
            (Some(log), Some(anti)) => {
                let s = log[a as usize] as u64 + log[b as usize] as u64;
                anti[(s % self.group_order) as usize] as Elem
            }
            _ => self.mul_raw(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        match (&self.log, &self.antilog) {
            (Some(log), Some(anti)) => {
                let l = log[a as usize] as u64;
                let idx = if l == 0 { 0 } else { self.group_order - l };
                Ok(anti[idx as usize] as Elem)
            }
            // a^(p^N - 2)
            _ => Ok(self.pow_raw(a, self.group_order - 1)),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// gamma^e for an arbitrary-precision exponent, reduced mod p^N - 1.
    pub fn gamma_pow(&self, e: &BigUint) -> Elem {
        let r = e % BigUint::from(self.group_order);
        let r = r.to_u64_digits().first().copied().unwrap_or(0);
        self.pow(self.gamma, r)
    }

    /// b^e with a machine-word exponent (reduced mod the group order for b != 0).
    pub fn pow(&self, b: Elem, e: u64) -> Elem {
        if b == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let e = e % self.group_order.max(1);
        match (&self.log, &self.antilog) {
            (Some(log), Some(anti)) => {
                let l = log[b as usize] as u128 * e as u128 % self.group_order as u128;
                anti[l as usize] as Elem
            }
            _ => self.pow_raw(b, e),
        }
    }

    /// Discrete log base gamma (table-backed fields only).
    pub fn dlog(&self, a: Elem) -> Option<u64> {
        if a == 0 {
            return None;
        }
        self.log.as_ref().map(|l| l[a as usize] as u64)
    }

    /// Element from the class of x (the modulus variable), rep p.
    pub fn x_class(&self) -> Elem {
        if self.n == 1 {
            // residue field: x reduces to a scalar root of the modulus; for
            // modulus x this is 0
            0
        } else {
            self.p
        }
    }

}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus && self.gamma == other.gamma
    }
}
impl Eq for FieldSpec {}

fn unpack(rep: u64, p: u64, n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n.max(1)];
    let mut x = rep;
    for slot in out.iter_mut() {
        *slot = x % p;
        x /= p;
    }
    out
}

fn pack(coeffs: &[u64], p: u64) -> u64 {
    let mut out = 0u64;
    for &c in coeffs.iter().rev() {
        out = out * p + c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gf2_trivial() {
        let f = FieldSpec::new(2, 1, None).unwrap();
        assert_eq!(f.gamma, 1);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf16_x_class_relation() {
        // x^4 + x + 1
        let f = FieldSpec::new(2, 4, Some(vec![1, 1, 0, 0, 1])).unwrap();
        let x = f.x_class();
        // x^4 = x + 1
        let x4 = f.pow(x, 4);
        assert_eq!(x4, f.add(x, 1));
        // gamma is the class of x here: lowest-rep generator
        assert_eq!(f.gamma, x);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^4 + 1 = (x+1)^4 over GF(2)
        let err = FieldSpec::new(2, 4, Some(vec![1, 0, 0, 0, 1])).unwrap_err();
        assert_eq!(err, Error::ReducibleModulus { p: 2 });
    }

    #[test]
    fn gamma_pow_reduction() {
        let f = FieldSpec::new(2, 8, None).unwrap();
        assert_eq!(f.gamma_pow(&BigUint::from(0u32)), 1);
        assert_eq!(f.gamma_pow(&BigUint::from(f.group_order)), 1);
        // 2^3 * 32 = 256 = 255 + 1
        assert_eq!(f.gamma_pow(&BigUint::from(256u32)), f.gamma);
        // huge exponent: 2^100 mod 255
        let e = BigUint::from(2u32).pow(100);
        let r = (&e % BigUint::from(255u32)).to_u64_digits()[0];
        assert_eq!(f.gamma_pow(&e), f.pow(f.gamma, r));
    }

    #[test]
    fn gamma_pow_is_homomorphic() {
        let f = FieldSpec::new(2, 12, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let e1 = BigUint::from(rng.gen::<u128>());
            let e2 = BigUint::from(rng.gen::<u128>());
            let lhs = f.mul(f.gamma_pow(&e1), f.gamma_pow(&e2));
            let rhs = f.gamma_pow(&(e1 + e2));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn field_axioms_random() {
        for (p, n) in [(2u64, 4u32), (3, 2), (5, 1), (2, 8)] {
            let f = FieldSpec::new(p, n, None).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p * 100 + n as u64);
            for _ in 0..1000 {
                let a = rng.gen_range(0..f.order);
                let b = rng.gen_range(0..f.order);
                let c = rng.gen_range(0..f.order);
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn gf16_log_antilog_roundtrip() {
        let f = FieldSpec::new(2, 4, Some(vec![1, 1, 0, 0, 1])).unwrap();
        // gamma * gamma^3 = gamma^4 = gamma + 1 when gamma is the class of x
        let g = f.gamma;
        let g3 = f.pow(g, 3);
        assert_eq!(f.mul(g, g3), f.add(g, 1));
        for a in 1..f.order {
            let l = f.dlog(a).unwrap();
            assert_eq!(f.pow(f.gamma, l), a);
        }
    }

    #[test]
    fn schoolbook_path_matches_tables() {
        // GF(2^17) exceeds the table limit; verify against GF(2^8)-style identities
        let big = FieldSpec::new(2, 17, None).unwrap();
        assert!(big.log.is_none());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let a = rng.gen_range(1..big.order);
            assert_eq!(big.mul(a, big.inv(a).unwrap()), 1);
        }
        assert_eq!(big.pow(big.gamma, big.group_order), 1);
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::new(2, 4, None).unwrap();
        assert_eq!(f.inv(0).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn over_budget_rejected() {
        assert!(matches!(FieldSpec::new(2, 60, None), Err(Error::FieldTooLarge(_))));
    }
}
