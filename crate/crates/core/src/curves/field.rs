//! Prime fields, `F_p[x]` helpers and table-driven arithmetic in `F_{p^k}`.

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Polynomials over `F_p`, coefficient lists low degree first, trimmed.
pub(crate) mod fp_poly {
    use super::inv_mod;

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn reduce(a: &[u64], p: u64) -> Vec<u64> {
        trim(a.iter().map(|c| c % p).collect())
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let b = trim(b.to_vec());
        let lead_inv = inv_mod(*b.last().expect("nonzero divisor"), p);
        let mut r = trim(a.to_vec());
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let f = r.last().unwrap() * lead_inv % p;
            for (j, c) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - f * c % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        x
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| (k as u64 % p) * c % p)
                .collect(),
        )
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.len().checked_sub(1)
    }
}

/// Monic polynomials of exact degree `deg` in increasing order of the
/// base-`p` integer whose digit `i` is the coefficient of `x^i`.
fn monic_polys(p: u64, deg: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(deg as u32);
    (0..count).map(move |mut n| {
        let mut c = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            c.push(n % p);
            n /= p;
        }
        c.push(1);
        c
    })
}

fn is_irreducible(p: u64, modulus: &[u64]) -> bool {
    let k = modulus.len() - 1;
    (1..=k / 2).all(|d| monic_polys(p, d).all(|f| !fp_poly::rem(modulus, &f, p).is_empty()))
}

/// `F_{p^k}` presented as `F_p[x]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldSpec {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
}

impl FiniteFieldSpec {
    /// Validates primality of `p`, monicity and degree of `modulus` and its
    /// irreducibility (no monic factor of degree at most `k/2`).
    pub fn new(p: u64, k: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::FieldInvariantViolation(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::FieldInvariantViolation(
                "extension degree must be positive".into(),
            ));
        }
        let modulus = fp_poly::reduce(&modulus, p);
        if modulus.len() != k as usize + 1 || modulus.last() != Some(&1) {
            return Err(Error::FieldInvariantViolation(format!(
                "modulus must be monic of degree {k}"
            )));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::FieldInvariantViolation(format!(
                "modulus {modulus:?} is reducible over F_{p}"
            )));
        }
        Ok(FiniteFieldSpec { p, k, modulus })
    }

    /// The first monic irreducible of degree `k` in the enumeration order of
    /// [`monic_polys`] (constant term is the least significant digit).
    pub fn first_irreducible(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::FieldInvariantViolation(format!("{p} is not prime")));
        }
        let modulus = monic_polys(p, k as usize)
            .find(|m| is_irreducible(p, m))
            .expect("irreducible polynomials exist in every degree");
        Self::new(p, k, modulus)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    fn mul_elems(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let prod = fp_poly::mul(a, b, self.p);
        fp_poly::rem(&prod, &self.modulus, self.p)
    }

    fn pow_elem(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_elems(&acc, &b);
            }
            b = self.mul_elems(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn encode(&self, a: &[u64]) -> usize {
        a.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * self.p as usize + c as usize)
    }

    fn decode(&self, mut n: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            out.push((n % self.p as usize) as u64);
            n /= self.p as usize;
        }
        fp_poly::trim(out)
    }

    fn primitive_element(&self) -> Vec<u64> {
        let order = self.order() - 1;
        let mut primes = Vec::new();
        let mut m = order;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                primes.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        (1..self.order() as usize)
            .map(|n| self.decode(n))
            .find(|g| primes.iter().all(|&l| self.pow_elem(g, order / l) != [1]))
            .expect("multiplicative group is cyclic")
    }

    /// Log/antilog and Zech tables for the whole field.
    pub(crate) fn tables(&self) -> FieldTables {
        let q = self.order() as usize;
        let g = self.primitive_element();
        let n = q - 1;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; q];
        let mut cur = vec![1u64];
        for (i, slot) in exp.iter_mut().enumerate() {
            let code = self.encode(&cur);
            *slot = code as u32;
            log[code] = i as u32;
            cur = self.mul_elems(&cur, &g);
        }
        // zech[i] = log(1 + g^i)
        let p = self.p as usize;
        let zech = exp
            .iter()
            .map(|&code| {
                let code = code as usize;
                let low = code % p;
                let plus_one = code - low + (low + 1) % p;
                log[plus_one]
            })
            .collect();
        let mut base_logs = vec![u32::MAX; p];
        for (c, slot) in base_logs.iter_mut().enumerate().skip(1) {
            *slot = log[c];
        }
        FieldTables { q, zech, base_logs }
    }
}

/// Elements are stored as discrete logarithms; `ZERO` marks the zero element.
pub(crate) struct FieldTables {
    q: usize,
    zech: Vec<u32>,
    base_logs: Vec<u32>,
}

pub(crate) const ZERO: u32 = u32::MAX;

impl FieldTables {
    pub fn order(&self) -> usize {
        self.q
    }

    fn group_order(&self) -> u32 {
        (self.q - 1) as u32
    }

    /// Log of the prime-field constant `c` (already reduced mod p).
    pub fn lift(&self, c: u64) -> u32 {
        self.base_logs[c as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let n = self.group_order();
        let s = a as u64 + b as u64;
        (s % n as u64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let n = self.group_order();
        let diff = (b + n - a) % n;
        let z = self.zech[diff as usize];
        if z == ZERO {
            ZERO
        } else {
            self.mul(a, z)
        }
    }

    /// Quadratic character: 0, 1 or -1 (odd characteristic only).
    pub fn chi(&self, a: u32) -> i64 {
        if a == ZERO {
            0
        } else if a.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Horner evaluation of a polynomial with prime-field coefficients
    /// (low degree first) at the element with log `x`.
    pub fn eval(&self, coeff_logs: &[u32], x: u32) -> u32 {
        coeff_logs
            .iter()
            .rev()
            .fold(ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(101));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
    }

    #[test]
    fn irreducibility() {
        assert!(FiniteFieldSpec::new(3, 2, vec![1, 0, 1]).is_ok());
        // x^2 - 1 = (x-1)(x+1)
        assert!(matches!(
            FiniteFieldSpec::new(3, 2, vec![2, 0, 1]),
            Err(Error::FieldInvariantViolation(_))
        ));
        assert!(FiniteFieldSpec::new(4, 1, vec![0, 1]).is_err());
    }

    #[test]
    fn first_irreducible_is_deterministic() {
        // over F_3 the degree-2 monics in order: x^2, x^2+1, ... ; x^2+1 is first irreducible
        assert_eq!(
            FiniteFieldSpec::first_irreducible(3, 2).unwrap().modulus(),
            &[1, 0, 1]
        );
        assert_eq!(
            FiniteFieldSpec::first_irreducible(2, 3).unwrap().modulus(),
            &[1, 1, 0, 1]
        );
        assert_eq!(
            FiniteFieldSpec::first_irreducible(5, 1).unwrap().modulus(),
            &[0, 1]
        );
    }

    #[test]
    fn table_arithmetic_matches_prime_field() {
        let f = FiniteFieldSpec::first_irreducible(7, 1).unwrap();
        let t = f.tables();
        for a in 0..7u64 {
            for b in 0..7u64 {
                let la = if a == 0 { ZERO } else { t.lift(a) };
                let lb = if b == 0 { ZERO } else { t.lift(b) };
                let sum = (a + b) % 7;
                let prod = a * b % 7;
                let ls = if sum == 0 { ZERO } else { t.lift(sum) };
                let lp = if prod == 0 { ZERO } else { t.lift(prod) };
                assert_eq!(t.add(la, lb), ls);
                assert_eq!(t.mul(la, lb), lp);
            }
        }
        // squares mod 7: 1, 2, 4
        let squares: Vec<u64> = (1..7).filter(|&c| t.chi(t.lift(c)) == 1).collect();
        assert_eq!(squares, vec![1, 2, 4]);
    }

    #[test]
    fn extension_field_has_half_squares() {
        let f = FiniteFieldSpec::first_irreducible(3, 3).unwrap();
        let t = f.tables();
        assert_eq!(t.order(), 27);
        let nonzero: Vec<u32> = (0..26).collect();
        assert_eq!(nonzero.iter().filter(|&&a| t.chi(a) == 1).count(), 13);
        // -1 is a nonsquare in F_27 (27 = 3 mod 4)
        assert_eq!(t.chi(t.lift(2)), -1);
    }
}
