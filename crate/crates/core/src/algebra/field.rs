use crate::error::{Error, Result};

/// A field element, encoded as the base-`p` integer whose digit `i` is the
/// coefficient of `x^i`.
pub type Elem = u32;

const MAX_ORDER: u64 = 1 << 20;

/// `GF(p^k)` for `k <= 4` and `p^k <= 2^20`.
///
/// Multiplication goes through exponent/logarithm tables built from a
/// primitive element; addition is digit-wise modulo `p`.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Coefficients `c_0..c_{k-1}` of the monic modulus `x^k + ...`.
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k` into `(p, k)`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl FiniteField {
    /// Builds `GF(p^k)` with the lexicographically least irreducible monic
    /// modulus (coefficients compared from `x^{k-1}` down to `x^0`).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(1..=4).contains(&k) {
            return Err(Error::DegreeOutOfRange(k));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, k })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = if k == 1 {
            vec![0]
        } else {
            (0..q)
                .map(|c| digits(c, p, k as usize))
                .find(|c| is_irreducible(c, p))
                .expect("an irreducible polynomial exists for every degree")
        };
        let mut field = FiniteField { p, k, q, modulus, exp: Vec::new(), log: Vec::new() };
        field.build_tables();
        Ok(field)
    }

    /// Builds `GF(q)` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let mut exp = vec![0; q - 1];
        let mut log = vec![0; q];
        'candidates: for g in 1..self.q {
            let mut x = 1;
            for (i, slot) in exp.iter_mut().enumerate() {
                if i > 0 && x == 1 {
                    continue 'candidates;
                }
                *slot = x;
                x = self.slow_mul(x, g);
            }
            if x != 1 {
                continue;
            }
            for (i, &e) in exp.iter().enumerate() {
                log[e as usize] = i as u32;
            }
            self.exp = exp;
            self.log = log;
            return;
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let (p, k) = (self.p as u64, self.k as usize);
        if k == 1 {
            return ((a as u64 * b as u64) % p) as Elem;
        }
        let a = digits(a, self.p, k);
        let b = digits(b, self.p, k);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for deg in (k..prod.len()).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            // x^deg = -modulus * x^(deg - k)
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
            prod[deg] = 0;
        }
        undigits(prod[..k].iter().map(|&c| c as u32), self.p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Coefficients `c_0..c_{k-1}` of the monic modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.q
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.k == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
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
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// `-1` as an element.
    pub fn minus_one(&self) -> Elem {
        self.neg(1)
    }

    /// True for nonzero squares.
    pub fn is_square(&self, a: Elem) -> bool {
        a != 0 && (self.p == 2 || self.log[a as usize] % 2 == 0)
    }

    /// The nonzero squares `{a^2 : a != 0}` in increasing order.
    pub fn quadratic_residues(&self) -> Result<Vec<Elem>> {
        if self.p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        let mut out: Vec<Elem> = (0..(self.q - 1) / 2).map(|i| self.exp[2 * i as usize]).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `sum a_i * b_i` over the field.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

fn digits(mut c: u32, p: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = c % p;
        c /= p;
    }
    out
}

fn undigits(coeffs: impl DoubleEndedIterator<Item = u32>, p: u32) -> u32 {
    coeffs.rev().fold(0, |acc, c| acc * p + c)
}

/// Remainder of the monic polynomial with lower coefficients `f` (degree
/// `f.len()`) divided by the monic polynomial with lower coefficients `g`.
fn monic_remainder(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    r.push(1);
    let dg = g.len();
    for deg in (dg..r.len()).rev() {
        let c = r[deg];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = deg - dg + i;
            r[idx] = (r[idx] + (p - c) * gi as u64) % p;
        }
        r[deg] = 0;
    }
    r.truncate(dg);
    r.into_iter().map(|c| c as u32).collect()
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len();
    for deg in 1..=k / 2 {
        let count = p.pow(deg as u32);
        for c in 0..count {
            let g = digits(c, p, deg);
            if monic_remainder(f, &g, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = FiniteField::new(7, 1).unwrap();
        assert_eq!(f.add(3, 5), 1);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.sub(2, 5), 4);
    }

    #[test]
    fn gf9_uses_x_squared_plus_one() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0]);
        // x is encoded as 3; x * x = -1 = 2
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn least_moduli() {
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1]);
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0]);
        // x^4 + x + 1 over GF(2)
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0]);
        let f = FiniteField::new(5, 4).unwrap();
        assert!(is_irreducible(f.modulus(), 5));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FiniteField::new(6, 1), Err(Error::NotPrime(6))));
        assert!(matches!(FiniteField::new(3, 5), Err(Error::DegreeOutOfRange(5))));
        assert!(matches!(FiniteField::new(2, 0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(FiniteField::new(1_048_583, 1), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FiniteField::of_order(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn residues() {
        let f5 = FiniteField::new(5, 1).unwrap();
        assert_eq!(f5.quadratic_residues().unwrap(), vec![1, 4]);
        let f13 = FiniteField::new(13, 1).unwrap();
        let qr = f13.quadratic_residues().unwrap();
        assert_eq!(qr, vec![1, 3, 4, 9, 10, 12]);
        assert!(qr.contains(&f13.minus_one()));
        assert!(FiniteField::new(2, 3).unwrap().quadratic_residues().is_err());
    }

    #[test]
    fn residues_match_direct_squaring() {
        for q in [9u64, 25, 27, 49, 81, 121, 125, 169] {
            let f = FiniteField::of_order(q).unwrap();
            let mut direct: Vec<Elem> = (1..f.order()).map(|a| f.mul(a, a)).collect();
            direct.sort_unstable();
            direct.dedup();
            assert_eq!(f.quadratic_residues().unwrap(), direct, "q = {q}");
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(18), None);
    }
}
