//! Small finite fields with exact arithmetic.
//!
//! Elements of GF(p^m) are stored as base-p digit packs in a `u32` (index in
//! 0..p^m). All arithmetic goes through a [`Field`] context object; for the
//! field orders used here (a few hundred at most) multiplication is driven by
//! a precomputed table.

use serde::{Deserialize, Serialize};

/// An element of a finite field, as an index in `0..order`.
///
/// The digits of the index in base p are the coefficients of the element
/// against the power basis of the fixed generator polynomial.
pub type Elt = u32;

/// GF(p^m) with a fixed irreducible modulus and a fixed multiplicative generator.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Field {
    pub p: u32,
    pub m: u32,
    pub order: u32,
    /// Coefficients of the monic irreducible modulus, degree m (length m+1).
    modulus: Vec<u32>,
    /// A generator of the cyclic group GF(p^m)^*.
    generator: Elt,
    #[serde(skip)]
    mul_table: Vec<Elt>,
    #[serde(skip)]
    inv_table: Vec<Elt>,
}

const MUL_TABLE_MAX: u64 = 4096;

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for Field {}

fn poly_of(mut e: Elt, p: u32, m: u32) -> Vec<u32> {
    let mut v = vec![0u32; m as usize];
    for c in v.iter_mut() {
        *c = e % p;
        e /= p;
    }
    v
}

fn elt_of(poly: &[u32], p: u32) -> Elt {
    let mut e = 0u64;
    for &c in poly.iter().rev() {
        e = e * p as u64 + c as u64;
    }
    e as Elt
}

/// Schoolbook product of digit vectors modulo `modulus` over GF(p).
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    // reduce from the top: x^m = -(modulus tail)
    for k in (m..prod.len()).rev() {
        let c = prod[k] % p as u64;
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for j in 0..m {
            let sub = c * modulus[j] as u64 % p as u64;
            prod[k - m + j] = (prod[k - m + j] + p as u64 - sub) % p as u64;
        }
    }
    prod.truncate(m);
    prod.iter().map(|&x| x as u32).collect()
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    // No roots and not divisible by any monic irreducible of degree <= m/2,
    // checked by brute division. Degrees here are tiny (m <= 6).
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        let lo = (p as u64).pow(d as u32);
        let hi = lo * p as u64;
        for idx in lo..hi {
            let div = poly_of_u64(idx, p, d + 1);
            if poly_divides(&div, modulus, p) {
                return false;
            }
        }
    }
    true
}

fn poly_of_u64(mut e: u64, p: u32, len: usize) -> Vec<u32> {
    let mut v = vec![0u32; len];
    for c in v.iter_mut() {
        *c = (e % p as u64) as u32;
        e /= p as u64;
    }
    v
}

fn poly_divides(div: &[u32], num: &[u32], p: u32) -> bool {
    let mut rem: Vec<u32> = num.to_vec();
    let dlead = *div.last().unwrap();
    if dlead == 0 {
        return false;
    }
    let dinv = mod_inv(dlead, p);
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let f = lead as u64 * dinv as u64 % p as u64;
            let off = rem.len() - 1 - dd;
            for j in 0..=dd {
                let sub = f * div[j] as u64 % p as u64;
                rem[off + j] = ((rem[off + j] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // p prime, a != 0
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

impl Field {
    /// GF(p^m). Deterministic: the modulus is the lexicographically smallest
    /// monic irreducible of degree m, the generator the smallest primitive element.
    pub fn new(p: u32, m: u32) -> Self {
        assert!(m >= 1 && p >= 2);
        let order = (p as u64).pow(m);
        assert!(order <= u32::MAX as u64, "field too large");
        let order = order as u32;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            let lo = (p as u64).pow(m);
            'outer: for idx in lo..2 * lo {
                let cand = poly_of_u64(idx, p, m as usize + 1);
                if *cand.last().unwrap() != 1 {
                    continue;
                }
                if is_irreducible(&cand, p) {
                    found = Some(cand);
                    break 'outer;
                }
            }
            found.expect("no irreducible polynomial found")
        };
        let mut f = Field {
            p,
            m,
            order,
            modulus,
            generator: 0,
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        f.build_tables();
        f.generator = f.find_generator();
        f
    }

    /// Minimal extension of GF(p) whose multiplicative group has order divisible by d.
    pub fn with_root_of_unity(p: u32, d: u32) -> Self {
        let mut m = 1;
        loop {
            let order = (p as u64).pow(m);
            assert!(order <= MUL_TABLE_MAX, "no small splitting field");
            if (order - 1) % d as u64 == 0 {
                return Field::new(p, m);
            }
            m += 1;
        }
    }

    fn build_tables(&mut self) {
        if (self.order as u64) <= MUL_TABLE_MAX {
            let n = self.order as usize;
            let mut table = vec![0 as Elt; n * n];
            for a in 0..self.order {
                let pa = poly_of(a, self.p, self.m);
                for b in a..self.order {
                    let pb = poly_of(b, self.p, self.m);
                    let c = elt_of(&poly_mul_mod(&pa, &pb, &self.modulus, self.p), self.p);
                    table[a as usize * n + b as usize] = c;
                    table[b as usize * n + a as usize] = c;
                }
            }
            self.mul_table = table;
            let mut inv = vec![0 as Elt; n];
            for a in 1..self.order {
                if inv[a as usize] != 0 {
                    continue;
                }
                for b in 1..self.order {
                    if self.mul_table[a as usize * n + b as usize] == 1 {
                        inv[a as usize] = b;
                        inv[b as usize] = a;
                        break;
                    }
                }
            }
            self.inv_table = inv;
        }
    }

    fn find_generator(&self) -> Elt {
        let n = self.order - 1;
        'cand: for g in 2..self.order {
            // g is a generator iff g^(n/q) != 1 for every prime q | n
            let mut k = n;
            let mut q = 2;
            while q * q <= k {
                if k % q == 0 {
                    if self.pow(g, (n / q) as u64) == 1 {
                        continue 'cand;
                    }
                    while k % q == 0 {
                        k /= q;
                    }
                }
                q += 1;
            }
            if k > 1 && self.pow(g, (n / k) as u64) == 1 {
                continue 'cand;
            }
            return g;
        }
        1
    }

    pub fn zero(&self) -> Elt {
        0
    }
    pub fn one(&self) -> Elt {
        1
    }

    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        // digit-wise addition mod p
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut mult = 1u32;
        for _ in 0..self.m {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * mult;
            mult *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elt) -> Elt {
        let mut a = a;
        let mut out = 0u32;
        let mut mult = 1u32;
        for _ in 0..self.m {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * mult;
            mult *= self.p;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        if !self.mul_table.is_empty() {
            return self.mul_table[a as usize * self.order as usize + b as usize];
        }
        let pa = poly_of(a, self.p, self.m);
        let pb = poly_of(b, self.p, self.m);
        elt_of(&poly_mul_mod(&pa, &pb, &self.modulus, self.p), self.p)
    }

    pub fn inv(&self, a: Elt) -> Elt {
        assert!(a != 0, "division by zero");
        if !self.inv_table.is_empty() {
            return self.inv_table[a as usize];
        }
        self.pow(a, self.order as u64 - 2)
    }

    pub fn div(&self, a: Elt, b: Elt) -> Elt {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elt, mut e: u64) -> Elt {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^m).
    pub fn from_int(&self, n: i64) -> Elt {
        let r = n.rem_euclid(self.p as i64) as u32;
        r
    }

    /// A primitive d-th root of unity; requires d | order - 1.
    pub fn root_of_unity(&self, d: u32) -> Elt {
        assert!(
            d > 0 && (self.order - 1) % d == 0,
            "field has no primitive {d}-th root of unity"
        );
        self.pow(self.generator, ((self.order - 1) / d) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_arithmetic() {
        let f = Field::new(2, 2);
        assert_eq!(f.order, 4);
        // x^2 = x + 1 under the minimal irreducible x^2 + x + 1
        for a in 0..4 {
            assert_eq!(f.add(a, a), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
        let z = f.root_of_unity(3);
        assert_ne!(z, 1);
        assert_eq!(f.pow(z, 3), 1);
    }

    #[test]
    fn gf3_is_prime_field() {
        let f = Field::new(3, 1);
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.mul(2, 2), 1);
        assert_eq!(f.root_of_unity(2), 2);
    }

    #[test]
    fn splitting_field_selection() {
        // q = 3, p = 3: need 2 | p^m - 1, already true at m = 1
        let f = Field::with_root_of_unity(3, 2);
        assert_eq!((f.p, f.m), (3, 1));
        // q = 4, p = 2: need 3 | 2^m - 1, first at m = 2
        let f = Field::with_root_of_unity(2, 3);
        assert_eq!((f.p, f.m), (2, 2));
    }

    #[test]
    fn field_laws_gf9() {
        let f = Field::new(3, 2);
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
        }
    }
}
