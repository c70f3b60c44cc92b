//! Table-driven arithmetic in GF(q), q = p^k <= 2^16.
//!
//! An element is a handle in `0..q`: the base-`p` digits of the handle are the
//! coefficients (constant term first) of its polynomial representative
//! modulo the field's defining polynomial. For prime fields the handle is
//! simply the residue. Multiplication goes through exp/log tables, addition
//! through a Zech logarithm table.

use std::fmt;

use crate::{Error, Result};

pub const MAX_FIELD_SIZE: u64 = 1 << 16;

const NO_LOG: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn handle(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    q: u32,
    p: u32,
    k: u32,
    /// Monic defining polynomial over GF(p), constant term first, length k+1.
    modulus: Vec<u32>,
    /// `exp[i] = eta^i` for `i in 0..2(q-1)`, doubled to skip a reduction.
    exp: Vec<u32>,
    /// `log[x]` for nonzero handles; `log[0]` is unused.
    log: Vec<u32>,
    /// `zech[i] = log(1 + eta^i)`, or `NO_LOG` when `1 + eta^i = 0`.
    zech: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}; p={}, k={}, modulus={:?})",
            self.q, self.p, self.k, self.modulus
        )
    }
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p as u32, k))
}

/// Multiplies a handle by the variable, reducing by a monic modulus.
fn times_x(handle: u32, p: u32, modulus: &[u32]) -> u32 {
    let k = modulus.len() - 1;
    let mut digits = to_digits(handle, p, k);
    let top = digits[k - 1];
    for i in (1..k).rev() {
        digits[i] = digits[i - 1];
    }
    digits[0] = 0;
    for (i, d) in digits.iter_mut().enumerate() {
        *d = (*d + (p - modulus[i]) * top) % p;
    }
    from_digits(&digits, p)
}

fn to_digits(mut h: u32, p: u32, k: usize) -> Vec<u32> {
    let mut d = vec![0; k];
    for slot in d.iter_mut() {
        *slot = h % p;
        h /= p;
    }
    d
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn digit_add(a: u32, b: u32, p: u32, k: usize) -> u32 {
    let (da, db) = (to_digits(a, p, k), to_digits(b, p, k));
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    from_digits(&sum, p)
}

impl Field {
    /// Builds GF(q). For `k > 1` the modulus is the first monic primitive
    /// polynomial of degree `k` when coefficient vectors are ordered by
    /// their handle (leading-degree digit most significant), and the
    /// generator is the class of the variable. For prime fields the
    /// generator is the smallest primitive root.
    pub fn new(q: u64) -> Result<Field> {
        if q > MAX_FIELD_SIZE {
            return Err(Error::TooLarge(q));
        }
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let q = q as u32;
        let order = (q - 1) as usize;

        let (modulus, exp_once) = if k == 1 {
            let g = (1..q.max(2))
                .find(|&g| cycle(g, order, |x| x * g % p).is_some())
                .expect("every prime field has a primitive root");
            (vec![p - g, 1], cycle(g, order, |x| x * g % p).unwrap())
        } else {
            let k = k as usize;
            let mut found = None;
            for code in 0..q {
                let mut modulus = to_digits(code, p, k);
                modulus.push(1);
                if modulus[0] == 0 {
                    continue;
                }
                let x = p; // handle of the variable
                if let Some(powers) = cycle(x, order, |h| times_x(h, p, &modulus)) {
                    found = Some((modulus, powers));
                    break;
                }
            }
            found.expect("a primitive polynomial exists in every degree")
        };

        let mut exp = exp_once.clone();
        exp.extend_from_slice(&exp_once);
        let mut log = vec![NO_LOG; q as usize];
        for (i, &h) in exp_once.iter().enumerate() {
            log[h as usize] = i as u32;
        }
        let zech = exp_once
            .iter()
            .map(|&h| {
                let s = digit_add(1, h, p, k as usize);
                if s == 0 {
                    NO_LOG
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Ok(Field {
            q,
            p,
            k,
            modulus,
            exp,
            log,
            zech,
        })
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn unit_order(&self) -> u32 {
        self.q - 1
    }

    pub fn eta(&self) -> Elem {
        Elem(self.exp[1])
    }

    pub fn elem(&self, handle: u32) -> Elem {
        assert!(handle < self.q, "handle {handle} outside GF({})", self.q);
        Elem(handle)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u32)
    }

    /// `eta^e` for any integer exponent.
    pub fn eta_pow(&self, e: i64) -> Elem {
        Elem(self.exp[e.rem_euclid(self.unit_order() as i64) as usize])
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let (la, lb) = (self.log[a.0 as usize], self.log[b.0 as usize]);
        let ord = self.unit_order();
        let diff = (lb + ord - la) % ord;
        match self.zech[diff as usize] {
            NO_LOG => Elem::ZERO,
            z => Elem(self.exp[(la + z) as usize]),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if a.is_zero() || self.p == 2 {
            return a;
        }
        let half = self.unit_order() / 2;
        Elem(self.exp[(self.log[a.0 as usize] + half) as usize])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ord = self.unit_order();
        Ok(Elem(
            self.exp[((ord - self.log[a.0 as usize]) % ord) as usize],
        ))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a.is_zero() {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        Ok(self.eta_pow(self.log[a.0 as usize] as i64 * e.rem_euclid(self.unit_order() as i64)))
    }

    /// Discrete logarithm to base `eta`, in `0..q-1`.
    pub fn dlog(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DlogOfZero);
        }
        Ok(self.log[a.0 as usize])
    }

    /// Integer rendering: the residue for prime fields, otherwise the
    /// discrete log with `-1` standing for zero.
    pub fn export(&self, a: Elem) -> i64 {
        if self.is_prime_field() {
            a.0 as i64
        } else if a.is_zero() {
            -1
        } else {
            self.log[a.0 as usize] as i64
        }
    }

    pub fn render(&self, a: Elem) -> String {
        if self.is_prime_field() || a.is_zero() || a == Elem::ONE {
            return a.0.to_string();
        }
        format!("e^{}", self.log[a.0 as usize])
    }
}

/// Powers `g^0, g^1, ..., g^(order-1)` if `g` has multiplicative order
/// exactly `order`, where `step` multiplies by `g`.
fn cycle(g: u32, order: usize, step: impl Fn(u32) -> u32) -> Option<Vec<u32>> {
    let mut powers = Vec::with_capacity(order);
    let mut x = 1;
    for _ in 0..order {
        if x == 1 && !powers.is_empty() {
            return None;
        }
        powers.push(x);
        x = step(x);
    }
    (x == 1 && g != 0).then_some(powers)
}
