//! Sparse multivariate polynomials over GF(q) under lex orders, with
//! Buchberger's algorithm, elimination and saturation on top.

mod groebner;

pub use groebner::{
    buchberger, eliminate, ideal_equal, irredundant, normal_form, saturate, saturate_by_variables,
    GroebnerBasis,
};

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::gfq::{Elem, Field};
use crate::intlat::sign_split;
use crate::scalar::to_i64;
use crate::{Error, IntMatrix, Result};

pub type Exponent = Vec<u32>;

/// Lex order with an explicit variable priority (highest first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    priority: Vec<usize>,
    rank: Vec<usize>,
}

impl MonomialOrder {
    /// `x_0 > x_1 > ... > x_{n-1}`
    pub fn lex(nvars: usize) -> Self {
        Self::with_priority((0..nvars).collect()).unwrap()
    }

    pub fn with_priority(priority: Vec<usize>) -> Result<Self> {
        let n = priority.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &v) in priority.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            rank[v] = pos;
        }
        Ok(MonomialOrder { priority, rank })
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Position of a variable in the priority list; 0 is the largest.
    pub fn rank_of(&self, var: usize) -> usize {
        self.rank[var]
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.priority {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Exponents rearranged so that plain lexicographic `Vec` comparison
    /// agrees with this order.
    pub fn sort_key(&self, e: &[u32]) -> Exponent {
        self.priority.iter().map(|&v| e[v]).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub coeff: Elem,
    pub exp: Exponent,
}

/// Terms strictly descending in the ring's order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_exponent(&self) -> Option<&Exponent> {
        self.terms.first().map(|t| &t.exp)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_binomial(&self) -> bool {
        self.terms.len() <= 2
    }

    /// True if no term involves any of `vars`.
    pub fn avoids(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|t| vars.iter().all(|&v| t.exp[v] == 0))
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Polynomial ring `GF(q)[vars]` with a fixed lex order.
#[derive(Clone, Debug)]
pub struct PolyRing {
    field: Arc<Field>,
    order: MonomialOrder,
    names: Vec<String>,
    max_basis: usize,
}

impl PolyRing {
    pub fn new(field: Arc<Field>, order: MonomialOrder, names: Vec<String>) -> Self {
        assert_eq!(order.nvars(), names.len(), "one name per variable");
        PolyRing {
            field,
            order,
            names,
            max_basis: 10_000,
        }
    }

    /// `GF(q)[x_1..x_n]` with `x_1 > ... > x_n`.
    pub fn standard(field: Arc<Field>, nvars: usize) -> Self {
        let names = (1..=nvars).map(|i| format!("x_{i}")).collect();
        Self::new(field, MonomialOrder::lex(nvars), names)
    }

    pub fn with_max_basis(mut self, max_basis: usize) -> Self {
        self.max_basis = max_basis;
        self
    }

    pub fn max_basis(&self) -> usize {
        self.max_basis
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Variable names from largest to smallest.
    pub fn order_description(&self) -> String {
        self.order
            .priority()
            .iter()
            .map(|&v| self.names[v].as_str())
            .collect::<Vec<_>>()
            .join(" > ")
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::default()
    }

    pub fn constant(&self, c: Elem) -> Polynomial {
        self.term(c, vec![0; self.nvars()])
    }

    pub fn one(&self) -> Polynomial {
        self.constant(Elem::ONE)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.term(Elem::ONE, e)
    }

    pub fn term(&self, coeff: Elem, exp: Exponent) -> Polynomial {
        assert_eq!(exp.len(), self.nvars());
        if coeff.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: vec![Term { coeff, exp }],
        }
    }

    /// Normalizes an arbitrary list of terms: sorts, merges, drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Elem, Exponent)>) -> Polynomial {
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, e) in terms {
            assert_eq!(e.len(), self.nvars());
            match out.last_mut() {
                Some(last) if last.exp == e => last.coeff = self.field.add(last.coeff, c),
                _ => out.push(Term { coeff: c, exp: e }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    fn merge(&self, f: &Polynomial, g: &Polynomial, negate_g: bool) -> Polynomial {
        let fld = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let gc = |c: Elem| if negate_g { fld.neg(c) } else { c };
        while i < f.terms.len() && j < g.terms.len() {
            let (a, b) = (&f.terms[i], &g.terms[j]);
            match self.order.cmp(&a.exp, &b.exp) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: gc(b.coeff),
                        exp: b.exp.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = fld.add(a.coeff, gc(b.coeff));
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            exp: a.exp.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(|t| Term {
            coeff: gc(t.coeff),
            exp: t.exp.clone(),
        }));
        Polynomial { terms: out }
    }

    pub fn add(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, false)
    }

    pub fn sub(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.merge(f, g, true)
    }

    pub fn neg(&self, f: &Polynomial) -> Polynomial {
        self.scale(f, self.field.neg(Elem::ONE))
    }

    pub fn scale(&self, f: &Polynomial, c: Elem) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    exp: t.exp.clone(),
                })
                .collect(),
        }
    }

    /// `c · x^e · f`; lex orders are compatible with multiplication, so the
    /// term order is preserved.
    pub fn mul_term(&self, f: &Polynomial, c: Elem, e: &[u32]) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            terms: f
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(t.coeff, c),
                    exp: t.exp.iter().zip(e).map(|(a, b)| a + b).collect(),
                })
                .collect(),
        }
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        g.terms.iter().fold(self.zero(), |acc, t| {
            self.add(&acc, &self.mul_term(f, t.coeff, &t.exp))
        })
    }

    pub fn monic(&self, f: &Polynomial) -> Polynomial {
        match f.leading_term() {
            None => self.zero(),
            Some(t) => self.scale(
                f,
                self.field
                    .inv(t.coeff)
                    .expect("nonzero leading coefficient"),
            ),
        }
    }

    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (tf, tg) = (f.leading_term().unwrap(), g.leading_term().unwrap());
        let l = lcm(&tf.exp, &tg.exp);
        let mf: Exponent = l.iter().zip(&tf.exp).map(|(a, b)| a - b).collect();
        let mg: Exponent = l.iter().zip(&tg.exp).map(|(a, b)| a - b).collect();
        let cf = self.field.inv(tf.coeff).unwrap();
        let cg = self.field.inv(tg.coeff).unwrap();
        self.sub(&self.mul_term(f, cf, &mf), &self.mul_term(g, cg, &mg))
    }

    /// `x^{v+} - x^{v-}`
    pub fn to_binomial(&self, v: &[BigInt]) -> Result<Polynomial> {
        assert_eq!(v.len(), self.nvars());
        let split = sign_split(v);
        let conv = |xs: Vec<BigInt>| -> Result<Exponent> {
            xs.iter()
                .map(|x| u32::try_from(to_i64(x)?).map_err(|_| Error::Overflow(x.to_string())))
                .collect()
        };
        let plus = conv(split.plus)?;
        let minus = conv(split.minus)?;
        let minus_one = self.field.neg(Elem::ONE);
        Ok(self.from_terms(vec![(Elem::ONE, plus), (minus_one, minus)]))
    }

    pub fn evaluate(&self, f: &Polynomial, point: &[Elem]) -> Elem {
        assert_eq!(point.len(), self.nvars());
        let fld = &self.field;
        f.terms.iter().fold(Elem::ZERO, |acc, t| {
            let v = t.exp.iter().zip(point).fold(t.coeff, |m, (&e, &x)| {
                fld.mul(m, fld.pow(x, e as i64).expect("nonnegative exponent"))
            });
            fld.add(acc, v)
        })
    }

    /// Keeps only the listed variables, in the listed order, producing an
    /// element of `target`. Terms must not involve dropped variables.
    pub fn contract(&self, f: &Polynomial, keep: &[usize], target: &PolyRing) -> Polynomial {
        debug_assert_eq!(keep.len(), target.nvars());
        let terms = f
            .terms
            .iter()
            .map(|t| {
                debug_assert!((0..self.nvars()).all(|v| keep.contains(&v) || t.exp[v] == 0));
                (t.coeff, keep.iter().map(|&v| t.exp[v]).collect())
            })
            .collect();
        target.from_terms(terms)
    }

    /// Embeds `f` into `target`, sending variable `i` to `mapping[i]`.
    pub fn embed(&self, f: &Polynomial, mapping: &[usize], target: &PolyRing) -> Polynomial {
        let terms = f
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0; target.nvars()];
                for (i, &m) in mapping.iter().enumerate() {
                    e[m] += t.exp[i];
                }
                (t.coeff, e)
            })
            .collect();
        target.from_terms(terms)
    }

    fn render_monomial(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| {
                if k == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], k)
                }
            })
            .collect();
        parts.join("*")
    }

    /// `(negative, magnitude)` rendering of a coefficient.
    fn render_coeff(&self, c: Elem) -> (bool, String) {
        let fld = &self.field;
        let neg = fld.neg(c);
        if c == Elem::ONE {
            return (false, "1".into());
        }
        if neg == Elem::ONE {
            return (true, "1".into());
        }
        if fld.is_prime_field() {
            let (p, v) = (fld.characteristic(), c.handle());
            if v > p / 2 {
                return (true, (p - v).to_string());
            }
        }
        (false, fld.render(c))
    }

    /// Text form, e.g. `x_1^2*x_2 - x_4`.
    pub fn render(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, t) in f.terms.iter().enumerate() {
            let (negative, mag) = self.render_coeff(t.coeff);
            let mono = self.render_monomial(&t.exp);
            if i == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            match (mag.as_str(), mono.is_empty()) {
                (m, true) => s.push_str(m),
                ("1", false) => s.push_str(&mono),
                (m, false) => {
                    let _ = write!(s, "{m}*{mono}");
                }
            }
        }
        s
    }
}

/// Whether `x^a - x^b` is homogeneous for the grading `beta`, i.e. `beta(a - b) = 0`.
pub fn is_homogeneous_binomial(a: &[u32], b: &[u32], beta: &IntMatrix) -> bool {
    let diff: Vec<BigInt> = a
        .iter()
        .zip(b)
        .map(|(x, y)| BigInt::from(*x) - BigInt::from(*y))
        .collect();
    beta.mul_vec(&diff).iter().all(Zero::is_zero)
}

/// Whether every term of `f` has the same degree under `beta`.
pub fn is_homogeneous(f: &Polynomial, beta: &IntMatrix) -> bool {
    match f.terms.split_first() {
        None => true,
        Some((first, rest)) => rest
            .iter()
            .all(|t| is_homogeneous_binomial(&first.exp, &t.exp, beta)),
    }
}
