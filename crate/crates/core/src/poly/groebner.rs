use std::collections::{BTreeSet, HashSet};

use super::{divides, lcm, Exponent, MonomialOrder, PolyRing, Polynomial, Term};
use crate::gfq::Elem;
use crate::{Error, Result};

/// Reduced, monic Gröbner basis, sorted by leading monomial (largest first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_exponents(&self) -> Vec<&Exponent> {
        self.generators
            .iter()
            .filter_map(Polynomial::leading_exponent)
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].terms[0].exp.iter().all(|&e| e == 0)
    }
}

/// Remainder of `f` on division by `basis` (fully reduced: no term of the
/// result is divisible by a leading monomial of the basis). Basis elements
/// are tried in index order.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let fld = ring.field();
    let mut rest = f.clone();
    let mut done: Vec<Term> = Vec::new();
    while let Some(lead) = rest.terms.first().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_term().is_some_and(|t| divides(&t.exp, &lead.exp)));
        match divisor {
            Some(g) => {
                let gt = g.leading_term().unwrap();
                let c = fld
                    .div(lead.coeff, gt.coeff)
                    .expect("nonzero leading coefficient");
                let shift: Exponent = lead.exp.iter().zip(&gt.exp).map(|(a, b)| a - b).collect();
                rest = ring.sub(&rest, &ring.mul_term(g, c, &shift));
            }
            None => {
                done.push(lead);
                rest.terms.remove(0);
            }
        }
    }
    Polynomial { terms: done }
}

/// Buchberger's algorithm with the normal selection strategy.
///
/// Pairs are processed by smallest lcm of leading monomials, ties by
/// generator indices, so the result is reproducible. Pairs with coprime
/// leading monomials and pairs covered by the chain criterion are skipped.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let order = ring.order();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let g = ring.monic(g);
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if let Some(c) = basis
        .iter()
        .find(|g| g.terms[0].exp.iter().all(|&e| e == 0))
    {
        debug_assert_eq!(c.terms[0].coeff, Elem::ONE);
        return Ok(GroebnerBasis {
            order: order.clone(),
            generators: vec![ring.one()],
        });
    }

    let mut queue: BTreeSet<(Exponent, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &[Polynomial],
                      j: usize,
                      queue: &mut BTreeSet<(Exponent, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>| {
        for i in 0..j {
            let l = lcm(&basis[i].terms[0].exp, &basis[j].terms[0].exp);
            queue.insert((order.sort_key(&l), i, j));
            pending.insert((i, j));
        }
    };
    for j in 1..basis.len() {
        push_pairs(&basis, j, &mut queue, &mut pending);
    }

    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i].terms[0].exp, &basis[j].terms[0].exp);
        if li.iter().zip(lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let l = lcm(li, lj);
        let pair = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(&basis[k].terms[0].exp, &l)
                && !pending.contains(&pair(i, k))
                && !pending.contains(&pair(j, k))
        });
        if chain {
            continue;
        }
        let s = ring.s_polynomial(&basis[i], &basis[j]);
        let h = normal_form(ring, &s, &basis);
        if h.is_zero() {
            continue;
        }
        let h = ring.monic(&h);
        if h.terms[0].exp.iter().all(|&e| e == 0) {
            return Ok(GroebnerBasis {
                order: order.clone(),
                generators: vec![ring.one()],
            });
        }
        basis.push(h);
        if basis.len() > ring.max_basis() {
            return Err(Error::ResourceGuard(ring.max_basis()));
        }
        push_pairs(&basis, basis.len() - 1, &mut queue, &mut pending);
    }
    Ok(GroebnerBasis {
        order: order.clone(),
        generators: interreduce(ring, basis),
    })
}

/// Minimalizes and tail-reduces a Gröbner basis.
fn interreduce(ring: &PolyRing, mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(&a.terms[0].exp, &b.terms[0].exp));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in basis {
        if !kept
            .iter()
            .any(|h| divides(&h.terms[0].exp, &g.terms[0].exp))
        {
            kept.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(kept.len());
    for (idx, g) in kept.iter().enumerate() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let tail = Polynomial {
            terms: g.terms[1..].to_vec(),
        };
        let tail = normal_form(ring, &tail, &others);
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(tail.terms);
        reduced.push(Polynomial { terms });
    }
    reduced.sort_by(|a, b| order.cmp(&b.terms[0].exp, &a.terms[0].exp));
    reduced
}

/// Elements of the reduced Gröbner basis of `gens` that avoid `drop_vars`;
/// they form a Gröbner basis of the elimination ideal. The ring's order must
/// rank every dropped variable above every kept one.
pub fn eliminate(
    ring: &PolyRing,
    gens: &[Polynomial],
    drop_vars: &[usize],
) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    let kept: Vec<usize> = (0..ring.nvars())
        .filter(|v| !drop_vars.contains(v))
        .collect();
    let worst_dropped = drop_vars.iter().map(|&v| order.rank_of(v)).max();
    let best_kept = kept.iter().map(|&v| order.rank_of(v)).min();
    if let (Some(d), Some(k)) = (worst_dropped, best_kept) {
        if d > k {
            return Err(Error::OrderMismatch);
        }
    }
    let gb = buchberger(ring, gens)?;
    Ok(gb
        .generators
        .into_iter()
        .filter(|g| g.avoids(drop_vars))
        .collect())
}

/// Generators of `<gens> : f^∞`, computed as `(<gens> + <u f - 1>) ∩ S` in a
/// ring with a fresh top variable `u`. The result is the reduced Gröbner
/// basis of the saturation in `ring`'s order.
pub fn saturate(ring: &PolyRing, gens: &[Polynomial], f: &Polynomial) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let mut priority = vec![n];
    priority.extend_from_slice(ring.order().priority());
    let mut names = ring.names().to_vec();
    names.push("u".into());
    let big = PolyRing::new(
        ring.field().clone(),
        MonomialOrder::with_priority(priority)?,
        names,
    )
    .with_max_basis(ring.max_basis());
    let mapping: Vec<usize> = (0..n).collect();
    let mut lifted: Vec<Polynomial> = gens.iter().map(|g| ring.embed(g, &mapping, &big)).collect();
    let uf = big.mul(&big.var(n), &ring.embed(f, &mapping, &big));
    lifted.push(big.sub(&uf, &big.one()));
    let elim = eliminate(&big, &lifted, &[n])?;
    Ok(elim
        .iter()
        .map(|g| big.contract(g, &mapping, ring))
        .collect())
}

/// Saturates by each variable in index order, i.e. by `x_1 ⋯ x_n`.
pub fn saturate_by_variables(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut current = buchberger(ring, gens)?.generators;
    for v in 0..ring.nvars() {
        current = saturate(ring, &current, &ring.var(v))?;
    }
    Ok(current)
}

/// Drops generators that lie in the ideal of the others, trying those of
/// highest total degree first. The result generates the same ideal and no
/// element of it is redundant.
pub fn irredundant(ring: &PolyRing, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut keep: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let degree = |g: &Polynomial| {
        g.terms
            .iter()
            .map(|t| t.exp.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    };
    let mut trial: Vec<usize> = (0..keep.len()).collect();
    trial.sort_by_key(|&i| (std::cmp::Reverse(degree(&keep[i])), std::cmp::Reverse(i)));
    let mut removed = vec![false; keep.len()];
    for i in trial {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i && !removed[*j])
            .map(|(_, g)| g.clone())
            .collect();
        let gb = buchberger(ring, &others)?;
        if normal_form(ring, &keep[i], &gb.generators).is_zero() {
            removed[i] = true;
        }
    }
    let mut idx = 0;
    keep.retain(|_| {
        idx += 1;
        !removed[idx - 1]
    });
    Ok(keep)
}

/// Equality of ideals via their reduced Gröbner bases.
pub fn ideal_equal(ring: &PolyRing, a: &[Polynomial], b: &[Polynomial]) -> Result<bool> {
    Ok(buchberger(ring, a)?.generators == buchberger(ring, b)?.generators)
}
