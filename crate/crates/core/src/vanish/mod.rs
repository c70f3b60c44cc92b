//! Vanishing ideals of parameterized toric sets and the lattices behind
//! them: the elimination route, the lattice route with saturation, the
//! colon shortcut, diagonal parameterizations and the complete-intersection
//! test.

mod ci;

pub use ci::{is_complete_intersection, is_dominating, is_dominating_within, is_mixed, CiReport};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::gfq::Elem;
use crate::intlat::{kernel_basis, sign_split, Lattice};
use crate::poly::{eliminate, saturate_by_variables, MonomialOrder, PolyRing, Polynomial};
use crate::scalar::to_i64;
use crate::toric::ToricInstance;
use crate::{Error, IntLattice, IntMatrix, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Elimination,
    Lattice,
    ColonShortcut,
    Degenerate,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Elimination => "elimination",
            Method::Lattice => "lattice",
            Method::ColonShortcut => "colon-shortcut",
            Method::Degenerate => "degenerate",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VanishingIdealResult {
    /// `GF(q)[x_1..x_r]` with `x_1 > ... > x_r`.
    pub ring: PolyRing,
    /// Reduced Gröbner basis of the ideal.
    pub generators: Vec<Polynomial>,
    pub method: Method,
    /// Variable order of the ring the computation ran in, largest first.
    pub order: String,
    pub lattice: Option<IntLattice>,
}

/// The coordinate ring `GF(q)[x_1..x_r]` of the instance.
pub fn ambient_ring(inst: &ToricInstance) -> PolyRing {
    PolyRing::standard(inst.field.clone(), inst.r).with_max_basis(inst.guards.groebner)
}

fn exponent(v: &BigInt) -> Result<u32> {
    u32::try_from(to_i64(v)?).map_err(|_| Error::Overflow(v.to_string()))
}

/// `I(Y_Q) = J ∩ S` where `J` lives in `GF(q)[x, y, z, w]` and encodes
/// `x_i = y^{q_i} z^{beta_i}` with `y` ranging over `(q-1)`-th roots of unity
/// and `z`, `y` invertible.
pub fn ideal_via_elimination(inst: &ToricInstance) -> Result<VanishingIdealResult> {
    let (r, s, d) = (inst.r, inst.s, inst.d);
    let w = r + s + d;
    let nv = w + 1;
    let mut names: Vec<String> = (1..=r).map(|i| format!("x_{i}")).collect();
    names.extend((1..=s).map(|i| format!("y_{i}")));
    names.extend((1..=d).map(|i| format!("z_{i}")));
    names.push("w".into());
    let mut priority = vec![w];
    priority.extend(r + s..r + s + d);
    priority.extend(r..r + s);
    priority.extend(0..r);
    let big = PolyRing::new(
        inst.field.clone(),
        MonomialOrder::with_priority(priority)?,
        names,
    )
    .with_max_basis(inst.guards.groebner);

    let minus_one = inst.field.neg(Elem::ONE);
    let mut gens = Vec::with_capacity(r + s + 1);
    let mut w_term = vec![0u32; nv];
    w_term[w] = 1;
    for i in 0..r {
        let qs = sign_split(&inst.q_mat.column(i));
        let bs = sign_split(&inst.beta.column(i));
        let mut lhs = vec![0u32; nv];
        let mut rhs = vec![0u32; nv];
        lhs[i] = 1;
        for j in 0..s {
            lhs[r + j] = exponent(&qs.minus[j])?;
            rhs[r + j] = exponent(&qs.plus[j])?;
        }
        for j in 0..d {
            lhs[r + s + j] = exponent(&bs.minus[j])?;
            rhs[r + s + j] = exponent(&bs.plus[j])?;
        }
        for v in r..w {
            w_term[v] += lhs[v];
        }
        gens.push(big.from_terms(vec![(Elem::ONE, lhs), (minus_one, rhs)]));
    }
    for j in 0..s {
        let mut e = vec![0u32; nv];
        e[r + j] = inst.field.unit_order();
        gens.push(big.from_terms(vec![(Elem::ONE, e), (minus_one, vec![0; nv])]));
    }
    gens.push(big.from_terms(vec![(Elem::ONE, w_term), (minus_one, vec![0; nv])]));

    let dropped: Vec<usize> = (r..nv).collect();
    let elim = eliminate(&big, &gens, &dropped)?;
    let ring = ambient_ring(inst);
    let keep: Vec<usize> = (0..r).collect();
    let generators = elim.iter().map(|g| big.contract(g, &keep, &ring)).collect();
    let order = big.order_description();
    Ok(VanishingIdealResult {
        ring,
        generators,
        method: Method::Elimination,
        order,
        lattice: None,
    })
}

/// `L = { phi c : (c, t) ∈ ker [Q phi | (q-1) I_s] }`, the lattice with
/// `I(Y_Q) = I_L`.
pub fn lattice_l(inst: &ToricInstance) -> IntLattice {
    let block = inst
        .q_phi()
        .hstack(&IntMatrix::scalar(inst.s, inst.unit_order()));
    let kern = kernel_basis(&block);
    let proj = kern.select_rows(0..inst.n);
    Lattice::image(&(&inst.phi * &proj))
}

/// `m ∈ L_beta` and `Q m ≡ 0 mod (q-1)`.
pub fn in_l1(inst: &ToricInstance, m: &[BigInt]) -> bool {
    let qm1 = inst.unit_order();
    inst.beta.mul_vec(m).iter().all(Zero::is_zero)
        && inst.q_mat.mul_vec(m).iter().all(|x| x.is_multiple_of(&qm1))
}

/// Generators of the lattice ideal `I_L`: the binomials of a basis of `L`,
/// saturated by every variable.
pub fn lattice_ideal(ring: &PolyRing, lattice: &IntLattice) -> Result<Vec<Polynomial>> {
    let basis = lattice
        .basis_vectors()
        .iter()
        .map(|v| ring.to_binomial(v))
        .collect::<Result<Vec<_>>>()?;
    saturate_by_variables(ring, &basis)
}

pub fn ideal_via_lattice(inst: &ToricInstance) -> Result<VanishingIdealResult> {
    let ring = ambient_ring(inst);
    let lattice = lattice_l(inst);
    let generators = lattice_ideal(&ring, &lattice)?;
    let order = format!("u > {}", ring.order_description());
    Ok(VanishingIdealResult {
        ring,
        generators,
        method: Method::Lattice,
        order,
        lattice: Some(lattice),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColonShortcut {
    /// `(L_Q ∩ L_beta) + (q-1) L_beta`
    pub lattice: IntLattice,
    /// Whether the image of `Q phi` is saturated with respect to `q-1`, in
    /// which case `lattice` is exactly the lattice of `I(Y_Q)`.
    pub condition_holds: bool,
}

pub fn lattice_via_colon(inst: &ToricInstance) -> Result<ColonShortcut> {
    let qm1 = inst.unit_order();
    let l_beta = inst.l_beta();
    let lattice = inst.l_q().intersect(&l_beta)?.sum(&l_beta.scale(&qm1))?;
    let image = Lattice::image(&inst.q_phi());
    let condition_holds = image == image.colon(&qm1)?;
    Ok(ColonShortcut {
        lattice,
        condition_holds,
    })
}

/// `Q` is homogeneous when `L_Q ⊆ L_beta`.
pub fn is_q_homogeneous(inst: &ToricInstance) -> bool {
    inst.l_q().is_subset_of(&Lattice::kernel(&inst.beta))
}

/// Orders `(q-1)/gcd(q-1, q_i)` of `eta^{q_i}` for a diagonal `Q`.
pub fn diagonal_orders(inst: &ToricInstance) -> Result<Vec<BigInt>> {
    let q = &inst.q_mat;
    if q.rows() != q.cols() {
        return Err(Error::NotDiagonal);
    }
    for i in 0..q.rows() {
        for j in 0..q.cols() {
            if i != j && !q[(i, j)].is_zero() {
                return Err(Error::NotDiagonal);
            }
        }
    }
    let qm1 = inst.unit_order();
    Ok((0..q.rows()).map(|i| &qm1 / qm1.gcd(&q[(i, i)])).collect())
}

/// `D · ker(beta D)` with `D` the diagonal of orders.
pub fn lattice_degenerate(inst: &ToricInstance) -> Result<IntLattice> {
    let d = IntMatrix::diagonal(&diagonal_orders(inst)?);
    Ok(Lattice::kernel(&(&inst.beta * &d)).map(&d))
}
