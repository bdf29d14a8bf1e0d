//! The ring `G(k, Delta) = Z/p^n Z x Z/p^{n-k} Z` with the multiplication
//! `*` mimicking `(g1 + g2 sqrt(-Delta))(h1 + h2 sqrt(-Delta))`, its norm,
//! trace and conjugation maps, the norm-one group `C`, characters of `C`,
//! and the induced bases that carve irreducible subspaces out of `C[G]`.

use crate::modarith::{is_square_free, ModArithError, PrimePower};
use num_complex::Complex64;
use std::collections::HashMap;
use std::f64::consts::TAU;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GRingError {
    #[error(transparent)]
    ModArith(#[from] ModArithError),
    #[error("invalid ring parameters: {0}")]
    InvalidParams(String),
    #[error("character is not principal")]
    NotPrincipal,
}

/// Parameters `(p^n, k, Delta')` with `Delta = p^k Delta'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingParams {
    pp: PrimePower,
    k: u32,
    delta_prime: u64,
    /// `p^k Delta' mod p^n`
    delta_mod: u64,
    /// second-component modulus `p^{n-k}`
    m2: u64,
}

/// Element `(g1, g2)` of `G(k, Delta)`, with `g1` mod `p^n` and `g2` mod
/// `p^{n-k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GElem {
    pub g1: u64,
    pub g2: u64,
}

impl RingParams {
    pub fn new(pp: PrimePower, k: u32, delta_prime: u64) -> Result<Self, GRingError> {
        if k > pp.n() {
            return Err(GRingError::InvalidParams(format!(
                "k = {k} exceeds n = {}",
                pp.n()
            )));
        }
        if delta_prime == 0 || delta_prime.is_multiple_of(pp.p()) || !is_square_free(delta_prime) {
            return Err(GRingError::InvalidParams(format!(
                "delta' = {delta_prime} must be positive, square-free and coprime to p"
            )));
        }
        let m = pp.modulus();
        let mut pk: u64 = 1;
        for _ in 0..k {
            pk *= pp.p();
        }
        Ok(Self {
            pp,
            k,
            delta_prime,
            delta_mod: pk % m * (delta_prime % m) % m,
            m2: m / pk,
        })
    }

    pub fn pp(&self) -> PrimePower {
        self.pp
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn delta_prime(&self) -> u64 {
        self.delta_prime
    }

    /// `Delta = p^k Delta'` reduced mod `p^n`.
    pub fn delta_mod(&self) -> u64 {
        self.delta_mod
    }

    pub fn second_modulus(&self) -> u64 {
        self.m2
    }

    pub fn point_count(&self) -> u64 {
        self.pp.modulus() * self.m2
    }

    pub fn point_index(&self, g: GElem) -> usize {
        (g.g1 * self.m2 + g.g2) as usize
    }

    pub fn point_at(&self, idx: usize) -> GElem {
        GElem {
            g1: idx as u64 / self.m2,
            g2: idx as u64 % self.m2,
        }
    }

    /// All points in lexicographic `(g1, g2)` order.
    pub fn points(&self) -> impl Iterator<Item = GElem> + '_ {
        (0..self.point_count()).map(|i| self.point_at(i as usize))
    }

    /// `g * h = (g1 h1 - g2 h2 Delta mod p^n, g1 h2 + g2 h1 mod p^{n-k})`.
    pub fn star(&self, g: GElem, h: GElem) -> GElem {
        let m = self.pp.modulus() as u128;
        let y1 = (g.g1 as u128 * h.g1 as u128 + m * m
            - (g.g2 as u128 * h.g2 as u128 % m) * self.delta_mod as u128 % m)
            % m;
        let y2 = (g.g1 as u128 * h.g2 as u128 + g.g2 as u128 * h.g1 as u128) % self.m2 as u128;
        GElem {
            g1: y1 as u64,
            g2: y2 as u64,
        }
    }

    /// `Nm(g) = g1^2 + Delta g2^2 mod p^n` (multiplicative).
    pub fn norm(&self, g: GElem) -> u64 {
        let m = self.pp.modulus() as u128;
        ((g.g1 as u128 * g.g1 as u128 + (g.g2 as u128 * g.g2 as u128 % m) * self.delta_mod as u128)
            % m) as u64
    }

    /// `Tr(g) = 2 g1 mod p^n` (additive).
    pub fn trace(&self, g: GElem) -> u64 {
        2 * g.g1 % self.pp.modulus()
    }

    pub fn conj(&self, g: GElem) -> GElem {
        GElem {
            g1: g.g1,
            g2: if g.g2 == 0 { 0 } else { self.m2 - g.g2 },
        }
    }

    /// Scalar action `g . a = (a g1, a g2)`.
    pub fn scale(&self, g: GElem, a: u64) -> GElem {
        GElem {
            g1: a * g.g1 % self.pp.modulus(),
            g2: if self.m2 == 1 {
                0
            } else {
                a % self.m2 * g.g2 % self.m2
            },
        }
    }

    pub fn one(&self) -> GElem {
        GElem { g1: 1, g2: 0 }
    }
}

/// The abelian group `C = { u in G : Nm(u) = 1 }`, with a computed direct
/// decomposition into cyclic factors (a single factor whenever `C` is
/// cyclic, which holds for every parameter choice at `n = 2`).
#[derive(Debug, Clone)]
pub struct CGroup {
    rp: RingParams,
    elements: Vec<GElem>,
    index: HashMap<GElem, usize>,
    generators: Vec<GElem>,
    /// orders of the cyclic factors (product = |C|)
    orders: Vec<u64>,
    /// per element, its exponent tuple with respect to `generators`
    coords: Vec<Vec<u64>>,
    /// indices of the congruence subgroup `C_{n-1}`
    congruence_indices: Vec<usize>,
}

impl CGroup {
    pub fn build(rp: RingParams) -> Self {
        let elements: Vec<GElem> = rp.points().filter(|&g| rp.norm(g) == 1).collect();
        let index: HashMap<GElem, usize> =
            elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();

        let order_of = |g: GElem| -> u64 {
            let mut x = g;
            let mut o = 1u64;
            while x != rp.one() {
                x = rp.star(x, g);
                o += 1;
            }
            o
        };

        // Direct decomposition: greedily take an element of maximal order in
        // the quotient by the span so far, lift it to an element of that
        // exact order, and extend the span by the new cyclic factor.
        let mut generators: Vec<GElem> = Vec::new();
        let mut orders: Vec<u64> = Vec::new();
        let mut span: HashMap<GElem, Vec<u64>> = HashMap::new();
        span.insert(rp.one(), Vec::new());
        while span.len() < elements.len() {
            let quot_order = |g: GElem| -> u64 {
                let mut x = g;
                let mut o = 1u64;
                while !span.contains_key(&x) {
                    x = rp.star(x, g);
                    o += 1;
                }
                o
            };
            let mut best: Option<(u64, GElem)> = None;
            for &g in &elements {
                if span.contains_key(&g) {
                    continue;
                }
                let o = quot_order(g);
                let better = match best {
                    None => true,
                    Some((bo, bg)) => o > bo || (o == bo && g < bg),
                };
                if better {
                    best = Some((o, g));
                }
            }
            let (qo, mut gen) = best.expect("C not exhausted but no generator found");
            // lift to an element of order exactly qo: multiply by span
            // elements until gen^qo = 1 (guaranteed to exist)
            if order_of(gen) != qo {
                let span_keys: Vec<GElem> = span.keys().copied().collect();
                let lifted = span_keys
                    .iter()
                    .map(|&s| rp.star(gen, s))
                    .find(|&cand| order_of(cand) == qo);
                gen = lifted.expect("no order-matching lift of quotient generator");
            }
            let mut new_span: HashMap<GElem, Vec<u64>> = HashMap::new();
            let mut pw = rp.one();
            for e in 0..qo {
                for (x, coord) in &span {
                    let mut c = coord.clone();
                    c.push(e);
                    new_span.insert(rp.star(*x, pw), c);
                }
                pw = rp.star(pw, gen);
            }
            debug_assert_eq!(new_span.len(), span.len() * qo as usize);
            span = new_span;
            generators.push(gen);
            orders.push(qo);
        }
        if generators.is_empty() {
            generators.push(rp.one());
            orders.push(1);
        }
        let coords: Vec<Vec<u64>> = elements
            .iter()
            .map(|g| {
                let mut c = span[g].clone();
                c.resize(generators.len(), 0);
                c
            })
            .collect();

        // C_{n-1}: first component 1 mod p^{n-1}, second 0 mod p^{n-1-k}
        let pp = rp.pp();
        let m1 = pp.power(pp.n() - 1);
        let m2c = if pp.n() > rp.k() {
            pp.power(pp.n() - 1 - rp.k().min(pp.n() - 1))
        } else {
            1
        };
        let congruence_indices = elements
            .iter()
            .enumerate()
            .filter(|(_, g)| g.g1 % m1 == 1 % m1 && g.g2 % m2c == 0)
            .map(|(i, _)| i)
            .collect();

        Self {
            rp,
            elements,
            index,
            generators,
            orders,
            coords,
            congruence_indices,
        }
    }

    pub fn rp(&self) -> RingParams {
        self.rp
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GElem] {
        &self.elements
    }

    pub fn index_of(&self, g: GElem) -> Option<usize> {
        self.index.get(&g).copied()
    }

    pub fn is_cyclic(&self) -> bool {
        self.generators.len() == 1
    }

    pub fn generators(&self) -> &[GElem] {
        &self.generators
    }

    pub fn factor_orders(&self) -> &[u64] {
        &self.orders
    }

    /// Elements of the congruence subgroup `C_{n-1}`.
    pub fn congruence_subgroup(&self) -> impl Iterator<Item = GElem> + '_ {
        self.congruence_indices.iter().map(|&i| self.elements[i])
    }

    /// All `|C|` characters ordered by label tuple; cyclic `C` gets scalar
    /// labels `l = 0 .. |C|-1` with `chi_l(gen) = e^{2 pi i l / |C|}`.
    pub fn characters(&self) -> Vec<CCharacter> {
        let m: u64 = lcm_all(&self.orders);
        let mut labels = vec![Vec::new()];
        for &oj in &self.orders {
            let mut next = Vec::new();
            for lab in &labels {
                for l in 0..oj {
                    let mut lab2 = lab.clone();
                    lab2.push(l);
                    next.push(lab2);
                }
            }
            labels = next;
        }
        labels.sort();
        labels
            .into_iter()
            .map(|lab| self.character_from_label(lab, m))
            .collect()
    }

    fn character_from_label(&self, label: Vec<u64>, m: u64) -> CCharacter {
        let exponents: Vec<u64> = self
            .coords
            .iter()
            .map(|coord| {
                let mut t = 0u64;
                for (j, (&c, &l)) in coord.iter().zip(label.iter()).enumerate() {
                    let scale = m / self.orders[j];
                    t = (t + l * c % m * scale) % m;
                }
                t
            })
            .collect();
        let principal = self
            .congruence_indices
            .iter()
            .any(|&i| !exponents[i].is_multiple_of(m));
        CCharacter {
            label,
            modulus: m,
            exponents,
            principal,
        }
    }

    /// The character `chi_l` of a cyclic `C`.
    pub fn character(&self, ell: u64) -> CCharacter {
        assert!(self.is_cyclic(), "scalar labels require cyclic C");
        let m = self.orders[0];
        self.character_from_label(vec![ell % m], m)
    }

    /// Principal characters (nontrivial restriction to `C_{n-1}`).
    pub fn principal_characters(&self) -> Vec<CCharacter> {
        self.characters()
            .into_iter()
            .filter(|c| c.principal)
            .collect()
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm_all(xs: &[u64]) -> u64 {
    xs.iter().fold(1u64, |acc, &x| acc / gcd(acc, x) * x)
}

/// A character of `C`, stored exactly: `chi(c) = e^{2 pi i t_c / modulus}`
/// with integer exponents `t_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CCharacter {
    /// exponent per cyclic factor (single entry when `C` is cyclic)
    pub label: Vec<u64>,
    /// common denominator of the exponents
    pub modulus: u64,
    exponents: Vec<u64>,
    pub principal: bool,
}

impl CCharacter {
    /// Scalar label for cyclic `C`.
    pub fn ell(&self) -> u64 {
        self.label[0]
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&t| t == 0)
    }

    /// Exact exponent of `chi` at element index `i` of `C`.
    pub fn exponent(&self, i: usize) -> u64 {
        self.exponents[i]
    }

    pub fn value(&self, i: usize) -> Complex64 {
        Complex64::from_polar(1.0, TAU * self.exponents[i] as f64 / self.modulus as f64)
    }

    pub fn value_conj(&self, i: usize) -> Complex64 {
        self.value(i).conj()
    }

    /// Label of the inverse character (per cyclic factor).
    pub fn inverse_label(&self, orders: &[u64]) -> Vec<u64> {
        self.label
            .iter()
            .zip(orders)
            .map(|(&l, &o)| if l == 0 { 0 } else { o - l })
            .collect()
    }
}

/// The `C`-orbit structure of the points of `G(k, Delta)`.
#[derive(Debug, Clone)]
pub struct OrbitData {
    /// orbit id per point index
    pub orbit_of: Vec<u32>,
    /// representative point index per orbit (lexicographically smallest)
    pub rep_point: Vec<usize>,
    /// for each point, the index in `C` of one `c` with `point = c * rep`
    pub reaching_c: Vec<u32>,
    /// per orbit, indices in `C` of the stabilizer of its representative
    pub stabilizers: Vec<Vec<u32>>,
}

impl OrbitData {
    pub fn compute(rp: &RingParams, cg: &CGroup) -> Self {
        let npts = rp.point_count() as usize;
        let mut orbit_of = vec![u32::MAX; npts];
        let mut rep_point = Vec::new();
        let mut reaching_c = vec![0u32; npts];
        let mut stabilizers = Vec::new();
        for idx in 0..npts {
            if orbit_of[idx] != u32::MAX {
                continue;
            }
            let oid = rep_point.len() as u32;
            let pt = rp.point_at(idx);
            let mut stab = Vec::new();
            for (ci, &c) in cg.elements().iter().enumerate() {
                let q = rp.star(c, pt);
                let qi = rp.point_index(q);
                if qi == idx {
                    stab.push(ci as u32);
                }
                if orbit_of[qi] == u32::MAX {
                    orbit_of[qi] = oid;
                    reaching_c[qi] = ci as u32;
                }
            }
            rep_point.push(idx);
            stabilizers.push(stab);
        }
        Self {
            orbit_of,
            rep_point,
            reaching_c,
            stabilizers,
        }
    }

    pub fn orbit_count(&self) -> usize {
        self.rep_point.len()
    }
}

/// One basis vector `f_i = sum_c chi(c) e_{c * m_i}` of the induced space,
/// indexed by its surviving orbit.
#[derive(Debug, Clone)]
pub struct InducedVector {
    pub orbit: usize,
    /// representative point index
    pub rep_point: usize,
    pub stab_size: usize,
    /// `||f_i|| = sqrt(|C| |Stab_i|)`
    pub norm: f64,
}

/// The induced basis for a principal character: one vector per orbit whose
/// stabilizer lies in the kernel of `chi` (exact test on character
/// exponents); all other orbits collapse to zero and are dropped.
pub fn induced_basis(
    cg: &CGroup,
    orbits: &OrbitData,
    chi: &CCharacter,
) -> Result<Vec<InducedVector>, GRingError> {
    if !chi.principal {
        return Err(GRingError::NotPrincipal);
    }
    Ok(induced_basis_unchecked(cg, orbits, chi))
}

/// Same as [`induced_basis`] without the principal check (the vanish rule is
/// character-exact either way).
pub fn induced_basis_unchecked(
    cg: &CGroup,
    orbits: &OrbitData,
    chi: &CCharacter,
) -> Vec<InducedVector> {
    let csize = cg.len() as f64;
    (0..orbits.orbit_count())
        .filter(|&o| {
            orbits.stabilizers[o]
                .iter()
                .all(|&ci| chi.exponent(ci as usize) == 0)
        })
        .map(|o| {
            let stab_size = orbits.stabilizers[o].len();
            InducedVector {
                orbit: o,
                rep_point: orbits.rep_point[o],
                stab_size,
                norm: (csize * stab_size as f64).sqrt(),
            }
        })
        .collect()
}
