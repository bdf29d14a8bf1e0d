//! The group `SL2(Z/p^n Z)`: element arithmetic, enumeration, conjugacy
//! classes, Bruhat factorization, reduction mod `p^{n-1}`, and the generating
//! sets used in the spectral experiments.

use crate::modarith::{ModArithError, ModInt, PrimePower};
use rand::Rng;
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("matrix {0:?} has determinant != 1 mod {1}")]
    NotUnimodular([u64; 4], u64),
    #[error("group order {order} exceeds the guard {guard}")]
    TooLarge { order: u128, guard: u128 },
    #[error("modulus {to} does not divide {from}")]
    BadModulus { from: u64, to: u64 },
    #[error(transparent)]
    ModArith(#[from] ModArithError),
}

/// An element of `SL2(Z/p^n Z)`, stored row-major as `[[a, b], [c, d]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SL2Elem {
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    pp: PrimePower,
}

impl SL2Elem {
    pub fn new(a: i64, b: i64, c: i64, d: i64, pp: PrimePower) -> Result<Self, GroupError> {
        let e = Self {
            a: pp.reduce(a),
            b: pp.reduce(b),
            c: pp.reduce(c),
            d: pp.reduce(d),
            pp,
        };
        if e.det() != 1 {
            return Err(GroupError::NotUnimodular(
                [e.a, e.b, e.c, e.d],
                pp.modulus(),
            ));
        }
        Ok(e)
    }

    pub(crate) fn from_reduced(a: u64, b: u64, c: u64, d: u64, pp: PrimePower) -> Self {
        debug_assert_eq!(pp.sub(pp.mul(a, d), pp.mul(b, c)), 1);
        Self { a, b, c, d, pp }
    }

    pub fn identity(pp: PrimePower) -> Self {
        Self {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
            pp,
        }
    }

    /// Diagonal `d_a = [[a, 0], [0, a^{-1}]]` for a unit `a`.
    pub fn diag(a: i64, pp: PrimePower) -> Result<Self, GroupError> {
        let av = pp.reduce(a);
        let inv = pp.inv(av)?;
        Ok(Self {
            a: av,
            b: 0,
            c: 0,
            d: inv,
            pp,
        })
    }

    /// Unipotent `u_b = [[1, b], [0, 1]]`.
    pub fn unipotent(b: i64, pp: PrimePower) -> Self {
        Self {
            a: 1,
            b: pp.reduce(b),
            c: 0,
            d: 1,
            pp,
        }
    }

    /// Weyl element `w = [[0, -1], [1, 0]]`.
    pub fn weyl(pp: PrimePower) -> Self {
        Self {
            a: 0,
            b: pp.neg(1),
            c: 1,
            d: 0,
            pp,
        }
    }

    pub fn pp(&self) -> PrimePower {
        self.pp
    }

    pub fn entries(&self) -> [u64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn entry(&self, row: usize, col: usize) -> ModInt {
        let v = match (row, col) {
            (0, 0) => self.a,
            (0, 1) => self.b,
            (1, 0) => self.c,
            (1, 1) => self.d,
            _ => panic!("index out of range"),
        };
        self.pp.elem(v as i64)
    }

    pub fn det(&self) -> u64 {
        let m = self.pp;
        m.sub(m.mul(self.a, self.d), m.mul(self.b, self.c))
    }

    pub fn trace(&self) -> u64 {
        self.pp.add(self.a, self.d)
    }

    pub fn mul(&self, rhs: &SL2Elem) -> SL2Elem {
        debug_assert_eq!(self.pp, rhs.pp);
        let m = self.pp;
        SL2Elem {
            a: m.add(m.mul(self.a, rhs.a), m.mul(self.b, rhs.c)),
            b: m.add(m.mul(self.a, rhs.b), m.mul(self.b, rhs.d)),
            c: m.add(m.mul(self.c, rhs.a), m.mul(self.d, rhs.c)),
            d: m.add(m.mul(self.c, rhs.b), m.mul(self.d, rhs.d)),
            pp: m,
        }
    }

    pub fn inv(&self) -> SL2Elem {
        let m = self.pp;
        SL2Elem {
            a: self.d,
            b: m.neg(self.b),
            c: m.neg(self.c),
            d: self.a,
            pp: m,
        }
    }

    pub fn neg(&self) -> SL2Elem {
        let m = self.pp;
        SL2Elem {
            a: m.neg(self.a),
            b: m.neg(self.b),
            c: m.neg(self.c),
            d: m.neg(self.d),
            pp: m,
        }
    }

    /// Dense key `((a m + b) m + c) m + d`; total order matches lexicographic
    /// order on `(a, b, c, d)`.
    pub fn key(&self) -> u64 {
        let m = self.pp.modulus();
        ((self.a * m + self.b) * m + self.c) * m + self.d
    }

    /// Entrywise reduction to the smaller modulus; a group homomorphism.
    pub fn project(&self, to: PrimePower) -> Result<SL2Elem, GroupError> {
        let (mf, mt) = (self.pp.modulus(), to.modulus());
        if self.pp.p() != to.p() || mf % mt != 0 {
            return Err(GroupError::BadModulus { from: mf, to: mt });
        }
        Ok(SL2Elem {
            a: self.a % mt,
            b: self.b % mt,
            c: self.c % mt,
            d: self.d % mt,
            pp: to,
        })
    }
}

impl std::fmt::Display for SL2Elem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// `|SL2(Z/p^n Z)| = p^{3n-2} (p^2 - 1)`.
pub fn group_order(pp: PrimePower) -> u128 {
    let p = pp.p() as u128;
    p.pow(3 * pp.n() - 2) * (p * p - 1)
}

/// Guard for in-memory enumeration.
pub const ENUMERATION_GUARD: u128 = 100_000_000;

/// Iterate over every element exactly once: for each first column `(a, c)`
/// with a unit entry, the free parameter runs over `Z/p^n Z` (column `b` when
/// `a` is a unit, `d` otherwise).
pub fn enumerate(pp: PrimePower) -> Result<impl Iterator<Item = SL2Elem>, GroupError> {
    let order = group_order(pp);
    if order > ENUMERATION_GUARD {
        return Err(GroupError::TooLarge {
            order,
            guard: ENUMERATION_GUARD,
        });
    }
    let m = pp.modulus();
    let iter = (0..m).flat_map(move |a| {
        (0..m).flat_map(move |c| {
            let col_ok = pp.is_unit(a) || pp.is_unit(c);
            (0..if col_ok { m } else { 0 }).map(move |t| {
                if pp.is_unit(a) {
                    let ai = pp.inv(a).unwrap();
                    let b = t;
                    let d = pp.mul(ai, pp.add(1, pp.mul(b, c)));
                    SL2Elem::from_reduced(a, b, c, d, pp)
                } else {
                    let ci = pp.inv(c).unwrap();
                    let d = t;
                    let b = pp.mul(ci, pp.sub(pp.mul(a, d), 1));
                    SL2Elem::from_reduced(a, b, c, d, pp)
                }
            })
        })
    });
    Ok(iter)
}

/// Dense element indexing in enumeration order.
pub struct GroupIndex {
    pp: PrimePower,
    elements: Vec<SL2Elem>,
    index: HashMap<u64, u32>,
}

impl GroupIndex {
    pub fn build(pp: PrimePower) -> Result<Self, GroupError> {
        let elements: Vec<SL2Elem> = enumerate(pp)?.collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.key(), i as u32))
            .collect();
        Ok(Self {
            pp,
            elements,
            index,
        })
    }

    pub fn pp(&self) -> PrimePower {
        self.pp
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SL2Elem] {
        &self.elements
    }

    pub fn of(&self, e: &SL2Elem) -> usize {
        self.index[&e.key()] as usize
    }

    pub fn at(&self, i: usize) -> &SL2Elem {
        &self.elements[i]
    }
}

/// Which Bruhat cell an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BruhatCase {
    /// Lower-left entry is a unit: `A = u_x w d_g u_y`.
    LowerUnit,
    /// Lower-left entry is divisible by `p`: `A = w u_z w d_{-a} u_t`.
    LowerDivisible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruhatFactor {
    D(u64),
    U(u64),
    W,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatFactors {
    pub case: BruhatCase,
    pub factors: Vec<BruhatFactor>,
    pp: PrimePower,
}

impl BruhatFactors {
    /// Multiply the factors back together.
    pub fn recompose(&self) -> SL2Elem {
        let pp = self.pp;
        let mut acc = SL2Elem::identity(pp);
        for f in &self.factors {
            let next = match f {
                BruhatFactor::D(a) => SL2Elem::diag(*a as i64, pp).unwrap(),
                BruhatFactor::U(b) => SL2Elem::unipotent(*b as i64, pp),
                BruhatFactor::W => SL2Elem::weyl(pp),
            };
            acc = acc.mul(&next);
        }
        acc
    }
}

/// Bruhat decomposition: `u_{a c^{-1}} w d_c u_{d c^{-1}}` when `c` is a
/// unit, otherwise `w u_{-c a^{-1}} w d_{-a} u_{b a^{-1}}` (where `a` must
/// then be a unit, since the determinant is 1).
pub fn bruhat_decompose(e: &SL2Elem) -> BruhatFactors {
    let pp = e.pp();
    let [a, b, c, d] = e.entries();
    if pp.is_unit(c) {
        let ci = pp.inv(c).unwrap();
        BruhatFactors {
            case: BruhatCase::LowerUnit,
            factors: vec![
                BruhatFactor::U(pp.mul(a, ci)),
                BruhatFactor::W,
                BruhatFactor::D(c),
                BruhatFactor::U(pp.mul(d, ci)),
            ],
            pp,
        }
    } else {
        debug_assert!(pp.is_unit(a), "c and a cannot both be divisible by p");
        let ai = pp.inv(a).unwrap();
        BruhatFactors {
            case: BruhatCase::LowerDivisible,
            factors: vec![
                BruhatFactor::W,
                BruhatFactor::U(pp.neg(pp.mul(c, ai))),
                BruhatFactor::W,
                BruhatFactor::D(pp.neg(a)),
                BruhatFactor::U(pp.mul(b, ai)),
            ],
            pp,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: SL2Elem,
    pub size: usize,
}

/// Guard for the class computation (used only at chartable scale).
pub const CLASS_GUARD: u128 = 1_000_000;

/// Conjugacy classes by breadth-first conjugation under `u_1` and `w`
/// (which generate the group). Representatives are the lexicographically
/// smallest `(a, b, c, d)`; classes sorted by (size, representative).
pub fn conjugacy_classes(pp: PrimePower) -> Result<Vec<ConjugacyClass>, GroupError> {
    let order = group_order(pp);
    if order > CLASS_GUARD {
        return Err(GroupError::TooLarge {
            order,
            guard: CLASS_GUARD,
        });
    }
    let index = GroupIndex::build(pp)?;
    let n = index.len();
    let gens = [
        SL2Elem::unipotent(1, pp),
        SL2Elem::unipotent(-1, pp),
        SL2Elem::weyl(pp),
        SL2Elem::weyl(pp).inv(),
    ];
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let mut stack = vec![start];
        assigned[start] = true;
        let mut members = vec![start];
        while let Some(i) = stack.pop() {
            let x = index.at(i);
            for g in &gens {
                let y = g.mul(x).mul(&g.inv());
                let j = index.of(&y);
                if !assigned[j] {
                    assigned[j] = true;
                    members.push(j);
                    stack.push(j);
                }
            }
        }
        let rep = members
            .iter()
            .map(|&i| *index.at(i))
            .min_by_key(|e| e.key())
            .unwrap();
        classes.push(ConjugacyClass {
            representative: rep,
            size: members.len(),
        });
    }
    classes.sort_by_key(|c| (c.size, c.representative.key()));
    Ok(classes)
}

/// A symmetric generating set (kept as a list; repeated elements contribute
/// multi-edges so the graphs stay 4-regular).
#[derive(Debug, Clone)]
pub struct GeneratingSet {
    pub name: String,
    pub elements: Vec<SL2Elem>,
}

impl GeneratingSet {
    pub fn is_symmetric(&self) -> bool {
        let mut pool: Vec<SL2Elem> = self.elements.clone();
        for e in &self.elements {
            let inv = e.inv();
            match pool.iter().position(|x| *x == inv) {
                Some(i) => {
                    pool.swap_remove(i);
                }
                None => return false,
            }
        }
        pool.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
pub enum GenSetName {
    G1,
    G2,
    G3,
}

impl std::fmt::Display for GenSetName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GenSetName::G1 => write!(f, "G1"),
            GenSetName::G2 => write!(f, "G2"),
            GenSetName::G3 => write!(f, "G3"),
        }
    }
}

/// The three generator families of the experiments, in their printed order.
pub fn standard_generators(name: GenSetName, pp: PrimePower) -> GeneratingSet {
    let e = |a, b, c, d| SL2Elem::new(a, b, c, d, pp).unwrap();
    let elements = match name {
        GenSetName::G1 => vec![
            e(1, 1, 0, 1),
            e(1, -1, 0, 1),
            e(0, 1, -1, 0),
            e(0, -1, 1, 0),
        ],
        GenSetName::G2 => vec![
            e(1, 1, -1, 0),
            e(0, -1, 1, 1),
            e(0, 1, -1, 0),
            e(0, -1, 1, 0),
        ],
        GenSetName::G3 => vec![e(1, 2, 0, 1), e(1, -2, 0, 1), e(1, 0, -2, 1), e(1, 0, 2, 1)],
    };
    GeneratingSet {
        name: name.to_string(),
        elements,
    }
}

/// Uniform random element by rejection sampling of matrix entries.
pub fn random_element<R: Rng + ?Sized>(pp: PrimePower, rng: &mut R) -> SL2Elem {
    let m = pp.modulus();
    loop {
        let a = rng.random_range(0..m);
        let b = rng.random_range(0..m);
        let c = rng.random_range(0..m);
        let d = rng.random_range(0..m);
        if pp.sub(pp.mul(a, d), pp.mul(b, c)) == 1 {
            return SL2Elem::from_reduced(a, b, c, d, pp);
        }
    }
}

/// `{s, s^{-1}, t, t^{-1}}` for uniform random `s, t`.
pub fn random_generator_pair<R: Rng + ?Sized>(pp: PrimePower, rng: &mut R) -> GeneratingSet {
    let s = random_element(pp, rng);
    let t = random_element(pp, rng);
    GeneratingSet {
        name: "random".into(),
        elements: vec![s, s.inv(), t, t.inv()],
    }
}
