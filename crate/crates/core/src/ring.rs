//! Finite rings presented by structure constants over a product of cyclic groups.
//!
//! The additive group is `Z_{d1} x ... x Z_{dk}` and multiplication is the bilinear
//! extension of the products `e_i * e_j` of the canonical generators. No
//! multiplicative identity is assumed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ring order accepted anywhere in the crate.
pub const MAX_RING_ORDER: u64 = 4096;

/// A ring element as its coordinate vector, each coordinate reduced modulo its modulus.
///
/// The derived ordering is lexicographic on coordinates, which is the order every
/// enumeration in this crate uses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElement(Vec<u32>);

impl RingElement {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Builds an element without reducing; callers guarantee canonical form.
    pub(crate) fn from_canonical(coords: Vec<u32>) -> Self {
        RingElement(coords)
    }

    fn concat(&self, other: &RingElement) -> RingElement {
        let mut coords = self.0.clone();
        coords.extend_from_slice(&other.0);
        RingElement(coords)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `1,0`-style coordinates without range checks; see
/// [`AdditiveGroupShape::parse_element`] for the checked version.
impl FromStr for RingElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::BadElementSyntax(s.to_string()));
        }
        s.split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RingElement)
            .map_err(|_| Error::BadElementSyntax(s.to_string()))
    }
}

/// The additive group `Z_{d1} x ... x Z_{dk}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdditiveGroupShape {
    moduli: Vec<u32>,
    order: usize,
}

impl AdditiveGroupShape {
    pub fn new(moduli: Vec<u32>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::EmptyShape);
        }
        let mut order: u64 = 1;
        for (index, &d) in moduli.iter().enumerate() {
            if d < 2 {
                return Err(Error::InvalidModulus {
                    index,
                    value: d as u64,
                });
            }
            order = order.saturating_mul(d as u64);
        }
        if order > MAX_RING_ORDER {
            return Err(Error::OrderOverflow {
                order,
                limit: MAX_RING_ORDER,
            });
        }
        Ok(AdditiveGroupShape {
            moduli,
            order: order as usize,
        })
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.rank()])
    }

    /// The `i`-th canonical generator (0-based).
    pub fn generator(&self, i: usize) -> RingElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        RingElement(coords)
    }

    /// Reduces arbitrary integer coordinates into canonical form.
    pub fn reduce(&self, coords: &[i64]) -> Result<RingElement> {
        if coords.len() != self.rank() {
            return Err(Error::ShapeMismatch {
                expected: self.rank(),
                found: RingElement(coords.iter().map(|&c| c as u32).collect()),
            });
        }
        Ok(RingElement(
            coords
                .iter()
                .zip(&self.moduli)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u32)
                .collect(),
        ))
    }

    /// Parses an element and rejects coordinates outside `[0, d_i)`.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let x: RingElement = s.parse()?;
        self.check(&x)?;
        Ok(x)
    }

    /// True when `x` has the right length and is in canonical form.
    pub fn contains(&self, x: &RingElement) -> bool {
        x.rank() == self.rank() && x.0.iter().zip(&self.moduli).all(|(&c, &d)| c < d)
    }

    pub fn check(&self, x: &RingElement) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                expected: self.rank(),
                found: x.clone(),
            })
        }
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &d)| (a + b) % d)
                .collect(),
        )
    }

    pub fn neg(&self, x: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &d)| (d - a) % d)
                .collect(),
        )
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.moduli)
                .map(|((&a, &b), &d)| (a + d - b) % d)
                .collect(),
        )
    }

    /// `n * x` in the additive group.
    pub fn scale(&self, n: u64, x: &RingElement) -> RingElement {
        RingElement(
            x.0.iter()
                .zip(&self.moduli)
                .map(|(&a, &d)| ((n % d as u64) * a as u64 % d as u64) as u32)
                .collect(),
        )
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: &RingElement) -> u64 {
        x.0.iter()
            .zip(&self.moduli)
            .map(|(&a, &d)| (d / num_integer::gcd(a, d)) as u64)
            .fold(1, num_integer::lcm)
    }

    /// Position of `x` in the lexicographic enumeration (first coordinate most significant).
    pub fn index_of(&self, x: &RingElement) -> usize {
        x.0.iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&a, &d)| acc * d as usize + a as usize)
    }

    pub fn element_at(&self, mut index: usize) -> RingElement {
        let mut coords = vec![0u32; self.rank()];
        for (c, &d) in coords.iter_mut().zip(&self.moduli).rev() {
            *c = (index % d as usize) as u32;
            index /= d as usize;
        }
        RingElement(coords)
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }
}

/// A validated finite ring. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    shape: AdditiveGroupShape,
    constants: Vec<Vec<RingElement>>,
    elements: Vec<RingElement>,
}

impl FiniteRing {
    /// Checks the table dimensions, well-definedness of every structure constant and
    /// associativity on all generator triples, then caches the element list.
    ///
    /// Constants are reduced into canonical form first.
    pub fn validate(shape: AdditiveGroupShape, constants: Vec<Vec<RingElement>>) -> Result<Self> {
        let k = shape.rank();
        if constants.len() != k {
            return Err(Error::MalformedTable(format!(
                "expected {k} rows, found {}",
                constants.len()
            )));
        }
        let mut reduced = Vec::with_capacity(k);
        for (i, row) in constants.iter().enumerate() {
            if row.len() != k {
                return Err(Error::MalformedTable(format!(
                    "row {} has {} entries, expected {k}",
                    i + 1,
                    row.len()
                )));
            }
            let mut out = Vec::with_capacity(k);
            for (j, c) in row.iter().enumerate() {
                if c.rank() != k {
                    return Err(Error::MalformedTable(format!(
                        "c{}{} has {} coordinates, expected {k}",
                        i + 1,
                        j + 1,
                        c.rank()
                    )));
                }
                let coords: Vec<i64> = c.coords().iter().map(|&v| v as i64).collect();
                out.push(shape.reduce(&coords)?);
            }
            reduced.push(out);
        }

        let moduli = shape.moduli();
        for i in 0..k {
            for j in 0..k {
                let c = &reduced[i][j];
                if !shape.scale(moduli[i] as u64, c).is_zero()
                    || !shape.scale(moduli[j] as u64, c).is_zero()
                {
                    return Err(Error::WellDefinednessViolation { i, j });
                }
            }
        }

        let ring = FiniteRing {
            elements: Vec::new(),
            shape,
            constants: reduced,
        };
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let left = ring.mul(&ring.constants[i][j], &ring.shape.generator(l));
                    let right = ring.mul(&ring.shape.generator(i), &ring.constants[j][l]);
                    if left != right {
                        return Err(Error::AssociativityViolation {
                            i,
                            j,
                            l,
                            left,
                            right,
                        });
                    }
                }
            }
        }

        let elements = ring.shape.elements().collect();
        Ok(FiniteRing { elements, ..ring })
    }

    pub fn shape(&self) -> &AdditiveGroupShape {
        &self.shape
    }

    pub fn constants(&self) -> &[Vec<RingElement>] {
        &self.constants
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> &[RingElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.shape.order()
    }

    pub fn zero(&self) -> RingElement {
        self.shape.zero()
    }

    pub fn index_of(&self, x: &RingElement) -> usize {
        self.shape.index_of(x)
    }

    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        self.shape.parse_element(s)
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.shape.check(x)?;
        self.shape.check(y)?;
        Ok(self.shape.add(x, y))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.shape.check(x)?;
        Ok(self.shape.neg(x))
    }

    pub fn multiply(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.shape.check(x)?;
        self.shape.check(y)?;
        Ok(self.mul(x, y))
    }

    pub fn commutator(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.shape.check(x)?;
        self.shape.check(y)?;
        Ok(self.comm(x, y))
    }

    /// Bilinear product without shape checks.
    pub(crate) fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let k = self.shape.rank();
        let mut acc = vec![0u64; k];
        for (i, &a) in x.coords().iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coords().iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let coef = a as u64 * b as u64;
                for (slot, &c) in acc.iter_mut().zip(self.constants[i][j].coords()) {
                    *slot += coef * c as u64;
                }
            }
        }
        RingElement(
            acc.into_iter()
                .zip(self.shape.moduli())
                .map(|(v, &d)| (v % d as u64) as u32)
                .collect(),
        )
    }

    /// `xy - yx` without shape checks.
    pub(crate) fn comm(&self, x: &RingElement, y: &RingElement) -> RingElement {
        self.shape.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Commutativity reduces to the generators by bilinearity.
    pub fn is_commutative(&self) -> bool {
        let k = self.shape.rank();
        (0..k).all(|i| (0..k).all(|j| self.constants[i][j] == self.constants[j][i]))
    }

    /// `R1 x R2` with componentwise operations.
    pub fn direct_product(&self, other: &FiniteRing) -> Result<FiniteRing> {
        let order = self.order() as u64 * other.order() as u64;
        if order > MAX_RING_ORDER {
            return Err(Error::OrderOverflow {
                order,
                limit: MAX_RING_ORDER,
            });
        }
        let mut moduli = self.shape.moduli().to_vec();
        moduli.extend_from_slice(other.shape.moduli());
        let shape = AdditiveGroupShape::new(moduli)?;
        let (k1, k2) = (self.shape.rank(), other.shape.rank());
        let (z1, z2) = (self.zero(), other.zero());
        let mut constants = vec![vec![shape.zero(); k1 + k2]; k1 + k2];
        for i in 0..k1 {
            for j in 0..k1 {
                constants[i][j] = self.constants[i][j].concat(&z2);
            }
        }
        for i in 0..k2 {
            for j in 0..k2 {
                constants[k1 + i][k1 + j] = z1.concat(&other.constants[i][j]);
            }
        }
        FiniteRing::validate(shape, constants)
    }

    /// Splits an element of `self = A x B` built by [`direct_product`](Self::direct_product)
    /// into its components, given the rank of `A`.
    pub fn split_at(x: &RingElement, left_rank: usize) -> (RingElement, RingElement) {
        let (a, b) = x.coords().split_at(left_rank);
        (RingElement(a.to_vec()), RingElement(b.to_vec()))
    }

    /// Pairs components into an element of a product ring.
    pub fn pair(a: &RingElement, b: &RingElement) -> RingElement {
        a.concat(b)
    }
}
