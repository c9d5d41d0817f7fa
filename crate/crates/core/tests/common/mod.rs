#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ringcomm::{AdditiveGroupShape, FiniteRing, RingElement};

/// A structure-constant table multiplied out by hand, independent of the library's
/// arithmetic. Used as an oracle for products, associativity and commutator counts.
#[derive(Clone, Debug)]
pub struct RawTable {
    pub moduli: Vec<u32>,
    pub constants: Vec<Vec<Vec<u32>>>,
}

impl RawTable {
    pub fn of(ring: &FiniteRing) -> Self {
        RawTable {
            moduli: ring.shape().moduli().to_vec(),
            constants: ring
                .constants()
                .iter()
                .map(|row| row.iter().map(|c| c.coords().to_vec()).collect())
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.moduli.iter().map(|&d| d as usize).product()
    }

    /// Elements in odometer order, last coordinate fastest.
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for &d in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let k = self.moduli.len();
        (0..k)
            .map(|l| {
                let mut s: u64 = 0;
                for i in 0..k {
                    for j in 0..k {
                        s += x[i] as u64 * y[j] as u64 * self.constants[i][j][l] as u64;
                    }
                }
                (s % self.moduli[l] as u64) as u32
            })
            .collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((a, b), d)| (a + d - b) % d)
            .collect()
    }

    pub fn comm(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Every element triple, not just generators.
    pub fn is_associative(&self) -> bool {
        let els = self.elements();
        els.iter().all(|x| {
            els.iter().all(|y| {
                let xy = self.mul(x, y);
                els.iter()
                    .all(|z| self.mul(&xy, z) == self.mul(x, &self.mul(y, z)))
            })
        })
    }

    /// Number of ordered pairs with each commutator value.
    pub fn histogram(&self) -> std::collections::HashMap<Vec<u32>, u64> {
        let els = self.elements();
        let mut out = std::collections::HashMap::new();
        for x in &els {
            for y in &els {
                *out.entry(self.comm(x, y)).or_insert(0) += 1;
            }
        }
        out
    }

    /// `(favourable, total)` pair counts for `[x, y] = r`.
    pub fn count(&self, r: &[u32]) -> (u64, u64) {
        let els = self.elements();
        let hits = els
            .iter()
            .flat_map(|x| els.iter().map(move |y| (x, y)))
            .filter(|(x, y)| self.comm(x, y) == r)
            .count() as u64;
        let n = els.len() as u64;
        (hits, n * n)
    }
}

pub fn reduce(num: u64, den: u64) -> (u64, u64) {
    let g = gcd(num, den);
    (num / g, den / g)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn el(coords: &[u32]) -> RingElement {
    coords
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
        .parse()
        .unwrap()
}

/// Random shape of order at most `max_order` with moduli in {2, 3, 4}.
fn random_shape(rng: &mut impl Rng, max_order: usize) -> Vec<u32> {
    loop {
        let k = rng.gen_range(1..=3);
        let moduli: Vec<u32> = (0..k).map(|_| [2, 3, 4][rng.gen_range(0..3)]).collect();
        if moduli.iter().map(|&d| d as usize).product::<usize>() <= max_order {
            return moduli;
        }
    }
}

/// Draws well-defined structure constants until the table is associative.
///
/// Each coordinate is a random multiple of the smallest value killed by
/// `gcd(d_i, d_j)`, zero with probability one half, so rejections come only from
/// associativity.
pub fn random_ring(rng: &mut impl Rng, max_order: usize) -> (FiniteRing, usize) {
    let mut attempts = 0;
    loop {
        attempts += 1;
        let moduli = random_shape(rng, max_order);
        let k = moduli.len();
        let sparsity = [0.3, 0.5, 0.8][rng.gen_range(0..3)];
        let constants: Vec<Vec<RingElement>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let g = gcd(moduli[i] as u64, moduli[j] as u64) as u32;
                        let coords: Vec<u32> = moduli
                            .iter()
                            .map(|&d| {
                                let step = d / gcd(d as u64, g as u64) as u32;
                                if rng.gen_bool(sparsity) {
                                    0
                                } else {
                                    step * rng.gen_range(0..d / step)
                                }
                            })
                            .collect();
                        el(&coords)
                    })
                    .collect()
            })
            .collect();
        let shape = AdditiveGroupShape::new(moduli).unwrap();
        if let Ok(ring) = FiniteRing::validate(shape, constants) {
            return (ring, attempts);
        }
    }
}

/// The opposite ring of E4, `x*y = (x1 + x2) y`.
pub fn e4_opposite() -> FiniteRing {
    let shape = AdditiveGroupShape::new(vec![2, 2]).unwrap();
    FiniteRing::validate(
        shape,
        vec![vec![el(&[1, 0]), el(&[0, 1])], vec![el(&[1, 0]), el(&[0, 1])]],
    )
    .unwrap()
}

fn noncommutative_seeds() -> Vec<FiniteRing> {
    vec![
        ringcomm::catalog::e4(),
        e4_opposite(),
        ringcomm::catalog::triangular(2, 2).unwrap(),
    ]
}

fn mixed_ring(rng: &mut impl Rng, max_order: usize, seeded: bool) -> FiniteRing {
    if !seeded {
        return random_ring(rng, max_order).0;
    }
    let seeds = noncommutative_seeds();
    let base = &seeds[rng.gen_range(0..seeds.len())];
    let room = max_order / base.order();
    if room < 2 {
        return base.clone();
    }
    let (other, _) = random_ring(rng, room);
    if rng.gen_bool(0.5) {
        base.direct_product(&other).unwrap()
    } else {
        other.direct_product(base).unwrap()
    }
}

/// `count` rings from a fixed seed. Uniform random tables are almost always
/// commutative, so every other ring is a non-commutative seed times a random ring.
pub fn random_rings(seed: u64, count: usize, max_order: usize) -> Vec<FiniteRing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| mixed_ring(&mut rng, max_order, i % 2 == 1))
        .collect()
}

/// One ring per seed, for property tests; non-commutative about half the time.
pub fn ring_for_seed(seed: u64, max_order: usize) -> FiniteRing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeded = rng.gen_bool(0.5);
    mixed_ring(&mut rng, max_order, seeded)
}

/// Integer square matrices over Z_n, for oracles on the matrix catalog rings.
pub fn matrix_commutator_counts(n: u32, s: usize, upper_only: bool) -> std::collections::HashMap<Vec<u32>, u64> {
    let positions: Vec<(usize, usize)> = (0..s)
        .flat_map(|a| (0..s).map(move |b| (a, b)))
        .filter(|&(a, b)| !upper_only || a <= b)
        .collect();
    let count = (n as usize).pow(positions.len() as u32);
    let matrices: Vec<Vec<u32>> = (0..count)
        .map(|mut idx| {
            let mut m = vec![0u32; s * s];
            for &(a, b) in positions.iter().rev() {
                m[a * s + b] = (idx % n as usize) as u32;
                idx /= n as usize;
            }
            m
        })
        .collect();
    let mul = |x: &[u32], y: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; s * s];
        for a in 0..s {
            for b in 0..s {
                out[a * s + b] = ((0..s).map(|c| x[a * s + c] * y[c * s + b]).sum::<u32>()) % n;
            }
        }
        out
    };
    let mut counts = std::collections::HashMap::new();
    for x in &matrices {
        for y in &matrices {
            let (xy, yx) = (mul(x, y), mul(y, x));
            let c: Vec<u32> = positions
                .iter()
                .map(|&(a, b)| (xy[a * s + b] + n - yx[a * s + b]) % n)
                .collect();
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    counts
}
