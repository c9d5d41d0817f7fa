//! Named test rings.

use crate::error::{Error, Result};
use crate::ring::{AdditiveGroupShape, FiniteRing, RingElement, MAX_RING_ORDER};

/// The order-4 non-commutative ring on `Z2 x Z2` with `x*y = (y1 + y2) x`.
pub fn e4() -> FiniteRing {
    let shape = AdditiveGroupShape::new(vec![2, 2]).expect("static shape");
    let a = RingElement::from_canonical(vec![1, 0]);
    let b = RingElement::from_canonical(vec![0, 1]);
    FiniteRing::validate(shape, vec![vec![a.clone(), a], vec![b.clone(), b]])
        .expect("E4 is associative")
}

/// `Z_n` with zero multiplication.
pub fn zero_ring(n: u32) -> Result<FiniteRing> {
    let shape = AdditiveGroupShape::new(vec![n])?;
    let zero = shape.zero();
    FiniteRing::validate(shape, vec![vec![zero]])
}

/// `Z_n` with its usual multiplication.
pub fn cyclic_ring(n: u32) -> Result<FiniteRing> {
    let shape = AdditiveGroupShape::new(vec![n])?;
    let one = shape.generator(0);
    FiniteRing::validate(shape, vec![vec![one]])
}

/// Upper-triangular `s x s` matrices over `Z_n`, basis `E_ab` for `a <= b` in
/// lexicographic order of `(a, b)`.
pub fn triangular(n: u32, s: usize) -> Result<FiniteRing> {
    let units: Vec<(usize, usize)> = (0..s)
        .flat_map(|a| (a..s).map(move |b| (a, b)))
        .collect();
    matrix_units_ring("triangular", n, s, units)
}

/// All `s x s` matrices over `Z_n`, basis `E_ab` in row-major order.
pub fn full_matrix(n: u32, s: usize) -> Result<FiniteRing> {
    let units: Vec<(usize, usize)> = (0..s)
        .flat_map(|a| (0..s).map(move |b| (a, b)))
        .collect();
    matrix_units_ring("full_matrix", n, s, units)
}

fn matrix_units_ring(
    name: &str,
    n: u32,
    s: usize,
    units: Vec<(usize, usize)>,
) -> Result<FiniteRing> {
    if s == 0 {
        return Err(Error::BadCatalogParams {
            name: name.to_string(),
            message: "matrix size must be at least 1".to_string(),
        });
    }
    if n < 2 {
        return Err(Error::InvalidModulus {
            index: 0,
            value: n as u64,
        });
    }
    let order = (0..units.len()).try_fold(1u64, |acc, _| acc.checked_mul(n as u64));
    match order {
        Some(order) if order <= MAX_RING_ORDER => {}
        other => {
            return Err(Error::OrderOverflow {
                order: other.unwrap_or(u64::MAX),
                limit: MAX_RING_ORDER,
            })
        }
    }
    let shape = AdditiveGroupShape::new(vec![n; units.len()])?;
    // E_ab * E_cd = [b == c] E_ad
    let constants = units
        .iter()
        .map(|&(a, b)| {
            units
                .iter()
                .map(|&(c, d)| {
                    if b == c {
                        let pos = units.iter().position(|&u| u == (a, d)).expect("closed basis");
                        shape.generator(pos)
                    } else {
                        shape.zero()
                    }
                })
                .collect()
        })
        .collect();
    FiniteRing::validate(shape, constants)
}

/// Looks up a catalog ring by name and integer parameters.
pub fn catalog(name: &str, params: &[u32]) -> Result<FiniteRing> {
    let arity = |want: usize| -> Result<()> {
        if params.len() == want {
            Ok(())
        } else {
            Err(Error::BadCatalogParams {
                name: name.to_string(),
                message: format!("expected {want} parameter(s), got {}", params.len()),
            })
        }
    };
    match name.to_ascii_lowercase().as_str() {
        "e4" => {
            arity(0)?;
            Ok(e4())
        }
        "zero_ring" => {
            arity(1)?;
            zero_ring(params[0])
        }
        "cyclic_ring" => {
            arity(1)?;
            cyclic_ring(params[0])
        }
        "triangular" => {
            arity(2)?;
            triangular(params[0], params[1] as usize)
        }
        "full_matrix" => {
            arity(2)?;
            full_matrix(params[0], params[1] as usize)
        }
        _ => Err(Error::UnknownCatalogName(name.to_string())),
    }
}

/// Parses `E4`, `zero_ring(5)`, `triangular(3,2)` and the like.
pub fn from_spec(spec: &str) -> Result<FiniteRing> {
    let spec = spec.trim();
    let (name, params) = match spec.find('(') {
        None => (spec, Vec::new()),
        Some(open) => {
            let inner = spec[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownCatalogName(spec.to_string()))?;
            let params = inner
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::BadCatalogParams {
                    name: spec[..open].trim().to_string(),
                    message: format!("cannot parse `{inner}`"),
                })?;
            (spec[..open].trim(), params)
        }
    };
    catalog(name, &params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn some_noncommuting_pair(ring: &FiniteRing) -> bool {
        ring.elements()
            .iter()
            .any(|x| ring.elements().iter().any(|y| !ring.comm(x, y).is_zero()))
    }

    #[test]
    fn orders() {
        assert_eq!(e4().order(), 4);
        assert_eq!(triangular(2, 2).unwrap().order(), 8);
        assert_eq!(triangular(3, 2).unwrap().order(), 27);
        assert_eq!(full_matrix(2, 2).unwrap().order(), 16);
        assert_eq!(full_matrix(3, 2).unwrap().order(), 81);
        assert_eq!(zero_ring(5).unwrap().order(), 5);
    }

    #[test]
    fn commutativity_by_enumeration() {
        assert!(some_noncommuting_pair(&e4()));
        assert!(some_noncommuting_pair(&triangular(2, 2).unwrap()));
        assert!(some_noncommuting_pair(&full_matrix(2, 2).unwrap()));
        assert!(!some_noncommuting_pair(&zero_ring(5).unwrap()));
        assert!(!some_noncommuting_pair(&cyclic_ring(6).unwrap()));
        assert!(!some_noncommuting_pair(&triangular(5, 1).unwrap()));
        assert_eq!(e4().is_commutative(), false);
        assert!(zero_ring(5).unwrap().is_commutative());
    }

    #[test]
    fn oversized_matrix_rings_rejected() {
        assert!(matches!(
            full_matrix(3, 3),
            Err(Error::OrderOverflow { order: 19683, .. })
        ));
        assert!(matches!(full_matrix(2, 4), Err(Error::OrderOverflow { .. })));
        assert!(matches!(triangular(5, 3), Err(Error::OrderOverflow { .. })));
    }

    #[test]
    fn lookup_by_name_and_spec() {
        assert_eq!(catalog("E4", &[]).unwrap(), e4());
        assert_eq!(from_spec("triangular(3,2)").unwrap(), triangular(3, 2).unwrap());
        assert_eq!(from_spec(" zero_ring( 5 ) ").unwrap(), zero_ring(5).unwrap());
        assert!(matches!(
            catalog("quaternions", &[]),
            Err(Error::UnknownCatalogName(_))
        ));
        assert!(matches!(
            catalog("triangular", &[2]),
            Err(Error::BadCatalogParams { .. })
        ));
        assert!(from_spec("triangular(2,x)").is_err());
        assert!(from_spec("triangular(2,2").is_err());
    }
}
