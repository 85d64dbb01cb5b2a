//! Maps of `V(Q_n)` into one or two consecutive layers of a larger cube that
//! send adjacent vertices to pairs at a fixed Hamming distance `m`.

use alloc::vec::Vec;

use thiserror::Error;

use crate::cube::{CubeError, Vertex, MAX_DIM};

/// Largest source dimension; images are stored for all `2^n` vertices.
pub const MAX_SOURCE_DIM: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixedDistanceError {
    #[error("distance must be at least 2, got {0}")]
    DistanceTooSmall(usize),
    #[error("source dimension must be in 1..={MAX_SOURCE_DIM}, got {0}")]
    BadSourceDim(usize),
    #[error("target dimension {0} exceeds {MAX_DIM}")]
    TargetTooLarge(usize),
    #[error(transparent)]
    Cube(#[from] CubeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixedDistanceViolation {
    #[error("vertices {u:#b} and {v:#b} share an image")]
    NotInjective { u: u32, v: u32 },
    #[error("adjacent {u:#b} and {v:#b} map to distance {distance}, expected {expected}")]
    WrongDistance {
        u: u32,
        v: u32,
        distance: u32,
        expected: usize,
    },
    #[error("images occupy layers {low}..={high}, expected {allowed} layer(s)")]
    Layers { low: u32, high: u32, allowed: u32 },
}

/// The construction a map came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    /// Alternating blocks of length `2k + 2`.
    Blocks { k: usize },
    /// Pairs plus one shared parity coordinate.
    SharedParity,
    /// Triples with the last-one rule.
    Triples,
    /// [`Construction::SharedParity`] with `2l` padding coordinates.
    PaddedParity { l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDistanceEmbedding {
    pub n: usize,
    pub target_dim: usize,
    pub m: usize,
    pub construction: Construction,
    /// Image of the source vertex with bit pattern `i` at index `i`.
    pub images: Vec<Vertex>,
}

/// Layers occupied by a verified map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedDistanceReport {
    pub low: u32,
    pub high: u32,
    pub pairs_checked: usize,
}

impl FixedDistanceEmbedding {
    pub fn image(&self, v: u32) -> Vertex {
        self.images[v as usize]
    }

    /// Checks injectivity, the distance on every edge of `Q_n`, and that
    /// images use one layer for even `m` and two consecutive layers for odd.
    pub fn verify(&self) -> Result<FixedDistanceReport, FixedDistanceViolation> {
        let mut sorted: Vec<(u128, u32)> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, v)| (v.bits(), i as u32))
            .collect();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(FixedDistanceViolation::NotInjective {
                u: w[0].1,
                v: w[1].1,
            });
        }
        let mut pairs = 0;
        for u in 0..self.images.len() as u32 {
            for d in 0..self.n {
                let v = u | 1 << d;
                if v == u {
                    continue;
                }
                let distance = (self.image(u).bits() ^ self.image(v).bits()).count_ones();
                if distance as usize != self.m {
                    return Err(FixedDistanceViolation::WrongDistance {
                        u,
                        v,
                        distance,
                        expected: self.m,
                    });
                }
                pairs += 1;
            }
        }
        let low = self.images.iter().map(Vertex::layer).min().unwrap_or(0);
        let high = self.images.iter().map(Vertex::layer).max().unwrap_or(0);
        let allowed = if self.m.is_multiple_of(2) { 1 } else { 2 };
        if high - low + 1 > allowed {
            return Err(FixedDistanceViolation::Layers { low, high, allowed });
        }
        Ok(FixedDistanceReport {
            low,
            high,
            pairs_checked: pairs,
        })
    }
}

fn check_source(n: usize) -> Result<(), FixedDistanceError> {
    if n == 0 || n > MAX_SOURCE_DIM {
        return Err(FixedDistanceError::BadSourceDim(n));
    }
    Ok(())
}

fn build<F>(
    n: usize,
    target_dim: usize,
    m: usize,
    construction: Construction,
    word: F,
) -> Result<FixedDistanceEmbedding, FixedDistanceError>
where
    F: Fn(u32) -> u128,
{
    check_source(n)?;
    if target_dim > MAX_DIM as usize {
        return Err(FixedDistanceError::TargetTooLarge(target_dim));
    }
    let images = (0..1u32 << n)
        .map(|v| Vertex::from_bits(target_dim, word(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FixedDistanceEmbedding {
        n,
        target_dim,
        m,
        construction,
        images,
    })
}

fn coord(v: u32, i: usize) -> bool {
    v >> (i - 1) & 1 == 1
}

/// Sets coordinate `p` (1-based) of a word.
fn at(p: usize) -> u128 {
    1u128 << (p - 1)
}

/// Distance `2k + 2` into layer `(k + 1) n` of `Q_{(2k+2) n}`: block `i` is
/// `0101...01` when `v[i] = 0` and `1010...10` otherwise.
pub fn embed_fk(n: usize, k: usize) -> Result<FixedDistanceEmbedding, FixedDistanceError> {
    let len = 2 * k + 2;
    let target = len
        .checked_mul(n)
        .ok_or(FixedDistanceError::TargetTooLarge(usize::MAX))?;
    build(n, target, len, Construction::Blocks { k }, |v| {
        let mut w = 0u128;
        for i in 1..=n {
            let start = len * (i - 1);
            let offset = if coord(v, i) { 1 } else { 2 };
            for j in (offset..=len).step_by(2) {
                w |= at(start + j);
            }
        }
        w
    })
}

/// Distance 3 into layers `n, n + 1` of `Q_{2n+1}`: pair `i` is `01` or `10`
/// by `v[i]`, and the last coordinate is the parity of `|v|`.
pub fn embed_f(n: usize) -> Result<FixedDistanceEmbedding, FixedDistanceError> {
    build(n, 2 * n + 1, 3, Construction::SharedParity, |v| {
        shared_parity_word(n, v)
    })
}

fn shared_parity_word(n: usize, v: u32) -> u128 {
    let mut w = 0u128;
    for i in 1..=n {
        w |= at(2 * i - if coord(v, i) { 1 } else { 0 });
    }
    if v.count_ones() % 2 == 1 {
        w |= at(2 * n + 1);
    }
    w
}

/// Distance 3 into `Q_{3n}`: triple `i` is `010` when `v[i] = 0`; when
/// `v[i] = 1` it is `101` if `|v|` is odd and `i` is the last 1 of `v`, and
/// `100` otherwise.
pub fn embed_fprime(n: usize) -> Result<FixedDistanceEmbedding, FixedDistanceError> {
    build(n, 3 * n, 3, Construction::Triples, |v| {
        let odd = v.count_ones() % 2 == 1;
        let last = if v == 0 {
            0
        } else {
            32 - v.leading_zeros() as usize
        };
        let mut w = 0u128;
        for i in 1..=n {
            let base = 3 * (i - 1);
            if !coord(v, i) {
                w |= at(base + 2);
            } else {
                w |= at(base + 1);
                if odd && i == last {
                    w |= at(base + 3);
                }
            }
        }
        w
    })
}

/// Any distance `m >= 2`: [`embed_fk`] for even `m`, [`embed_f`] for
/// `m = 3`, and for `m = 3 + 2l` the map [`embed_f`] followed by `0^l 1^l`
/// (even `|v|`) or `1^l 0^l` (odd `|v|`).
#[allow(non_snake_case)]
pub fn embed_F(n: usize, m: usize) -> Result<FixedDistanceEmbedding, FixedDistanceError> {
    if m < 2 {
        return Err(FixedDistanceError::DistanceTooSmall(m));
    }
    if m.is_multiple_of(2) {
        return embed_fk(n, (m - 2) / 2);
    }
    if m == 3 {
        return embed_f(n);
    }
    let l = (m - 3) / 2;
    let base = 2 * n + 1;
    build(n, base + 2 * l, m, Construction::PaddedParity { l }, |v| {
        let mut w = shared_parity_word(n, v);
        let first_half = v.count_ones() % 2 == 1;
        for j in 1..=l {
            w |= at(base + j + if first_half { 0 } else { l });
        }
        w
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn word(e: &FixedDistanceEmbedding, v: u32) -> alloc::string::String {
        e.image(v).to_string()
    }

    #[test]
    fn small_values() {
        let e = embed_fk(1, 0).unwrap();
        assert_eq!(word(&e, 0), "01");
        assert_eq!(word(&e, 1), "10");
        let e = embed_fk(2, 0).unwrap();
        assert!(e.images.iter().all(|v| v.layer() == 2));
        let f = embed_f(2).unwrap();
        assert_eq!(word(&f, 0b00), "01010");
        assert_eq!(word(&f, 0b01), "10011");
        let g = embed_fprime(2).unwrap();
        assert_eq!(word(&g, 0b00), "010010");
        assert_eq!(word(&g, 0b01), "101010");
        assert_eq!(g.image(0).hamming(&g.image(1)).unwrap(), 3);
        let e = embed_F(3, 4).unwrap();
        assert_eq!(e.target_dim, 12);
        assert!(e.images.iter().all(|v| v.layer() == 6));
        assert_eq!(
            embed_F(4, 2).unwrap().images,
            embed_fk(4, 0).unwrap().images
        );
        assert_eq!(embed_F(4, 3).unwrap(), embed_f(4).unwrap());
        assert_eq!(embed_F(2, 1), Err(FixedDistanceError::DistanceTooSmall(1)));
    }

    #[test]
    fn exhaustive() {
        for n in 1..=5 {
            for k in 0..=2 {
                embed_fk(n, k).unwrap().verify().unwrap();
            }
            embed_f(n).unwrap().verify().unwrap();
            embed_fprime(n).unwrap().verify().unwrap();
            for m in 2..=6 {
                let r = embed_F(n, m).unwrap().verify().unwrap();
                assert_eq!(r.pairs_checked, n << (n - 1));
            }
        }
        let r = embed_F(2, 5).unwrap();
        assert_eq!(r.target_dim, 7);
        r.verify().unwrap();
    }

    #[test]
    fn violations_reported() {
        let mut e = embed_f(3).unwrap();
        e.images[1] = e.images[0];
        assert!(matches!(
            e.verify(),
            Err(FixedDistanceViolation::NotInjective { .. })
        ));
        let mut e = embed_f(3).unwrap();
        e.m = 4;
        assert!(matches!(
            e.verify(),
            Err(FixedDistanceViolation::WrongDistance { .. })
        ));
    }
}
