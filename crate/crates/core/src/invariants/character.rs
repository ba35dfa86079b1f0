use std::collections::BTreeMap;

use crate::error::Result;
use crate::fock::{enumerate_weight, Flavor};

/// Double-graded dimensions keyed by `(k, l)`; absent keys are zero.
pub type CharacterTable = BTreeMap<(i64, i64), u64>;

/// Truncated Laurent polynomial in `t` with coefficients in `q`-power series.
type Series = BTreeMap<(i64, i64), i128>;

fn mul(a: &Series, b: &Series, kmax: i64) -> Series {
    let mut out = Series::new();
    for (&(k1, l1), x) in a {
        for (&(k2, l2), y) in b {
            if k1 + k2 <= kmax {
                *out.entry((k1 + k2, l1 + l2)).or_insert(0) += x * y;
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn pow(a: &Series, e: usize, kmax: i64) -> Series {
    let mut out = Series::from([((0, 0), 1)]);
    for _ in 0..e {
        out = mul(&out, a, kmax);
    }
    out
}

/// `prod_{n>=1} (1 + t q^{n-1})^N (1 + t^{-1} q^n)^N (1 - q^n)^{-2N}` up to `q^kmax`.
pub fn product_character(dim: usize, kmax: i64) -> CharacterTable {
    let mut acc = Series::from([((0, 0), 1)]);
    for n in 1..=kmax + 1 {
        let c = Series::from([((0, 0), 1), ((n - 1, 1), 1)]);
        let b = Series::from([((0, 0), 1), ((n, -1), 1)]);
        // (1 - q^n)^{-1} = sum_r q^{rn}
        let boson: Series = (0..).map(|r| r * n).take_while(|k| *k <= kmax).map(|k| ((k, 0), 1)).collect();
        acc = mul(&acc, &pow(&c, dim, kmax), kmax);
        acc = mul(&acc, &pow(&b, dim, kmax), kmax);
        acc = mul(&acc, &pow(&boson, 2 * dim, kmax), kmax);
    }
    acc.into_iter().filter(|(_, v)| *v != 0).map(|(g, v)| (g, v as u64)).collect()
}

/// Dimensions of the enumerated PLUS weight spaces.
pub fn basis_character(dim: usize, kmax: i64) -> Result<CharacterTable> {
    let mut out = CharacterTable::new();
    for k in 0..=kmax {
        for (l, ms) in enumerate_weight(Flavor::Plus, dim, k, None)? {
            out.insert((k, l), ms.len() as u64);
        }
    }
    Ok(out)
}
