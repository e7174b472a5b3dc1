//! Basis-blade bookkeeping for small Clifford algebras.
//!
//! Blades are bitmasks over the basis vectors (bit `i` = `i`-th basis
//! vector in the algebra's vector order). Every blade in a canonical
//! basis is written with ascending vector indices, so the stored
//! coefficient of e.g. `e013` multiplies `e0 e1 e3` left to right.

/// Product of two basis blades: `blade[a] * blade[b] = sign * blade[index]`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct BladeProduct {
    pub sign: i8,
    pub index: u8,
}

const fn lowest_bit(x: u32) -> u32 {
    x & x.wrapping_neg()
}

/// Lexicographic order of the ascending index sequences of two blades of
/// the same grade.
const fn lex_less(a: u32, b: u32) -> bool {
    a != b && (a & lowest_bit(a ^ b)) != 0
}

/// Blade masks ordered by grade, lexicographic within each grade.
pub(crate) const fn canonical_masks<const N: usize>(dim: u32) -> [u32; N] {
    let mut out = [0u32; N];
    let mut filled = 0;
    let mut grade = 0;
    while grade <= dim {
        let start = filled;
        let mut m = 0u32;
        while m < (1 << dim) {
            if m.count_ones() == grade {
                // insertion sort into out[start..filled]
                let mut j = filled;
                while j > start && lex_less(m, out[j - 1]) {
                    out[j] = out[j - 1];
                    j -= 1;
                }
                out[j] = m;
                filled += 1;
            }
            m += 1;
        }
        grade += 1;
    }
    out
}

/// Sign from reordering the vectors of `a * b` into ascending order.
const fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 { 1 } else { -1 }
}

/// Full geometric-product table over the canonical basis.
pub(crate) const fn product_table<const N: usize>(
    dim: u32,
    metric: &[i8],
) -> [[BladeProduct; N]; N] {
    let masks = canonical_masks::<N>(dim);
    let mut index_of = [0u8; 64];
    let mut i = 0;
    while i < N {
        index_of[masks[i] as usize] = i as u8;
        i += 1;
    }

    let mut table = [[BladeProduct { sign: 0, index: 0 }; N]; N];
    let mut a = 0;
    while a < N {
        let mut b = 0;
        while b < N {
            let (ma, mb) = (masks[a], masks[b]);
            let mut sign = reorder_sign(ma, mb);
            let common = ma & mb;
            let mut k = 0;
            while k < dim {
                if common & (1 << k) != 0 {
                    sign *= metric[k as usize];
                }
                k += 1;
            }
            table[a][b] = BladeProduct {
                sign,
                index: index_of[(ma ^ mb) as usize],
            };
            b += 1;
        }
        a += 1;
    }
    table
}

pub(crate) const fn grades<const N: usize>(dim: u32) -> [u8; N] {
    let masks = canonical_masks::<N>(dim);
    let mut out = [0u8; N];
    let mut i = 0;
    while i < N {
        out[i] = masks[i].count_ones() as u8;
        i += 1;
    }
    out
}
