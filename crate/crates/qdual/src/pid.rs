//! Linear algebra over the principal-ideal (in fact Euclidean) ring k[q,q^-1].
//!
//! The Euclidean size of a nonzero Laurent polynomial is its exponent span;
//! units are the single-term elements c*q^k. This is enough for a standard
//! fraction-free Smith normal form, which is what lattice membership over
//! k[q,q^-1] reduces to.

use crate::qcoeff::LaurentPoly;

/// Euclidean division: a = b*s + r with r = 0 or span(r) < span(b).
///
/// Works by shifting both into k[q] and doing polynomial division there;
/// the quotient/remainder are shifted back.
pub fn div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!b.is_zero(), "euclidean division by zero");
    if a.is_zero() {
        return (LaurentPoly::zero(), LaurentPoly::zero());
    }
    let bspan = b.span().unwrap();
    let mut rem = a.clone();
    let mut quot = LaurentPoly::zero();
    let b_top = b.max_exp().unwrap();
    let b_lead = b.terms().last().unwrap().1.clone();
    while !rem.is_zero() && rem.span().unwrap() >= bspan {
        let r_top = rem.max_exp().unwrap();
        let c = rem.terms().last().unwrap().1 / &b_lead;
        let t = LaurentPoly::monomial(c, r_top - b_top);
        rem = &rem - &(&t * b);
        quot = &quot + &t;
    }
    (quot, rem)
}

pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    normalize_assoc(&x)
}

/// A canonical associate: divide by the leading unit c*q^k so the top term
/// is monic with exponent fixed by the lowest exponent at 0.
fn normalize_assoc(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return a.clone();
    }
    let low = a.min_exp().unwrap();
    let lead = a.terms().last().unwrap().1.clone();
    let inv = LaurentPoly::monomial(num::BigRational::new(1.into(), 1.into()) / lead, -low);
    &inv * a
}

/// Dense matrix over k[q,q^-1].
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<LaurentPoly>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let p = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &p;
                }
            }
        }
        out
    }

    pub fn apply_to_vec(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = LaurentPoly::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        s = &s + &(&self[(i, j)] * &v[j]);
                    }
                }
                s
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        &mut self.a[i * self.cols + j]
    }
}

/// Smith normal form: returns (U, diag, rank) with U * M * V = D where D is
/// diagonal with `rank` nonzero entries d_0 | d_1 | ... ; only U (row
/// transform) and the diagonal are returned since membership tests transform
/// target vectors through U.
pub struct Snf {
    pub u: Mat,
    pub diag: Vec<LaurentPoly>,
    pub rank: usize,
}

/// Divide a matrix row (and the matching transform row) by its unit
/// content c*q^k; rational constants and q powers are units of k[q,q^-1],
/// so this is a unimodular operation that keeps coefficients small.
fn normalize_row(a: &mut Mat, u: &mut Mat, i: usize) {
    use num::{BigInt, BigRational, One, Signed, Zero};
    let mut num_gcd = BigInt::from(0);
    let mut den_lcm = BigInt::from(1);
    let mut min_exp: Option<i64> = None;
    for j in 0..a.cols {
        for (k, c) in a[(i, j)].terms() {
            num_gcd = num::integer::gcd(num_gcd.clone(), c.numer().abs());
            den_lcm = num::integer::lcm(den_lcm.clone(), c.denom().clone());
            min_exp = Some(min_exp.map_or(k, |m: i64| m.min(k)));
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let scale = BigRational::new(den_lcm, num_gcd);
    let shift = -min_exp.unwrap_or(0);
    if scale.is_one() && shift == 0 {
        return;
    }
    for j in 0..a.cols {
        a[(i, j)] = a[(i, j)].scale(&scale).mul_q_pow(shift);
    }
    for j in 0..u.cols {
        u[(i, j)] = u[(i, j)].scale(&scale).mul_q_pow(shift);
    }
}

pub fn smith(m: &Mat) -> Snf {
    let mut a = m.clone();
    let mut u = Mat::identity(m.rows);
    for i in 0..a.rows {
        normalize_row(&mut a, &mut u, i);
    }
    let n = m.rows.min(m.cols);
    let mut t = 0usize;
    while t < n {
        // Find a pivot: nonzero entry of minimal span in the remaining block.
        let mut pivot: Option<(usize, usize, i64)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                if let Some(s) = a[(i, j)].span() {
                    if pivot.map(|(_, _, ps)| s < ps).unwrap_or(true) {
                        pivot = Some((i, j, s));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        swap_rows(&mut a, &mut u, t, pi);
        swap_cols(&mut a, t, pj);
        // Clear column t below and row t to the right until stable.
        loop {
            let mut dirty = false;
            for i in (t + 1)..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (s, r) = div_rem(&a[(i, t)], &a[(t, t)]);
                row_sub(&mut a, &mut u, i, t, &s);
                normalize_row(&mut a, &mut u, i);
                if !r.is_zero() {
                    swap_rows(&mut a, &mut u, t, i);
                    dirty = true;
                }
            }
            for j in (t + 1)..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (s, r) = div_rem(&a[(t, j)], &a[(t, t)]);
                col_sub(&mut a, j, t, &s);
                if !r.is_zero() {
                    swap_cols(&mut a, t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        t += 1;
    }
    // Divisibility chain d_i | d_{i+1} is not needed for membership tests
    // (they only use per-coordinate exact division), so keep the plain
    // diagonalization; associates do not matter either.
    let mut diag = Vec::new();
    for i in 0..n {
        if a[(i, i)].is_zero() {
            break;
        }
        diag.push(a[(i, i)].clone());
    }
    let rank = diag.len();
    Snf { u, diag, rank }
}

fn swap_rows(a: &mut Mat, u: &mut Mat, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..a.cols {
        a.a.swap(i * a.cols + c, j * a.cols + c);
    }
    for c in 0..u.cols {
        u.a.swap(i * u.cols + c, j * u.cols + c);
    }
}

fn swap_cols(a: &mut Mat, i: usize, j: usize) {
    if i == j {
        return;
    }
    for r in 0..a.rows {
        a.a.swap(r * a.cols + i, r * a.cols + j);
    }
}

fn row_sub(a: &mut Mat, u: &mut Mat, i: usize, from: usize, s: &LaurentPoly) {
    if s.is_zero() {
        return;
    }
    for c in 0..a.cols {
        let p = &a[(from, c)] * s;
        a[(i, c)] = &a[(i, c)] - &p;
    }
    for c in 0..u.cols {
        let p = &u[(from, c)] * s;
        u[(i, c)] = &u[(i, c)] - &p;
    }
}

fn col_sub(a: &mut Mat, j: usize, from: usize, s: &LaurentPoly) {
    if s.is_zero() {
        return;
    }
    for r in 0..a.rows {
        let p = &a[(r, from)] * s;
        a[(r, j)] = &a[(r, j)] - &p;
    }
}

/// Does `v` lie in the column span (over k[q,q^-1]) of `m` scaled by `scale`?
/// I.e. is there `c` with `m * c = v` and all coordinates of `v` reachable
/// with the extra divisibility `scale`? Used as: v in scale * columnspan(m).
pub fn in_scaled_column_span(snf: &Snf, v: &[LaurentPoly], scale: &LaurentPoly) -> bool {
    let w = snf.u.apply_to_vec(v);
    for (i, wi) in w.iter().enumerate() {
        if wi.is_zero() {
            continue;
        }
        if i >= snf.rank {
            return false;
        }
        let need = &snf.diag[i] * scale;
        if wi.exact_div(&need).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::rat;
    use num::Zero as _;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::canonical(terms.iter().map(|&(k, c)| (k, rat(c))))
    }

    #[test]
    fn euclid_div() {
        let a = lp(&[(3, 1), (0, -1)]); // q^3 - 1
        let b = lp(&[(1, 1), (0, -1)]); // q - 1
        let (s, r) = div_rem(&a, &b);
        assert!(r.is_zero());
        assert_eq!(s, lp(&[(2, 1), (1, 1), (0, 1)]));
    }

    #[test]
    fn gcd_of_cyclotomics() {
        let a = lp(&[(2, 1), (0, -1)]); // (q-1)(q+1)
        let b = lp(&[(1, 1), (0, -2), (-1, 1)]); // q^-1 (q-1)^2
        let g = gcd(&a, &b);
        // gcd is an associate of (q-1): span 1, vanishing at 1
        assert_eq!(g.span(), Some(1));
        assert!(g.eval1().is_zero());
    }

    #[test]
    fn membership_simple() {
        // Columns: (q-1, 0), (q^2-1, q+1). Is (0, (q+1)(q-1)) in the span?
        let mut m = Mat::zero(2, 2);
        m[(0, 0)] = lp(&[(1, 1), (0, -1)]);
        m[(0, 1)] = lp(&[(2, 1), (0, -1)]);
        m[(1, 1)] = lp(&[(1, 1), (0, 1)]);
        let snf = smith(&m);
        let v = vec![LaurentPoly::zero(), &lp(&[(1, 1), (0, 1)]) * &lp(&[(1, 1), (0, -1)])];
        assert!(in_scaled_column_span(&snf, &v, &LaurentPoly::one()));
        // (0, 1) is not: second coordinate only reachable in multiples of q+1
        let v2 = vec![LaurentPoly::zero(), LaurentPoly::one()];
        assert!(!in_scaled_column_span(&snf, &v2, &LaurentPoly::one()));
    }

    #[test]
    fn membership_with_dependence() {
        // Dependent columns: (q-1) and (q-1)^2 and their difference patterns;
        // v = (q-1) must be in span even with redundancy, and (1) must not.
        let mut m = Mat::zero(1, 2);
        m[(0, 0)] = lp(&[(1, 1), (0, -1)]);
        m[(0, 1)] = lp(&[(2, 1), (1, -2), (0, 1)]);
        let snf = smith(&m);
        assert!(in_scaled_column_span(&snf, &[lp(&[(1, 1), (0, -1)])], &LaurentPoly::one()));
        assert!(!in_scaled_column_span(&snf, &[LaurentPoly::one()], &LaurentPoly::one()));
        // scaled: (q-1)^2 in (q-1)*span: yes
        assert!(in_scaled_column_span(
            &snf,
            &[lp(&[(2, 1), (1, -2), (0, 1)])],
            &lp(&[(1, 1), (0, -1)])
        ));
    }
}
