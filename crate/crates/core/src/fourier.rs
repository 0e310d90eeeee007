//! Exact Fourier analysis of indicator functions on product groups.
//!
//! Transform values are kept as integer exponent-count vectors over the L-th
//! roots of unity (L = group exponent), so zero testing is an exact algebraic
//! decision: a sum of L-th roots of unity vanishes iff the L-th cyclotomic
//! polynomial divides its exponent polynomial. No floating point is involved
//! anywhere on the decision path.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::group::{Element, Group, PointSet};

const OVERFLOW_MSG: &str =
    "integer overflow in exact root-of-unity reduction; input exceeds supported scale";

/// An exact sum of L-th roots of unity: `counts[r]` is the multiplicity of
/// `exp(-2 pi i r / L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpSum {
    order: u64,
    counts: Vec<i64>,
}

impl ExpSum {
    pub fn zero(order: u64) -> ExpSum {
        assert!(order >= 1, "root order must be positive");
        ExpSum {
            order,
            counts: vec![0; order as usize],
        }
    }

    /// Wraps an explicit exponent-count vector; `counts.len()` must equal `order`.
    pub fn from_counts(order: u64, counts: Vec<i64>) -> Result<ExpSum> {
        if order == 0 || counts.len() as u64 != order {
            return Err(Error::BadCountsLength {
                expected: order,
                got: counts.len(),
            });
        }
        Ok(ExpSum { order, counts })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    pub(crate) fn add_root(&mut self, exponent: u64) {
        let r = (exponent % self.order) as usize;
        self.counts[r] = self.counts[r].checked_add(1).expect(OVERFLOW_MSG);
    }

    /// Exact zero test: reduces the exponent polynomial `sum counts[r] X^r`
    /// modulo the cyclotomic polynomial of the root order and checks for the
    /// zero remainder.
    pub fn is_zero(&self) -> bool {
        if self.counts.iter().all(|&c| c == 0) {
            return true;
        }
        if self.order == 1 {
            return self.counts[0] == 0;
        }
        let phi = cyclotomic(self.order);
        let mut work: Vec<i128> = self.counts.iter().map(|&c| c as i128).collect();
        poly_rem_monic(&mut work, &phi);
        work.iter().all(|&c| c == 0)
    }
}

/// Remainder of `p` modulo the monic polynomial with ascending coefficients
/// `d`, performed in place over the integers.
fn poly_rem_monic(p: &mut Vec<i128>, d: &[i128]) {
    let deg_d = d.len() - 1;
    debug_assert_eq!(d[deg_d], 1, "divisor must be monic");
    let mut top = p.len();
    while top > deg_d {
        top -= 1;
        let c = p[top];
        if c == 0 {
            continue;
        }
        p[top] = 0;
        let shift = top - deg_d;
        for (k, &dk) in d.iter().enumerate().take(deg_d) {
            let t = c.checked_mul(dk).expect(OVERFLOW_MSG);
            p[shift + k] = p[shift + k].checked_sub(t).expect(OVERFLOW_MSG);
        }
    }
    p.truncate(deg_d);
}

/// Exact quotient of `p` by the monic polynomial `d`; panics if the division
/// leaves a remainder.
fn poly_div_exact(p: &[i128], d: &[i128]) -> Vec<i128> {
    let deg_d = d.len() - 1;
    debug_assert_eq!(d[deg_d], 1, "divisor must be monic");
    let mut rem = p.to_vec();
    let mut quot = vec![0i128; p.len() - deg_d];
    let mut top = rem.len();
    while top > deg_d {
        top -= 1;
        let c = rem[top];
        if c == 0 {
            continue;
        }
        rem[top] = 0;
        let shift = top - deg_d;
        quot[shift] = c;
        for (k, &dk) in d.iter().enumerate().take(deg_d) {
            let t = c.checked_mul(dk).expect(OVERFLOW_MSG);
            rem[shift + k] = rem[shift + k].checked_sub(t).expect(OVERFLOW_MSG);
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division was not exact");
    quot
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

static CYCLOTOMIC_MEMO: RwLock<Option<HashMap<u64, Arc<Vec<i128>>>>> = RwLock::new(None);

fn cyclotomic(l: u64) -> Arc<Vec<i128>> {
    if let Some(map) = CYCLOTOMIC_MEMO.read().expect("memo lock").as_ref() {
        if let Some(poly) = map.get(&l) {
            return poly.clone();
        }
    }
    let poly = Arc::new(compute_cyclotomic(l));
    let mut guard = CYCLOTOMIC_MEMO.write().expect("memo lock");
    guard
        .get_or_insert_with(HashMap::new)
        .entry(l)
        .or_insert(poly)
        .clone()
}

fn compute_cyclotomic(l: u64) -> Vec<i128> {
    assert!(l >= 1);
    if l == 1 {
        return vec![-1, 1]; // X - 1
    }
    // X^l - 1 divided by the cyclotomic polynomial of every proper divisor.
    let mut num = vec![0i128; l as usize + 1];
    num[0] = -1;
    num[l as usize] = 1;
    for d in divisors(l) {
        if d == l {
            continue;
        }
        let phi_d = cyclotomic(d);
        num = poly_div_exact(&num, &phi_d);
    }
    num
}

/// The L-th cyclotomic polynomial as ascending integer coefficients.
pub fn cyclotomic_poly(l: u64) -> Vec<i64> {
    assert!(l >= 1, "cyclotomic order must be positive");
    cyclotomic(l)
        .iter()
        .map(|&c| i64::try_from(c).expect("cyclotomic coefficient exceeds i64"))
        .collect()
}

/// Exact Fourier transform of the indicator of `e` at the point `x`, as a sum
/// of roots of unity of order the group exponent:
/// `sum_{k in e} exp(-2 pi i (sum_j x_j k_j / A_j))`.
pub fn dft_indicator(e: &PointSet, x: &Element) -> Result<ExpSum> {
    let group = e.group();
    group.ensure_same(x.group())?;
    let l = group.exponent();
    let weights: Vec<u64> = group.moduli().iter().map(|&m| l / m).collect();
    let mut sum = ExpSum::zero(l);
    for k in e.iter() {
        let mut r: u128 = 0;
        for ((&xj, &kj), (&m, &w)) in x
            .coords()
            .iter()
            .zip(k.coords())
            .zip(group.moduli().iter().zip(&weights))
        {
            let t = (xj as u128 * kj as u128) % m as u128;
            r += t * w as u128;
        }
        sum.add_root((r % l as u128) as u64);
    }
    Ok(sum)
}

/// The set of points where the transform of the indicator of `e` vanishes.
/// Never contains the identity (the value there is `|e| > 0`).
pub fn zero_set(e: &PointSet) -> Result<PointSet> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group();
    let zeros = group
        .elements()
        .filter(|x| dft_indicator(e, x).expect("same group").is_zero());
    PointSet::new(group, zeros)
}

/// An integer-valued function on a group, stored densely by element rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntFunction {
    group: Group,
    values: Vec<i64>,
}

impl IntFunction {
    pub fn zero(group: &Group) -> IntFunction {
        let n = usize::try_from(group.order()).expect("group too large for dense functions");
        IntFunction {
            group: group.clone(),
            values: vec![0; n],
        }
    }

    pub fn indicator(e: &PointSet) -> IntFunction {
        let mut f = IntFunction::zero(e.group());
        for x in e.iter() {
            f.values[e.group().rank_of(x) as usize] = 1;
        }
        f
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn value_at(&self, x: &Element) -> Result<i64> {
        self.group.ensure_same(x.group())?;
        Ok(self.values[self.group.rank_of(x) as usize])
    }

    pub(crate) fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn set_value(&mut self, x: &Element, value: i64) -> Result<()> {
        self.group.ensure_same(x.group())?;
        self.values[self.group.rank_of(x) as usize] = value;
        Ok(())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0)
    }

    /// The set where the function is nonzero.
    pub fn support(&self) -> PointSet {
        let members = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(r, _)| self.group.element_at(r as u64));
        PointSet::new(&self.group, members).expect("same group")
    }
}

/// The autocorrelation of `e`: counts for each `x` the pairs `(a, b)` in
/// `e x e` with `a - b = x`. Its value at the identity is `|e|` and its total
/// mass is `|e|^2`; its support is the difference set `e - e`.
pub fn autocorrelation(e: &PointSet) -> Result<IntFunction> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group();
    let mut f = IntFunction::zero(group);
    for a in e.iter() {
        for b in e.iter() {
            let r = group.rank_of(&a.sub(b)?) as usize;
            f.values[r] += 1;
        }
    }
    Ok(f)
}
