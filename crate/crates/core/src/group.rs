//! Finite abelian product groups `Z_{A_1} x ... x Z_{A_N}`, their elements,
//! and finite point sets with exact modular arithmetic.
//!
//! Everything here is immutable after construction. Elements are stored fully
//! reduced, so equality and ordering are plain coordinatewise comparison and
//! point sets iterate in lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug)]
struct GroupRepr {
    moduli: Vec<u64>,
    exponent: u64,
    order: u64,
}

/// A finite abelian group presented as an ordered product of cyclic factors.
///
/// Groups compare by their modulus sequence: `Z_4 x Z_2` and `Z_2 x Z_4` are
/// distinct, and no isomorphism identification is ever applied. Clones share
/// the underlying representation.
#[derive(Clone)]
pub struct Group(Arc<GroupRepr>);

impl Group {
    /// Builds the group from its cyclic moduli `(A_1, ..., A_N)`.
    pub fn new(moduli: &[u64]) -> Result<Group> {
        if moduli.is_empty() {
            return Err(Error::EmptyModuli);
        }
        let mut exponent: u64 = 1;
        let mut order: u64 = 1;
        for &m in moduli {
            if m == 0 {
                return Err(Error::ZeroModulus);
            }
            exponent = exponent.lcm(&m);
            order = order.checked_mul(m).ok_or(Error::OrderOverflow)?;
        }
        Ok(Group(Arc::new(GroupRepr {
            moduli: moduli.to_vec(),
            exponent,
            order,
        })))
    }

    pub fn moduli(&self) -> &[u64] {
        &self.0.moduli
    }

    /// Number of cyclic factors.
    pub fn factor_count(&self) -> usize {
        self.0.moduli.len()
    }

    /// `|G|`, the product of the moduli.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// The group exponent `L = lcm(A_1, ..., A_N)`.
    pub fn exponent(&self) -> u64 {
        self.0.exponent
    }

    /// The identity element.
    pub fn zero(&self) -> Element {
        Element {
            group: self.clone(),
            coords: vec![0; self.factor_count()],
        }
    }

    /// Builds an element from signed coordinates, reducing each modulo `A_j`.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.factor_count() {
            return Err(Error::CoordArity {
                expected: self.factor_count(),
                got: coords.len(),
            });
        }
        let reduced = coords
            .iter()
            .zip(self.moduli())
            .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
            .collect();
        Ok(Element {
            group: self.clone(),
            coords: reduced,
        })
    }

    pub(crate) fn element_from_reduced(&self, coords: Vec<u64>) -> Element {
        debug_assert!(coords.iter().zip(self.moduli()).all(|(&c, &m)| c < m));
        Element {
            group: self.clone(),
            coords,
        }
    }

    /// Lexicographic rank of reduced coordinates, in `0..order`.
    pub(crate) fn rank_of_coords(&self, coords: &[u64]) -> u64 {
        let mut rank = 0u64;
        for (&c, &m) in coords.iter().zip(self.moduli()) {
            rank = rank * m + c;
        }
        rank
    }

    /// Rank of an element in the lexicographic enumeration of the group.
    pub fn rank_of(&self, e: &Element) -> u64 {
        debug_assert!(self.same_as(&e.group));
        self.rank_of_coords(&e.coords)
    }

    /// Inverse of [`Group::rank_of`].
    pub fn element_at(&self, rank: u64) -> Element {
        assert!(rank < self.order(), "rank {rank} out of range");
        let mut coords = vec![0u64; self.factor_count()];
        let mut r = rank;
        for j in (0..self.factor_count()).rev() {
            let m = self.moduli()[j];
            coords[j] = r % m;
            r /= m;
        }
        Element {
            group: self.clone(),
            coords,
        }
    }

    /// Iterates over all group elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(move |r| self.element_at(r))
    }

    /// The whole group as a point set.
    pub fn full_set(&self) -> PointSet {
        PointSet {
            group: self.clone(),
            members: self.elements().collect(),
        }
    }

    pub(crate) fn same_as(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.moduli() == other.moduli()
    }

    pub(crate) fn ensure_same(&self, other: &Group) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::MismatchedGroups {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}
impl Eq for Group {}

impl PartialOrd for Group {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Group {
    fn cmp(&self, other: &Self) -> Ordering {
        self.moduli().cmp(other.moduli())
    }
}

impl Hash for Group {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.moduli().hash(state);
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli().iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({self})")
    }
}

/// A group element, stored as fully reduced residue coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    group: Group,
    coords: Vec<u64>,
}

impl Element {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinatewise sum modulo the moduli.
    pub fn add(&self, other: &Element) -> Result<Element> {
        self.group.ensure_same(&other.group)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.group.moduli())
            .map(|((&a, &b), &m)| (a + b) % m)
            .collect();
        Ok(Element {
            group: self.group.clone(),
            coords,
        })
    }

    /// Coordinatewise difference modulo the moduli.
    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.group.ensure_same(&other.group)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.group.moduli())
            .map(|((&a, &b), &m)| (a + m - b) % m)
            .collect();
        Ok(Element {
            group: self.group.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> Element {
        let coords = self
            .coords
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &m)| (m - a) % m)
            .collect();
        Element {
            group: self.group.clone(),
            coords,
        }
    }

    /// The scalar multiple `n . x`, coordinatewise.
    pub fn scaled(&self, n: u64) -> Element {
        let coords = self
            .coords
            .iter()
            .zip(self.group.moduli())
            .map(|(&a, &m)| ((a as u128 * n as u128) % m as u128) as u64)
            .collect();
        Element {
            group: self.group.clone(),
            coords,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A duplicate-free finite subset of a group, iterated in lexicographic order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointSet {
    group: Group,
    members: BTreeSet<Element>,
}

impl PointSet {
    /// Collects elements into a set, rejecting elements of another group.
    pub fn new(group: &Group, elements: impl IntoIterator<Item = Element>) -> Result<PointSet> {
        let mut members = BTreeSet::new();
        for e in elements {
            group.ensure_same(&e.group)?;
            members.insert(e);
        }
        Ok(PointSet {
            group: group.clone(),
            members,
        })
    }

    /// Builds a set from signed coordinate tuples; duplicates collapse.
    pub fn from_coords(group: &Group, coords: &[Vec<i64>]) -> Result<PointSet> {
        let elements: Result<Vec<Element>> = coords.iter().map(|c| group.element(c)).collect();
        PointSet::new(group, elements?)
    }

    pub fn empty(group: &Group) -> PointSet {
        PointSet {
            group: group.clone(),
            members: BTreeSet::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.members.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.members.iter()
    }

    /// `{s - r : s in self, r in other}` as a duplicate-free set.
    pub fn difference_set(&self, other: &PointSet) -> Result<PointSet> {
        self.group.ensure_same(&other.group)?;
        let mut members = BTreeSet::new();
        for s in &self.members {
            for r in &other.members {
                members.insert(s.sub(r)?);
            }
        }
        Ok(PointSet {
            group: self.group.clone(),
            members,
        })
    }

    /// The translate `self + g`.
    pub fn translate(&self, g: &Element) -> Result<PointSet> {
        self.group.ensure_same(&g.group)?;
        let members: Result<BTreeSet<Element>> = self.members.iter().map(|e| e.add(g)).collect();
        Ok(PointSet {
            group: self.group.clone(),
            members: members?,
        })
    }

    /// The pointwise negation `-self`.
    pub fn negated(&self) -> PointSet {
        PointSet {
            group: self.group.clone(),
            members: self.members.iter().map(|e| e.neg()).collect(),
        }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// A coordinatewise embedding `Z_{A'_1} x ... x Z_{A'_N} -> Z_{A_1} x ... x Z_{A_N}`
/// sending the `j`-th unit vector to `s_j` times the `j`-th unit vector.
///
/// With `d_j = gcd(A_j, s_j)` the image of factor `j` is the subgroup generated
/// by `s_j`, of order `A'_j = A_j / d_j`. The reverse direction restricts a
/// character of the big group to the image: `lambda_j -> s'_j * lambda_j mod A'_j`
/// where `s'_j = s_j / d_j`.
#[derive(Clone, Debug)]
pub struct CoordEmbedding {
    domain: Group,
    codomain: Group,
    steps: Vec<u64>,
    cofactors: Vec<u64>,
}

impl CoordEmbedding {
    /// Builds the embedding into `codomain` with per-coordinate steps `s_j`
    /// (reduced modulo the moduli first).
    pub fn new(codomain: &Group, steps: &[u64]) -> Result<CoordEmbedding> {
        if steps.len() != codomain.factor_count() {
            return Err(Error::CoordArity {
                expected: codomain.factor_count(),
                got: steps.len(),
            });
        }
        let mut reduced = Vec::with_capacity(steps.len());
        let mut domain_moduli = Vec::with_capacity(steps.len());
        let mut cofactors = Vec::with_capacity(steps.len());
        for (&s, &m) in steps.iter().zip(codomain.moduli()) {
            let s = s % m;
            let d = m.gcd(&s); // gcd(m, 0) = m, so s = 0 yields the trivial factor
            reduced.push(s);
            domain_moduli.push(m / d);
            cofactors.push(s / d);
        }
        Ok(CoordEmbedding {
            domain: Group::new(&domain_moduli)?,
            codomain: codomain.clone(),
            steps: reduced,
            cofactors,
        })
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    /// The reduced steps `s_j`.
    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    /// The units `s'_j = s_j / gcd(A_j, s_j)` used by character restriction.
    pub fn cofactors(&self) -> &[u64] {
        &self.cofactors
    }

    /// Maps `x` in the domain to `(s_1 x_1, ..., s_N x_N)` in the codomain.
    pub fn embed(&self, x: &Element) -> Result<Element> {
        self.domain.ensure_same(x.group())?;
        let coords = x
            .coords()
            .iter()
            .zip(&self.steps)
            .zip(self.codomain.moduli())
            .map(|((&c, &s), &m)| ((c as u128 * s as u128) % m as u128) as u64)
            .collect();
        Ok(self.codomain.element_from_reduced(coords))
    }

    pub fn embed_set(&self, s: &PointSet) -> Result<PointSet> {
        let elements: Result<Vec<Element>> = s.iter().map(|e| self.embed(e)).collect();
        PointSet::new(&self.codomain, elements?)
    }

    /// The image of the whole domain: the subgroup generated coordinatewise.
    pub fn image(&self) -> PointSet {
        let elements: Vec<Element> = self
            .domain
            .elements()
            .map(|x| self.embed(&x).expect("domain element"))
            .collect();
        PointSet::new(&self.codomain, elements).expect("codomain elements")
    }

    /// Restricts a character of the codomain to the image subgroup, expressed
    /// as a character of the domain: `lambda_j -> s'_j lambda_j mod A'_j`.
    pub fn restrict_character(&self, lambda: &Element) -> Result<Element> {
        self.codomain.ensure_same(lambda.group())?;
        let coords = lambda
            .coords()
            .iter()
            .zip(&self.cofactors)
            .zip(self.domain.moduli())
            .map(|((&c, &s), &m)| ((c as u128 * s as u128) % m as u128) as u64)
            .collect();
        Ok(self.domain.element_from_reduced(coords))
    }

    /// Restricts every character in `lambda`; distinct characters may collapse.
    pub fn restrict_set(&self, lambda: &PointSet) -> Result<PointSet> {
        let elements: Result<Vec<Element>> =
            lambda.iter().map(|e| self.restrict_character(e)).collect();
        PointSet::new(&self.domain, elements?)
    }
}

/// The subgroup generated by `e`, as an explicit point set (closure under
/// addition of the generators and the identity).
pub fn subgroup_closure(e: &PointSet) -> Result<PointSet> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group().clone();
    let mut members: BTreeSet<Element> = BTreeSet::new();
    members.insert(group.zero());
    let mut frontier: Vec<Element> = vec![group.zero()];
    while let Some(x) = frontier.pop() {
        for g in e.iter() {
            let y = x.add(g)?;
            if members.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    PointSet::new(&group, members)
}

/// The subgroup generated by `e` in coordinatewise product form.
///
/// Per coordinate `j` the generated cyclic subgroup is `<d_j>` with
/// `d_j = gcd(A_j, all j-th coordinates of e)`, abstractly `Z_{A_j / d_j}`.
/// Returns that abstract group together with the embedding `n_j -> n_j d_j`.
/// Fails with [`Error::NotProductForm`] when the closure of `e` is a proper
/// subgroup of the coordinatewise product (e.g. a diagonal).
pub fn subgroup_generated(e: &PointSet) -> Result<(Group, CoordEmbedding)> {
    if e.is_empty() {
        return Err(Error::EmptySet);
    }
    let group = e.group();
    let mut steps: Vec<u64> = group.moduli().to_vec();
    for x in e.iter() {
        for (s, &c) in steps.iter_mut().zip(x.coords()) {
            *s = s.gcd(&c);
        }
    }
    let embedding = CoordEmbedding::new(group, &steps)?;
    let closure = subgroup_closure(e)?;
    if closure.len() as u64 != embedding.domain().order() {
        return Err(Error::NotProductForm);
    }
    Ok((embedding.domain().clone(), embedding))
}

/// Groups a translation-closed family of sets into translation classes.
///
/// Each class is represented by its lexicographically least translate
/// containing the identity. Returns the sorted representatives and the
/// number of distinct classes.
pub fn translation_class_representatives(sets: &[PointSet]) -> (Vec<PointSet>, usize) {
    let mut reps: BTreeSet<PointSet> = BTreeSet::new();
    for s in sets {
        if s.is_empty() {
            reps.insert(s.clone());
            continue;
        }
        let rep = s
            .iter()
            .map(|t| s.translate(&t.neg()).expect("same group"))
            .min()
            .expect("nonempty");
        reps.insert(rep);
    }
    let count = reps.len();
    (reps.into_iter().collect(), count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(group: &Group, coords: &[&[i64]]) -> PointSet {
        let coords: Vec<Vec<i64>> = coords.iter().map(|c| c.to_vec()).collect();
        PointSet::from_coords(group, &coords).unwrap()
    }

    #[test]
    fn make_group_computes_exponent_and_order() {
        let g = Group::new(&[4, 2]).unwrap();
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.order(), 8);
        let h = Group::new(&[6]).unwrap();
        assert_eq!(h.exponent(), 6);
        assert_eq!(h.order(), 6);
    }

    #[test]
    fn make_group_rejects_bad_moduli() {
        assert_eq!(Group::new(&[]).unwrap_err(), Error::EmptyModuli);
        assert_eq!(Group::new(&[0]).unwrap_err(), Error::ZeroModulus);
        assert_eq!(Group::new(&[4, 0, 2]).unwrap_err(), Error::ZeroModulus);
    }

    #[test]
    fn element_arithmetic_reduces_coordinatewise() {
        let g = Group::new(&[4, 2]).unwrap();
        let x = g.element(&[3, 1]).unwrap();
        let y = g.element(&[2, 1]).unwrap();
        assert_eq!(x.add(&y).unwrap(), g.element(&[1, 0]).unwrap());

        let z6 = Group::new(&[6]).unwrap();
        let one = z6.element(&[1]).unwrap();
        let two = z6.element(&[2]).unwrap();
        assert_eq!(one.sub(&two).unwrap(), z6.element(&[5]).unwrap());
        assert!(x.sub(&x).unwrap().is_identity());
    }

    #[test]
    fn element_ops_reject_mismatched_groups() {
        let g = Group::new(&[4]).unwrap();
        let h = Group::new(&[6]).unwrap();
        let x = g.element(&[1]).unwrap();
        let y = h.element(&[1]).unwrap();
        assert!(matches!(
            x.add(&y),
            Err(Error::MismatchedGroups { .. })
        ));
    }

    #[test]
    fn negative_coordinates_reduce() {
        let g = Group::new(&[6]).unwrap();
        assert_eq!(g.element(&[-1]).unwrap(), g.element(&[5]).unwrap());
    }

    #[test]
    fn rank_roundtrip_is_lexicographic() {
        let g = Group::new(&[3, 2]).unwrap();
        let all: Vec<Element> = g.elements().collect();
        assert_eq!(all.len(), 6);
        // lexicographic odometer: (0,0),(0,1),(1,0),(1,1),(2,0),(2,1)
        assert_eq!(all[0], g.zero());
        assert_eq!(all[1], g.element(&[0, 1]).unwrap());
        assert_eq!(all[2], g.element(&[1, 0]).unwrap());
        for (r, e) in all.iter().enumerate() {
            assert_eq!(g.rank_of(e), r as u64);
            assert_eq!(&g.element_at(r as u64), e);
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn difference_set_examples() {
        let z4 = Group::new(&[4]).unwrap();
        let s = pts(&z4, &[&[0], &[1]]);
        let d = s.difference_set(&s).unwrap();
        assert_eq!(d, pts(&z4, &[&[0], &[1], &[3]]));

        let z22 = Group::new(&[2, 2]).unwrap();
        let s = pts(&z22, &[&[0, 0], &[1, 0]]);
        let d = s.difference_set(&s).unwrap();
        assert_eq!(d, pts(&z22, &[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn difference_set_matches_brute_expansion() {
        // oracle: expand all 9 differences of [3] in Z_6 directly
        let z6 = Group::new(&[6]).unwrap();
        let s = pts(&z6, &[&[0], &[1], &[2]]);
        let mut expanded = BTreeSet::new();
        for a in 0..3i64 {
            for b in 0..3i64 {
                expanded.insert((a - b).rem_euclid(6));
            }
        }
        assert_eq!(expanded, BTreeSet::from([0, 1, 2, 4, 5]));
        let d = s.difference_set(&s).unwrap();
        let got: BTreeSet<i64> = d.iter().map(|e| e.coords()[0] as i64).collect();
        assert_eq!(got, expanded);
    }

    #[test]
    fn difference_set_contains_identity_and_is_symmetric() {
        let g = Group::new(&[5, 3]).unwrap();
        let s = pts(&g, &[&[0, 0], &[1, 2], &[4, 1]]);
        let d = s.difference_set(&s).unwrap();
        assert!(d.contains(&g.zero()));
        assert_eq!(d.negated(), d);
    }

    #[test]
    fn subgroup_of_even_residues() {
        // {0,2} in Z_8 generates Z_4 embedded as n -> 2n
        let z8 = Group::new(&[8]).unwrap();
        let e = pts(&z8, &[&[0], &[2]]);
        let (sub, emb) = subgroup_generated(&e).unwrap();
        assert_eq!(sub.moduli(), &[4]);
        assert_eq!(emb.steps(), &[2]);
        let image = emb.image();
        assert_eq!(image, pts(&z8, &[&[0], &[2], &[4], &[6]]));
        // image closed under addition
        for a in image.iter() {
            for b in image.iter() {
                assert!(image.contains(&a.add(b).unwrap()));
            }
        }
    }

    #[test]
    fn subgroup_of_identity_is_trivial() {
        let z6 = Group::new(&[6]).unwrap();
        let e = pts(&z6, &[&[0]]);
        let (sub, _) = subgroup_generated(&e).unwrap();
        assert_eq!(sub.moduli(), &[1]);
        assert_eq!(sub.order(), 1);
    }

    #[test]
    fn subgroup_of_product_progressions() {
        // {0,3} x {0,1} in Z_6 x Z_2 generates Z_2 x Z_2.
        // oracle: closure of {(3,0),(0,1)} enumerated directly
        let g = Group::new(&[6, 2]).unwrap();
        let e = pts(&g, &[&[0, 0], &[3, 0], &[0, 1], &[3, 1]]);
        let closure = subgroup_closure(&e).unwrap();
        assert_eq!(closure.len(), 4);
        let (sub, emb) = subgroup_generated(&e).unwrap();
        assert_eq!(sub.moduli(), &[2, 2]);
        assert_eq!(emb.image(), closure);
        // Lagrange
        assert_eq!(g.order() % sub.order(), 0);
    }

    #[test]
    fn diagonal_is_not_product_form() {
        let g = Group::new(&[2, 2]).unwrap();
        let e = pts(&g, &[&[1, 1]]);
        assert_eq!(subgroup_generated(&e).unwrap_err(), Error::NotProductForm);
    }

    #[test]
    fn subgroup_rejects_empty() {
        let g = Group::new(&[4]).unwrap();
        let e = PointSet::empty(&g);
        assert_eq!(subgroup_generated(&e).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn character_restriction_follows_steps() {
        let z8 = Group::new(&[8]).unwrap();
        let emb = CoordEmbedding::new(&z8, &[2]).unwrap();
        assert_eq!(emb.domain().moduli(), &[4]);
        assert_eq!(emb.cofactors(), &[1]);
        let lam = z8.element(&[5]).unwrap();
        assert_eq!(
            emb.restrict_character(&lam).unwrap(),
            emb.domain().element(&[1]).unwrap()
        );
    }

    #[test]
    fn translation_classes_collapse_translates() {
        let z4 = Group::new(&[4]).unwrap();
        let sets = vec![pts(&z4, &[&[0], &[2]]), pts(&z4, &[&[1], &[3]])];
        let (reps, count) = translation_class_representatives(&sets);
        assert_eq!(count, 1);
        assert_eq!(reps, vec![pts(&z4, &[&[0], &[2]])]);
    }
}
