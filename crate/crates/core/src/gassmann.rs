//! Explicit matrix groups `GL_n(F_q)/S` for a scalar subgroup `S`, the
//! vector and covector stabilizer subgroups, and the Gassmann test: equal
//! permutation characters on `G/H` and `G/H'` while `H` and `H'` are not
//! conjugate.
//!
//! Groups are enumerated in full. Elements are addressed by their position
//! in the canonical element list.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finite_field::{FieldDesc, FieldElement};

/// Default bound on `|GL_n(F_q)/S|`.
pub const DEFAULT_CAP: usize = 1_000_000;

/// An `n x n` matrix over `F_q`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatElem {
    n: usize,
    entries: Vec<FieldElement>,
}

impl MatElem {
    pub fn new(n: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != n * n || n == 0 {
            return Err(Error::InvalidInput(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = MatElem { n, entries };
        if m.inverse().is_none() {
            return Err(Error::InvalidInput("matrix is singular".into()));
        }
        Ok(m)
    }

    pub fn identity(field: &FieldDesc, n: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        MatElem { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &FieldElement {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    fn field(&self) -> &FieldDesc {
        self.entries[0].field()
    }

    pub fn mul(&self, other: &MatElem) -> MatElem {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.get(i, 0) * other.get(0, j);
                for k in 1..n {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                entries.push(acc);
            }
        }
        MatElem { n, entries }
    }

    pub fn scale(&self, c: &FieldElement) -> MatElem {
        MatElem {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Gauss–Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<MatElem> {
        let n = self.n;
        let field = self.field().clone();
        let mut a = self.entries.clone();
        let mut b = MatElem::identity(&field, n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|r| !a[r * n + col].is_zero())?;
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
                b.swap(pivot * n + k, col * n + k);
            }
            let inv = a[col * n + col].inv().ok()?;
            for k in 0..n {
                a[col * n + k] = &a[col * n + k] * &inv;
                b[col * n + k] = &b[col * n + k] * &inv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for k in 0..n {
                    a[r * n + k] = &a[r * n + k] - &(&factor * &a[col * n + k]);
                    b[r * n + k] = &b[r * n + k] - &(&factor * &b[col * n + k]);
                }
            }
        }
        Some(MatElem { n, entries: b })
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(v[0].field().zero(), |acc, k| {
                    &acc + &(self.get(i, k) * &v[k])
                })
            })
            .collect()
    }

    /// `w M` for a row vector `w`.
    pub fn apply_right(&self, w: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.n)
            .map(|j| {
                (0..self.n).fold(w[0].field().zero(), |acc, k| {
                    &acc + &(&w[k] * self.get(k, j))
                })
            })
            .collect()
    }
}

impl fmt::Display for MatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j).to_string().replace(' ', ""))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The scalar subgroup `S` of `F_q^*` to quotient by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarSubgroup {
    Trivial,
    Generated(FieldElement),
}

/// Scalars in `S`, their count, and the data to pick canonical coset
/// representatives `gamma^j` (`0 <= j < s`) of `S` in `F_q^*`.
struct Scalars {
    members: Vec<FieldElement>,
    gamma: FieldElement,
    /// Index of `S` in `F_q^*`.
    cosets: u64,
    /// `log_gamma`, keyed by element index.
    log: HashMap<u64, u64>,
}

impl Scalars {
    fn new(field: &FieldDesc, spec: &ScalarSubgroup) -> Result<Self> {
        let gen = match spec {
            ScalarSubgroup::Trivial => field.one(),
            ScalarSubgroup::Generated(s) => {
                if s.field() != field {
                    return Err(Error::InvalidSubgroup(
                        "scalar generator lives in another field".into(),
                    ));
                }
                if s.is_zero() {
                    return Err(Error::InvalidSubgroup(
                        "0 does not generate a subgroup of F_q^*".into(),
                    ));
                }
                s.clone()
            }
        };
        let order = gen.multiplicative_order();
        let members: Vec<_> = (0..order).map(|k| gen.pow(k)).collect();
        let gamma = field.primitive_element();
        let mut log = HashMap::new();
        let mut acc = field.one();
        for k in 0..field.order() - 1 {
            log.insert(acc.index(), k);
            acc = &acc * &gamma;
        }
        Ok(Scalars {
            members,
            gamma,
            cosets: (field.order() - 1) / order,
            log,
        })
    }

    fn contains(&self, c: &FieldElement) -> bool {
        !c.is_zero() && self.log[&c.index()].is_multiple_of(self.cosets)
    }

    /// The member of `S*M` whose first nonzero entry is a transversal element.
    fn canonical(&self, m: MatElem) -> MatElem {
        if self.members.len() == 1 {
            return m;
        }
        let first = m.entries.iter().find(|e| !e.is_zero()).expect("invertible");
        let k = self.log[&first.index()];
        let excess = k - k % self.cosets;
        if excess == 0 {
            return m;
        }
        let q1 = self.gamma.field().order() - 1;
        m.scale(&self.gamma.pow(q1 - excess))
    }
}

struct GroupInner {
    n: usize,
    field: FieldDesc,
    scalars: Scalars,
    elements: Vec<MatElem>,
    index: HashMap<MatElem, usize>,
    inverses: Vec<usize>,
    identity: usize,
    classes: OnceLock<ConjugacyClasses>,
}

/// `GL_n(F_q)/S`, stored as canonical coset representatives.
#[derive(Clone)]
pub struct MatGroup(Arc<GroupInner>);

/// Conjugacy classes: `(representative, size)` pairs plus the class of every element.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<(usize, usize)>,
    pub class_of: Vec<usize>,
}

fn gl_order(n: usize, q: u64) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (0..n).map(|i| qn - (q as u128).pow(i as u32)).product()
}

fn vector_from_index(field: &FieldDesc, n: usize, mut index: u64) -> Vec<FieldElement> {
    let q = field.order();
    let mut v = vec![field.zero(); n];
    for slot in v.iter_mut().rev() {
        *slot = field.from_index(index % q);
        index /= q;
    }
    v
}

/// Reduces `v` against an echelon basis; returns the residual.
fn residual(basis: &[(usize, Vec<FieldElement>)], v: &[FieldElement]) -> Vec<FieldElement> {
    let mut r = v.to_vec();
    for (pivot, b) in basis {
        if r[*pivot].is_zero() {
            continue;
        }
        let c = r[*pivot].clone();
        for (x, y) in r.iter_mut().zip(b) {
            *x = &*x - &(&c * y);
        }
    }
    r
}

fn enumerate_rows(
    n: usize,
    vectors: &[Vec<FieldElement>],
    rows: &mut Vec<FieldElement>,
    basis: &mut Vec<(usize, Vec<FieldElement>)>,
    out: &mut Vec<MatElem>,
) {
    if basis.len() == n {
        out.push(MatElem {
            n,
            entries: rows.clone(),
        });
        return;
    }
    for v in vectors {
        let r = residual(basis, v);
        let Some(pivot) = r.iter().position(|e| !e.is_zero()) else {
            continue;
        };
        let inv = r[pivot].inv().unwrap();
        let normalized: Vec<_> = r.iter().map(|e| e * &inv).collect();
        rows.extend(v.iter().cloned());
        basis.push((pivot, normalized));
        enumerate_rows(n, vectors, rows, basis, out);
        basis.pop();
        rows.truncate(rows.len() - n);
    }
}

impl MatGroup {
    /// Enumerates `GL_n(F_q)/S` with the default cap.
    pub fn build_gl(n: usize, field: &FieldDesc, s: &ScalarSubgroup) -> Result<Self> {
        MatGroup::build_gl_with_cap(n, field, s, DEFAULT_CAP)
    }

    pub fn build_gl_with_cap(
        n: usize,
        field: &FieldDesc,
        s: &ScalarSubgroup,
        cap: usize,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dimension must be at least 1".into()));
        }
        let scalars = Scalars::new(field, s)?;
        let order = gl_order(n, field.order()) / scalars.members.len() as u128;
        if order > cap as u128 {
            return Err(Error::CapExceeded { order, cap });
        }
        let vectors: Vec<_> = (0..field.order().pow(n as u32))
            .map(|i| vector_from_index(field, n, i))
            .collect();
        let mut all = Vec::new();
        enumerate_rows(n, &vectors, &mut Vec::new(), &mut Vec::new(), &mut all);
        let elements: Vec<MatElem> = all
            .into_iter()
            .filter(|m| scalars.canonical(m.clone()) == *m)
            .collect();
        debug_assert_eq!(elements.len() as u128, order);
        let index: HashMap<MatElem, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let identity = index[&MatElem::identity(field, n)];
        let inverses = elements
            .iter()
            .map(|m| index[&scalars.canonical(m.inverse().expect("invertible"))])
            .collect();
        let group = MatGroup(Arc::new(GroupInner {
            n,
            field: field.clone(),
            scalars,
            elements,
            index,
            inverses,
            identity,
            classes: OnceLock::new(),
        }));
        group.spot_check_closure()?;
        Ok(group)
    }

    fn spot_check_closure(&self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let size = self.order();
        for _ in 0..100 {
            let (a, b) = (rng.random_range(0..size), rng.random_range(0..size));
            let prod = self
                .0
                .scalars
                .canonical(self.0.elements[a].mul(&self.0.elements[b]));
            let Some(&c) = self.0.index.get(&prod) else {
                return Err(Error::InvalidSubgroup("group is not closed".into()));
            };
            if self.mul(c, self.inverse(c)) != self.0.identity {
                return Err(Error::InvalidSubgroup("inverse table is wrong".into()));
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.0.n
    }

    pub fn field(&self) -> &FieldDesc {
        &self.0.field
    }

    pub fn scalar_subgroup(&self) -> &[FieldElement] {
        &self.0.scalars.members
    }

    /// Index `s` of the scalar subgroup in `F_q^*`.
    pub fn scalar_index(&self) -> u64 {
        self.0.scalars.cosets
    }

    pub fn element(&self, i: usize) -> &MatElem {
        &self.0.elements[i]
    }

    pub fn elements(&self) -> &[MatElem] {
        &self.0.elements
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    /// Position of the class of `m`.
    pub fn index_of(&self, m: &MatElem) -> Option<usize> {
        self.0
            .index
            .get(&self.0.scalars.canonical(m.clone()))
            .copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.0.elements[a].mul(&self.0.elements[b]);
        self.0.index[&self.0.scalars.canonical(prod)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.0.inverses[a]
    }

    /// `x g x^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inverse(x))
    }

    pub fn same_group(&self, other: &MatGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Conjugacy classes by brute-force orbit computation; cached.
    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.0.classes.get_or_init(|| {
            let size = self.order();
            let mut class_of = vec![usize::MAX; size];
            let mut classes = Vec::new();
            for g in 0..size {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let id = classes.len();
                let mut count = 0;
                for x in 0..size {
                    let c = self.conjugate(g, x);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        count += 1;
                    }
                }
                classes.push((g, count));
            }
            ConjugacyClasses { classes, class_of }
        })
    }
}

impl fmt::Debug for MatGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GL_{}(F_{})/S, |S| = {}, order {}",
            self.0.n,
            self.0.field.order(),
            self.0.scalars.members.len(),
            self.order()
        )
    }
}

/// A subgroup given by its member positions in the parent.
#[derive(Clone)]
pub struct Subgroup {
    parent: MatGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    /// Elements of `parent` satisfying `pred`; closure is verified exhaustively.
    pub fn from_predicate(parent: &MatGroup, pred: impl Fn(&MatElem) -> bool) -> Result<Self> {
        let members: Vec<usize> = (0..parent.order())
            .filter(|i| pred(parent.element(*i)))
            .collect();
        Subgroup::from_members(parent, members)
    }

    pub fn from_members(parent: &MatGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            mask[m] = true;
        }
        if !mask[parent.identity()] {
            return Err(Error::InvalidSubgroup("identity missing".into()));
        }
        for &a in &members {
            if !mask[parent.inverse(a)] {
                return Err(Error::InvalidSubgroup("not closed under inverses".into()));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(Error::InvalidSubgroup("not closed under products".into()));
                }
            }
        }
        if !parent.order().is_multiple_of(members.len()) {
            return Err(Error::InvalidSubgroup("order does not divide |G|".into()));
        }
        Ok(Subgroup {
            parent: parent.clone(),
            members,
            mask,
        })
    }

    /// The whole parent group.
    pub fn whole(parent: &MatGroup) -> Self {
        Subgroup {
            parent: parent.clone(),
            members: (0..parent.order()).collect(),
            mask: vec![true; parent.order()],
        }
    }

    pub fn parent(&self) -> &MatGroup {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    /// `x H x^-1`.
    pub fn conjugated_by(&self, x: usize) -> Subgroup {
        let members = self
            .members
            .iter()
            .map(|h| self.parent.conjugate(*h, x))
            .collect();
        Subgroup::from_members(&self.parent, members).expect("conjugate of a subgroup")
    }

    /// Coset id of every element of the parent, for left cosets `xH`, and one
    /// representative per coset.
    pub fn left_cosets(&self) -> (Vec<usize>, Vec<usize>) {
        let g = &self.parent;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &h in &self.members {
                coset_of[g.mul(x, h)] = reps.len();
            }
            reps.push(x);
        }
        (coset_of, reps)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "subgroup of order {} in {:?}", self.order(), self.parent)
    }
}

/// The `example1` construction in `GL_2(F_p)`, `p > 2`:
/// `H = [[1, *], [0, *]]` and `H' = [[*, *], [0, 1]]`.
pub fn example1_subgroups(field: &FieldDesc) -> Result<(Subgroup, Subgroup)> {
    if !field.is_prime_field() || field.characteristic() <= 2 {
        return Err(Error::InvalidInput(
            "example1 needs a prime field F_p with p > 2".into(),
        ));
    }
    let g = MatGroup::build_gl(2, field, &ScalarSubgroup::Trivial)?;
    let h = Subgroup::from_predicate(&g, |m| m.get(0, 0).is_one() && m.get(1, 0).is_zero())?;
    let h2 = Subgroup::from_predicate(&g, |m| m.get(1, 0).is_zero() && m.get(1, 1).is_one())?;
    Ok((h, h2))
}

/// Stabilizer of the `S`-orbit of the column vector `v` under `M -> M v`.
pub fn vector_stabilizer(g: &MatGroup, v: &[FieldElement]) -> Result<Subgroup> {
    let scalars = &g.0.scalars;
    Subgroup::from_predicate(g, |m| proportional_in(scalars, &m.apply(v), v))
}

/// Stabilizer of the `S`-orbit of the row vector `w` under `w -> w M`.
pub fn covector_stabilizer(g: &MatGroup, w: &[FieldElement]) -> Result<Subgroup> {
    let scalars = &g.0.scalars;
    Subgroup::from_predicate(g, |m| proportional_in(scalars, &m.apply_right(w), w))
}

/// True when `u = c v` for some `c` in `S`.
fn proportional_in(scalars: &Scalars, u: &[FieldElement], v: &[FieldElement]) -> bool {
    let Some(k) = v.iter().position(|e| !e.is_zero()) else {
        return false;
    };
    let c = &u[k] / &v[k];
    scalars.contains(&c) && u.iter().zip(v).all(|(a, b)| *a == &c * b)
}

/// Stabilizers of `S e_1` (first column) and of `S e_n^T` (last row).
pub fn stabilizer_pair(g: &MatGroup) -> Result<(Subgroup, Subgroup)> {
    let n = g.dim();
    if n < 2 {
        return Err(Error::InvalidInput("stabilizer pair needs n >= 2".into()));
    }
    let field = g.field();
    let unit = |k: usize| -> Vec<FieldElement> {
        (0..n)
            .map(|i| if i == k { field.one() } else { field.zero() })
            .collect()
    };
    Ok((
        vector_stabilizer(g, &unit(0))?,
        covector_stabilizer(g, &unit(n - 1))?,
    ))
}

/// Fixed points of each class representative on `G/H`, in class order.
pub fn permutation_character_fixpoints(g: &MatGroup, h: &Subgroup) -> Result<Vec<usize>> {
    if !h.parent().same_group(g) {
        return Err(Error::InvalidSubgroup("H is not a subgroup of G".into()));
    }
    let (coset_of, reps) = h.left_cosets();
    Ok(g.conjugacy_classes()
        .classes
        .iter()
        .map(|&(c, _)| {
            reps.iter()
                .filter(|&&x| coset_of[g.mul(c, x)] == coset_of[x])
                .count()
        })
        .collect())
}

/// Whether `x H x^-1 = K` for some `x` in `G`, by exhaustive search.
pub fn are_conjugate(h: &Subgroup, k: &Subgroup) -> bool {
    if h.order() != k.order() || !h.parent().same_group(k.parent()) {
        return false;
    }
    let g = h.parent();
    (0..g.order()).any(|x| h.members().iter().all(|&m| k.contains(g.conjugate(m, x))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixpointRow {
    pub class_rep: MatElem,
    pub class_size: usize,
    pub fix_h: usize,
    pub fix_h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GassmannCertificate {
    pub is_gassmann: bool,
    pub is_nontrivial: bool,
    /// `|G|/|H|`.
    pub index: usize,
    pub fixpoint_table: Vec<FixpointRow>,
}

impl GassmannCertificate {
    /// `class_rep class_size fix_H fix_H'` rows and the verdict line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.fixpoint_table {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                r.class_rep, r.class_size, r.fix_h, r.fix_h2
            ));
        }
        out.push_str(&format!(
            "gassmann={} nontrivial={} index={}\n",
            self.is_gassmann, self.is_nontrivial, self.index
        ));
        out
    }
}

/// Compares the permutation characters of `G` on `G/H` and `G/H'` class by
/// class, and tests `H`, `H'` for conjugacy.
pub fn verify_gassmann(g: &MatGroup, h: &Subgroup, h2: &Subgroup) -> Result<GassmannCertificate> {
    if !h.parent().same_group(g) || !h2.parent().same_group(g) {
        return Err(Error::InvalidSubgroup(
            "subgroups of different groups".into(),
        ));
    }
    let fix_h = permutation_character_fixpoints(g, h)?;
    let fix_h2 = permutation_character_fixpoints(g, h2)?;
    let fixpoint_table: Vec<FixpointRow> = g
        .conjugacy_classes()
        .classes
        .iter()
        .zip(fix_h.iter().zip(&fix_h2))
        .map(|(&(rep, size), (&a, &b))| FixpointRow {
            class_rep: g.element(rep).clone(),
            class_size: size,
            fix_h: a,
            fix_h2: b,
        })
        .collect();
    let is_gassmann = fix_h == fix_h2;
    let is_nontrivial = is_gassmann && !are_conjugate(h, h2);
    Ok(GassmannCertificate {
        is_gassmann,
        is_nontrivial,
        index: h.index(),
        fixpoint_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldDesc {
        FieldDesc::prime(p).unwrap()
    }

    fn gl(n: usize, field: &FieldDesc) -> MatGroup {
        MatGroup::build_gl(n, field, &ScalarSubgroup::Trivial).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(gl(2, &f(3)).order(), 48);
        assert_eq!(gl(2, &FieldDesc::galois(2, 2).unwrap()).order(), 180);
        assert_eq!(gl(1, &f(3)).order(), 2);
        for (n, field) in [
            (2, f(2)),
            (2, f(3)),
            (2, FieldDesc::galois(2, 2).unwrap()),
            (3, f(2)),
        ] {
            assert_eq!(gl(n, &field).order() as u128, gl_order(n, field.order()));
        }
    }

    #[test]
    fn quotient_by_scalars() {
        let f5 = f(5);
        // S = {1, 4} has index 2 in F_5^*
        let g = MatGroup::build_gl(2, &f5, &ScalarSubgroup::Generated(f5.from_int(4))).unwrap();
        assert_eq!(g.order(), 240);
        assert_eq!(g.scalar_index(), 2);
        let minus_one = MatElem::identity(&f5, 2).scale(&f5.from_int(4));
        assert_eq!(g.index_of(&minus_one), Some(g.identity()));
        assert!(MatGroup::build_gl(2, &f5, &ScalarSubgroup::Generated(f5.zero())).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let err = MatGroup::build_gl_with_cap(2, &f(5), &ScalarSubgroup::Trivial, 100).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                order: 480,
                cap: 100
            }
        );
    }

    #[test]
    fn class_counts() {
        let g = gl(2, &f(3));
        let cc = g.conjugacy_classes();
        assert_eq!(cc.classes.len(), 8);
        assert_eq!(cc.classes.iter().map(|c| c.1).sum::<usize>(), 48);
        assert!(cc.classes.contains(&(g.identity(), 1)));
        let g1 = gl(1, &f(3));
        assert_eq!(g1.conjugacy_classes().classes, vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn example1() {
        let (h, h2) = example1_subgroups(&f(3)).unwrap();
        assert_eq!((h.order(), h.index()), (6, 8));
        assert_eq!(h2.order(), 6);
        let g = h.parent().clone();
        let cert = verify_gassmann(&g, &h, &h2).unwrap();
        assert!(cert.is_gassmann && cert.is_nontrivial);
        assert_eq!(cert.index, 8);
        let (h5, _) = example1_subgroups(&f(5)).unwrap();
        assert_eq!((h5.parent().order(), h5.order(), h5.index()), (480, 20, 24));
        assert!(example1_subgroups(&f(2)).is_err());
        assert!(example1_subgroups(&FieldDesc::galois(3, 2).unwrap()).is_err());
    }

    #[test]
    fn trivial_triples() {
        let (h, _) = example1_subgroups(&f(3)).unwrap();
        let g = h.parent().clone();
        let cert = verify_gassmann(&g, &h, &h).unwrap();
        assert!(cert.is_gassmann && !cert.is_nontrivial);

        let g2 = gl(2, &f(2));
        let (a, b) = stabilizer_pair(&g2).unwrap();
        let cert = verify_gassmann(&g2, &a, &b).unwrap();
        assert!(cert.is_gassmann && !cert.is_nontrivial);
    }

    #[test]
    fn whole_group_character() {
        let g = gl(2, &f(3));
        let fix = permutation_character_fixpoints(&g, &Subgroup::whole(&g)).unwrap();
        assert!(fix.iter().all(|v| *v == 1));
    }

    #[test]
    fn stabilizer_indices() {
        for (n, field, expected) in [
            (2, f(3), 8),
            (2, FieldDesc::galois(2, 2).unwrap(), 15),
            (3, f(2), 7),
        ] {
            let g = gl(n, &field);
            let (h, h2) = stabilizer_pair(&g).unwrap();
            assert_eq!(h.index(), expected);
            assert_eq!(h2.index(), expected);
        }
        assert!(stabilizer_pair(&gl(1, &f(3))).is_err());
    }

    #[test]
    fn stabilizers_reproduce_example1() {
        let (h, h2) = example1_subgroups(&f(3)).unwrap();
        let g = h.parent().clone();
        let (s, s2) = stabilizer_pair(&g).unwrap();
        assert_eq!(s.members(), h.members());
        assert!(are_conjugate(&s2, &h2));
    }

    #[test]
    fn rejects_non_subgroups() {
        let g = gl(2, &f(3));
        assert!(Subgroup::from_predicate(&g, |m| m.get(0, 0).is_one()).is_err());
        let other = gl(2, &f(3));
        let (h, h2) = stabilizer_pair(&other).unwrap();
        assert!(verify_gassmann(&g, &h, &h2).is_err());
    }

    #[test]
    fn certificate_rendering() {
        let g = gl(2, &f(2));
        let (h, h2) = stabilizer_pair(&g).unwrap();
        let text = verify_gassmann(&g, &h, &h2).unwrap().render();
        assert_eq!(
            text,
            "[[0,1],[1,0]]\t3\t1\t1\n[[0,1],[1,1]]\t2\t0\t0\n[[1,0],[0,1]]\t1\t3\t3\n\
             gassmann=true nontrivial=false index=3\n"
        );
    }

    fn fixpoint_oracle(g: &MatGroup, h: &Subgroup) -> Vec<usize> {
        let cc = g.conjugacy_classes();
        cc.classes
            .iter()
            .enumerate()
            .map(|(id, &(_, size))| {
                let meet = h
                    .members()
                    .iter()
                    .filter(|m| cc.class_of[**m] == id)
                    .count();
                g.order() * meet / (h.order() * size)
            })
            .collect()
    }

    fn nontrivial_cases() -> Vec<(MatGroup, Subgroup, Subgroup, usize)> {
        let (h, h2) = example1_subgroups(&f(3)).unwrap();
        let mut out = vec![(h.parent().clone(), h, h2, 8)];
        for (n, field, index) in [(2, FieldDesc::galois(2, 2).unwrap(), 15), (3, f(2), 7)] {
            let g = gl(n, &field);
            let (a, b) = stabilizer_pair(&g).unwrap();
            out.push((g, a, b, index));
        }
        out
    }

    #[test]
    fn nontrivial_certificates() {
        for (g, h, h2, index) in nontrivial_cases() {
            let cert = verify_gassmann(&g, &h, &h2).unwrap();
            assert!(cert.is_gassmann && cert.is_nontrivial, "{g:?}");
            assert_eq!(h.order(), h2.order());
            assert_eq!(cert.index, index);
        }
    }

    #[test]
    fn fixpoints_match_class_formula() {
        for (g, h, h2, _) in nontrivial_cases() {
            assert_eq!(
                permutation_character_fixpoints(&g, &h).unwrap(),
                fixpoint_oracle(&g, &h)
            );
            assert_eq!(
                permutation_character_fixpoints(&g, &h2).unwrap(),
                fixpoint_oracle(&g, &h2)
            );
        }
    }

    #[test]
    fn burnside_average_is_one() {
        for (g, h, _, _) in nontrivial_cases() {
            let fix = permutation_character_fixpoints(&g, &h).unwrap();
            let total: usize = g
                .conjugacy_classes()
                .classes
                .iter()
                .zip(&fix)
                .map(|(c, v)| c.1 * v)
                .sum();
            assert_eq!(total, g.order());
        }
    }

    #[test]
    fn stabilizer_choice_is_immaterial() {
        for (n, field) in [(2, f(3)), (2, FieldDesc::galois(2, 2).unwrap())] {
            let g = gl(n, &field);
            let (h, h2) = stabilizer_pair(&g).unwrap();
            let q = field.order();
            for idx in 1..q.pow(n as u32) {
                let v = vector_from_index(&field, n, idx);
                assert!(are_conjugate(&vector_stabilizer(&g, &v).unwrap(), &h));
                assert!(are_conjugate(&covector_stabilizer(&g, &v).unwrap(), &h2));
            }
        }
    }

    #[test]
    fn quotient_stabilizers_stay_gassmann() {
        let f5 = f(5);
        let g = MatGroup::build_gl(2, &f5, &ScalarSubgroup::Generated(f5.from_int(4))).unwrap();
        let (h, h2) = stabilizer_pair(&g).unwrap();
        let cert = verify_gassmann(&g, &h, &h2).unwrap();
        assert!(cert.is_gassmann);
        assert_eq!(cert.index, 12);
    }
}
