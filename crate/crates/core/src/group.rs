//! Closed permutation groups with a canonical element table.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the order of any group we close.
pub const DEFAULT_ORDER_CAP: usize = 2000;

/// Cayley tables up to this order are checked for associativity exhaustively;
/// larger ones on `10 * n^2` sampled triples.
pub const FULL_ASSOCIATIVITY_CAP: usize = 729;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// Multiplication table over element indices `0..order`.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    identity: usize,
}

impl CayleyTable {
    /// Validates the latin-square property, the identity row and associativity.
    pub fn new(order: usize, table: Vec<u32>, identity: usize) -> Result<CayleyTable> {
        if order == 0 || table.len() != order * order || identity >= order {
            return Err(Error::InvalidTable("shape".into()));
        }
        let t = CayleyTable {
            order,
            table,
            identity,
        };
        t.check_latin()?;
        for a in 0..order {
            if t.mul(identity, a) != a || t.mul(a, identity) != a {
                return Err(Error::InvalidTable(format!("{identity} is not an identity")));
            }
        }
        t.check_associative()?;
        Ok(t)
    }

    pub(crate) fn new_trusted(order: usize, table: Vec<u32>, identity: usize) -> CayleyTable {
        CayleyTable {
            order,
            table,
            identity,
        }
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        let mut seen = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.table[a * n + b] as usize;
                if c >= n || seen[c] == a * 2 + 1 {
                    return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
                }
                seen[c] = a * 2 + 1;
            }
        }
        let mut seen = vec![usize::MAX; n];
        for b in 0..n {
            for a in 0..n {
                let c = self.table[a * n + b] as usize;
                if seen[c] == b {
                    return Err(Error::InvalidTable(format!("column {b} is not a permutation")));
                }
                seen[c] = b;
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.order;
        let bad = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
        };
        if n <= FULL_ASSOCIATIVITY_CAP {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    let row_ab = &self.table[ab * n..(ab + 1) * n];
                    let row_b = &self.table[b * n..(b + 1) * n];
                    let row_a = &self.table[a * n..(a + 1) * n];
                    for c in 0..n {
                        if row_ab[c] != row_a[row_b[c] as usize] {
                            return Err(Error::InvalidTable(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
            for _ in 0..10 * n * n {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if bad(a, b, c) {
                    return Err(Error::InvalidTable(format!(
                        "not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Right regular representation: element `g` acts as `x -> x * g` on
    /// points `1..=order`.
    pub fn regular_perm(&self, g: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order).map(|x| self.mul(x, g) as u32).collect())
    }

    /// Converts the table into a permutation group of degree `order`.
    ///
    /// `generators` are table indices; an empty list means "all elements".
    pub fn to_group(&self, generators: &[usize], cap: usize) -> Result<Group> {
        let gens: Vec<Perm> = if generators.is_empty() {
            (0..self.order).map(|g| self.regular_perm(g)).collect()
        } else {
            generators.iter().map(|&g| self.regular_perm(g)).collect()
        };
        Group::generate_with_cap(self.order, gens, cap)
    }
}

/// A finite permutation group, immutable once closed.
///
/// Elements are sorted lexicographically by image tuple, so the identity is
/// always index 0 and every downstream bitset is reproducible.
#[derive(Clone, Debug)]
pub struct Group {
    id: u64,
    degree: usize,
    generators: Vec<Perm>,
    generator_indices: Vec<usize>,
    elements: Vec<Perm>,
    table: CayleyTable,
    inverses: Vec<u32>,
    element_orders: Vec<u32>,
    factorization: Vec<(usize, u32)>,
}

impl Group {
    /// Closure of `gens` under composition, with the default order cap.
    pub fn generate(degree: usize, gens: Vec<Perm>) -> Result<Group> {
        Group::generate_with_cap(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn generate_with_cap(degree: usize, gens: Vec<Perm>, cap: usize) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPerm("degree must be at least 1".into()));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let identity = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        let mut elements = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::OrderCap { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        elements.sort();
        Ok(Group::from_sorted_elements(degree, gens, elements))
    }

    /// `elements` must be a sorted, closed set containing every generator.
    pub(crate) fn from_sorted_elements(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>) -> Group {
        let n = elements.len();
        let base = injective_base(&elements);
        let key = |p: &Perm| -> Vec<u32> { base.iter().map(|&b| p.images()[b]).collect() };
        let index: HashMap<Vec<u32>, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (key(p), i as u32))
            .collect();
        let mut table = vec![0u32; n * n];
        let mut buf = vec![0u32; base.len()];
        for (a, pa) in elements.iter().enumerate() {
            let base_a: Vec<usize> = base.iter().map(|&b| pa.apply(b)).collect();
            for (b, pb) in elements.iter().enumerate() {
                for (slot, &x) in buf.iter_mut().zip(&base_a) {
                    *slot = pb.images()[x];
                }
                table[a * n + b] = index[&buf];
            }
        }
        let table = CayleyTable::new_trusted(n, table, 0);
        Group::from_parts(degree, gens, elements, table)
    }

    fn from_parts(degree: usize, gens: Vec<Perm>, elements: Vec<Perm>, table: CayleyTable) -> Group {
        let n = elements.len();
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table.mul(a, b) == 0 {
                    inverses[a] = b as u32;
                    break;
                }
            }
        }
        let mut element_orders = vec![1u32; n];
        for (a, slot) in element_orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table.mul(x, a);
                k += 1;
            }
            *slot = k;
        }
        let generator_indices = gens
            .iter()
            .map(|g| elements.binary_search(g).expect("generator in closure"))
            .collect();
        Group {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            degree,
            generators: gens,
            generator_indices,
            factorization: factorize(n),
            elements,
            table,
            inverses,
            element_orders,
        }
    }

    /// Subgroup materialized as a group in its own right. `members` are
    /// parent indices in increasing order; the result's element `i` is
    /// parent element `members[i]`.
    pub(crate) fn restrict(&self, members: &[usize], gen_members: &[usize]) -> Group {
        let k = members.len();
        let mut local = vec![u32::MAX; self.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i as u32;
        }
        let mut table = vec![0u32; k * k];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                table[i * k + j] = local[self.mul(a, b)];
            }
        }
        let elements = members.iter().map(|&m| self.elements[m].clone()).collect();
        let gens = gen_members.iter().map(|&g| self.elements[g].clone()).collect();
        let table = CayleyTable::new_trusted(k, table, 0);
        Group::from_parts(self.degree, gens, elements, table)
    }

    pub fn trivial(degree: usize) -> Group {
        Group::generate(degree, Vec::new()).expect("trivial group")
    }

    /// Process-unique identity used to detect mixing subgroups of different groups.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn prime_factorization(&self) -> &[(usize, u32)] {
        &self.factorization
    }

    pub fn primes(&self) -> Vec<usize> {
        self.factorization.iter().map(|&(p, _)| p).collect()
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `x^-1 a x`.
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    /// `a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k % self.element_order(a) {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_indices;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes of elements, each sorted, ordered by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![a];
            class_of[a] = id;
            let mut i = 0;
            while i < class.len() {
                let x = class[i];
                for &g in &self.generator_indices {
                    let y = self.conj(x, g);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        class.push(y);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Histogram of element orders.
    pub fn order_statistics(&self) -> std::collections::BTreeMap<usize, usize> {
        let mut h = std::collections::BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    /// True if the element tables describe the same set of permutations.
    pub fn same_elements(&self, other: &Group) -> bool {
        self.elements == other.elements
    }
}

/// Points whose images determine each element uniquely.
fn injective_base(elements: &[Perm]) -> Vec<usize> {
    let degree = elements.first().map(|p| p.degree()).unwrap_or(1);
    let mut base = Vec::new();
    let mut keys: Vec<Vec<u32>> = vec![Vec::new(); elements.len()];
    let distinct = |keys: &[Vec<u32>]| keys.iter().collect::<HashSet<_>>().len();
    if elements.len() <= 1 {
        return base;
    }
    for point in 0..degree {
        if elements.iter().all(|p| p.apply(point) == point) {
            continue;
        }
        base.push(point);
        for (k, p) in keys.iter_mut().zip(elements) {
            k.push(p.images()[point]);
        }
        if distinct(&keys) == elements.len() {
            break;
        }
    }
    base
}
