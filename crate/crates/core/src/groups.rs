//! Fourier analysis on finite abelian groups `Z/n_1 x ... x Z/n_k`.
//!
//! Elements and characters are both addressed by their mixed-radix index
//! (first coordinate most significant). Haar measure on the group is the
//! normalized counting measure, so `f^(chi) = (1/|A|) sum_x f(x) conj(chi(x))`
//! and synthesis is a plain sum over the dual. Measures carry no
//! normalization: `mu^(chi) = sum_x mu(x) conj(chi(x))`.
//!
//! Character values are looked up in a table of `L`-th roots of unity,
//! `L = lcm(n_i)`, from an exact integer phase, so the homomorphism property
//! holds to rounding.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec;
use crate::numerics::{cis, C64, ZERO};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest group order handled.
pub const MAX_ORDER: usize = 1 << 20;

#[derive(Clone)]
pub struct FiniteAbelianGroup {
    orders: Vec<usize>,
    size: usize,
    lcm: usize,
    roots: Arc<Vec<C64>>,
}

impl PartialEq for FiniteAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders
    }
}

impl Eq for FiniteAbelianGroup {}

impl Hash for FiniteAbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.orders.hash(state);
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteAbelianGroup{:?}", self.orders)
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|n| n.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FiniteAbelianGroup {
    pub fn new(orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::domain("a group needs at least one cyclic factor"));
        }
        if orders.contains(&0) {
            return Err(Error::domain("cyclic orders must be >= 1"));
        }
        let mut size: usize = 1;
        for &n in &orders {
            size = size
                .checked_mul(n)
                .filter(|&s| s <= MAX_ORDER)
                .ok_or_else(|| Error::domain(format!("group order exceeds {MAX_ORDER}")))?;
        }
        let lcm = orders.iter().fold(1, |l, &n| l / gcd(l, n) * n);
        let roots = (0..lcm).map(|k| cis(2.0 * std::f64::consts::PI * k as f64 / lcm as f64)).collect();
        Ok(FiniteAbelianGroup {
            orders,
            size,
            lcm,
            roots: Arc::new(roots),
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Parses comma-separated cyclic orders such as `"4,3,2"`.
    pub fn parse(spec: &str) -> Result<Self> {
        let orders = spec
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cyclic order {s:?} in group spec {spec:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(orders)
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.size
    }

    /// Exponent of the group (lcm of the cyclic orders).
    pub fn exponent(&self) -> usize {
        self.lcm
    }

    pub fn index_of(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.orders.len());
        tuple.iter().zip(&self.orders).fold(0, |acc, (&x, &n)| acc * n + x % n)
    }

    pub fn tuple(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.orders.len()];
        for (slot, &n) in out.iter_mut().zip(&self.orders).rev() {
            *slot = index % n;
            index /= n;
        }
        out
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.tuple(a), self.tuple(b));
        let sum: Vec<usize> = ta.iter().zip(&tb).zip(&self.orders).map(|((x, y), n)| (x + y) % n).collect();
        self.index_of(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<usize> = self.tuple(a).iter().zip(&self.orders).map(|(x, n)| (n - x) % n).collect();
        self.index_of(&t)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k * a`.
    pub fn scale(&self, k: usize, a: usize) -> usize {
        let t: Vec<usize> = self.tuple(a).iter().zip(&self.orders).map(|(x, n)| (x * (k % n)) % n).collect();
        self.index_of(&t)
    }

    /// Unit vector of the `i`-th cyclic factor.
    pub fn generator(&self, i: usize) -> usize {
        let mut t = vec![0; self.orders.len()];
        t[i] = 1 % self.orders[i];
        self.index_of(&t)
    }

    /// The dual group; character `m` is addressed like element `m`.
    pub fn dual(&self) -> FiniteAbelianGroup {
        self.clone()
    }

    /// Exact phase `sum_j m_j x_j L / n_j mod L` of character `m` at `x`.
    fn phase(&self, m: usize, x: usize) -> usize {
        let (tm, tx) = (self.tuple(m), self.tuple(x));
        let l = self.lcm;
        tm.iter()
            .zip(&tx)
            .zip(&self.orders)
            .fold(0, |acc, ((&a, &b), &n)| (acc + (a * b % n) * (l / n)) % l)
    }

    fn root(&self, phase: usize) -> C64 {
        self.roots[phase % self.lcm]
    }

    pub fn characters(&self) -> Vec<Character> {
        dual_group(self)
    }

    pub fn character(&self, freq: &[usize]) -> Result<Character> {
        if freq.len() != self.orders.len() {
            return Err(Error::domain("frequency tuple has the wrong length"));
        }
        Ok(Character {
            group: self.clone(),
            index: self.index_of(freq),
        })
    }

    pub fn trivial_character(&self) -> Character {
        Character {
            group: self.clone(),
            index: 0,
        }
    }
}

fn same_group(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> Result<()> {
    if a != b {
        return Err(Error::MixedGroups(a.orders.clone(), b.orders.clone()));
    }
    Ok(())
}

/// Character `chi_m(x) = exp(2 pi i sum_j m_j x_j / n_j)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    group: FiniteAbelianGroup,
    index: usize,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi{:?}", self.freq())
    }
}

impl Character {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Mixed-radix index of the frequency tuple.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn freq(&self) -> Vec<usize> {
        self.group.tuple(self.index)
    }

    pub fn is_trivial(&self) -> bool {
        self.index == 0
    }

    /// Exact phase in units of `1 / exponent`.
    pub fn phase(&self, x: usize) -> usize {
        self.group.phase(self.index, x)
    }

    pub fn eval(&self, x: usize) -> C64 {
        self.group.root(self.phase(x))
    }

    pub fn values(&self) -> Vec<C64> {
        (0..self.group.order()).map(|x| self.eval(x)).collect()
    }

    pub fn as_function(&self) -> GroupFunction {
        GroupFunction {
            group: self.group.clone(),
            values: self.values(),
        }
    }

    /// Pointwise product, i.e. the group law of the dual.
    pub fn product(&self, other: &Character) -> Result<Character> {
        same_group(&self.group, &other.group)?;
        Ok(Character {
            group: self.group.clone(),
            index: self.group.add(self.index, other.index),
        })
    }

    pub fn conj(&self) -> Character {
        Character {
            group: self.group.clone(),
            index: self.group.neg(self.index),
        }
    }
}

/// All characters, one per frequency tuple, in mixed-radix order.
pub fn dual_group(group: &FiniteAbelianGroup) -> Vec<Character> {
    (0..group.order())
        .map(|index| Character {
            group: group.clone(),
            index,
        })
        .collect()
}

/// Dense function on a group, indexed by element.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction {
    group: FiniteAbelianGroup,
    values: Vec<C64>,
}

impl GroupFunction {
    pub fn new(group: &FiniteAbelianGroup, values: Vec<C64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::domain(format!(
                "function has {} values but the group has {} elements",
                values.len(),
                group.order()
            )));
        }
        Ok(GroupFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn<F: Fn(usize) -> C64>(group: &FiniteAbelianGroup, f: F) -> Self {
        GroupFunction {
            group: group.clone(),
            values: (0..group.order()).map(f).collect(),
        }
    }

    pub fn zero(group: &FiniteAbelianGroup) -> Self {
        Self::from_fn(group, |_| ZERO)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn get(&self, x: usize) -> C64 {
        self.values[x]
    }

    /// `f_a(x) = f(x - a)`.
    pub fn translate(&self, a: usize) -> GroupFunction {
        let g = &self.group;
        Self::from_fn(g, |x| self.values[g.sub(x, a)])
    }

    pub fn pointwise_product(&self, other: &GroupFunction) -> Result<GroupFunction> {
        same_group(&self.group, &other.group)?;
        Ok(Self::from_fn(&self.group, |x| self.values[x] * other.values[x]))
    }

    /// `(1/|A|) sum |f|^2`.
    pub fn l2_norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / self.group.order() as f64
    }

    pub fn max_abs_diff(&self, other: &GroupFunction) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// Atomic complex measure on a group.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupMeasure {
    group: FiniteAbelianGroup,
    weights: Vec<C64>,
}

impl GroupMeasure {
    pub fn new(group: &FiniteAbelianGroup, weights: Vec<C64>) -> Result<Self> {
        if weights.len() != group.order() {
            return Err(Error::domain("measure weight vector has the wrong length"));
        }
        Ok(GroupMeasure {
            group: group.clone(),
            weights,
        })
    }

    pub fn dirac(group: &FiniteAbelianGroup, a: usize) -> Self {
        let mut weights = vec![ZERO; group.order()];
        weights[a] = C64::new(1.0, 0.0);
        GroupMeasure {
            group: group.clone(),
            weights,
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn weights(&self) -> &[C64] {
        &self.weights
    }

    pub fn total_mass(&self) -> C64 {
        self.weights.iter().sum()
    }

    pub fn total_variation(&self) -> f64 {
        self.weights.iter().map(|w| w.norm()).sum()
    }
}

/// Coefficients indexed by character.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSpectrum {
    group: FiniteAbelianGroup,
    coeffs: Vec<C64>,
}

impl GroupSpectrum {
    pub fn new(group: &FiniteAbelianGroup, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::domain("spectrum has the wrong length"));
        }
        Ok(GroupSpectrum {
            group: group.clone(),
            coeffs,
        })
    }

    /// Builds a spectrum from `(character, coefficient)` pairs; unlisted
    /// characters get zero.
    pub fn from_map<'a, I>(group: &FiniteAbelianGroup, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Character, C64)>,
    {
        let mut coeffs = vec![ZERO; group.order()];
        for (chi, c) in entries {
            same_group(group, chi.group())?;
            coeffs[chi.index()] += c;
        }
        Ok(GroupSpectrum {
            group: group.clone(),
            coeffs,
        })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn get(&self, chi: &Character) -> C64 {
        self.coeffs[chi.index()]
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn l2_norm(&self) -> f64 {
        self.energy().sqrt()
    }

    /// `sum |F(chi)|^2`.
    pub fn energy(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn max_abs_diff(&self, other: &GroupSpectrum) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// `f^(chi) = (1/|A|) sum_x f(x) conj(chi(x))`.
pub fn fourier_transform(f: &GroupFunction, chi: &Character) -> Result<C64> {
    same_group(&f.group, &chi.group)?;
    Ok(raw_pairing(&f.group, &f.values, chi.index) / f.group.order() as f64)
}

fn raw_pairing(group: &FiniteAbelianGroup, values: &[C64], m: usize) -> C64 {
    let lcm = group.exponent();
    values
        .iter()
        .enumerate()
        .map(|(x, v)| v * group.root((lcm - group.phase(m, x)) % lcm))
        .sum()
}

/// The full transform over every character.
pub fn transform(f: &GroupFunction) -> GroupSpectrum {
    let g = &f.group;
    let n = g.order() as f64;
    GroupSpectrum {
        group: g.clone(),
        coeffs: exec::map(g.order(), |m| raw_pairing(g, &f.values, m) / n),
    }
}

/// `f = sum_chi F(chi) chi`.
pub fn synthesize(spectrum: &GroupSpectrum) -> GroupFunction {
    let g = &spectrum.group;
    let values = exec::map(g.order(), |x| {
        spectrum
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| c * g.root(g.phase(m, x)))
            .sum()
    });
    GroupFunction {
        group: g.clone(),
        values,
    }
}

/// `mu^(chi) = sum_x mu(x) conj(chi(x))`.
pub fn measure_transform(mu: &GroupMeasure, chi: &Character) -> Result<C64> {
    same_group(&mu.group, &chi.group)?;
    Ok(raw_pairing(&mu.group, &mu.weights, chi.index))
}

pub fn measure_spectrum(mu: &GroupMeasure) -> GroupSpectrum {
    let g = &mu.group;
    GroupSpectrum {
        group: g.clone(),
        coeffs: exec::map(g.order(), |m| raw_pairing(g, &mu.weights, m)),
    }
}

/// Haar-normalized convolution `(f * g)(x) = (1/|A|) sum_y f(x - y) g(y)`.
pub fn convolve(f: &GroupFunction, g: &GroupFunction) -> Result<GroupFunction> {
    same_group(&f.group, &g.group)?;
    let grp = &f.group;
    let n = grp.order();
    let values = exec::map(n, |x| {
        (0..n).map(|y| f.values[grp.sub(x, y)] * g.values[y]).sum::<C64>() / n as f64
    });
    Ok(GroupFunction {
        group: grp.clone(),
        values,
    })
}

/// `(mu * nu)(z) = sum_{x + y = z} mu(x) nu(y)`.
pub fn convolve_measures(mu: &GroupMeasure, nu: &GroupMeasure) -> Result<GroupMeasure> {
    same_group(&mu.group, &nu.group)?;
    let g = &mu.group;
    let mut weights = vec![ZERO; g.order()];
    for (x, a) in mu.weights.iter().enumerate() {
        if *a == ZERO {
            continue;
        }
        for (y, b) in nu.weights.iter().enumerate() {
            weights[g.add(x, y)] += a * b;
        }
    }
    Ok(GroupMeasure {
        group: g.clone(),
        weights,
    })
}

/// Convolution on the dual: `(F * G)(phi) = sum_psi F(phi conj(psi)) G(psi)`.
/// This is the spectrum of a pointwise product.
pub fn spectral_convolution(f: &GroupSpectrum, g: &GroupSpectrum) -> Result<GroupSpectrum> {
    same_group(&f.group, &g.group)?;
    let grp = &f.group;
    let n = grp.order();
    let coeffs = exec::map(n, |phi| (0..n).map(|psi| f.coeffs[grp.sub(phi, psi)] * g.coeffs[psi]).sum());
    Ok(GroupSpectrum {
        group: grp.clone(),
        coeffs,
    })
}

/// A homomorphism stored as its full value table.
#[derive(Debug, Clone, PartialEq)]
pub struct Homomorphism {
    source: FiniteAbelianGroup,
    target: FiniteAbelianGroup,
    table: Vec<usize>,
}

impl Homomorphism {
    /// Validates `h(x + y) = h(x) + h(y)` over all pairs.
    pub fn from_table(source: &FiniteAbelianGroup, target: &FiniteAbelianGroup, table: Vec<usize>) -> Result<Self> {
        if table.len() != source.order() {
            return Err(Error::NotHomomorphism("table length differs from the source order".into()));
        }
        if let Some(&bad) = table.iter().find(|&&b| b >= target.order()) {
            return Err(Error::NotHomomorphism(format!("image index {bad} is outside the target")));
        }
        for x in 0..source.order() {
            for y in 0..source.order() {
                if table[source.add(x, y)] != target.add(table[x], table[y]) {
                    return Err(Error::NotHomomorphism(format!(
                        "h({:?} + {:?}) != h({:?}) + h({:?})",
                        source.tuple(x),
                        source.tuple(y),
                        source.tuple(x),
                        source.tuple(y)
                    )));
                }
            }
        }
        Ok(Homomorphism {
            source: source.clone(),
            target: target.clone(),
            table,
        })
    }

    /// Extends images of the standard generators linearly.
    pub fn from_generator_images(source: &FiniteAbelianGroup, target: &FiniteAbelianGroup, images: &[usize]) -> Result<Self> {
        if images.len() != source.orders().len() {
            return Err(Error::NotHomomorphism("one image per cyclic factor is required".into()));
        }
        for (&b, &n) in images.iter().zip(source.orders()) {
            if b >= target.order() || target.scale(n, b) != 0 {
                return Err(Error::NotHomomorphism(format!(
                    "image {:?} of a generator of order {n} is not killed by {n}",
                    target.tuple(b.min(target.order() - 1))
                )));
            }
        }
        let table = (0..source.order())
            .map(|x| {
                source
                    .tuple(x)
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&k, &b)| target.add(acc, target.scale(k, b)))
            })
            .collect();
        Self::from_table(source, target, table)
    }

    /// Every homomorphism `source -> target`.
    pub fn enumerate_all(source: &FiniteAbelianGroup, target: &FiniteAbelianGroup) -> Vec<Homomorphism> {
        let k = source.orders().len();
        let mut out = Vec::new();
        let mut choice = vec![0usize; k];
        loop {
            if let Ok(h) = Self::from_generator_images(source, target, &choice) {
                out.push(h);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                choice[i] += 1;
                if choice[i] < target.order() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        Homomorphism {
            source: group.clone(),
            target: group.clone(),
            table: (0..group.order()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteAbelianGroup {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `phi o h` as a character of the source.
    pub fn pullback(&self, phi: &Character) -> Result<Character> {
        same_group(&self.target, phi.group())?;
        let lb = self.target.exponent();
        let freq = self
            .source
            .orders()
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                let k = phi.phase(self.table[self.source.generator(i)]);
                // phi(h(e_i)) = e^{2 pi i k / L_B} must equal e^{2 pi i m_i / n_i}
                if !(k * n).is_multiple_of(lb) {
                    Err(Error::NotHomomorphism("pulled-back character is not well defined".into()))
                } else {
                    Ok((k * n / lb) % n)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        self.source.character(&freq)
    }
}

/// Image measure `nu(E) = mu(h^{-1}(E))`.
pub fn push_forward(mu: &GroupMeasure, h: &Homomorphism) -> Result<GroupMeasure> {
    same_group(&mu.group, &h.source)?;
    let mut weights = vec![ZERO; h.target.order()];
    for (x, w) in mu.weights.iter().enumerate() {
        weights[h.table[x]] += w;
    }
    Ok(GroupMeasure {
        group: h.target.clone(),
        weights,
    })
}

/// Subgroup stored by its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    group: FiniteAbelianGroup,
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates membership of 0 and closure under addition and negation.
    pub fn from_elements(group: &FiniteAbelianGroup, elements: &[usize]) -> Result<Self> {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        if set.iter().any(|&x| x >= group.order()) {
            return Err(Error::InvalidSubgroup("element outside the group".into()));
        }
        if !set.contains(&0) {
            return Err(Error::InvalidSubgroup("missing the identity".into()));
        }
        for &a in &set {
            if !set.contains(&group.neg(a)) {
                return Err(Error::InvalidSubgroup(format!("not closed under negation at {:?}", group.tuple(a))));
            }
            for &b in &set {
                if !set.contains(&group.add(a, b)) {
                    return Err(Error::InvalidSubgroup(format!(
                        "not closed under addition at {:?} + {:?}",
                        group.tuple(a),
                        group.tuple(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            group: group.clone(),
            elements: set.into_iter().collect(),
        })
    }

    /// Smallest subgroup containing `generators`.
    pub fn generated_by(group: &FiniteAbelianGroup, generators: &[usize]) -> Result<Self> {
        if generators.iter().any(|&x| x >= group.order()) {
            return Err(Error::InvalidSubgroup("generator outside the group".into()));
        }
        let mut seen = vec![false; group.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = group.add(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<usize> = (0..group.order()).filter(|&x| seen[x]).collect();
        Self::from_elements(group, &elements)
    }

    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        Subgroup {
            group: group.clone(),
            elements: vec![0],
        }
    }

    pub fn whole(group: &FiniteAbelianGroup) -> Self {
        Subgroup {
            group: group.clone(),
            elements: (0..group.order()).collect(),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Every subgroup, grown from the trivial one by adjoining single elements.
pub fn all_subgroups(group: &FiniteAbelianGroup) -> Vec<Subgroup> {
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(group)];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([vec![0]]);
    let mut i = 0;
    while i < found.len() {
        let base = found[i].clone();
        for a in 0..group.order() {
            if base.contains(a) {
                continue;
            }
            let mut gens = base.elements.clone();
            gens.push(a);
            let s = Subgroup::generated_by(group, &gens).expect("closure is a subgroup");
            if seen.insert(s.elements.clone()) {
                found.push(s);
            }
        }
        i += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements.cmp(&b.elements)));
    found
}

/// Characters that are identically 1 on `sub`.
pub fn annihilator(sub: &Subgroup) -> Vec<Character> {
    dual_group(&sub.group)
        .into_iter()
        .filter(|chi| sub.elements.iter().all(|&a| chi.phase(a) == 0))
        .collect()
}

/// Elements on which every listed character equals 1.
pub fn annihilator_of_characters(group: &FiniteAbelianGroup, chars: &[Character]) -> Result<Subgroup> {
    for chi in chars {
        same_group(group, chi.group())?;
    }
    let elements: Vec<usize> = (0..group.order()).filter(|&a| chars.iter().all(|chi| chi.phase(a) == 0)).collect();
    Subgroup::from_elements(group, &elements)
}

/// `f_A(b) = (1/|A|) sum_{a in A} f(a + b)`.
pub fn subgroup_average(f: &GroupFunction, sub: &Subgroup) -> Result<GroupFunction> {
    same_group(&f.group, &sub.group)?;
    let g = &f.group;
    let k = sub.order() as f64;
    Ok(GroupFunction::from_fn(g, |b| {
        sub.elements.iter().map(|&a| f.values[g.add(a, b)]).sum::<C64>() / k
    }))
}

/// Basis of the translation-invariant subspace whose transforms vanish on `zero_set`:
/// the characters outside it.
pub fn invariant_subspace_from_zero_set(group: &FiniteAbelianGroup, zero_set: &[Character]) -> Result<Vec<GroupFunction>> {
    let mut excluded = vec![false; group.order()];
    for chi in zero_set {
        same_group(group, chi.group())?;
        excluded[chi.index()] = true;
    }
    Ok(dual_group(group)
        .into_iter()
        .filter(|chi| !excluded[chi.index()])
        .map(|chi| chi.as_function())
        .collect())
}

/// Characters at which every function's transform vanishes (to `eps`).
pub fn zero_set_of_span(group: &FiniteAbelianGroup, span: &[GroupFunction], eps: f64) -> Result<Vec<Character>> {
    for f in span {
        same_group(group, &f.group)?;
    }
    let spectra: Vec<GroupSpectrum> = span.iter().map(transform).collect();
    Ok(dual_group(group)
        .into_iter()
        .filter(|chi| spectra.iter().all(|s| s.get(chi).norm() <= eps))
        .collect())
}

/// `Psi_a(phi) = phi(a)`, a character of the dual group.
pub fn evaluation_map(group: &FiniteAbelianGroup, a: usize) -> Result<Character> {
    if a >= group.order() {
        return Err(Error::domain("element outside the group"));
    }
    Ok(Character {
        group: group.dual(),
        index: a,
    })
}

/// Numerical rank by Gaussian elimination with partial pivoting.
pub fn rank(vectors: &[Vec<C64>], eps: f64) -> usize {
    let mut rows: Vec<Vec<C64>> = vectors.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let pivot = (r..rows.len()).max_by(|&i, &j| rows[i][c].norm().total_cmp(&rows[j][c].norm()));
        let Some(p) = pivot else { break };
        if rows[p][c].norm() <= eps {
            continue;
        }
        rows.swap(r, p);
        let head = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let factor = row[c] / head[c];
            for (v, h) in row.iter_mut().zip(&head).skip(c) {
                *v -= factor * h;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
