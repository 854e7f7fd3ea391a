//! Signed permutations realising the classical reflection groups.
//!
//! An element acts on `{1..n, -1..-n}` with the symmetry `w(-i) = -w(i)`, so it
//! is stored as the image vector of `1..n` with signed entries. Family `A` with
//! parameter `n` denotes the symmetric group on `{1..n}` (the Weyl group of type
//! `A_{n-1}`); family `B` is the full hyperoctahedral group; family `D` is its
//! even-sign-change subgroup.
//!
//! Element syntax used by [`parse_element`]: a juxtaposition of cycles, each
//! either bar-closed `[a,b,c]` (mapping `a -> b -> c -> -a -> ... -> a`) or
//! paired `((a,b,c))` (mapping `a -> b -> c -> a` and simultaneously
//! `-a -> -b -> -c -> -a`), with `-k` denoting the barred letter; `e` is the
//! identity. Juxtaposed cycles multiply with the rightmost factor applied first.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coxtype::{CoxType, Flavor, IrreducibleType};
use crate::error::Error;
use crate::Result;

/// Ambient classical family.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse { pos: 0, msg: format!("unknown family '{other}'") }),
        }
    }
}

/// Order of the realised group: `n!` for family A, `2^n n!` for B,
/// `2^(n-1) n!` for D.
pub fn group_order(family: Family, n: usize) -> u128 {
    let mut fact: u128 = 1;
    for t in 2..=n as u128 {
        fact *= t;
    }
    match family {
        Family::A => fact,
        Family::B => fact << n,
        Family::D => fact << (n - 1),
    }
}

/// A signed permutation of `{1..n, -1..-n}` satisfying `w(-i) = -w(i)`.
///
/// Equality, hashing and ordering ignore the optional family hint.
#[derive(Clone, Debug)]
pub struct SignedPermutation {
    n: usize,
    image: Vec<i32>,
    family_hint: Option<Family>,
}

impl PartialEq for SignedPermutation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.image == other.image
    }
}
impl Eq for SignedPermutation {}
impl std::hash::Hash for SignedPermutation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.image.hash(state);
    }
}
impl PartialOrd for SignedPermutation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for SignedPermutation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.image.cmp(&other.image))
    }
}

/// One cycle of a signed permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Cycle {
    /// `((a_1,...,a_k))`: maps `a_i -> a_{i+1}` cyclically and mirrors on bars.
    Paired(Vec<i32>),
    /// `[a_1,...,a_k]`: maps `a_1 -> ... -> a_k -> -a_1 -> ... -> -a_k -> a_1`.
    BarClosed(Vec<i32>),
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &Vec<i32>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Cycle::Paired(v) => write!(f, "(({}))", join(v)),
            Cycle::BarClosed(v) => write!(f, "[{}]", join(v)),
        }
    }
}

/// The unique decomposition of a signed permutation into disjoint paired and
/// bar-closed cycles (fixed points omitted), canonically ordered: bar-closed
/// cycles first, each kind sorted by its minimal absolute letter, each cycle
/// starting at its minimal absolute letter unbarred.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    /// Paired cycles `((a_1,...,a_k))`, one representative per mirror pair, `k >= 2`.
    pub a_cycles: Vec<Vec<i32>>,
    /// Bar-closed cycles `[a_1,...,a_k]`, `k >= 1`.
    pub b_cycles: Vec<Vec<i32>>,
}

impl CycleDecomposition {
    /// All cycles in canonical print order (bar-closed first).
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut out: Vec<Cycle> =
            self.b_cycles.iter().cloned().map(Cycle::BarClosed).collect();
        out.extend(self.a_cycles.iter().cloned().map(Cycle::Paired));
        out
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl SignedPermutation {
    /// Identity on `{1..n}`.
    pub fn identity(n: usize) -> Self {
        SignedPermutation { n, image: (1..=n as i32).collect(), family_hint: None }
    }

    /// Builds from the image vector of `1..n`; entries must form a signed
    /// bijection (absolute values a permutation of `1..n`).
    pub fn from_images(n: usize, image: Vec<i32>) -> Result<Self> {
        if image.len() != n {
            return Err(Error::NotInGroup(format!(
                "image vector has length {} but n = {n}",
                image.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &image {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(Error::NotInGroup(format!("image {image:?} is not a signed bijection")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { n, image, family_hint: None })
    }

    /// Ambient parameter `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The stored image vector of `1..n`.
    pub fn images(&self) -> &[i32] {
        &self.image
    }

    /// Attaches a family hint (metadata only; ignored by comparisons).
    pub fn with_hint(mut self, family: Family) -> Self {
        self.family_hint = Some(family);
        self
    }

    /// The recorded family hint, if any.
    pub fn family_hint(&self) -> Option<Family> {
        self.family_hint
    }

    /// Applies the permutation to a signed point `v` in `{1..n, -1..-n}`.
    pub fn apply(&self, v: i32) -> i32 {
        let a = v.unsigned_abs() as usize;
        debug_assert!(a >= 1 && a <= self.n, "point {v} out of range for n={}", self.n);
        if v > 0 {
            self.image[a - 1]
        } else {
            -self.image[a - 1]
        }
    }

    /// Number of letters `i` in `1..n` with negative image.
    pub fn negative_count(&self) -> usize {
        self.image.iter().filter(|&&v| v < 0).count()
    }

    /// Membership test for the stated family: A requires no sign changes,
    /// D an even number of them.
    pub fn in_family(&self, family: Family) -> bool {
        match family {
            Family::A => self.negative_count() == 0,
            Family::B => true,
            Family::D => self.negative_count() % 2 == 0,
        }
    }

    /// True for the identity element.
    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Group composition: `(self ∘ rhs)(i) = self(rhs(i))`, i.e. the right
    /// factor acts first.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::MismatchedRank(self.n, rhs.n));
        }
        let image = (1..=self.n as i32).map(|i| self.apply(rhs.apply(i))).collect();
        Ok(SignedPermutation { n: self.n, image, family_hint: None })
    }

    /// Group inverse.
    pub fn inverse(&self) -> Self {
        let mut image = vec![0i32; self.n];
        for i in 1..=self.n as i32 {
            let v = self.image[i as usize - 1];
            let a = v.unsigned_abs() as usize;
            image[a - 1] = if v > 0 { i } else { -i };
        }
        SignedPermutation { n: self.n, image, family_hint: None }
    }

    /// Conjugate `g self g^{-1}`.
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse())
    }

    /// The standard Coxeter element: the long cycle `(1,2,...,n)` for family A,
    /// `[1,2,...,n]` for B, and `[1,...,n-1][n]` for D (requires `n >= 2`).
    pub fn coxeter_element(family: Family, n: usize) -> Result<Self> {
        let fail = || Error::UnsupportedRank { family: family.to_string(), n };
        match family {
            Family::A => {
                if n < 1 {
                    return Err(fail());
                }
                let mut image: Vec<i32> = (2..=n as i32).collect();
                image.push(1);
                Ok(SignedPermutation { n, image, family_hint: Some(Family::A) })
            }
            Family::B => {
                if n < 1 {
                    return Err(fail());
                }
                let mut image: Vec<i32> = (2..=n as i32).collect();
                image.push(-1);
                Ok(SignedPermutation { n, image, family_hint: Some(Family::B) })
            }
            Family::D => {
                if n < 2 {
                    return Err(fail());
                }
                let mut image: Vec<i32> = (2..=(n - 1) as i32).collect();
                image.push(-1); // n-1 maps to -1, closing [1..n-1]
                image.push(-(n as i32)); // [n]
                Ok(SignedPermutation { n, image, family_hint: Some(Family::D) })
            }
        }
    }

    /// All reflections of the family: transpositions `((i,j))` for A; those plus
    /// `((i,-j))` and `[i]` for B; for D the `[i]` are excluded. Counts are
    /// `n(n-1)/2`, `n^2` and `n(n-1)` respectively.
    pub fn reflections(family: Family, n: usize) -> Result<Vec<Self>> {
        if n < 1 || (family == Family::D && n < 2) {
            return Err(Error::UnsupportedRank { family: family.to_string(), n });
        }
        let mut out = Vec::new();
        for i in 1..=n as i32 {
            for j in (i + 1)..=n as i32 {
                out.push(Self::from_cycles(n, &[Cycle::Paired(vec![i, j])])?);
                if family != Family::A {
                    out.push(Self::from_cycles(n, &[Cycle::Paired(vec![i, -j])])?);
                }
            }
            if family == Family::B {
                out.push(Self::from_cycles(n, &[Cycle::BarClosed(vec![i])])?);
            }
        }
        Ok(out)
    }

    /// Builds the product of the given cycles (rightmost factor applied first).
    /// Letters within one cycle must be distinct in absolute value.
    pub fn from_cycles(n: usize, cycles: &[Cycle]) -> Result<Self> {
        let mut acc = Self::identity(n);
        for cycle in cycles.iter().rev() {
            let single = Self::from_single_cycle(n, cycle)?;
            acc = single.compose(&acc)?;
        }
        Ok(acc)
    }

    fn from_single_cycle(n: usize, cycle: &Cycle) -> Result<Self> {
        let (letters, bar_closed) = match cycle {
            Cycle::Paired(v) => (v, false),
            Cycle::BarClosed(v) => (v, true),
        };
        if letters.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut seen = vec![false; n];
        for &v in letters {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::NotInGroup(format!("cycle letter {v} out of range 1..{n}")));
            }
            if seen[a - 1] {
                return Err(Error::NotInGroup(format!(
                    "cycle {cycle} repeats the letter {}",
                    a
                )));
            }
            seen[a - 1] = true;
        }
        let mut perm = Self::identity(n);
        let k = letters.len();
        for t in 0..k {
            let from = letters[t];
            let to = if t + 1 < k {
                letters[t + 1]
            } else if bar_closed {
                -letters[0]
            } else {
                letters[0]
            };
            // set perm(from) = to, honoring the sign symmetry
            let a = from.unsigned_abs() as usize;
            perm.image[a - 1] = if from > 0 { to } else { -to };
        }
        Ok(perm)
    }

    /// The unique cycle decomposition (fixed points omitted), canonically ordered.
    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n;
        let mut visited = vec![false; 2 * n + 1]; // index: point+n (skip 0)
        let idx = |v: i32| (v + n as i32) as usize;
        let mut a_cycles: Vec<Vec<i32>> = Vec::new();
        let mut b_cycles: Vec<Vec<i32>> = Vec::new();
        for start in 1..=n as i32 {
            if visited[idx(start)] {
                continue;
            }
            // trace the orbit of +start
            let mut orbit = vec![start];
            visited[idx(start)] = true;
            let mut cur = self.apply(start);
            while cur != start {
                orbit.push(cur);
                visited[idx(cur)] = true;
                cur = self.apply(cur);
            }
            if let Some(pos) = orbit.iter().position(|&v| v == -start) {
                // bar-closed: orbit = (a_1..a_k, -a_1..-a_k)
                b_cycles.push(orbit[..pos].to_vec());
            } else {
                // paired: mark the mirror orbit as visited too
                for &v in &orbit {
                    visited[idx(-v)] = true;
                }
                if orbit.len() >= 2 {
                    a_cycles.push(orbit);
                }
            }
        }
        // starts were taken in increasing order, so lists are already sorted by
        // minimal absolute letter and every cycle starts at it, unbarred
        CycleDecomposition { a_cycles, b_cycles }
    }

    /// Number of orbits of the underlying unsigned permutation of `{1..n}`
    /// (fixed points included).
    fn unsigned_cycle_count(&self) -> usize {
        let mut visited = vec![false; self.n + 1];
        let mut count = 0;
        for start in 1..=self.n {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = self.image[cur - 1].unsigned_abs() as usize;
            }
        }
        count
    }

    /// Minimal number of reflections of the family whose product is the element.
    ///
    /// Families A and B use closed cycle-count formulas (`n` minus the number of
    /// unsigned cycles for A; paired cycles contribute `k-1` and bar-closed
    /// cycles `k` for B); family D has no mandated closed form and is answered
    /// from a memoised breadth-first search over its reflection Cayley graph.
    /// The closed forms are cross-validated against BFS in the test suite.
    pub fn absolute_length(&self, family: Family) -> Result<u64> {
        if !self.in_family(family) {
            return Err(Error::NotInGroup(format!("{self} is not in family {family}")));
        }
        match family {
            Family::A => Ok((self.n - self.unsigned_cycle_count()) as u64),
            Family::B => {
                let dec = self.cycle_decomposition();
                let a: u64 = dec.a_cycles.iter().map(|c| c.len() as u64 - 1).sum();
                let b: u64 = dec.b_cycles.iter().map(|c| c.len() as u64).sum();
                Ok(a + b)
            }
            Family::D => {
                let table = bfs_length_table(Family::D, self.n)?;
                table
                    .get(&self.image)
                    .copied()
                    .ok_or_else(|| Error::NotInGroup(format!("{self} missing from D-length table")))
            }
        }
    }

    /// Absolute length computed purely by breadth-first search (all families);
    /// used to validate the closed forms.
    pub fn absolute_length_bfs(&self, family: Family) -> Result<u64> {
        if !self.in_family(family) {
            return Err(Error::NotInGroup(format!("{self} is not in family {family}")));
        }
        let table = bfs_length_table(family, self.n)?;
        table
            .get(&self.image)
            .copied()
            .ok_or_else(|| Error::NotInGroup(format!("{self} missing from length table")))
    }

    /// Absolute order: `u <= w` iff the lengths are additive,
    /// `len(w) = len(u) + len(u^{-1} w)`.
    pub fn le_t(&self, w: &Self, family: Family) -> Result<bool> {
        if self.n != w.n {
            return Err(Error::MismatchedRank(self.n, w.n));
        }
        let lu = self.absolute_length(family)?;
        let lw = w.absolute_length(family)?;
        if lu > lw {
            return Ok(false);
        }
        let quot = self.inverse().compose(w)?;
        Ok(lw == lu + quot.absolute_length(family)?)
    }

    /// The fine cycle-structure type: for family B each paired cycle of length
    /// `k >= 2` contributes `A_{k-1}` and each bar-closed cycle of length `k`
    /// contributes `B_k`; for family D the bar-closed cycles must number 0, or 2
    /// with one of length 1, the latter pair contributing `D_k` where `k` is
    /// their joint length.
    pub fn combinatorial_type(&self, family: Family) -> Result<CoxType> {
        if !self.in_family(family) {
            return Err(Error::NotInGroup(format!("{self} is not in family {family}")));
        }
        let dec = self.cycle_decomposition();
        let mut comps: Vec<IrreducibleType> = Vec::new();
        for c in &dec.a_cycles {
            comps.push(IrreducibleType::A(c.len() as u32 - 1));
        }
        match family {
            Family::B => {
                for c in &dec.b_cycles {
                    comps.push(IrreducibleType::B(c.len() as u32));
                }
            }
            Family::D => match dec.b_cycles.len() {
                0 => {}
                2 => {
                    let (l1, l2) = (dec.b_cycles[0].len(), dec.b_cycles[1].len());
                    if l1 != 1 && l2 != 1 {
                        return Err(Error::UnpairedBCycles(self.to_string()));
                    }
                    comps.push(IrreducibleType::D((l1 + l2) as u32));
                }
                _ => return Err(Error::UnpairedBCycles(self.to_string())),
            },
            Family::A => {
                return Err(Error::FlavorUnavailable(
                    "combinatorial types are defined for families B and D only".into(),
                ))
            }
        }
        CoxType::new(comps, Flavor::Combinatorial)
    }

    /// The group-theoretic type of an element below the Coxeter element: the
    /// fine type with `B_1 -> A_1`, `D_2 -> A_1^2`, `D_3 -> A_3` applied; for
    /// family A, the partition of unsigned cycle lengths (`A_{k-1}` per cycle).
    pub fn parabolic_type(&self, family: Family) -> Result<CoxType> {
        let c = Self::coxeter_element(family, self.n)?;
        if !self.le_t(&c, family)? {
            return Err(Error::NotBelowCoxeter(self.to_string()));
        }
        match family {
            Family::A => {
                let dec = self.cycle_decomposition();
                let comps = dec
                    .a_cycles
                    .iter()
                    .map(|cy| IrreducibleType::A(cy.len() as u32 - 1))
                    .collect();
                CoxType::new(comps, Flavor::Group)
            }
            Family::B | Family::D => Ok(self.combinatorial_type(family)?.normalize_to_group()),
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_decomposition())
    }
}

/// All elements of the realised group, in lexicographic image order.
pub fn all_elements(family: Family, n: usize) -> Result<Vec<SignedPermutation>> {
    if n < 1 || (family == Family::D && n < 2) {
        return Err(Error::UnsupportedRank { family: family.to_string(), n });
    }
    let mut out = Vec::new();
    let mut current: Vec<i32> = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        family: Family,
        n: usize,
        current: &mut Vec<i32>,
        used: &mut Vec<bool>,
        out: &mut Vec<SignedPermutation>,
    ) {
        if current.len() == n {
            let p = SignedPermutation::from_images(n, current.clone()).expect("valid by build");
            if p.in_family(family) {
                out.push(p);
            }
            return;
        }
        for a in 1..=n {
            if used[a] {
                continue;
            }
            used[a] = true;
            current.push(a as i32);
            rec(family, n, current, used, out);
            current.pop();
            if family != Family::A {
                current.push(-(a as i32));
                rec(family, n, current, used, out);
                current.pop();
            }
            used[a] = false;
        }
    }
    rec(family, n, &mut current, &mut used, &mut out);
    Ok(out)
}

type LengthTable = Arc<HashMap<Vec<i32>, u64>>;

fn bfs_cache() -> &'static Mutex<HashMap<(Family, usize), LengthTable>> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), LengthTable>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Distance table from the identity in the reflection Cayley graph, computed
/// once per (family, n) and shared.
pub fn bfs_length_table(family: Family, n: usize) -> Result<LengthTable> {
    if let Some(t) = bfs_cache().lock().unwrap().get(&(family, n)) {
        return Ok(t.clone());
    }
    let reflections = SignedPermutation::reflections(family, n)?;
    let mut dist: HashMap<Vec<i32>, u64> = HashMap::new();
    let id = SignedPermutation::identity(n);
    dist.insert(id.images().to_vec(), 0);
    let mut frontier = vec![id];
    let mut level = 0u64;
    while !frontier.is_empty() {
        level += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for t in &reflections {
                let wt = w.compose(t).expect("same rank");
                if !dist.contains_key(wt.images()) {
                    dist.insert(wt.images().to_vec(), level);
                    next.push(wt);
                }
            }
        }
        frontier = next;
    }
    let table: LengthTable = Arc::new(dist);
    bfs_cache().lock().unwrap().insert((family, n), table.clone());
    Ok(table)
}

/// Parses the element syntax (see module docs) over `{1..n}`.
pub fn parse_element(s: &str, n: usize) -> Result<SignedPermutation> {
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let parse_int = |pos: &mut usize| -> Result<i32> {
        skip_ws(pos);
        let start = *pos;
        if *pos < chars.len() && chars[*pos] == '-' {
            *pos += 1;
        }
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start || (chars[start] == '-' && *pos == start + 1) {
            return Err(Error::Parse { pos: start, msg: "expected an integer".into() });
        }
        chars[start..*pos]
            .iter()
            .collect::<String>()
            .parse::<i32>()
            .map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    };
    let parse_letters = |pos: &mut usize, close: &str| -> Result<Vec<i32>> {
        let mut letters = Vec::new();
        loop {
            letters.push(parse_int(pos)?);
            skip_ws(pos);
            if *pos < chars.len() && chars[*pos] == ',' {
                *pos += 1;
                continue;
            }
            break;
        }
        skip_ws(pos);
        for expected in close.chars() {
            if *pos >= chars.len() || chars[*pos] != expected {
                return Err(Error::Parse { pos: *pos, msg: format!("expected '{close}'") });
            }
            *pos += 1;
        }
        Ok(letters)
    };

    let mut cycles: Vec<Cycle> = Vec::new();
    skip_ws(&mut pos);
    if pos < chars.len() && chars[pos] == 'e' {
        pos += 1;
        skip_ws(&mut pos);
        if pos != chars.len() {
            return Err(Error::Parse { pos, msg: "trailing input after 'e'".into() });
        }
        return Ok(SignedPermutation::identity(n));
    }
    while pos < chars.len() {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        match chars[pos] {
            '[' => {
                pos += 1;
                let letters = parse_letters(&mut pos, "]")?;
                cycles.push(Cycle::BarClosed(letters));
            }
            '(' => {
                if pos + 1 >= chars.len() || chars[pos + 1] != '(' {
                    return Err(Error::Parse { pos, msg: "expected '(('".into() });
                }
                pos += 2;
                let letters = parse_letters(&mut pos, "))")?;
                cycles.push(Cycle::Paired(letters));
            }
            other => {
                return Err(Error::Parse { pos, msg: format!("unexpected character '{other}'") })
            }
        }
    }
    if cycles.is_empty() {
        return Err(Error::Parse { pos, msg: "empty element".into() });
    }
    SignedPermutation::from_cycles(n, &cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> SignedPermutation {
        parse_element(s, n).unwrap()
    }

    #[test]
    fn compose_identity_and_inverse_laws() {
        let w = perm("[2,6,8]((1,-9,-10))((4,5))", 10);
        let id = SignedPermutation::identity(10);
        assert_eq!(w.compose(&id).unwrap(), w);
        assert_eq!(id.compose(&w).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), id);
        assert_eq!(w.inverse().compose(&w).unwrap(), id);
    }

    #[test]
    fn square_of_bar_closed_2_cycle() {
        // [1,2]^2 maps 1 -> -1 and 2 -> -2
        let c = perm("[1,2]", 2);
        let sq = c.compose(&c).unwrap();
        assert_eq!(sq, perm("[1][2]", 2));
        assert_eq!(sq.images(), &[-1, -2]);
    }

    #[test]
    fn coxeter_elements() {
        assert_eq!(SignedPermutation::coxeter_element(Family::B, 3).unwrap(), perm("[1,2,3]", 3));
        assert_eq!(
            SignedPermutation::coxeter_element(Family::D, 4).unwrap(),
            perm("[1,2,3][4]", 4)
        );
        assert_eq!(
            SignedPermutation::coxeter_element(Family::A, 3).unwrap(),
            perm("((1,2,3))", 3)
        );
        assert!(SignedPermutation::coxeter_element(Family::D, 1).is_err());
    }

    #[test]
    fn reflection_counts() {
        assert_eq!(SignedPermutation::reflections(Family::B, 2).unwrap().len(), 4);
        assert_eq!(SignedPermutation::reflections(Family::D, 4).unwrap().len(), 12);
        assert_eq!(SignedPermutation::reflections(Family::A, 3).unwrap().len(), 3);
    }

    #[test]
    fn cycle_decomposition_example() {
        let w = perm("[2,6,8]((1,-9,-10))((4,5))", 10);
        let dec = w.cycle_decomposition();
        assert_eq!(dec.b_cycles, vec![vec![2, 6, 8]]);
        assert_eq!(dec.a_cycles, vec![vec![1, -9, -10], vec![4, 5]]);
        assert_eq!(w.to_string(), "[2,6,8]((1,-9,-10))((4,5))");
    }

    #[test]
    fn cycle_decomposition_identity_and_sign_flip() {
        assert_eq!(SignedPermutation::identity(3).to_string(), "e");
        let w = perm("[1]", 3);
        let dec = w.cycle_decomposition();
        assert!(dec.a_cycles.is_empty());
        assert_eq!(dec.b_cycles, vec![vec![1]]);
    }

    #[test]
    fn decomposition_round_trips_exhaustively_b3() {
        for w in all_elements(Family::B, 3).unwrap() {
            let dec = w.cycle_decomposition();
            let back = SignedPermutation::from_cycles(3, &dec.cycles()).unwrap();
            assert_eq!(back, w, "round trip failed for {w}");
        }
    }

    #[test]
    fn absolute_length_examples() {
        let c = SignedPermutation::coxeter_element(Family::B, 4).unwrap();
        assert_eq!(c.absolute_length(Family::B).unwrap(), 4);
        assert_eq!(SignedPermutation::identity(4).absolute_length(Family::B).unwrap(), 0);
        let cd = SignedPermutation::coxeter_element(Family::D, 4).unwrap();
        assert_eq!(cd.absolute_length(Family::D).unwrap(), 4);
    }

    #[test]
    fn closed_length_formulas_match_bfs() {
        for n in 1..=4usize {
            for w in all_elements(Family::A, n).unwrap() {
                assert_eq!(
                    w.absolute_length(Family::A).unwrap(),
                    w.absolute_length_bfs(Family::A).unwrap(),
                    "family A, {w}"
                );
            }
        }
        for n in 1..=3usize {
            for w in all_elements(Family::B, n).unwrap() {
                assert_eq!(
                    w.absolute_length(Family::B).unwrap(),
                    w.absolute_length_bfs(Family::B).unwrap(),
                    "family B, {w}"
                );
            }
        }
    }

    #[test]
    fn le_t_basics() {
        let c = SignedPermutation::coxeter_element(Family::B, 2).unwrap();
        let id = SignedPermutation::identity(2);
        assert!(id.le_t(&c, Family::B).unwrap());
        assert!(c.le_t(&c, Family::B).unwrap());
        // (1,-1)(2,-2) has length 2 but is not below [1,2]
        let w = perm("[1][2]", 2);
        assert_eq!(w.absolute_length(Family::B).unwrap(), 2);
        assert!(!w.le_t(&c, Family::B).unwrap());
    }

    #[test]
    fn combinatorial_types() {
        let w = perm("[1]((2,3))", 3);
        assert_eq!(w.combinatorial_type(Family::B).unwrap().to_string(), "A1*B1");
        assert_eq!(
            SignedPermutation::identity(3).combinatorial_type(Family::B).unwrap().to_string(),
            "e"
        );
        let d = perm("[1,2,3][4]", 4);
        assert_eq!(d.combinatorial_type(Family::D).unwrap().to_string(), "D4");
        // four bar-closed cycles: not a supported shape for D
        let bad = perm("[1][2][3][4]", 4);
        assert!(matches!(bad.combinatorial_type(Family::D), Err(Error::UnpairedBCycles(_))));
    }

    #[test]
    fn parabolic_types() {
        let w = perm("[1]", 2);
        assert_eq!(w.parabolic_type(Family::B).unwrap().to_string(), "A1");
        let d3 = perm("[1,2][3]", 3);
        assert_eq!(d3.parabolic_type(Family::D).unwrap().to_string(), "A3");
        assert_eq!(
            SignedPermutation::identity(3).parabolic_type(Family::B).unwrap().to_string(),
            "e"
        );
        // [1][2] in B_2 is not below the Coxeter element
        let w = perm("[1][2]", 2);
        assert!(matches!(w.parabolic_type(Family::B), Err(Error::NotBelowCoxeter(_))));
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(Family::A, 4), 24);
        assert_eq!(group_order(Family::B, 3), 48);
        assert_eq!(group_order(Family::D, 4), 192);
        assert_eq!(all_elements(Family::D, 4).unwrap().len(), 192);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_element("[1,2", 3).is_err());
        assert!(parse_element("((1,2)", 3).is_err());
        assert!(parse_element("[1,1]", 3).is_err());
        assert!(parse_element("[4]", 3).is_err());
        assert!(parse_element("x", 3).is_err());
    }
}
