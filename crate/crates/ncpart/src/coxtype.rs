//! Canonical (possibly reducible) Coxeter types in group-theoretic and
//! combinatorial flavors, with rank, normalisation and a parse/print grammar.
//!
//! Grammar: `Irr ::= A<k> | B<k> | D<k> | I2(<a>) | H3 | H4 | F4 | E6 | E7 | E8`,
//! `Type ::= e | Irr('^'<p>)? ('*' Irr('^'<p>)?)*`. The dihedral parameter may be
//! the literal `a` (written `I2(a)`) when the value is kept symbolic.

use std::fmt;

use crate::error::Error;
use crate::Result;

/// One irreducible type component.
///
/// For `I2`, parameter `0` encodes the symbolic dihedral parameter (printed
/// `I2(a)`); concrete dihedral types require parameter at least 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum IrreducibleType {
    A(u32),
    B(u32),
    D(u32),
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl IrreducibleType {
    /// Coxeter rank of the component.
    pub fn rank(&self) -> u32 {
        match self {
            IrreducibleType::A(k) | IrreducibleType::B(k) | IrreducibleType::D(k) => *k,
            IrreducibleType::I2(_) => 2,
            IrreducibleType::H3 => 3,
            IrreducibleType::H4 | IrreducibleType::F4 => 4,
            IrreducibleType::E6 => 6,
            IrreducibleType::E7 => 7,
            IrreducibleType::E8 => 8,
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            IrreducibleType::A(_) => Ok(()), // A_0 is dropped by CoxType::new
            IrreducibleType::B(k) => {
                if *k >= 1 {
                    Ok(())
                } else {
                    Err(Error::InvalidType("B0 is out of range".into()))
                }
            }
            IrreducibleType::D(k) => {
                if *k >= 2 {
                    Ok(())
                } else {
                    Err(Error::InvalidType(format!("D{k} is out of range")))
                }
            }
            IrreducibleType::I2(a) => {
                if *a == 0 || *a >= 3 {
                    Ok(())
                } else {
                    Err(Error::InvalidType(format!("I2({a}) is out of range")))
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleType::A(k) => write!(f, "A{k}"),
            IrreducibleType::B(k) => write!(f, "B{k}"),
            IrreducibleType::D(k) => write!(f, "D{k}"),
            IrreducibleType::I2(0) => write!(f, "I2(a)"),
            IrreducibleType::I2(a) => write!(f, "I2({a})"),
            IrreducibleType::H3 => write!(f, "H3"),
            IrreducibleType::H4 => write!(f, "H4"),
            IrreducibleType::F4 => write!(f, "F4"),
            IrreducibleType::E6 => write!(f, "E6"),
            IrreducibleType::E7 => write!(f, "E7"),
            IrreducibleType::E8 => write!(f, "E8"),
        }
    }
}

/// Whether a type uses the fine cycle-structure classification (combinatorial,
/// where `B1`, `D2`, `D3` are kept distinct) or the group-theoretic one (where
/// `B1 = A1`, `D2 = A1^2`, `D3 = A3`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Flavor {
    Group,
    Combinatorial,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Group => write!(f, "group"),
            Flavor::Combinatorial => write!(f, "comb"),
        }
    }
}

/// A multiset of irreducible components in a fixed flavor, kept sorted so that
/// equal multisets compare equal. The empty multiset is the rank-0 type,
/// printed `e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CoxType {
    components: Vec<IrreducibleType>,
    flavor: Flavor,
}

impl CoxType {
    /// Builds a type from components. `A0` components are dropped; group flavor
    /// applies the identifications `B1 -> A1`, `D2 -> A1^2`, `D3 -> A3` so a
    /// group-flavored value never stores those combinatorial-only components.
    pub fn new(components: Vec<IrreducibleType>, flavor: Flavor) -> Result<Self> {
        let mut out: Vec<IrreducibleType> = Vec::with_capacity(components.len());
        for c in components {
            c.validate()?;
            if c == IrreducibleType::A(0) {
                continue;
            }
            if flavor == Flavor::Group {
                match c {
                    IrreducibleType::B(1) => out.push(IrreducibleType::A(1)),
                    IrreducibleType::D(2) => {
                        out.push(IrreducibleType::A(1));
                        out.push(IrreducibleType::A(1));
                    }
                    IrreducibleType::D(3) => out.push(IrreducibleType::A(3)),
                    other => out.push(other),
                }
            } else {
                out.push(c);
            }
        }
        out.sort();
        Ok(CoxType { components: out, flavor })
    }

    /// The empty (rank-0) type.
    pub fn empty(flavor: Flavor) -> Self {
        CoxType { components: Vec::new(), flavor }
    }

    /// Single-component type.
    pub fn single(t: IrreducibleType, flavor: Flavor) -> Result<Self> {
        Self::new(vec![t], flavor)
    }

    /// Sorted component list.
    pub fn components(&self) -> &[IrreducibleType] {
        &self.components
    }

    /// Flavor tag.
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Sum of component ranks.
    pub fn rank(&self) -> u32 {
        self.components.iter().map(|c| c.rank()).sum()
    }

    /// True for the rank-0 type.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Applies the identifications `B1 -> A1`, `D2 -> A1^2`, `D3 -> A3` and tags
    /// the result as group-theoretic. Rank is preserved.
    pub fn normalize_to_group(&self) -> Self {
        Self::new(self.components.clone(), Flavor::Group)
            .expect("components were already validated")
    }

    /// Re-tags the multiset with a flavor (applying group identifications when
    /// converting to group flavor).
    pub fn with_flavor(&self, flavor: Flavor) -> Self {
        Self::new(self.components.clone(), flavor).expect("components were already validated")
    }

    /// Multiplicities of the `A_k` components for `k = 1..=upto`
    /// (index 0 holds the multiplicity of `A_1`).
    pub fn a_multiplicities(&self, upto: usize) -> Vec<i64> {
        let mut m = vec![0i64; upto];
        for c in &self.components {
            if let IrreducibleType::A(k) = c {
                let k = *k as usize;
                assert!(k >= 1 && k <= upto, "A{k} exceeds requested multiplicity range");
                m[k - 1] += 1;
            }
        }
        m
    }

    /// Number of `B_*` components.
    pub fn b_count(&self) -> usize {
        self.components.iter().filter(|c| matches!(c, IrreducibleType::B(_))).count()
    }

    /// Number of `D_*` components.
    pub fn d_count(&self) -> usize {
        self.components.iter().filter(|c| matches!(c, IrreducibleType::D(_))).count()
    }

    /// The parameter of the unique `B_alpha` component, if there is exactly one.
    pub fn b_param(&self) -> Option<u32> {
        let mut it = self.components.iter().filter_map(|c| match c {
            IrreducibleType::B(k) => Some(*k),
            _ => None,
        });
        match (it.next(), it.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        }
    }

    /// The parameter of the unique `D_alpha` component, if there is exactly one.
    pub fn d_param(&self) -> Option<u32> {
        let mut it = self.components.iter().filter_map(|c| match c {
            IrreducibleType::D(k) => Some(*k),
            _ => None,
        });
        match (it.next(), it.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        }
    }

    /// True when every component is an `A_k`.
    pub fn is_all_a(&self) -> bool {
        self.components.iter().all(|c| matches!(c, IrreducibleType::A(_)))
    }

    /// True when some component is outside the classical families A/B/D.
    pub fn has_exceptional_component(&self) -> bool {
        self.components.iter().any(|c| {
            !matches!(c, IrreducibleType::A(_) | IrreducibleType::B(_) | IrreducibleType::D(_))
        })
    }

    /// Number of points of the ambient set that elements of this type occupy:
    /// `A_k` needs `k+1` letters, `B_k` and `D_k` need `k` letters.
    pub fn points_used(&self) -> u32 {
        self.components
            .iter()
            .map(|c| match c {
                IrreducibleType::A(k) => k + 1,
                IrreducibleType::B(k) | IrreducibleType::D(k) => *k,
                other => other.rank(),
            })
            .sum()
    }

    /// Parses the type grammar; see module docs.
    pub fn parse(s: &str, flavor: Flavor) -> Result<Self> {
        let bytes: Vec<char> = s.chars().collect();
        let mut pos = 0usize;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_whitespace() {
                *pos += 1;
            }
        };
        let parse_int = |pos: &mut usize| -> Result<u32> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            if start == *pos {
                return Err(Error::Parse { pos: start, msg: "expected an integer".into() });
            }
            bytes[start..*pos]
                .iter()
                .collect::<String>()
                .parse::<u32>()
                .map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
        };

        skip_ws(&mut pos);
        if pos < bytes.len() && bytes[pos] == 'e' {
            pos += 1;
            skip_ws(&mut pos);
            if pos != bytes.len() {
                return Err(Error::Parse { pos, msg: "trailing input after 'e'".into() });
            }
            return Ok(Self::empty(flavor));
        }

        let mut comps: Vec<IrreducibleType> = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(Error::Parse { pos, msg: "expected a type component".into() });
            }
            let c = bytes[pos];
            let irr = match c {
                'A' => {
                    pos += 1;
                    IrreducibleType::A(parse_int(&mut pos)?)
                }
                'B' => {
                    pos += 1;
                    IrreducibleType::B(parse_int(&mut pos)?)
                }
                'D' => {
                    pos += 1;
                    IrreducibleType::D(parse_int(&mut pos)?)
                }
                'I' => {
                    // I2(<a>) or I2(a)
                    let tag: String = bytes[pos..].iter().take(3).collect();
                    if tag != "I2(" {
                        return Err(Error::Parse { pos, msg: "expected I2(".into() });
                    }
                    pos += 3;
                    skip_ws(&mut pos);
                    let param = if pos < bytes.len() && bytes[pos] == 'a' {
                        pos += 1;
                        0
                    } else {
                        parse_int(&mut pos)?
                    };
                    skip_ws(&mut pos);
                    if pos >= bytes.len() || bytes[pos] != ')' {
                        return Err(Error::Parse { pos, msg: "expected ')'".into() });
                    }
                    pos += 1;
                    IrreducibleType::I2(param)
                }
                'H' | 'F' | 'E' => {
                    pos += 1;
                    let k = parse_int(&mut pos)?;
                    match (c, k) {
                        ('H', 3) => IrreducibleType::H3,
                        ('H', 4) => IrreducibleType::H4,
                        ('F', 4) => IrreducibleType::F4,
                        ('E', 6) => IrreducibleType::E6,
                        ('E', 7) => IrreducibleType::E7,
                        ('E', 8) => IrreducibleType::E8,
                        _ => {
                            return Err(Error::Parse {
                                pos,
                                msg: format!("unknown type {c}{k}"),
                            })
                        }
                    }
                }
                other => {
                    return Err(Error::Parse { pos, msg: format!("unexpected character '{other}'") })
                }
            };
            skip_ws(&mut pos);
            let mut mult = 1u32;
            if pos < bytes.len() && bytes[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                mult = parse_int(&mut pos)?;
            }
            for _ in 0..mult {
                comps.push(irr);
            }
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        skip_ws(&mut pos);
        if pos != bytes.len() {
            return Err(Error::Parse { pos, msg: "trailing input".into() });
        }
        Self::new(comps, flavor)
    }
}

impl fmt::Display for CoxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "e");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.components.len() {
            let c = self.components[i];
            let mut mult = 1;
            while i + mult < self.components.len() && self.components[i + mult] == c {
                mult += 1;
            }
            if mult == 1 {
                parts.push(c.to_string());
            } else {
                parts.push(format!("{c}^{mult}"));
            }
            i += mult;
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Canonicalises a decomposition-number argument tuple: drops rank-0 entries and
/// sorts, so that any two orderings of the same multiset compare equal.
pub fn canonical_tuple(types: &[CoxType]) -> Vec<CoxType> {
    let mut ts: Vec<CoxType> = types.iter().filter(|t| !t.is_empty()).cloned().collect();
    ts.sort();
    ts
}

/// Parses a comma-separated tuple of types, all in one flavor.
pub fn parse_tuple(s: &str, flavor: Flavor) -> Result<Vec<CoxType>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|part| CoxType::parse(part, flavor)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["e", "A1", "A1^2*A2", "A1*B3", "I2(5)", "I2(a)", "H3", "E8", "A1^3*D4"] {
            let t = CoxType::parse(s, Flavor::Combinatorial).unwrap();
            assert_eq!(t.to_string(), s, "round trip for {s}");
        }
    }

    #[test]
    fn parse_is_order_insensitive() {
        let t1 = CoxType::parse("A1*A2*A1", Flavor::Group).unwrap();
        let t2 = CoxType::parse("A1^2*A2", Flavor::Group).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn parse_errors_carry_position() {
        match CoxType::parse("A1**A2", Flavor::Group) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(CoxType::parse("Q5", Flavor::Group).is_err());
        assert!(CoxType::parse("H5", Flavor::Group).is_err());
    }

    #[test]
    fn group_normalisation() {
        let t = CoxType::parse("B1*A2", Flavor::Combinatorial).unwrap();
        let g = t.normalize_to_group();
        assert_eq!(g.to_string(), "A1*A2");
        assert_eq!(g.rank(), t.rank());

        let d2 = CoxType::parse("D2", Flavor::Combinatorial).unwrap();
        assert_eq!(d2.normalize_to_group().to_string(), "A1^2");

        let d3 = CoxType::parse("D3", Flavor::Combinatorial).unwrap();
        assert_eq!(d3.normalize_to_group().to_string(), "A3");

        let a3 = CoxType::parse("A3", Flavor::Combinatorial).unwrap();
        assert_eq!(a3.normalize_to_group().to_string(), "A3");
    }

    #[test]
    fn a0_dropped_and_empty_prints_e() {
        let t = CoxType::parse("A0", Flavor::Group).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.to_string(), "e");
        assert_eq!(t.rank(), 0);
    }

    #[test]
    fn ranks() {
        assert_eq!(CoxType::parse("B3*A1", Flavor::Group).unwrap().rank(), 4);
        assert_eq!(CoxType::parse("I2(7)", Flavor::Group).unwrap().rank(), 2);
        assert_eq!(CoxType::parse("E7", Flavor::Group).unwrap().rank(), 7);
    }

    #[test]
    fn canonical_tuple_sorts_and_drops_empty() {
        let a1 = CoxType::parse("A1", Flavor::Group).unwrap();
        let b2 = CoxType::parse("B2", Flavor::Group).unwrap();
        let e = CoxType::empty(Flavor::Group);
        let t1 = canonical_tuple(&[b2.clone(), e, a1.clone()]);
        let t2 = canonical_tuple(&[a1, b2]);
        assert_eq!(t1, t2);
    }
}
