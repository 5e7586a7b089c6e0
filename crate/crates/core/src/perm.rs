//! Permutations in cycle notation and small subsets of the domain.
//!
//! `Perm` stores the image table of a permutation of `{0, .., n-1}`; all
//! parsing and printing uses 1-based cycle notation like `(1,2)(3,4,5)`.
//! `PointSet` is a fixed two-word bitset, so set images under permutations
//! and set comparisons are branch-free; this caps the supported degree for
//! set-valued work at [`PointSet::MAX_DEGREE`] points, which covers every
//! construction in the crate (the largest domains that arise are induced
//! coset actions of degree 72).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// A permutation of `{0, .., degree-1}`, stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    /// Largest degree a `Perm` supports (images are stored as `u8`).
    pub const MAX_DEGREE: usize = 255;

    pub fn identity(degree: usize) -> Perm {
        assert!(degree <= Self::MAX_DEGREE);
        Perm {
            img: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from an image table over `0..degree`.
    pub fn from_images(img: Vec<u8>) -> Result<Perm> {
        let n = img.len();
        if n > Self::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: n,
                max: Self::MAX_DEGREE,
            });
        }
        let mut seen = [false; 256];
        for &b in &img {
            if (b as usize) >= n {
                return Err(Error::PointOutOfRange {
                    point: b as usize + 1,
                    degree: n,
                });
            }
            if seen[b as usize] {
                return Err(Error::RepeatedPoint {
                    point: b as usize + 1,
                });
            }
            seen[b as usize] = true;
        }
        Ok(Perm { img })
    }

    /// Builds a permutation of `1..=degree` from disjoint cycles of 1-based
    /// points. Repeated points (within or across cycles) are rejected.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Perm> {
        if degree > Self::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: Self::MAX_DEGREE,
            });
        }
        let mut img: Vec<u8> = (0..degree as u8).collect();
        let mut seen = [false; 256];
        for cycle in cycles {
            for &p in *cycle {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if seen[p - 1] {
                    return Err(Error::RepeatedPoint { point: p });
                }
                seen[p - 1] = true;
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                img[from] = to as u8;
            }
        }
        Ok(Perm { img })
    }

    /// Parses cycle notation such as `(1,2)(3,4,5)`. Whitespace is allowed
    /// between tokens; `()` and the empty string denote the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Perm> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut digits = String::new();
        let flush = |digits: &mut String, current: &mut Option<Vec<usize>>| -> Result<()> {
            if digits.is_empty() {
                return Ok(());
            }
            let p: usize = digits
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad point literal '{digits}'")))?;
            digits.clear();
            match current {
                Some(cycle) => {
                    cycle.push(p);
                    Ok(())
                }
                None => Err(Error::Parse(String::from("point outside a cycle"))),
            }
        };
        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::Parse(String::from("nested '('")));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut digits, &mut current)?;
                    match current.take() {
                        Some(cycle) => {
                            if !cycle.is_empty() {
                                cycles.push(cycle);
                            }
                        }
                        None => return Err(Error::Parse(String::from("unmatched ')'"))),
                    }
                }
                ',' => flush(&mut digits, &mut current)?,
                '0'..='9' => digits.push(ch),
                c if c.is_whitespace() => flush(&mut digits, &mut current)?,
                c => return Err(Error::Parse(alloc::format!("unexpected character '{c}'"))),
            }
        }
        if current.is_some() {
            return Err(Error::Parse(String::from("unclosed '('")));
        }
        if !digits.is_empty() {
            return Err(Error::Parse(String::from("point outside a cycle")));
        }
        let borrowed: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(degree, &borrowed)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &b)| i == b as usize)
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.img[point] as usize
    }

    /// `self` then `other` (left-to-right composition).
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&b| other.img[b as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.img.len()];
        for (i, &b) in self.img.iter().enumerate() {
            img[b as usize] = i as u8;
        }
        Perm { img }
    }

    /// Conjugate `other^-1 * self * other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().compose(self).compose(other)
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord: u64 = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len: u64 = 0;
            let mut p = start;
            loop {
                seen[p] = true;
                len += 1;
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// 0-based points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.apply(p) != p).collect()
    }

    /// Cycles of length at least 2, each rotated to start at its smallest
    /// point, sorted by that point; 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            loop {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
                if p == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Restriction to a union of cycles: keeps the points of `window` (which
    /// must be closed under the permutation) and renumbers them by rank.
    pub fn restrict(&self, window: &PointSet) -> Result<Perm> {
        let points: Vec<usize> = window.iter().collect();
        let mut rank = vec![usize::MAX; self.degree()];
        for (r, &p) in points.iter().enumerate() {
            rank[p] = r;
        }
        let mut img = Vec::with_capacity(points.len());
        for &p in &points {
            let q = self.apply(p);
            if rank[q] == usize::MAX {
                return Err(Error::Precondition("window is not invariant"));
            }
            img.push(rank[q] as u8);
        }
        Ok(Perm { img })
    }

    /// Embeds into a larger degree, shifting every point by `offset`.
    pub fn shift(&self, degree: usize, offset: usize) -> Result<Perm> {
        if offset + self.degree() > degree {
            return Err(Error::DegreeMismatch {
                left: offset + self.degree(),
                right: degree,
            });
        }
        if degree > Self::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: Self::MAX_DEGREE,
            });
        }
        let mut img: Vec<u8> = (0..degree as u8).collect();
        for (i, &b) in self.img.iter().enumerate() {
            img[offset + i] = offset as u8 + b;
        }
        Ok(Perm { img })
    }

    /// Acts on every point of a set.
    pub fn apply_set(&self, set: &PointSet) -> PointSet {
        debug_assert_eq!(self.degree(), set.degree());
        let mut out = PointSet::empty(set.degree());
        for p in set.iter() {
            out.insert(self.apply(p));
        }
        out
    }
}

impl fmt::Display for Perm {
    /// 1-based cycle notation, cycles sorted by smallest moved point, each
    /// cycle starting at its smallest point, no spaces. Identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// A subset of `{0, .., degree-1}`, stored in two 64-bit words.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    degree: u16,
    words: [u64; 2],
}

impl PointSet {
    /// Hard cap for set-valued computations (two bitset words).
    pub const MAX_DEGREE: usize = 128;

    pub fn empty(degree: usize) -> PointSet {
        assert!(degree <= Self::MAX_DEGREE, "degree {degree} exceeds 128");
        PointSet {
            degree: degree as u16,
            words: [0, 0],
        }
    }

    pub fn full(degree: usize) -> PointSet {
        PointSet::empty(degree).complement()
    }

    /// Builds a set from 0-based points.
    pub fn from_points(degree: usize, points: &[usize]) -> Result<PointSet> {
        if degree > Self::MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                max: Self::MAX_DEGREE,
            });
        }
        let mut s = PointSet::empty(degree);
        for &p in points {
            if p >= degree {
                return Err(Error::PointOutOfRange {
                    point: p + 1,
                    degree,
                });
            }
            if s.contains(p) {
                return Err(Error::RepeatedPoint { point: p + 1 });
            }
            s.insert(p);
        }
        Ok(s)
    }

    /// Builds a set from 1-based points.
    pub fn from_points_1based(degree: usize, points: &[usize]) -> Result<PointSet> {
        for &p in points {
            if p == 0 || p > degree {
                return Err(Error::PointOutOfRange { point: p, degree });
            }
        }
        let shifted: Vec<usize> = points.iter().map(|&p| p - 1).collect();
        PointSet::from_points(degree, &shifted)
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn len(&self) -> usize {
        (self.words[0].count_ones() + self.words[1].count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.words == [0, 0]
    }

    #[inline]
    pub fn contains(&self, point: usize) -> bool {
        self.words[point >> 6] & (1u64 << (point & 63)) != 0
    }

    #[inline]
    pub fn insert(&mut self, point: usize) {
        debug_assert!(point < self.degree());
        self.words[point >> 6] |= 1u64 << (point & 63);
    }

    #[inline]
    pub fn remove(&mut self, point: usize) {
        self.words[point >> 6] &= !(1u64 << (point & 63));
    }

    pub fn complement(&self) -> PointSet {
        let n = self.degree();
        let full = |bits: usize| -> u64 {
            if bits >= 64 {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            }
        };
        PointSet {
            degree: self.degree,
            words: [
                !self.words[0] & full(n.min(64)),
                !self.words[1] & full(n.saturating_sub(64)),
            ],
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.degree, other.degree);
        PointSet {
            degree: self.degree,
            words: [
                self.words[0] | other.words[0],
                self.words[1] | other.words[1],
            ],
        }
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        debug_assert_eq!(self.degree, other.degree);
        PointSet {
            degree: self.degree,
            words: [
                self.words[0] & other.words[0],
                self.words[1] & other.words[1],
            ],
        }
    }

    pub fn minus(&self, other: &PointSet) -> PointSet {
        PointSet {
            degree: self.degree,
            words: [
                self.words[0] & !other.words[0],
                self.words[1] & !other.words[1],
            ],
        }
    }

    pub fn is_subset_of(&self, other: &PointSet) -> bool {
        self.words[0] & !other.words[0] == 0 && self.words[1] & !other.words[1] == 0
    }

    /// 0-based members, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut w0 = self.words[0];
        let mut w1 = self.words[1];
        core::iter::from_fn(move || {
            if w0 != 0 {
                let p = w0.trailing_zeros() as usize;
                w0 &= w0 - 1;
                Some(p)
            } else if w1 != 0 {
                let p = 64 + w1.trailing_zeros() as usize;
                w1 &= w1 - 1;
                Some(p)
            } else {
                None
            }
        })
    }

    pub fn min_point(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Low 64 points as a word; valid when `degree <= 64`.
    pub fn low_mask(&self) -> u64 {
        debug_assert!(self.degree() <= 64);
        self.words[0]
    }

    pub fn from_low_mask(degree: usize, mask: u64) -> PointSet {
        debug_assert!(degree <= 64);
        debug_assert!(degree == 64 || mask < (1u64 << degree));
        PointSet {
            degree: degree as u16,
            words: [mask, 0],
        }
    }

    /// Orders equal-cardinality sets by their ascending point lists: the set
    /// owning the first point where they differ is the smaller one, so
    /// `{1,2} < {1,4} < {2,3}`.
    pub fn cmp_lex(&self, other: &PointSet) -> Ordering {
        // Equivalent to descending order on characteristic bit strings,
        // which is integer order on the bit-reversed words.
        let rev = |s: &PointSet| [s.words[0].reverse_bits(), s.words[1].reverse_bits()];
        let (a, b) = (rev(self), rev(other));
        b[0].cmp(&a[0]).then(b[1].cmp(&a[1]))
    }

    /// Total order by cardinality, then lexicographic point list.
    pub fn cmp_card_lex(&self, other: &PointSet) -> Ordering {
        self.len().cmp(&other.len()).then(self.cmp_lex(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_print_round_trip() {
        let g = Perm::parse(7, "(1,4)(6,7)").unwrap();
        assert_eq!(g.to_string(), "(1,4)(6,7)");
        assert_eq!(g.apply(0), 3);
        assert_eq!(g.apply(3), 0);
        assert_eq!(g.apply(5), 6);
        assert_eq!(g.apply(1), 1);

        let h = Perm::parse(5, "(5,3,2)").unwrap();
        assert_eq!(h.to_string(), "(2,5,3)");
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert_eq!(Perm::parse(4, "").unwrap(), Perm::identity(4));
        assert_eq!(Perm::identity(4).to_string(), "()");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Perm::parse(4, "(1,5)"),
            Err(Error::PointOutOfRange { point: 5, .. })
        ));
        assert!(matches!(
            Perm::parse(4, "(1,2)(2,3)"),
            Err(Error::RepeatedPoint { point: 2 })
        ));
        assert!(matches!(Perm::parse(4, "(1,2"), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse(4, "1,2)"), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse(4, "(1 2)x"), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse(4, "(0,1)"), Err(Error::Parse(_)) | Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn composition_is_left_to_right() {
        // (1,2) then (2,3) sends 1 to 3... check the convention concretely:
        // 1 -(1,2)-> 2 -(2,3)-> 3.
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.to_string(), "(1,3,2)");
    }

    #[test]
    fn inverse_and_order() {
        let g = Perm::parse(6, "(1,2,3)(4,5)").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(Perm::identity(5).order(), 1);
    }

    #[test]
    fn set_action_and_restriction() {
        let g = Perm::parse(6, "(1,2,3)(4,5)").unwrap();
        let s = PointSet::from_points_1based(6, &[1, 4]).unwrap();
        let image = g.apply_set(&s);
        assert_eq!(image, PointSet::from_points_1based(6, &[2, 5]).unwrap());

        let window = PointSet::from_points_1based(6, &[4, 5, 6]).unwrap();
        let r = g.restrict(&window).unwrap();
        assert_eq!(r.to_string(), "(1,2)");
        let bad = PointSet::from_points_1based(6, &[1, 4]).unwrap();
        assert!(g.restrict(&bad).is_err());
    }

    #[test]
    fn set_order_is_cardinality_then_lex() {
        let n = 5;
        let mk = |pts: &[usize]| PointSet::from_points_1based(n, pts).unwrap();
        let mut sets = vec![
            mk(&[2, 3]),
            mk(&[1]),
            mk(&[1, 4]),
            mk(&[3]),
            mk(&[1, 2, 3]),
            mk(&[1, 2]),
        ];
        sets.sort_by(|a, b| a.cmp_card_lex(b));
        let printed: Vec<String> = sets.iter().map(|s| alloc::format!("{s:?}")).collect();
        assert_eq!(printed, ["{1}", "{3}", "{1,2}", "{1,4}", "{2,3}", "{1,2,3}"]);
    }

    #[test]
    fn sets_above_64_points() {
        let mut s = PointSet::empty(100);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(99);
        assert_eq!(s.len(), 4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 99]);
        assert_eq!(s.complement().len(), 96);
        assert!(s.is_subset_of(&PointSet::full(100)));
        let c = s.complement();
        assert!(!c.contains(64));
        assert!(c.contains(65));
    }

    proptest! {
        #[test]
        fn compose_matches_pointwise(aseed in 0u64..1000, bseed in 0u64..1000) {
            let n = 9usize;
            let a = arbitrary_perm(n, aseed);
            let b = arbitrary_perm(n, bseed);
            let ab = a.compose(&b);
            for p in 0..n {
                prop_assert_eq!(ab.apply(p), b.apply(a.apply(p)));
            }
        }

        #[test]
        fn print_parse_round_trip(seed in 0u64..2000) {
            let n = 12usize;
            let g = arbitrary_perm(n, seed);
            let back = Perm::parse(n, &g.to_string()).unwrap();
            prop_assert_eq!(back, g);
        }

        #[test]
        fn set_image_has_same_size(seed in 0u64..1000, mask in 0u64..(1u64 << 12)) {
            let n = 12usize;
            let g = arbitrary_perm(n, seed);
            let s = PointSet::from_low_mask(n, mask);
            prop_assert_eq!(g.apply_set(&s).len(), s.len());
            prop_assert_eq!(g.apply_set(&s.complement()), g.apply_set(&s).complement());
        }
    }

    /// Fisher-Yates from a splitmix64 stream; deterministic in the seed.
    fn arbitrary_perm(n: usize, seed: u64) -> Perm {
        let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        let mut img: Vec<u8> = (0..n as u8).collect();
        for i in (1..n).rev() {
            let j = (next() % (i as u64 + 1)) as usize;
            img.swap(i, j);
        }
        Perm::from_images(img).unwrap()
    }
}
