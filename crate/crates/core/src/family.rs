//! Families of colour sets, e.g. the colour sets of multicoloured triangles.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::colouring::{Colour, MAX_COLOURS};
use crate::error::{Error, Result};

/// Bitmask with bit `c - 1` set for each colour `c`.
pub type ColourMask = u64;

#[inline]
pub fn mask_of(colour: Colour) -> ColourMask {
    1u64 << (colour - 1)
}

/// Sorted colours of a mask.
pub fn mask_colours(mask: ColourMask) -> Vec<Colour> {
    (0..64u8)
        .filter(|&b| mask & (1u64 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

/// A set of distinct subsets of the palette `{1..k}`, each stored sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColourSetFamily {
    k: usize,
    sets: BTreeSet<Vec<Colour>>,
}

impl ColourSetFamily {
    pub fn new(k: usize) -> Self {
        ColourSetFamily {
            k,
            sets: BTreeSet::new(),
        }
    }

    /// Builds a family, sorting each member and rejecting colours outside
    /// the palette and repeated members.
    pub fn from_sets<I, S>(k: usize, sets: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Colour]>,
    {
        if k == 0 || k > MAX_COLOURS {
            return Err(Error::BadPalette(k));
        }
        let mut family = ColourSetFamily::new(k);
        for set in sets {
            let mut s = set.as_ref().to_vec();
            s.sort_unstable();
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::pre(format!("colour set {s:?} repeats a colour")));
            }
            if let Some(&c) = s.iter().find(|&&c| c == 0 || c as usize > k) {
                return Err(Error::ColourOutOfPalette { colour: c, k });
            }
            if !family.sets.insert(s.clone()) {
                return Err(Error::pre(format!("colour set {s:?} listed twice")));
            }
        }
        Ok(family)
    }

    pub(crate) fn from_masks<I: IntoIterator<Item = ColourMask>>(k: usize, masks: I) -> Self {
        ColourSetFamily {
            k,
            sets: masks.into_iter().map(mask_colours).collect(),
        }
    }

    /// Every 3-subset of `{1..k}`.
    pub fn all_triples(k: usize) -> Self {
        let mut sets = BTreeSet::new();
        for a in 1..=k as Colour {
            for b in a + 1..=k as Colour {
                for c in b + 1..=k as Colour {
                    sets.insert(vec![a, b, c]);
                }
            }
        }
        ColourSetFamily { k, sets }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Members in canonical (lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = &[Colour]> + '_ {
        self.sets.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, set: &[Colour]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.sets.contains(&s)
    }

    pub fn insert(&mut self, set: &[Colour]) -> bool {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.sets.insert(s)
    }

    /// Number of members containing `colour`.
    pub fn degree(&self, colour: Colour) -> usize {
        self.sets.iter().filter(|s| s.contains(&colour)).count()
    }

    pub fn masks(&self) -> Vec<ColourMask> {
        self.sets
            .iter()
            .map(|s| s.iter().fold(0, |m, &c| m | mask_of(c)))
            .collect()
    }

    /// Image of the family under the colour relabelling `c -> perm[c - 1]`.
    pub fn mapped(&self, perm: &[Colour]) -> Self {
        ColourSetFamily {
            k: self.k,
            sets: self
                .sets
                .iter()
                .map(|s| {
                    let mut t: Vec<Colour> = s.iter().map(|&c| perm[c as usize - 1]).collect();
                    t.sort_unstable();
                    t
                })
                .collect(),
        }
    }

    pub fn to_vecs(&self) -> Vec<Vec<Colour>> {
        self.sets.iter().cloned().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_members() {
        let f = ColourSetFamily::from_sets(5, [[3, 1, 2], [5, 4, 1]]).unwrap();
        assert_eq!(f.to_vecs(), vec![vec![1, 2, 3], vec![1, 4, 5]]);
        assert_eq!(f.degree(1), 2);
        assert!(f.contains(&[2, 3, 1]));
    }

    #[test]
    fn rejects_invalid_members() {
        assert!(ColourSetFamily::from_sets(3, [[1, 2, 4]]).is_err());
        assert!(ColourSetFamily::from_sets(3, [[1, 2, 3], [3, 2, 1]]).is_err());
        assert!(ColourSetFamily::from_sets(3, [[1, 1, 2]]).is_err());
    }

    #[test]
    fn masks_roundtrip() {
        let f = ColourSetFamily::all_triples(6);
        assert_eq!(f.len(), 20);
        let g = ColourSetFamily::from_masks(6, f.masks());
        assert_eq!(f, g);
        assert_eq!(mask_colours(0b1011), vec![1, 2, 4]);
    }
}
