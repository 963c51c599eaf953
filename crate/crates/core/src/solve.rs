//! Exact decision of braid-word triviality and equality.
//!
//! The decision chain: the strand permutation must be trivial, the linking
//! matrix must vanish, and the word must fix the coordinates of every
//! round curve enclosing a pair of punctures. The last test is complete: a
//! pure braid fixing each pair curve's isotopy class commutes with the
//! twist about it, and those twists generate the pure braid group, so the
//! braid is central; the center is generated by the boundary twist, whose
//! nonzero powers all have nonzero linking numbers. On one or two strands
//! the curve family is empty and the first two filters alone decide.

use crate::error::Result;
use crate::loops::{round_subset_coords, LoopCoords};
use crate::word::BraidWord;

impl BraidWord {
    /// Whether the word represents the trivial braid.
    pub fn is_identity(&self) -> bool {
        let n = self.n();
        if !self.is_pure() {
            return false;
        }
        let lk = self.linking_matrix().expect("pure word has linking numbers");
        if !lk.is_zero() {
            return false;
        }
        if n <= 2 {
            return true;
        }
        for i in 1..n {
            for j in i + 1..=n {
                let coords = round_subset_coords(n, &[i, j]);
                let c = LoopCoords::new(n, coords).expect("pair coordinates");
                if c.apply(self).expect("matching strand count") != c {
                    return false;
                }
            }
        }
        true
    }

    /// Whether two words represent the same braid.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.compose(&other.inverse())?.is_identity())
    }
}
