//! Word rewriting with scalar coefficients.
//!
//! A rule looks at an adjacent letter pair and either leaves it alone or
//! replaces it by a linear combination of words. Normalization repeatedly
//! rewrites the leftmost reducible pair; the caller's rule set must
//! terminate. Equal words arising on different branches are merged.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

pub type Word<L> = Vec<L>;

pub trait RewriteSystem {
    type Letter: Clone + Ord;

    /// Replacement for the pair `(x, y)`, if it is reducible.
    fn rule(&self, x: &Self::Letter, y: &Self::Letter) -> Option<Vec<(Word<Self::Letter>, Scalar)>>;

    fn normalize(&self, word: &[Self::Letter]) -> BTreeMap<Word<Self::Letter>, Scalar> {
        let mut pending = BTreeMap::new();
        pending.insert(word.to_vec(), Scalar::one());
        self.normalize_all(pending)
    }

    fn normalize_all(&self, mut pending: BTreeMap<Word<Self::Letter>, Scalar>) -> BTreeMap<Word<Self::Letter>, Scalar> {
        let mut done: BTreeMap<Word<Self::Letter>, Scalar> = BTreeMap::new();
        while let Some((w, c)) = pending.pop_first() {
            if c.is_zero() {
                continue;
            }
            let redex = (0..w.len().saturating_sub(1)).find_map(|i| self.rule(&w[i], &w[i + 1]).map(|r| (i, r)));
            match redex {
                None => accumulate(&mut done, w, &c),
                Some((i, replacement)) => {
                    for (mid, k) in replacement {
                        let mut nw = Vec::with_capacity(w.len() + mid.len());
                        nw.extend_from_slice(&w[..i]);
                        nw.extend(mid);
                        nw.extend_from_slice(&w[i + 2..]);
                        accumulate(&mut pending, nw, &(&c * &k));
                    }
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        done
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    let slot = map.entry(k).or_insert_with(Scalar::zero);
    *slot = &*slot + c;
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Weyl-like toy system: `b a -> a b + 1`.
    struct Toy;

    impl RewriteSystem for Toy {
        type Letter = char;
        fn rule(&self, x: &char, y: &char) -> Option<Vec<(Word<char>, Scalar)>> {
            (*x == 'b' && *y == 'a').then(|| vec![(vec!['a', 'b'], Scalar::one()), (vec![], Scalar::one())])
        }
    }

    #[test]
    fn toy_normal_form() {
        // b a a = a a b + 2 a
        let nf = Toy.normalize(&['b', 'a', 'a']);
        assert_eq!(nf.len(), 2);
        assert_eq!(nf[&vec!['a', 'a', 'b']], Scalar::one());
        assert_eq!(nf[&vec!['a']], Scalar::int(2));
    }

    #[test]
    fn already_normal() {
        let nf = Toy.normalize(&['a', 'b']);
        assert_eq!(nf.len(), 1);
    }
}
