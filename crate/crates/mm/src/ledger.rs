use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// The `y`-side factor of an added term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum YForm {
    /// `(1 + L)/2`, the complemented full parity leaf.
    #[serde(rename = "(1+L)/2")]
    HalfOnePlusL,
    /// `(1 - L)/2`, the full parity leaf.
    #[serde(rename = "(1-L)/2")]
    HalfOneMinusL,
    #[serde(rename = "Sym")]
    Sym,
    #[serde(rename = "1-Sym")]
    OneMinusSym,
}

/// One added term `±(Π_{ones} x)(Π_{zeros} (1 - x)) · y_form`.
///
/// Positions are 1-based. `prefix_len` is the length of the longest run
/// `x_1 … x_i` inside the ones and `extra_set` the remaining ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub level: usize,
    pub sign: char,
    pub prefix_len: usize,
    pub zero_positions: Vec<usize>,
    pub extra_set: Vec<usize>,
    pub y_form: YForm,
    /// Degree of the monomial the term cancels, counting the `y` part.
    pub degree: usize,
    /// Points of `F_2^{n1}` whose leaf the term sets.
    pub points: usize,
}

impl LedgerEntry {
    pub(crate) fn new(
        n1: usize,
        level: usize,
        value: i8,
        ones: usize,
        zeros: usize,
        y_form: YForm,
        y_degree: usize,
    ) -> Self {
        let ones_list: Vec<usize> = bit_positions(ones);
        let prefix_len = ones.trailing_ones() as usize;
        let free = !(ones | zeros) & ((1 << n1) - 1);
        LedgerEntry {
            level,
            sign: if value > 0 { '+' } else { '-' },
            prefix_len,
            zero_positions: bit_positions(zeros),
            extra_set: ones_list.into_iter().filter(|&p| p > prefix_len).collect(),
            y_form,
            degree: (ones | zeros).count_ones() as usize + y_degree,
            points: 1 << free.count_ones(),
        }
    }
}

fn bit_positions(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&i| mask >> i & 1 == 1).map(|i| i + 1).collect()
}

/// Provenance of a degree-reduction ladder.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermLedger {
    pub entries: Vec<LedgerEntry>,
    /// `x` positions used as forced zeros by some entry.
    pub consumed_slots: BTreeSet<usize>,
    /// Completed levels.
    pub level: usize,
    /// Polynomial degree predicted after the seed and after each level.
    pub degree_by_level: Vec<usize>,
    pub notes: Vec<String>,
}
