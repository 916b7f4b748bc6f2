//! The catalogued ordering chains, one display string per entry.
//!
//! Bold (negative) cycles carry a leading `!`. Odd cycles are written with
//! the sign shown in the source display; materialization forces them to `+`.

use serde::Serialize;

use super::dsl::{Display, Shape};
use super::{Category, Link, OrderingChain};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub category: Category,
    pub summary: &'static str,
    /// `n ≡ residue (mod modulus)` for every pair; `n > 5` always applies.
    pub hypotheses: &'static [(usize, usize)],
    pub display: &'static str,
    /// Corrections applied to the source display before encoding.
    pub errata: &'static [&'static str],
}

impl CatalogEntry {
    pub fn hypotheses_hold(&self, n: usize) -> bool {
        n > 5 && self.hypotheses.iter().all(|&(m, r)| n % m == r)
    }

    pub fn hypotheses_text(&self) -> String {
        let mut parts = vec!["n > 5".to_string()];
        parts.extend(self.hypotheses.iter().map(|(m, r)| format!("n = {r} (mod {m})")));
        parts.join(", ")
    }

    fn parsed(&self) -> Display {
        Display::parse(self.display).unwrap_or_else(|e| panic!("catalog entry {}: {e}", self.id))
    }

    pub fn shape(&self) -> Shape {
        self.parsed().shape
    }

    pub fn is_admissible(&self, n: usize) -> bool {
        expected_chain(self.id, n).is_ok()
    }
}

macro_rules! entry {
    ($id:expr, $cat:ident, $summary:expr, [$($m:expr => $r:expr),*], $display:expr) => {
        entry!($id, $cat, $summary, [$($m => $r),*], $display, [])
    };
    ($id:expr, $cat:ident, $summary:expr, [$($m:expr => $r:expr),*], $display:expr, [$($e:expr),*]) => {
        CatalogEntry {
            id: $id,
            category: Category::$cat,
            summary: $summary,
            hypotheses: &[$(($m, $r)),*],
            display: $display,
            errata: &[$($e),*],
        }
    };
}

const OFF_LATTICE: &str = "run end is off the step-4 lattice; expanded to the last lattice point, then the displayed end";

static CATALOG: &[CatalogEntry] = &[
    // even-even, both cycles positive
    entry!("ee-pp-dom-n-even", EvenEven, "positive pairs, n even: maximum at r = 2",
        [2 => 0], "[2,n-2] >= [2,n-2] ..(2,-2).. [n-2,2]"),
    entry!("ee-pp-dom-n-odd", EvenEven, "positive pairs, n odd: maximum at r = 2",
        [2 => 1], "[2,n-3] >= [2,n-3] ..(2,-2).. [n-3,2]"),

    // even-even, one positive and one negative cycle
    entry!("ee-pn-n2-mod8-2-pos", EvenEven, "[r, -(n-r)], n = 2 (mod 8): ordering through the pivot",
        [8 => 2], "[2,!n-2] ..(4,-4).. [(n-6)/2,!(n+6)/2] > [(n-2)/2,!(n+2)/2] ..(-4,4).. [4,!n-4]"),
    entry!("ee-pn-n2-mod8-2-neg", EvenEven, "[-r, n-r], n = 2 (mod 8): ordering through the pivot",
        [8 => 2], "[!4,n-4] ..(4,-4).. [!(n-2)/2,(n+2)/2] > [!(n-6)/2,(n+6)/2] ..(-4,4).. [!2,n-2]"),
    entry!("ee-pn-n2-mod8-6-pos", EvenEven, "[r, -(n-r)], n = 6 (mod 8): ordering through the pivot",
        [8 => 6], "[2,!n-2] ..(4,-4).. [(n-2)/2,!(n+2)/2] > [(n-6)/2,!(n+6)/2] ..(-4,4).. [4,!n-4]"),
    entry!("ee-pn-n2-mod8-6-neg", EvenEven, "[-r, n-r], n = 6 (mod 8): ordering through the pivot",
        [8 => 6], "[!4,n-4] ..(4,-4).. [!(n-6)/2,(n+6)/2] > [!(n-2)/2,(n+2)/2] ..(-4,4).. [!2,n-2]"),
    entry!("ee-pn-n0-k0", EvenEven, "[r, -(n-r)], n = 0 (mod 4), r = 0 (mod 4)",
        [4 => 0], "[n-4,!4] ..(-4,4).. [4,!n-4]"),
    entry!("ee-pn-n0-k2", EvenEven, "[r, -(n-r)], n = 0 (mod 4), r = 2 (mod 4)",
        [4 => 0], "[2,!n-2] ..(4,-4).. [n-2,!2]"),
    entry!("ee-pn-n1-k0", EvenEven, "[r, -(n-r-1)], n = 1 (mod 4), r = 0 (mod 4)",
        [4 => 1], "[n-5,!4] ..(-4,4).. [4,!n-5]"),
    entry!("ee-pn-n1-k2", EvenEven, "[r, -(n-r-1)], n = 1 (mod 4), r = 2 (mod 4)",
        [4 => 1], "[2,!n-3] ..(4,-4).. [n-3,!2]"),
    entry!("ee-pn-n3-mod8-3-pos", EvenEven, "[r, -(n-r-1)], n = 3 (mod 8): ordering through the pivot",
        [8 => 3], "[2,!n-3] ..(4,-4).. [(n-7)/2,!(n+5)/2] > [(n-3)/2,!(n+1)/2] ..(-4,4).. [4,!n-5]"),
    entry!("ee-pn-n3-mod8-3-neg", EvenEven, "[-r, n-r-1], n = 3 (mod 8): ordering through the pivot",
        [8 => 3], "[!4,n-5] ..(4,-4).. [!(n-3)/2,(n+1)/2] > [!(n-7)/2,(n+5)/2] ..(-4,4).. [!2,n-3]"),
    entry!("ee-pn-n3-mod8-7-pos", EvenEven, "[r, -(n-r-1)], n = 7 (mod 8): ordering through the pivot",
        [8 => 7], "[2,!n-3] ..(4,-4).. [(n-3)/2,!(n+1)/2] > [(n-7)/2,!(n+5)/2] ..(-4,4).. [4,!n-5]"),
    entry!("ee-pn-n3-mod8-7-neg", EvenEven, "[-r, n-r-1], n = 7 (mod 8): ordering through the pivot",
        [8 => 7], "[!4,n-5] ..(4,-4).. [!(n-7)/2,(n+5)/2] > [!(n-3)/2,(n+1)/2] ..(-4,4).. [!2,n-3]"),
    entry!("ee-pn-dom-n0-k0", EvenEven, "[-r, n-r], n = 0 (mod 4), r = 0 (mod 4): maximum at r = 4",
        [4 => 0], "[!4,n-4] >= [!4,n-4] ..(4,-4).. [!n-4,4]"),
    entry!("ee-pn-dom-n0-k2", EvenEven, "[-r, n-r], n = 0 (mod 4), r = 2 (mod 4): maximum at r = n-2",
        [4 => 0], "[!n-2,2] >= [!2,n-2] ..(4,-4).. [!n-2,2]"),
    entry!("ee-pn-dom-n2-pos", EvenEven, "[r, -(n-r)], n = 2 (mod 4): maximum at r = 2",
        [4 => 2], "[2,!n-2] >= [2,!n-2] ..(2,-2).. [n-2,!2]"),
    entry!("ee-pn-dom-n2-neg", EvenEven, "[-r, n-r], n = 2 (mod 4): maximum at r = 4",
        [4 => 2], "[!4,n-4] >= [!2,n-2] ..(2,-2).. [!n-2,2]"),
    entry!("ee-pn-dom-n2-neg-short-range", EvenEven, "[-r, n-r], n = 2 (mod 4): maximum at r = 4 over r <= (n+2)/2",
        [4 => 2], "[!4,n-4] >= [!2,n-2] ..(2,-2).. [!(n+2)/2,(n-2)/2]"),
    entry!("ee-pn-dom-n3-pos", EvenEven, "[r, -(n-r-1)], n = 3 (mod 4): maximum at r = 2",
        [4 => 3], "[2,!n-3] >= [2,!n-3] ..(2,-2).. [n-3,!2]"),
    entry!("ee-pn-dom-n3-neg", EvenEven, "[-r, n-r-1], n = 3 (mod 4): maximum at r = 4",
        [4 => 3], "[!4,n-5] >= [!2,n-3] ..(2,-2).. [!n-3,2]"),
    entry!("ee-pn-dom-n3-neg-short-range", EvenEven, "[-r, n-r-1], n = 3 (mod 4): maximum at r = 4 over r <= (n+1)/2",
        [4 => 3], "[!4,n-5] >= [!2,n-3] ..(2,-2).. [!(n+1)/2,(n-3)/2]"),
    entry!("ee-pn-dom-n1-k0", EvenEven, "[-r, n-r-1], n = 1 (mod 4), r = 0 (mod 4): maximum at r = 4",
        [4 => 1], "[!4,n-5] >= [!4,n-5] ..(4,-4).. [!n-5,4]"),
    entry!("ee-pn-dom-n1-k2", EvenEven, "[-r, n-r-1], n = 1 (mod 4), r = 2 (mod 4): maximum at r = n-3",
        [4 => 1], "[!n-3,2] >= [!2,n-3] ..(4,-4).. [!n-3,2]"),

    // even-even, both cycles negative
    entry!("ee-nn-n0-mod8-0", EvenEven, "negative pairs, n = 0 (mod 8): ordering through the middle",
        [8 => 0], "[!4,!n-4] ..(4,-4).. [!n/2,!n/2] > [!(n-4)/2,!(n+4)/2] ..(-4,4).. [!2,!n-2]"),
    entry!("ee-nn-n0-mod8-4", EvenEven, "negative pairs, n = 4 (mod 8): ordering through the middle",
        [8 => 4], "[!4,!n-4] ..(4,-4).. [!(n-4)/2,!(n+4)/2] > [!n/2,!n/2] ..(-4,4).. [!2,!n-2]"),
    entry!("ee-nn-n2", EvenEven, "negative pairs, n = 2 (mod 4): decreasing from r = 2",
        [4 => 2], "[!2,!n-2] ..(4,-4).. [!n-4,!4]"),
    entry!("ee-nn-n3", EvenEven, "negative pairs, n = 3 (mod 4): decreasing from r = 2",
        [4 => 3], "[!2,!n-3] ..(4,-4).. [!n-5,!4]"),
    entry!("ee-nn-n1-mod8-1", EvenEven, "negative pairs, n = 1 (mod 8): ordering through the middle",
        [8 => 1], "[!4,!n-5] ..(4,-4).. [!(n-1)/2,!(n-1)/2] > [!(n-5)/2,!(n+3)/2] ..(-4,4).. [!2,!n-3]"),
    entry!("ee-nn-n1-mod8-5", EvenEven, "negative pairs, n = 5 (mod 8): ordering through the middle",
        [8 => 5], "[!4,!n-5] ..(4,-4).. [!(n-5)/2,!(n+3)/2] > [!(n-1)/2,!(n-1)/2] ..(-4,4).. [!2,!n-3]"),
    entry!("ee-nn-dom-n0", EvenEven, "negative pairs, n = 0 (mod 4): maximum at r = 4",
        [4 => 0], "[!4,!n-4] >= [!2,!n-2] ..(2,-2).. [!n-2,!2]"),
    entry!("ee-nn-dom-n2", EvenEven, "negative pairs, n = 2 (mod 4): maximum at r = 2",
        [4 => 2], "[!2,!n-2] >= [!2,!n-2] ..(2,-2).. [!n-2,!2]"),
    entry!("ee-nn-dom-n3", EvenEven, "negative pairs, n = 3 (mod 4): maximum at r = 2",
        [4 => 3], "[!2,!n-3] >= [!2,!n-3] ..(2,-2).. [!n-3,!2]"),
    entry!("ee-nn-dom-n1", EvenEven, "negative pairs, n = 1 (mod 4): maximum at r = 4",
        [4 => 1], "[!4,!n-5] >= [!2,!n-3] ..(2,-2).. [!n-3,!2]"),

    // even-even, complete orderings
    entry!("ee-full-n2-mod8-2-pos", EvenEven, "complete ordering, n = 2 (mod 8), chain from [2, -(n-2)]",
        [8 => 2],
        "[2,!n-2] ..(4,-4).. [(n-6)/2,!(n+6)/2] > [(n-2)/2,!(n+2)/2] ..(-4,4).. [4,!n-4] = [2,!n-4] ..(4,-4).. [n-4,!2] = [!2,n-4] ..(0,-4).. [!2,2] > [!2,!2]"),
    entry!("ee-full-n2-mod8-2-neg", EvenEven, "complete ordering, n = 2 (mod 8), chain from [-4, n-4]",
        [8 => 2],
        "[!4,n-4] ..(4,-4).. [!(n-2)/2,(n+2)/2] > [!(n-6)/2,(n+6)/2] ..(-4,4).. [!2,n-2] > [!2,n-6] ..(0,-4).. [!2,2] > [!2,!2]",
        [OFF_LATTICE]),
    entry!("ee-full-n2-mod8-6-pos", EvenEven, "complete ordering, n = 6 (mod 8), chain from [2, -(n-2)]",
        [8 => 6],
        "[2,!n-2] ..(4,-4).. [(n-2)/2,!(n+2)/2] > [(n-6)/2,!(n+6)/2] ..(-4,4).. [4,!n-4] = [2,!n-4] ..(4,-4).. [n-4,!2] = [!2,n-4] ..(0,-4).. [!2,2] > [!2,!2]"),
    entry!("ee-full-n2-mod8-6-neg", EvenEven, "complete ordering, n = 6 (mod 8), chain from [-4, n-4]",
        [8 => 6],
        "[!4,n-4] ..(4,-4).. [!(n-6)/2,(n+6)/2] > [!(n-2)/2,(n+2)/2] ..(-4,4).. [!2,n-2] > [!2,n-6] ..(0,-4).. [!2,2] > [!2,!2]",
        [OFF_LATTICE]),
    entry!("ee-full-n3-mod8-3-pos", EvenEven, "complete ordering, n = 3 (mod 8), chain from [2, -(n-3)]",
        [8 => 3],
        "[2,!n-3] ..(4,-4).. [(n-7)/2,!(n+5)/2] > [(n-3)/2,!(n+1)/2] ..(-4,4).. [4,!n-5] = [2,!n-5] ..(4,-4).. [n-5,!2] = [!2,n-5] ..(0,-4).. [!2,2] > [!2,!2]"),
    entry!("ee-full-n3-mod8-3-neg", EvenEven, "complete ordering, n = 3 (mod 8), chain from [-4, n-5]",
        [8 => 3],
        "[!4,n-5] ..(4,-4).. [!(n-7)/2,(n+5)/2] > [!(n-15)/2,(n+13)/2] ..(-4,4).. [!2,n-3] > [!2,n-7] ..(0,-4).. [!2,2] > [!2,!2]",
        [OFF_LATTICE, "first run written to end at -(n-7)/2, which is off its lattice; the lattice point -(n-3)/2 is not visited"]),
    entry!("ee-full-n3-mod8-7-pos", EvenEven, "complete ordering, n = 7 (mod 8), chain from [2, -(n-3)]",
        [8 => 7],
        "[2,!n-3] ..(4,-4).. [(n-3)/2,!(n+1)/2] > [(n-7)/2,!(n+5)/2] ..(-4,4).. [4,!n-5] = [2,!n-5] ..(4,-4).. [n-5,!2] = [!2,n-5] ..(0,-4).. [!2,2] > [!2,!2]",
        ["tail term [-2, n-12] read as [-2, n-13], the step-4 successor of [-2, n-9]"]),
    entry!("ee-full-n3-mod8-7-neg", EvenEven, "complete ordering, n = 7 (mod 8), chain from [-4, n-5]",
        [8 => 7],
        "[!4,n-5] ..(4,-4).. [!(n-7)/2,(n+5)/2] > [!(n-3)/2,(n+1)/2] ..(-4,4).. [!2,n-3] > [!2,n-7] ..(0,-4).. [!2,2] > [!2,!2]",
        [OFF_LATTICE]),
    entry!("ee-full-n0-mod8-0-pos", EvenEven, "complete ordering, n = 0 (mod 8), chain from [n-4, -4]",
        [8 => 0],
        "[n-4,!4] ..(-4,4).. [4,!n-4] = [2,!n-4] ..(4,-4).. [(n-4)/2,!n/2] > [(n-8)/2,!(n+4)/2] ..(-4,4).. [4,!n-6] = [2,!n-6] ..(4,-4).. [n-6,!2] > [n-10,!2] ..(-4,0).. [2,!2] > [!2,!2]"),
    entry!("ee-full-n0-small", EvenEven, "complete ordering, n = 0 (mod 4), chain from [2, -(n-2)]",
        [4 => 0], "[2,!n-2] ..(4,-4).. [n-2,!2] = [!2,n-2] ..(0,-4).. [!2,2] > [!2,!2]"),
    entry!("ee-full-n0-mod8-0-neg", EvenEven, "complete ordering, n = 0 (mod 8), negative pairs",
        [8 => 0],
        "[!4,!n-4] ..(4,-4).. [!n/2,!n/2] > [!(n-4)/2,!(n+4)/2] ..(-4,4).. [!2,!n-2] > [!2,!n-6] ..(0,-4).. [!2,!2]"),
    entry!("ee-full-n0-mod8-4-pos", EvenEven, "complete ordering, n = 4 (mod 8), chain from [n-4, -4]",
        [8 => 4],
        "[n-4,!4] ..(-4,4).. [4,!n-4] = [2,!n-4] ..(4,-4).. [(n-8)/2,!(n+4)/2] > [(n-4)/2,!n/2] ..(-4,4).. [4,!n-6] = [2,!n-6] ..(4,-4).. [n-6,!2] > [n-10,!2] ..(-4,0).. [2,!2] > [!2,!2]",
        ["head term [m-4, -4] read as [n-4, -4]", "hypothesis n/2 = 2 (mod 2) read as n/2 = 2 (mod 4)"]),
    entry!("ee-full-n0-mod8-4-neg", EvenEven, "complete ordering, n = 4 (mod 8), negative pairs",
        [8 => 4],
        "[!4,!n-4] ..(4,-4).. [!(n-4)/2,!(n+4)/2] > [!n/2,!n/2] ..(-4,4).. [!2,!n-2] > [!2,!n-6] ..(0,-4).. [!2,!2]"),
    entry!("ee-full-n1-mod8-1-pos", EvenEven, "complete ordering, n = 1 (mod 8), chain from [n-5, -4]",
        [8 => 1],
        "[n-5,!4] ..(-4,4).. [4,!n-5] = [2,!n-5] ..(4,-4).. [(n-5)/2,!(n-1)/2] > [(n-9)/2,!(n+3)/2] ..(-4,4).. [4,!n-7] = [2,!n-7] ..(4,-4).. [n-7,!2] > [n-11,!2] ..(-4,0).. [2,!2] > [!2,!2]"),
    entry!("ee-full-n1-small", EvenEven, "complete ordering, n = 1 (mod 4), chain from [2, -(n-3)]",
        [4 => 1], "[2,!n-3] ..(4,-4).. [n-3,!2] > [n-7,!2] ..(-4,0).. [2,!2] > [!2,!2]"),
    entry!("ee-full-n1-mod8-1-neg", EvenEven, "complete ordering, n = 1 (mod 8), negative pairs",
        [8 => 1],
        "[!4,!n-5] ..(4,-4).. [!(n-1)/2,!(n-1)/2] > [!(n-5)/2,!(n+3)/2] ..(-4,4).. [!2,!n-3] > [!2,!n-7] ..(0,-4).. [!2,!2]"),
    entry!("ee-full-n1-mod8-5-pos", EvenEven, "complete ordering, n = 5 (mod 8), chain from [n-5, -4]",
        [8 => 5],
        "[n-5,!4] ..(-4,4).. [4,!n-5] = [2,!n-5] ..(4,-4).. [(n-9)/2,!(n+3)/2] > [(n-5)/2,!(n-1)/2] ..(-4,4).. [4,!n-7] = [2,!n-7] ..(4,-4).. [n-7,!2] > [n-11,!2] ..(-4,0).. [2,!2] > [!2,!2]",
        ["tail term [n-10, -2] read as [n-11, -2]"]),
    entry!("ee-full-n1-mod8-5-neg", EvenEven, "complete ordering, n = 5 (mod 8), negative pairs",
        [8 => 5],
        "[!4,!n-5] ..(4,-4).. [!(n-5)/2,!(n+3)/2] > [!(n-1)/2,!(n-1)/2] ..(-4,4).. [!2,!n-3] > [!2,!n-7] ..(0,-4).. [!2,!2]"),

    // odd-odd
    entry!("oo-n0", OddOdd, "odd pairs, n = 0 (mod 4): decreasing from r = 3",
        [4 => 0], "[3,n-3] ..(2,-2).. [(n-2)/2,(n+2)/2]"),
    entry!("oo-n2", OddOdd, "odd pairs, n = 2 (mod 4): decreasing from r = 3",
        [4 => 2], "[3,n-3] ..(2,-2).. [n/2,n/2]"),
    entry!("oo-n1", OddOdd, "odd pairs, n = 1 (mod 4): decreasing from r = 3",
        [4 => 1], "[3,n-4] ..(2,-2).. [(n-3)/2,(n+1)/2]"),
    entry!("oo-n3", OddOdd, "odd pairs, n = 3 (mod 4): decreasing from r = 3",
        [4 => 3], "[3,n-4] ..(2,-2).. [(n-1)/2,(n-1)/2]"),
    entry!("oo-dom-n-even", OddOdd, "odd pairs, n even: maximum at r = 3",
        [2 => 0], "[3,n-3] >= [3,n-3] ..(2,-2).. [n-3,3]"),
    entry!("oo-dom-n-odd", OddOdd, "odd pairs, n odd: maximum at r = 3",
        [2 => 1], "[3,n-4] >= [3,n-4] ..(2,-2).. [n-4,3]"),
    entry!("oo-full-n0", OddOdd, "complete ordering of odd pairs, n = 0 (mod 4)",
        [4 => 0], "[3,n-3] ..(2,-2).. [(n-2)/2,(n+2)/2] > [(n-6)/2,(n+2)/2] ..(-2,0).. [3,(n+2)/2] > [3,(n-2)/2] ..(0,-2).. [3,3]"),
    entry!("oo-full-n1", OddOdd, "complete ordering of odd pairs, n = 1 (mod 4)",
        [4 => 1], "[3,n-4] ..(2,-2).. [(n-3)/2,(n+1)/2] > [(n-7)/2,(n+1)/2] ..(-2,0).. [3,(n+1)/2] > [3,(n-3)/2] ..(0,-2).. [3,3]"),
    entry!("oo-full-n2", OddOdd, "complete ordering of odd pairs, n = 2 (mod 4)",
        [4 => 2], "[3,n-3] ..(2,-2).. [n/2,n/2] > [(n-4)/2,n/2] ..(-2,0).. [3,n/2] > [3,(n-4)/2] ..(0,-2).. [3,3]"),
    entry!("oo-full-n3", OddOdd, "complete ordering of odd pairs, n = 3 (mod 4)",
        [4 => 3], "[3,n-4] ..(2,-2).. [(n-1)/2,(n-1)/2] > [(n-5)/2,(n-1)/2] ..(-2,0).. [3,(n-1)/2] > [3,(n-5)/2] ..(0,-2).. [3,3]"),

    // mixed parity, n odd; positive even cycle
    entry!("mx-pp-m0-low", Mixed, "positive even cycle, n = 0 (mod 3): from r = 2 up to the pivot",
        [2 => 1, 3 => 0], "[2,n-2] ..(4,-4).. [2n/3,n/3]"),
    entry!("mx-pp-m0-high-n1", Mixed, "positive even cycle, n = 0 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 0, 4 => 1], "[n-3,3] ..(-4,4).. [2n/3,n/3]"),
    entry!("mx-pp-m0-high-n3", Mixed, "positive even cycle, n = 0 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 0, 4 => 3], "[n-5,5] ..(-4,4).. [2n/3,n/3]"),
    entry!("mx-pp-m1-low", Mixed, "positive even cycle, n = 1 (mod 3): from r = 2 up to the pivot",
        [2 => 1, 3 => 1], "[2,n-2] ..(4,-4).. [(2n-8)/3,(n+8)/3]"),
    entry!("mx-pp-m1-high-n1", Mixed, "positive even cycle, n = 1 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 1, 4 => 1], "[n-3,3] ..(-4,4).. [(2n+4)/3,(n-4)/3]"),
    entry!("mx-pp-m1-high-n3", Mixed, "positive even cycle, n = 1 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 1, 4 => 3], "[n-5,5] ..(-4,4).. [(2n+4)/3,(n-4)/3]"),
    entry!("mx-pp-m2-low", Mixed, "positive even cycle, n = 2 (mod 3): from r = 2 up to the pivot",
        [2 => 1, 3 => 2], "[2,n-2] ..(4,-4).. [(2n-4)/3,(n+4)/3]"),
    entry!("mx-pp-m2-high-n1", Mixed, "positive even cycle, n = 2 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 2, 4 => 1], "[n-3,3] ..(-4,4).. [(2n+8)/3,(n-8)/3]"),
    entry!("mx-pp-m2-high-n3", Mixed, "positive even cycle, n = 2 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 2, 4 => 3], "[n-5,5] ..(-4,4).. [(2n+8)/3,(n-8)/3]"),
    entry!("mx-pp-k0-n1", Mixed, "positive even cycle, r = 0 (mod 4), n-3 = 2 (mod 4)",
        [2 => 1, 4 => 1], "[n-5,5] ..(-4,4).. [4,n-4]"),
    entry!("mx-pp-k0-n3", Mixed, "positive even cycle, r = 0 (mod 4), n-3 = 0 (mod 4)",
        [2 => 1, 4 => 3], "[n-3,3] ..(-4,4).. [4,n-4]",
        ["displayed prefix [n-3, 5] > [n-7, 9] read as [n-3, 3] > [n-7, 7]"]),

    // mixed parity, negative even cycle
    entry!("mx-nn-m0-low", Mixed, "negative even cycle, n = 0 (mod 3): from r = 4 up to the pivot",
        [2 => 1, 3 => 0], "[!4,n-4] ..(4,-4).. [!(2n-6)/3,(n+6)/3]"),
    entry!("mx-nn-m0-high-n1", Mixed, "negative even cycle, n = 0 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 0, 4 => 1], "[!n-5,!5] ..(-4,4).. [!(2n+6)/3,!(n-6)/3]"),
    entry!("mx-nn-m0-high-n3", Mixed, "negative even cycle, n = 0 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 0, 4 => 3], "[!n-3,!3] ..(-4,4).. [!(2n+6)/3,!(n-6)/3]"),
    entry!("mx-nn-m1-low", Mixed, "negative even cycle, n = 1 (mod 3): from r = 4 up to the pivot",
        [2 => 1, 3 => 1], "[!4,n-4] ..(4,-4).. [!(2n-2)/3,(n+2)/3]"),
    entry!("mx-nn-m1-high-n1", Mixed, "negative even cycle, n = 1 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 1, 4 => 1], "[!n-5,!5] ..(-4,4).. [!(2n+10)/3,!(n-10)/3]"),
    entry!("mx-nn-m1-high-n3", Mixed, "negative even cycle, n = 1 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 1, 4 => 3], "[!n-3,!3] ..(-4,4).. [!(2n+10)/3,!(n-10)/3]"),
    entry!("mx-nn-m2-low", Mixed, "negative even cycle, n = 2 (mod 3): from r = 4 up to the pivot",
        [2 => 1, 3 => 2], "[!4,n-4] ..(4,-4).. [!(2n-10)/3,(n+10)/3]"),
    entry!("mx-nn-m2-high-n1", Mixed, "negative even cycle, n = 2 (mod 3), n-3 = 2 (mod 4): down to the pivot",
        [2 => 1, 3 => 2, 4 => 1], "[!n-5,!5] ..(-4,4).. [!(2n+2)/3,!(n-2)/3]"),
    entry!("mx-nn-m2-high-n3", Mixed, "negative even cycle, n = 2 (mod 3), n-3 = 0 (mod 4): down to the pivot",
        [2 => 1, 3 => 2, 4 => 3], "[!n-3,!3] ..(-4,4).. [!(2n+2)/3,!(n-2)/3]"),
    entry!("mx-nn-k2-n1", Mixed, "negative even cycle, r = 2 (mod 4), n-3 = 2 (mod 4)",
        [2 => 1, 4 => 1], "[!n-3,!3] ..(-4,4).. [!2,!n-2]"),
    entry!("mx-nn-k2-n3", Mixed, "negative even cycle, r = 2 (mod 4), n-3 = 0 (mod 4)",
        [2 => 1, 4 => 3], "[!n-5,!5] ..(-4,4).. [!2,!n-2]"),

    // mixed parity, complete orderings
    entry!("mx-full-m0-pos-low", Mixed, "complete ordering, n = 0 (mod 3), positive even cycle from r = 2",
        [2 => 1, 3 => 0],
        "[2,n-2] ..(4,-4).. [2n/3,n/3] > [(2n-12)/3,n/3] ..(-4,0).. [2,n/3] > [2,(n-6)/3] ..(0,-2).. [2,3]"),
    entry!("mx-full-m0-pos-high-n1", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 2 (mod 4), positive even cycle from r = n-3",
        [2 => 1, 3 => 0, 4 => 1],
        "[n-3,3] ..(-4,4).. [2n/3,n/3] > [2n/3,(n-6)/3] ..(0,-2).. [2n/3,3] > [(2n-12)/3,3] ..(-4,0).. [2,3]",
        ["missing relation symbol between [2n/3, 3] and [(2n-12)/3, 3] read as >"]),
    entry!("mx-full-m0-pos-high-n3", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 0 (mod 4), positive even cycle from r = n-5",
        [2 => 1, 3 => 0, 4 => 3],
        "[n-5,5] ..(-4,4).. [2n/3,n/3] > [(2n-12)/3,n/3] ..(-4,0).. [2,n/3] > [2,(n-6)/3] ..(0,-2).. [2,3]"),
    entry!("mx-full-m0-neg2-n1", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 2 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 0, 4 => 1],
        "[!n-3,!3] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3] > [!2,!2]"),
    entry!("mx-full-m0-neg2-n3", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 0 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 0, 4 => 3],
        "[!n-5,!5] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3] > [!2,!2]"),
    entry!("mx-full-pos4-n1", Mixed, "complete ordering, n-3 = 2 (mod 4), positive 4-cycle tail",
        [2 => 1, 4 => 1],
        "[n-5,5] ..(-4,4).. [4,n-4] > [4,n-6] ..(0,-2).. [4,3] > [2,3]",
        ["missing ellipsis after [4, n-6] read as a step (0,-2) run"]),
    entry!("mx-full-pos4-n3", Mixed, "complete ordering, n-3 = 0 (mod 4), positive 4-cycle tail",
        [2 => 1, 4 => 3],
        "[n-3,3] ..(-4,4).. [4,n-4] > [4,n-6] ..(0,-2).. [4,3] > [2,3]",
        ["displayed prefix [n-3, 5] > [n-7, 9] read as [n-3, 3] > [n-7, 7]"]),
    entry!("mx-full-m0-neg4-low", Mixed, "complete ordering, n = 0 (mod 3), negative even cycle from r = 4",
        [2 => 1, 3 => 0],
        "[!4,n-4] ..(4,-4).. [!(2n-6)/3,(n+6)/3] > [!(2n-18)/3,(n+6)/3] ..(-4,0).. [!4,(n+6)/3] > [!4,n/3] ..(0,-2).. [!4,3] > [!2,3]"),
    entry!("mx-full-m0-neg4-high-n1", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 2 (mod 4), negative even cycle from r = n-5",
        [2 => 1, 3 => 0, 4 => 1],
        "[!n-5,!5] ..(-4,4).. [!(2n+6)/3,!(n-6)/3] > [!(2n-6)/3,(n-6)/3] ..(-4,0).. [!4,(n-6)/3] > [!4,(n-12)/3] ..(0,-2).. [!4,3] > [!2,3]"),
    entry!("mx-full-m0-neg4-high-n3", Mixed, "complete ordering, n = 0 (mod 3), n-3 = 0 (mod 4), negative even cycle from r = n-3",
        [2 => 1, 3 => 0, 4 => 3],
        "[!n-3,!3] ..(-4,4).. [!(2n+6)/3,!(n-6)/3] > [!(2n+6)/3,(n-12)/3] ..(0,-2).. [!(2n+6)/3,3] > [!(2n-6)/3,3] ..(-4,0).. [!4,3] > [!2,3]"),
    entry!("mx-full-m1-pos-low", Mixed, "complete ordering, n = 1 (mod 3), positive even cycle from r = 2",
        [2 => 1, 3 => 1],
        "[2,n-2] ..(4,-4).. [(2n-8)/3,(n+8)/3] > [(2n-20)/3,(n+8)/3] ..(-4,0).. [2,(n+8)/3] > [2,(n+2)/3] ..(0,-2).. [2,3]"),
    entry!("mx-full-m1-pos-high-n1", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 2 (mod 4), positive even cycle from r = n-3",
        [2 => 1, 3 => 1, 4 => 1],
        "[n-3,3] ..(-4,4).. [(2n+4)/3,(n-4)/3] > [(2n-8)/3,(n-4)/3] ..(-4,0).. [2,(n-4)/3] > [2,(n-10)/3] ..(0,-2).. [2,3]"),
    entry!("mx-full-m1-pos-high-n3", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 0 (mod 4), positive even cycle from r = n-5",
        [2 => 1, 3 => 1, 4 => 3],
        "[n-5,5] ..(-4,4).. [(2n+4)/3,(n-4)/3] > [(2n+4)/3,(n-10)/3] ..(0,-2).. [(2n+4)/3,3] > [(2n-8)/3,3] ..(-4,0).. [2,3]"),
    entry!("mx-full-m1-neg2-n1", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 2 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 1, 4 => 1],
        "[!n-3,!3] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3]"),
    entry!("mx-full-m1-neg2-n3", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 0 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 1, 4 => 3],
        "[!n-5,!5] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3]"),
    entry!("mx-full-m1-neg4-low", Mixed, "complete ordering, n = 1 (mod 3), negative even cycle from r = 4",
        [2 => 1, 3 => 1],
        "[!4,n-4] ..(4,-4).. [!(2n-2)/3,(n+2)/3] > [!(2n-14)/3,(n+2)/3] ..(-4,0).. [!4,(n+2)/3] > [!4,(n-4)/3] ..(0,-2).. [!4,3] > [!2,3]"),
    entry!("mx-full-m1-neg4-high-n1", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 2 (mod 4), negative even cycle from r = n-5",
        [2 => 1, 3 => 1, 4 => 1],
        "[!n-5,!5] ..(-4,4).. [!(2n+10)/3,!(n-10)/3] > [!(2n-2)/3,(n-10)/3] ..(-4,0).. [!4,(n-10)/3] > [!4,(n-16)/3] ..(0,-2).. [!4,3] > [!2,3]"),
    entry!("mx-full-m1-neg4-high-n3", Mixed, "complete ordering, n = 1 (mod 3), n-3 = 0 (mod 4), negative even cycle from r = n-3",
        [2 => 1, 3 => 1, 4 => 3],
        "[!n-3,!3] ..(-4,4).. [!(2n+10)/3,!(n-10)/3] > [!(2n+10)/3,(n-16)/3] ..(0,-2).. [!(2n+10)/3,3] > [!(2n-2)/3,3] ..(-4,0).. [!4,3] > [!2,3]",
        ["missing ellipsis in the second run read as a step (0,-2) run"]),
    entry!("mx-full-m2-pos-low", Mixed, "complete ordering, n = 2 (mod 3), positive even cycle from r = 2",
        [2 => 1, 3 => 2],
        "[2,n-2] ..(4,-4).. [(2n-4)/3,(n+4)/3] > [(2n-16)/3,(n+4)/3] ..(-4,0).. [2,(n+4)/3] > [2,(n-2)/3] ..(0,-2).. [2,3]",
        ["intermediate term (2n-26)/3 read as (2n-28)/3, the step-4 successor of (2n-16)/3",
         "missing ellipsis after [2, (n-2)/3] read as a step (0,-2) run"]),
    entry!("mx-full-m2-pos-high-n1", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 2 (mod 4), positive even cycle from r = n-3",
        [2 => 1, 3 => 2, 4 => 1],
        "[n-3,3] ..(-4,4).. [(2n+8)/3,(n-8)/3] > [(2n-4)/3,(n-8)/3] ..(-4,0).. [2,(n-8)/3] > [2,(n-14)/3] ..(0,-2).. [2,3]"),
    entry!("mx-full-m2-pos-high-n3", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 0 (mod 4), positive even cycle from r = n-5",
        [2 => 1, 3 => 2, 4 => 3],
        "[n-5,5] ..(-4,4).. [(2n+8)/3,(n-8)/3] > [(2n+8)/3,(n-14)/3] ..(0,-2).. [(2n+8)/3,3] > [(2n-4)/3,3] ..(-4,0).. [2,3]"),
    entry!("mx-full-m2-neg2-n1", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 2 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 2, 4 => 1],
        "[!n-3,!3] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3]"),
    entry!("mx-full-m2-neg2-n3", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 0 (mod 4), negative 2-cycle tail",
        [2 => 1, 3 => 2, 4 => 3],
        "[!n-5,!5] ..(-4,4).. [!2,!n-2] > [!2,n-4] ..(0,-2).. [!2,3]"),
    entry!("mx-full-m2-neg4-low", Mixed, "complete ordering, n = 2 (mod 3), negative even cycle from r = 4",
        [2 => 1, 3 => 2],
        "[!4,n-4] ..(4,-4).. [!(2n-10)/3,(n+10)/3] > [!(2n-22)/3,(n+10)/3] ..(-4,0).. [!4,(n+10)/3] > [!4,(n+4)/3] ..(0,-2).. [!4,3] > [!2,3]"),
    entry!("mx-full-m2-neg4-high-n1", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 2 (mod 4), negative even cycle from r = n-5",
        [2 => 1, 3 => 2, 4 => 1],
        "[!n-5,!5] ..(-4,4).. [!(2n+2)/3,!(n-2)/3] > [!(2n-10)/3,(n-2)/3] ..(-4,0).. [!4,(n-2)/3] > [!4,(n-8)/3] ..(0,-2).. [!4,3] > [!2,3]",
        ["missing ellipsis before [-4, (n-2)/3] read as a step (-4,0) run"]),
    entry!("mx-full-m2-neg4-high-n3", Mixed, "complete ordering, n = 2 (mod 3), n-3 = 0 (mod 4), negative even cycle from r = n-3",
        [2 => 1, 3 => 2, 4 => 3],
        "[!n-3,!3] ..(-4,4).. [!(2n+2)/3,!(n-2)/3] > [!(2n+2)/3,(n-8)/3] ..(0,-2).. [!(2n+2)/3,3] > [!(2n-10)/3,3] ..(-4,0).. [!4,3] > [!2,3]"),
];

pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn find_entry(id: &str) -> Result<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownChain(id.to_string()))
}

/// Materializes a catalog entry at `n`, expanding every run along its step.
pub fn expected_chain(chain_id: &str, n: usize) -> Result<OrderingChain> {
    let entry = find_entry(chain_id)?;
    let fail = |reason: String| Error::Inadmissible { chain_id: chain_id.to_string(), n, reason };
    if !entry.hypotheses_hold(n) {
        return Err(fail(format!("requires {}", entry.hypotheses_text())));
    }
    let display = entry.parsed();
    let m = display.materialize(n).map_err(|e| match e {
        Error::Inadmissible { reason, .. } => fail(reason),
        other => other,
    })?;
    if m.configs.len() < 2 {
        return Err(fail("fewer than two configurations".into()));
    }
    let links = match display.shape {
        Shape::Sequence => m
            .configs
            .windows(2)
            .zip(&m.relations)
            .map(|(w, &relation)| Link { lhs: w[0], rhs: w[1], relation })
            .collect(),
        Shape::Dominance => m.configs[1..]
            .iter()
            .zip(&m.relations)
            .map(|(&rhs, &relation)| Link { lhs: m.configs[0], rhs, relation })
            .collect(),
    };
    Ok(OrderingChain {
        chain_id: chain_id.to_string(),
        n,
        shape: display.shape,
        configs: m.configs,
        links,
        notes: m.notes,
    })
}
