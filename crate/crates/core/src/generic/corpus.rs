//! Named example presentations.

use crate::error::{Error, Result};
use crate::format::parse_presentation;
use crate::presentation::Presentation;

const ENTRIES: &[(&str, &str)] = &[
    (
        "exAt_i",
        "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y\n",
    ),
    (
        "exAt_ii",
        "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y*y\n",
    ),
    (
        "exAt_iii",
        "flavor commutative\nvars x, y, z\nrel x*x\nrel y*z\nrel x*y + z*z\nrel y*y*y\n",
    ),
    (
        "exAt_iv",
        "flavor commutative\nvars x1, x2, x3, x4\n\
         rel x1*x1\nrel x1*x2\nrel x1*x3\nrel x1*x4\nrel x2*x2\n\
         rel x2*x3*x3\nrel x2*x3*x4\nrel x2*x4*x4\nrel x3*x3*x3\nrel x3*x3*x4\nrel x3*x4*x4\nrel x4*x4*x4\n",
    ),
    (
        "exAt_iii_sub",
        "flavor commutative\nvars x, y, z\nrel x*x\nrel y*z\nrel x*y + z*z\n",
    ),
    (
        "thm_ex_a",
        "flavor commutative\nvars a, b, c, d\nrel a*a\nrel b*b\nrel c*c\nrel a*d - d*d\nrel a*c - b*d\nrel c*d\n",
    ),
    (
        "thm_ex_a_nc",
        "flavor noncommutative\nvars a, b, c, d\n\
         rel a*a\nrel b*b\nrel c*c\nrel a*d - d*d\nrel a*c - b*d\nrel c*d\n\
         rel a*b - b*a\nrel a*c - c*a\nrel a*d - d*a\nrel b*c - c*b\nrel b*d - d*b\nrel c*d - d*c\n",
    ),
    (
        "thm_ex_a_dual",
        "flavor lie\nvars a, b, c, d\nrel [a,b]\nrel [b,c]\nrel [a,c] + [b,d]\nrel [a,d] + d*d\n",
    ),
    (
        "thm_ex_b",
        "flavor noncommutative\nvars a, b, c, d\n\
         rel a*a\nrel b*b\nrel d*d\nrel a*d\nrel c*a\nrel c*d\nrel d*a\nrel d*b\nrel d*c\nrel b*a\n\
         rel a*b + a*c\nrel b*c + c*b\nrel b*c + c*c\n",
    ),
    (
        "thm_ex_b_dual",
        "flavor noncommutative\nvars a, b, c, d\nrel a*b - a*c\nrel b*c - c*b - c*c\nrel b*d\n",
    ),
    (
        "thm_ex_c",
        "flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n",
    ),
    (
        "thm_ex_c_dual",
        "flavor commutative\nvars a, b, c\nrel a*a\nrel b*c\nrel a*b + c*c\n",
    ),
    (
        "strongly_free_4",
        "flavor noncommutative\nvars x1, x2, y1, y2\nrel y1*x1\nrel y1*x2\nrel y2*x1\nrel y2*x2\n",
    ),
    (
        "anick_even_2",
        "flavor noncommutative\nvars x, y\nrel x*y\nrel x*x - y*y\n",
    ),
];

/// Names of the corpus entries, in a fixed order.
pub fn corpus_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.0).collect()
}

/// Source text of a corpus entry.
pub fn corpus_source(name: &str) -> Result<&'static str> {
    ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .map(|e| e.1)
        .ok_or_else(|| Error::UnknownCorpusEntry(name.to_string()))
}

pub fn corpus_entry(name: &str) -> Result<Presentation> {
    parse_presentation(corpus_source(name)?)
}

/// Every named presentation.
pub fn corpus() -> Vec<(&'static str, Presentation)> {
    ENTRIES
        .iter()
        .map(|(name, text)| (*name, parse_presentation(text).expect("corpus entries parse")))
        .collect()
}
