//! Rewrites that move a representation over an infinite language onto the
//! equivalent 2-uniform finite language.

use crate::words::VertexWord;

/// Doubles every letter that occurs once, then keeps only the first and
/// last occurrence of every letter.
fn first_and_last(w: &VertexWord) -> VertexWord {
    let counts = w.counts();
    let doubled: Vec<usize> = w
        .symbols()
        .iter()
        .flat_map(|&s| {
            let s = s as usize;
            std::iter::repeat_n(s, if counts[s] == 1 { 2 } else { 1 })
        })
        .collect();
    let mut total = vec![0usize; counts.len()];
    for &s in &doubled {
        total[s] += 1;
    }
    let mut seen = vec![0usize; counts.len()];
    let kept: Vec<usize> = doubled
        .into_iter()
        .filter(|&s| {
            seen[s] += 1;
            seen[s] == 1 || seen[s] == total[s]
        })
        .collect();
    VertexWord::from_indices(w.alphabet(), &kept).expect("indices come from the word")
}

/// Maps a word over ⟨0*1*⟩ to a 2-uniform word representing the same
/// graph over ⟨0011⟩.
pub fn normalize_0ast1ast(w: &VertexWord) -> VertexWord {
    first_and_last(w)
}

/// Maps a word over ⟨0{0,1}*1⟩ to a 2-uniform word representing the same
/// graph over ⟨0011, 0101⟩.
pub fn normalize_0any1(w: &VertexWord) -> VertexWord {
    first_and_last(w)
}
