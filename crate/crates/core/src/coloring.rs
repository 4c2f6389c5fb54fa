use crate::mop::Mop;

/// Proper 3-coloring in which every face is trichromatic.
///
/// Splits on the lexicographically first diagonal, colors both halves and
/// permutes the second half's colors to agree on the shared diagonal.
pub fn three_coloring(g: &Mop) -> Vec<u8> {
    let Some(&d) = g.diagonals().first() else {
        return vec![0, 1, 2];
    };
    let split = g.diagonal_partition(d).expect("listed diagonal");
    let c1 = three_coloring(&split.g1);
    let c2 = three_coloring(&split.g2);
    let mut colors = vec![u8::MAX; g.n()];
    for (child, &parent) in split.map1.iter().enumerate() {
        colors[parent] = c1[child];
    }
    // Permutation sending g2's colors on the cut to g1's colors.
    let mut perm = [u8::MAX; 3];
    for (child, &parent) in split.map2.iter().enumerate() {
        if parent == d.0 || parent == d.1 {
            perm[c2[child] as usize] = colors[parent];
        }
    }
    let used: Vec<u8> = perm.iter().copied().filter(|&c| c != u8::MAX).collect();
    let free = (0..3u8).find(|c| !used.contains(c)).expect("two colors on a diagonal");
    for p in perm.iter_mut().filter(|p| **p == u8::MAX) {
        *p = free;
    }
    for (child, &parent) in split.map2.iter().enumerate() {
        colors[parent] = perm[c2[child] as usize];
    }
    colors
}
