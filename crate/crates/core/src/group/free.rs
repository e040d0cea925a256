/// A letter of a free-group word: `+k` is generator `k` (1-based), `-k` its inverse.
pub type Letter = i32;

/// Free group on `rank` generators. Elements are freely reduced words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FreeGroup {
    rank: usize,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "free group needs at least one generator");
        Self { rank }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generator_names(&self) -> Vec<String> {
        match self.rank {
            1 => vec!["x".into()],
            2 => vec!["x".into(), "y".into()],
            n => (1..=n).map(|i| format!("g{i}")).collect(),
        }
    }

    pub fn is_reduced(word: &[Letter]) -> bool {
        word.windows(2).all(|w| w[0] != -w[1]) && !word.contains(&0)
    }

    pub fn multiply(&self, a: &[Letter], b: &[Letter]) -> Vec<Letter> {
        let mut out = a.to_vec();
        for &l in b {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    pub fn inverse(&self, a: &[Letter]) -> Vec<Letter> {
        a.iter().rev().map(|l| -l).collect()
    }

    /// Letters in ball order: g1, g1⁻¹, g2, g2⁻¹, …
    fn letters(&self) -> Vec<Letter> {
        (1..=self.rank as Letter).flat_map(|k| [k, -k]).collect()
    }

    /// All reduced words of length at most `radius`, ordered by length and
    /// then by the letter order g1 < g1⁻¹ < g2 < g2⁻¹ < ….
    pub fn ball(&self, radius: usize) -> Vec<Vec<Letter>> {
        let letters = self.letters();
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &layer {
                for &l in &letters {
                    if w.last() == Some(&-l) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// Number of reduced words of length ≤ r: 1 + Σ_{l=1..r} 2k(2k−1)^{l−1}.
    pub fn ball_size(&self, radius: usize) -> usize {
        let k = self.rank;
        1 + (1..=radius).map(|l| 2 * k * (2 * k - 1).pow(l as u32 - 1)).sum::<usize>()
    }

    pub fn display_word(&self, word: &[Letter]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        let names = self.generator_names();
        let mut parts = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let l = word[i];
            let mut j = i;
            while j < word.len() && word[j] == l {
                j += 1;
            }
            let run = (j - i) as i64 * if l > 0 { 1 } else { -1 };
            let name = &names[l.unsigned_abs() as usize - 1];
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            i = j;
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let f = FreeGroup::new(2);
        assert!(f.multiply(&[1], &[-1]).is_empty());
        assert_eq!(f.multiply(&[1, 2], &[-2, 1]), vec![1, 1]);
    }

    #[test]
    fn small_balls() {
        let f = FreeGroup::new(2);
        assert_eq!(f.ball(0), vec![Vec::<Letter>::new()]);
        assert_eq!(f.ball(1), vec![vec![], vec![1], vec![-1], vec![2], vec![-2]]);
        assert_eq!(f.ball(2).len(), 17);
        for r in 0..5 {
            let b = f.ball(r);
            assert_eq!(b.len(), f.ball_size(r));
            assert!(b.iter().all(|w| FreeGroup::is_reduced(w)));
        }
    }

    #[test]
    fn display() {
        let f = FreeGroup::new(2);
        assert_eq!(f.display_word(&[1, 1, -2]), "x^2*y^-1");
        assert_eq!(f.display_word(&[]), "e");
    }
}
