use crate::perm::Partition;

/// `c_{νμ}^λ` by direct enumeration: semistandard fillings of `λ/ν` with
/// content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient(nu: &Partition, mu: &Partition, lambda: &Partition) -> u64 {
    if nu.size() + mu.size() != lambda.size() || !lambda.contains(nu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (1..=lambda.len())
        .flat_map(|i| (nu.part(i) + 1..=lambda.part(i)).map(move |j| (i, j)))
        .collect();
    let mut filling = Filling {
        nu,
        lambda,
        cells: &cells,
        values: vec![vec![0; lambda.part(1) + 1]; lambda.len() + 1],
        remaining: mu.parts().to_vec(),
    };
    filling.count(0)
}

struct Filling<'a> {
    nu: &'a Partition,
    lambda: &'a Partition,
    cells: &'a [(usize, usize)],
    values: Vec<Vec<usize>>,
    remaining: Vec<usize>,
}

impl Filling<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return u64::from(self.is_lattice());
        }
        let (i, j) = self.cells[idx];
        let left = if j > self.nu.part(i) + 1 { self.values[i][j - 1] } else { 1 };
        let above = if i > 1 && j > self.nu.part(i - 1) { self.values[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for v in left.max(above)..=self.remaining.len() {
            if self.remaining[v - 1] == 0 {
                continue;
            }
            self.remaining[v - 1] -= 1;
            self.values[i][j] = v;
            total += self.count(idx + 1);
            self.remaining[v - 1] += 1;
        }
        self.values[i][j] = 0;
        total
    }

    fn is_lattice(&self) -> bool {
        let mut seen = vec![0usize; self.remaining.len() + 2];
        for i in 1..=self.lambda.len() {
            for j in (self.nu.part(i) + 1..=self.lambda.part(i)).rev() {
                let v = self.values[i][j];
                seen[v] += 1;
                if v > 1 && seen[v] > seen[v - 1] {
                    return false;
                }
            }
        }
        true
    }
}
