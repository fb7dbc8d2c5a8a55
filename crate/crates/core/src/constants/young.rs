use crate::perm::Partition;

/// Number of standard Young tableaux of shape `λ`, by the hook-length
/// formula `n! / Π hooks`. Exponents of each prime are cancelled before
/// multiplying so nothing overflows short of the answer itself.
pub fn f_lambda(lambda: &Partition) -> u128 {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut exponents = vec![0i64; n + 1];
    let mut add = |mut x: usize, sign: i64| {
        let mut d = 2;
        while d * d <= x {
            while x.is_multiple_of(d) {
                exponents[d] += sign;
                x /= d;
            }
            d += 1;
        }
        if x > 1 {
            exponents[x] += sign;
        }
    };
    for x in 2..=n {
        add(x, 1);
    }
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            let hook = lambda.part(i) - j + conj.part(j) - i + 1;
            add(hook, -1);
        }
    }
    exponents
        .iter()
        .enumerate()
        .map(|(prime, &e)| {
            assert!(e >= 0, "hook product does not divide n!");
            (prime as u128).pow(e as u32)
        })
        .product()
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Counts standard tableaux by removing a corner box.
    fn by_corners(parts: Vec<usize>, memo: &mut HashMap<Vec<usize>, u128>) -> u128 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(&parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > next {
                let mut smaller = parts.clone();
                smaller[i] -= 1;
                total += by_corners(smaller, memo);
            }
        }
        memo.insert(parts, total);
        total
    }

    #[test]
    fn examples() {
        assert_eq!(f_lambda(&Partition::empty()), 1);
        assert_eq!(f_lambda(&lam("2,2,1")), 5);
        assert_eq!(f_lambda(&lam("2,1,1,1")), 4);
        assert_eq!(f_lambda(&lam("7")), 1);
        assert_eq!(f_lambda(&lam("1,1,1,1")), 1);
    }

    #[test]
    fn matches_corner_recursion() {
        let mut memo = HashMap::new();
        for n in 0..=12 {
            for lambda in Partition::all_of(n) {
                assert_eq!(f_lambda(&lambda), by_corners(lambda.parts().to_vec(), &mut memo), "{lambda}");
            }
        }
    }

    #[test]
    fn squares_sum_to_factorial() {
        for n in 1..=10u128 {
            let sum: u128 = Partition::all_of(n as usize)
                .iter()
                .map(|l| f_lambda(l).pow(2))
                .sum();
            assert_eq!(sum, (1..=n).product::<u128>());
        }
    }
}
