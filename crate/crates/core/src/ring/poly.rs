//! Dense polynomial arithmetic over `Z_m`, coefficients constant-first.

/// `a * b mod f` over `Z_m`, with `f` monic of degree `d`; inputs have length `d`.
pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], m: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % m;
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // subtract c * x^(k-d) * f
        for (i, &fi) in f.iter().enumerate() {
            let idx = k - d + i;
            prod[idx] = (prod[idx] + m - (c * fi) % m) % m;
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod
}

/// Remainder of `a` by monic `g` over `Z_p`.
fn rem(a: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (i, &gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (c * gi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `d` over `Z_p` in lexicographic order of
/// `(c_0, c_1, ..., c_{d-1})`.
fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut c = vec![0u64; d + 1];
        c[d] = 1;
        for i in (0..d).rev() {
            c[i] = idx % p;
            idx /= p;
        }
        c
    })
}

/// Irreducibility over the prime field `Z_p` by trial division.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    (1..=d / 2).all(|k| monic_of_degree(p, k).all(|g| rem(f, &g, p).iter().any(|&c| c != 0)))
}

/// The lexicographically least irreducible monic polynomial of degree `d`
/// (coefficients compared constant-first).
pub(crate) fn least_irreducible(p: u64, d: usize) -> Vec<u64> {
    monic_of_degree(p, d).find(|f| is_irreducible(f, p)).expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn auto_selection_is_constant_first() {
        assert_eq!(least_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(least_irreducible(2, 3), vec![1, 0, 1, 1]);
        assert_eq!(least_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(least_irreducible(2, 4), vec![1, 0, 0, 1, 1]);
        assert_eq!(least_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn reduction() {
        // x * x = x + 1 in Z2[x]/(x^2+x+1)
        assert_eq!(mul_mod(&[0, 1], &[0, 1], &[1, 1, 1], 2), vec![1, 1]);
        // x * x = 0 in Z4[x]/(x^2)
        assert_eq!(mul_mod(&[0, 1], &[0, 1], &[0, 0, 1], 4), vec![0, 0]);
    }
}
