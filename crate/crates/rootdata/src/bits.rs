/// A subset of {0,…,63}: bit `i` set iff `i` is a member.
pub type Mask = u64;

/// Build a mask from members.
pub fn mask_from(items: impl IntoIterator<Item = usize>) -> Mask {
    items.into_iter().fold(0, |m, i| {
        assert!(i < 64, "set element {i} exceeds the 63 supported");
        m | (1u64 << i)
    })
}

/// Members of a mask in increasing order.
pub fn mask_to_vec(mut m: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i);
        m &= m - 1;
    }
    out
}

/// Mask of the closed interval [a, b] (empty if a > b).
pub(crate) fn interval(a: i64, b: i64) -> Mask {
    if a > b || b < 0 {
        return 0;
    }
    let a = a.max(0) as u32;
    let b = b.min(63) as u32;
    let hi = if b == 63 { u64::MAX } else { (1u64 << (b + 1)) - 1 };
    let lo = (1u64 << a) - 1;
    hi & !lo
}

pub(crate) fn has(m: Mask, i: usize) -> bool {
    i < 64 && (m >> i) & 1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_intervals() {
        assert_eq!(mask_to_vec(mask_from([1, 3, 5])), vec![1, 3, 5]);
        assert_eq!(mask_to_vec(interval(2, 4)), vec![2, 3, 4]);
        assert_eq!(interval(3, 2), 0);
        assert_eq!(interval(0, 63), u64::MAX);
    }
}
