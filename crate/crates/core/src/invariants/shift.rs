use crate::error::{invalid, Result};
use crate::setcore::Family;

/// The `(i, j)`-shift: every member containing `j` but not `i` has `j`
/// replaced by `i`, unless the replacement is already a member.
pub fn shift(family: &Family, i: u32, j: u32) -> Result<Family> {
    if !(1 <= i && i < j && j <= family.n()) {
        return Err(invalid(format!("shift needs 1 <= i < j <= n, got i={i} j={j} n={}", family.n())));
    }
    Ok(shift_unchecked(family, i, j).0)
}

fn shift_unchecked(family: &Family, i: u32, j: u32) -> (Family, bool) {
    let mut changed = false;
    let members = family.iter().map(|&a| {
        if a.contains(j) && !a.contains(i) {
            let b = a.without(j).with(i);
            if !family.contains(&b) {
                changed = true;
                return b;
            }
        }
        a
    });
    let out = Family::from_sets(family.n(), family.k(), members.collect::<Vec<_>>()).expect("shift keeps uniformity");
    (out, changed)
}

/// Sweeps every `(i, j)` with `i < j` (i ascending, then j ascending) until
/// no shift changes the family.
pub fn full_compress(family: &Family) -> Family {
    full_compress_with_sweeps(family).0
}

/// [`full_compress`] together with the number of sweeps performed, the last
/// of which changed nothing.
pub fn full_compress_with_sweeps(family: &Family) -> (Family, usize) {
    let n = family.n();
    let mut current = family.clone();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut changed = false;
        for i in 1..=n {
            for j in i + 1..=n {
                let (next, c) = shift_unchecked(&current, i, j);
                changed |= c;
                current = next;
            }
        }
        if !changed {
            return (current, sweeps);
        }
    }
}
