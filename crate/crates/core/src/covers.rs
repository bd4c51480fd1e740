//! Cover enumeration.
//!
//! Minimal covers of a circulant instance are walked through their cyclic gap
//! structure: a set is a cover iff all consecutive gaps are at most `k`, and
//! it is minimal iff additionally every two adjacent gaps sum to at least
//! `k + 1`. Enumeration is anchored at the smallest member (always below `k`)
//! and emits sets in lexicographic order of their sorted member lists.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::exec;
use crate::instance::CirculantInstance;
use crate::limits::Limits;
use crate::set::IndexSet;

/// Visits subsets of `{0..n}` of the given size as bitmasks, in lexicographic
/// order of the ascending index lists.
pub(crate) fn for_each_subset_of_size<F>(n: u32, size: u32, f: &mut F)
where
    F: FnMut(u128) -> ControlFlow<()>,
{
    if size == 0 || size > n {
        return;
    }
    let size = size as usize;
    let mut idx: Vec<u32> = (0..size as u32).collect();
    loop {
        let mut bits = 0u128;
        for &i in &idx {
            bits |= 1u128 << i;
        }
        if f(bits).is_break() {
            return;
        }
        // advance to the next combination
        let mut pos = size;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] + (size as u32 - pos as u32) < n {
                idx[pos] += 1;
                for q in pos + 1..size {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}

fn binomial_sum(n: u32, max_size: u32) -> u64 {
    let mut total: u64 = 0;
    let mut c: u64 = 1; // C(n, 0)
    for j in 1..=max_size.min(n) {
        c = match c.checked_mul((n - j + 1) as u64).map(|v| v / j as u64) {
            Some(v) => v,
            None => return u64::MAX,
        };
        total = total.saturating_add(c);
    }
    total
}

/// Visits every minimal cover whose smallest member is `anchor`, in
/// lexicographic order.
pub(crate) fn for_each_minimal_cover_from_anchor<F>(
    inst: &CirculantInstance,
    anchor: u32,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[u32]) -> ControlFlow<()>,
{
    let n = inst.n();
    let k = inst.k();
    debug_assert!(anchor < k);

    fn rec<F>(
        n: u32,
        k: u32,
        anchor: u32,
        elems: &mut Vec<u32>,
        gaps: &mut Vec<u32>,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let last = *elems.last().expect("nonempty");
        // Closing the cycle first keeps the emission order lexicographic:
        // a set precedes all of its extensions.
        let wrap = n - last + anchor;
        if (1..=k).contains(&wrap)
            && gaps.last().is_some_and(|&lg| lg + wrap > k)
            && wrap + gaps[0] > k
        {
            f(elems)?;
        }
        for g in 1..=k {
            let next = last + g;
            if next >= n {
                break;
            }
            if let Some(&lg) = gaps.last() {
                if lg + g < k + 1 {
                    continue;
                }
            }
            elems.push(next);
            gaps.push(g);
            let flow = rec(n, k, anchor, elems, gaps, f);
            elems.pop();
            gaps.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    let mut elems = vec![anchor];
    for g in 1..=k {
        let next = anchor + g;
        if next >= n {
            break;
        }
        elems.push(next);
        let mut gaps = vec![g];
        let flow = rec(n, k, anchor, &mut elems, &mut gaps, f);
        elems.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn anchor_covers(inst: &CirculantInstance, anchor: u32, cap: u64) -> Result<Vec<IndexSet>> {
    let mut out = Vec::new();
    let mut exceeded = false;
    let _ = for_each_minimal_cover_from_anchor(inst, anchor, &mut |elems| {
        if out.len() as u64 >= cap {
            exceeded = true;
            return ControlFlow::Break(());
        }
        out.push(IndexSet::from_members(inst.n(), elems.iter().copied()).expect("in range"));
        ControlFlow::Continue(())
    });
    if exceeded {
        return Err(Error::BoundExceeded(format!(
            "minimal cover enumeration for C_{}^{} exceeded {} candidates",
            inst.n(),
            inst.k(),
            cap
        )));
    }
    Ok(out)
}

fn merge_anchor_results(
    per_anchor: Vec<Result<Vec<IndexSet>>>,
    limits: &Limits,
    inst: &CirculantInstance,
) -> Result<Vec<IndexSet>> {
    let mut all = Vec::new();
    for chunk in per_anchor {
        all.extend(chunk?);
    }
    limits.check_candidates(
        all.len() as u64,
        &format!("minimal covers of C_{}^{}", inst.n(), inst.k()),
    )?;
    Ok(all)
}

/// All minimal covers, in lexicographic order of sorted member lists.
pub fn enumerate_minimal_covers(
    inst: &CirculantInstance,
    limits: &Limits,
) -> Result<Vec<IndexSet>> {
    limits.check_enum_n(inst.n())?;
    let cap = limits.max_candidates;
    let inst = *inst;
    let per_anchor = exec::map_range(inst.k() as usize, move |a| {
        anchor_covers(&inst, a as u32, cap)
    });
    merge_anchor_results(per_anchor, limits, &inst)
}

/// Sequential reference path for [`enumerate_minimal_covers`].
pub fn enumerate_minimal_covers_seq(
    inst: &CirculantInstance,
    limits: &Limits,
) -> Result<Vec<IndexSet>> {
    limits.check_enum_n(inst.n())?;
    let per_anchor = exec::map_range_seq(inst.k() as usize, |a| {
        anchor_covers(inst, a as u32, limits.max_candidates)
    });
    merge_anchor_results(per_anchor, limits, inst)
}

/// All covers of size at most `max_size`, by exhaustive combination scan.
pub fn covers_up_to_size(
    inst: &CirculantInstance,
    max_size: u32,
    limits: &Limits,
) -> Result<Vec<IndexSet>> {
    limits.check_enum_n(inst.n())?;
    limits.check_candidates(
        binomial_sum(inst.n(), max_size),
        &format!(
            "covers of size <= {} in C_{}^{}",
            max_size,
            inst.n(),
            inst.k()
        ),
    )?;
    let mut out = Vec::new();
    for size in 1..=max_size.min(inst.n()) {
        for_each_subset_of_size(inst.n(), size, &mut |bits| {
            let s = IndexSet::from_bits(inst.n(), bits);
            if inst.is_cover(&s) {
                out.push(s);
            }
            ControlFlow::Continue(())
        });
    }
    Ok(out)
}

/// Every cover, by full subset scan; only for small universes.
pub fn all_covers(inst: &CirculantInstance, limits: &Limits) -> Result<Vec<IndexSet>> {
    limits.check_enum_n(inst.n())?;
    let total = 1u64.checked_shl(inst.n()).unwrap_or(u64::MAX);
    limits.check_candidates(total, &format!("all covers of C_{}^{}", inst.n(), inst.k()))?;
    let mut out = Vec::new();
    for size in 1..=inst.n() {
        for_each_subset_of_size(inst.n(), size, &mut |bits| {
            let s = IndexSet::from_bits(inst.n(), bits);
            if inst.is_cover(&s) {
                out.push(s);
            }
            ControlFlow::Continue(())
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: u32, k: u32) -> CirculantInstance {
        CirculantInstance::new(n, k).unwrap()
    }

    fn set(n: u32, members: &[u32]) -> IndexSet {
        IndexSet::from_members(n, members.iter().copied()).unwrap()
    }

    /// Independent oracle: full subset scan filtered by the definitional
    /// minimality test.
    fn minimal_covers_subset_scan(inst: &CirculantInstance) -> Vec<IndexSet> {
        let mut out = Vec::new();
        for bits in 1..(1u128 << inst.n()) {
            let s = IndexSet::from_bits(inst.n(), bits);
            if inst.is_minimal_cover(&s) {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_subset_scan_on_small_instances() {
        let limits = Limits::default();
        for (n, k) in [
            (4u32, 2u32),
            (5, 3),
            (5, 4),
            (6, 3),
            (7, 3),
            (8, 3),
            (8, 4),
            (9, 3),
            (10, 2),
            (10, 5),
            (12, 6),
        ] {
            let c = inst(n, k);
            let mut fast = enumerate_minimal_covers(&c, &limits).unwrap();
            fast.sort();
            assert_eq!(fast, minimal_covers_subset_scan(&c), "C_{n}^{k}");
        }
    }

    #[test]
    fn c4_2_exact_set() {
        let got = enumerate_minimal_covers(&inst(4, 2), &Limits::default()).unwrap();
        assert_eq!(got, vec![set(4, &[0, 2]), set(4, &[1, 3])]);
    }

    #[test]
    fn c6_3_contains_canonical_covers() {
        let c = inst(6, 3);
        let got = enumerate_minimal_covers(&c, &Limits::default()).unwrap();
        assert_eq!(got.len(), 5);
        for i in 0..3 {
            assert!(got.contains(&c.canonical_min_cover(i)));
        }
    }

    #[test]
    fn every_minimal_cover_meets_rows_at_most_twice() {
        let c = inst(10, 5);
        for s in enumerate_minimal_covers(&c, &Limits::default()).unwrap() {
            for i in 0..10 {
                assert!(s.intersection(&c.row_support(i).unwrap()).len() <= 2);
            }
        }
    }

    #[test]
    fn output_is_lexicographically_sorted_and_minimal() {
        for (n, k) in [(12u32, 4u32), (15, 5), (14, 3)] {
            let c = inst(n, k);
            let got = enumerate_minimal_covers(&c, &Limits::default()).unwrap();
            for w in got.windows(2) {
                assert!(w[0] < w[1], "not sorted: {} then {}", w[0], w[1]);
            }
            for s in &got {
                assert!(c.is_minimal_cover(s));
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let limits = Limits::default();
        for (n, k) in [(12u32, 4u32), (15, 5), (30, 6)] {
            let c = inst(n, k);
            assert_eq!(
                enumerate_minimal_covers(&c, &limits).unwrap(),
                enumerate_minimal_covers_seq(&c, &limits).unwrap()
            );
        }
    }

    #[test]
    fn bound_errors() {
        let tight = Limits::new(36, 10);
        assert!(matches!(
            enumerate_minimal_covers(&inst(30, 6), &tight),
            Err(Error::BoundExceeded(_))
        ));
        let small_n = Limits::new(8, 1_000_000);
        assert!(matches!(
            enumerate_minimal_covers(&inst(10, 5), &small_n),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn covers_up_to_size_finds_all_small_covers() {
        let c = inst(6, 3);
        let got = covers_up_to_size(&c, 3, &Limits::default()).unwrap();
        // sizes 2 and 3 only; cross-check count against subset scan
        let mut expect = 0;
        for bits in 1..(1u128 << 6) {
            let s = IndexSet::from_bits(6, bits);
            if s.len() <= 3 && c.is_cover(&s) {
                expect += 1;
            }
        }
        assert_eq!(got.len(), expect);
    }

    #[test]
    fn subset_iteration_is_complete() {
        let mut count = 0;
        for_each_subset_of_size(6, 3, &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 20);
    }
}
