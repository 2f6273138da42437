//! Partitions of Z^2 (multisets of finite-index sublattices that
//! collectively span), the merge arrow, the roof/edge relation, graph
//! connectivity, and the constructive path to a canonical partition.

use crate::lattice2::{enumerate_by_index, hnf_from_generators, join, Sublattice2};
use crate::{Error, Result};
use num::{BigInt, One, ToPrimitive, Zero};
use std::fmt;

/// Enumeration budget: enumerate_partitions and connected_components
/// refuse degrees above this.
pub const PARTITION_MAX_DEGREE: u64 = 16;

/// A degree-d, length-k partition of Z^2: a sorted multiset of
/// sublattices whose join is the full lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<Sublattice2>,
}

impl Partition {
    pub fn new(mut parts: Vec<Sublattice2>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::NotSpanning);
        }
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = join(&acc, p);
        }
        if !acc.is_full() {
            return Err(Error::NotSpanning);
        }
        parts.sort();
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[Sublattice2] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn degree(&self) -> BigInt {
        self.parts.iter().map(|p| p.index()).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// All partitions of degree d and length k, deduplicated as multisets,
/// in sorted order.
pub fn enumerate_partitions(d: u64, k: u64) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::OutOfRange("length k must be >= 1".into()));
    }
    if d > PARTITION_MAX_DEGREE {
        return Err(Error::BudgetExceeded(format!(
            "degree {} exceeds enumeration bound {}",
            d, PARTITION_MAX_DEGREE
        )));
    }
    if d < k {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for index_multiset in index_multisets(d, k) {
        let mut acc: Vec<Vec<Sublattice2>> = vec![Vec::new()];
        // group equal indices and take combinations with repetition
        let mut groups: Vec<(u64, usize)> = Vec::new();
        for &idx in &index_multiset {
            match groups.last_mut() {
                Some((v, m)) if *v == idx => *m += 1,
                _ => groups.push((idx, 1)),
            }
        }
        for (idx, mult) in groups {
            let choices = multiset_choices(&enumerate_by_index(idx), mult);
            let mut next = Vec::new();
            for prefix in &acc {
                for choice in &choices {
                    let mut v = prefix.clone();
                    v.extend(choice.iter().cloned());
                    next.push(v);
                }
            }
            acc = next;
        }
        for parts in acc {
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Multisets of k positive integers summing to d, in decreasing order
/// within each multiset.
fn index_multisets(d: u64, k: u64) -> Vec<Vec<u64>> {
    fn rec(remaining: u64, slots: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = max.min(remaining.saturating_sub(slots - 1));
        for v in (1..=hi).rev() {
            cur.push(v);
            rec(remaining - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(d, k, d, &mut cur, &mut out);
    out
}

/// Multisets of size `mult` drawn from `items` (combinations with
/// repetition, order within `items` preserved).
fn multiset_choices(items: &[Sublattice2], mult: usize) -> Vec<Vec<Sublattice2>> {
    fn rec(
        items: &[Sublattice2],
        start: usize,
        left: usize,
        cur: &mut Vec<Sublattice2>,
        out: &mut Vec<Vec<Sublattice2>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            rec(items, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(items, 0, mult, &mut cur, &mut out);
    out
}

/// The witness that Pi_d^k is nonempty for 2 <= k <= d: k-1 copies of
/// Z^2 and one part of index d-k+1.
pub fn witness_partition(d: u64, k: u64) -> Result<Partition> {
    if k < 2 || k > d {
        return Err(Error::OutOfRange(format!(
            "witness requires 2 <= k <= d, got k={} d={}",
            k, d
        )));
    }
    let mut parts = vec![Sublattice2::full(); (k - 1) as usize];
    parts.push(
        Sublattice2::from_triple(
            BigInt::one(),
            BigInt::zero(),
            BigInt::from(d - k + 1),
        )
        .unwrap(),
    );
    Partition::new(parts)
}

/// The arrow: replace parts i and j by their join, dropping the length
/// by one.
pub fn merge_arrow(p: &Partition, i: usize, j: usize) -> Result<Partition> {
    let n = p.len();
    if i >= n || j >= n || i == j {
        return Err(Error::IndexOutOfRange(i.max(j), n));
    }
    let merged = join(&p.parts[i], &p.parts[j]);
    let mut parts: Vec<Sublattice2> = p
        .parts
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != i && idx != j)
        .map(|(_, l)| l.clone())
        .collect();
    parts.push(merged);
    Partition::new(parts)
}

fn shape_check(p1: &Partition, p2: &Partition) -> Result<()> {
    if p1.len() != p2.len() {
        return Err(Error::ShapeMismatch(format!(
            "lengths differ: {} vs {}",
            p1.len(),
            p2.len()
        )));
    }
    if p1.degree() != p2.degree() {
        return Err(Error::ShapeMismatch(format!(
            "degrees differ: {} vs {}",
            p1.degree(),
            p2.degree()
        )));
    }
    Ok(())
}

/// Direct form of the edge relation: distinct partitions admitting pairs
/// (i < j) and (i' < j') with equal joins, equal index sums, and equal
/// remaining multisets.
pub fn is_edge(p1: &Partition, p2: &Partition) -> Result<bool> {
    shape_check(p1, p2)?;
    if p1 == p2 {
        return Ok(false);
    }
    let n = p1.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let rest1 = remove_two(&p1.parts, i, j);
            let join1 = join(&p1.parts[i], &p1.parts[j]);
            let sum1 = p1.parts[i].index() + p1.parts[j].index();
            for i2 in 0..n {
                for j2 in (i2 + 1)..n {
                    if remove_two(&p2.parts, i2, j2) != rest1 {
                        continue;
                    }
                    if join(&p2.parts[i2], &p2.parts[j2]) != join1 {
                        continue;
                    }
                    if p2.parts[i2].index() + p2.parts[j2].index() != sum1 {
                        continue;
                    }
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Roof form of the edge relation: some length-(k-1) partition receives
/// arrows from both sides with the same new term.
pub fn is_edge_via_roof(p1: &Partition, p2: &Partition) -> Result<bool> {
    shape_check(p1, p2)?;
    if p1 == p2 {
        return Ok(false);
    }
    let n = p1.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let m1 = merge_arrow(p1, i, j)?;
            let new1 = join(&p1.parts[i], &p1.parts[j]);
            for i2 in 0..n {
                for j2 in (i2 + 1)..n {
                    let m2 = merge_arrow(p2, i2, j2)?;
                    let new2 = join(&p2.parts[i2], &p2.parts[j2]);
                    if m1 == m2 && new1 == new2 {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn remove_two(parts: &[Sublattice2], i: usize, j: usize) -> Vec<Sublattice2> {
    parts
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx != i && idx != j)
        .map(|(_, l)| l.clone())
        .collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }
    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

/// Connected components of the edge graph on Pi_d^k, ordered by smallest
/// member, members sorted.
pub fn connected_components(d: u64, k: u64) -> Result<Vec<Vec<Partition>>> {
    let vertices = enumerate_partitions(d, k)?;
    let mut uf = UnionFind::new(vertices.len());
    for a in 0..vertices.len() {
        for b in (a + 1)..vertices.len() {
            if is_edge(&vertices[a], &vertices[b])? {
                uf.union(a, b);
            }
        }
    }
    let mut comps: std::collections::BTreeMap<usize, Vec<Partition>> = Default::default();
    for (i, v) in vertices.iter().enumerate() {
        comps.entry(uf.find(i)).or_default().push(v.clone());
    }
    // vertices are sorted, so each component list is sorted and the map
    // is keyed by smallest member
    Ok(comps.into_values().collect())
}

/// The undirected edge list on Pi_d^k as index pairs into the sorted
/// vertex list, for export.
pub fn edge_list(vertices: &[Partition]) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in (a + 1)..vertices.len() {
            if is_edge(&vertices[a], &vertices[b])? {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

/// The move from the connectivity proof: replace (L_i, L_j) by
/// (L_i + L_j, L_new) with index(L_new) = index(L_i) + index(L_j) -
/// index(L_i + L_j). The result is always joined to `p` by an edge.
pub fn replace_pair_move(
    p: &Partition,
    i: usize,
    j: usize,
    l_new: &Sublattice2,
) -> Result<Partition> {
    let n = p.len();
    if i >= n || j >= n || i == j {
        return Err(Error::IndexOutOfRange(i.max(j), n));
    }
    let m = join(&p.parts[i], &p.parts[j]);
    if !m.contains(l_new) {
        return Err(Error::InvalidMove(format!(
            "{} is not contained in the pair join {}",
            l_new, m
        )));
    }
    let want = p.parts[i].index() + p.parts[j].index() - m.index();
    if l_new.index() != want {
        return Err(Error::InvalidMove(format!(
            "replacement index {} differs from required {}",
            l_new.index(),
            want
        )));
    }
    let mut parts = remove_two(&p.parts, i, j);
    parts.push(m);
    parts.push(l_new.clone());
    let result = Partition::new(parts)?;
    if &result == p {
        return Err(Error::InvalidMove("move does not change the partition".into()));
    }
    Ok(result)
}

/// Canonical endpoint of the path construction: the witness partition
/// (k-1 copies of Z^2 plus one part (1, 0, d-k+1)), determined by (d, k).
pub fn canonical_partition(d: u64, k: u64) -> Result<Partition> {
    if k == 1 {
        if d != 1 {
            return Err(Error::OutOfRange("length 1 requires degree 1".into()));
        }
        return Partition::new(vec![Sublattice2::full()]);
    }
    witness_partition(d, k)
}

/// A chain of edge-connected partitions from `p` to the canonical
/// partition of the same (d, k), starting at `p` itself. The chain has
/// no steps when `p` is already canonical.
///
/// Follows the connectivity proof: first drive the minimal index down to
/// 1 via replace_pair_move, then use the Z^2 part to rewrite the
/// remaining parts one at a time.
pub fn canonical_path(p: &Partition) -> Result<Vec<Partition>> {
    let d = p
        .degree()
        .to_u64()
        .ok_or_else(|| Error::OutOfRange("degree too large".into()))?;
    let k = p.len() as u64;
    let target = canonical_partition(d, k)?;
    let mut chain = vec![p.clone()];
    let mut cur = p.clone();

    // Step 1: obtain a Z^2 part by decreasing the minimal index.
    while !cur.parts().iter().any(|l| l.is_full()) {
        let (min_pos, _) = cur
            .parts()
            .iter()
            .enumerate()
            .min_by_key(|(_, l)| l.index())
            .unwrap();
        let min_lat = cur.parts()[min_pos].clone();
        // a partner not contained in the minimal part exists, else the
        // minimal part would contain the whole span Z^2
        let partner = cur
            .parts()
            .iter()
            .enumerate()
            .find(|(pos, l)| *pos != min_pos && !min_lat.contains(l))
            .map(|(pos, _)| pos)
            .expect("some part escapes the minimal lattice");
        let m = join(&min_lat, &cur.parts()[partner]);
        let rel_min = min_lat.index() / m.index();
        let rel_other = cur.parts()[partner].index() / m.index();
        let rel_new = rel_min + rel_other - BigInt::one();
        let l_new = sub_of_relative_index(&m, &rel_new);
        cur = replace_pair_move(&cur, min_pos, partner, &l_new)?;
        chain.push(cur.clone());
    }

    // Step 2: with a Z^2 part in hand, any other part can be swapped for
    // any same-index lattice; funnel everything into the witness shape.
    loop {
        if cur == target {
            break;
        }
        let z_pos = cur
            .parts()
            .iter()
            .position(|l| l.is_full())
            .expect("step 1 produced a full part");
        let non_full: Vec<usize> = cur
            .parts()
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_full())
            .map(|(pos, _)| pos)
            .collect();
        match non_full.len() {
            0 => {
                // all parts are Z^2, but target differs: impossible since
                // then d == k and the target is also all Z^2
                unreachable!("all-full partition must equal its canonical form");
            }
            1 => {
                let pos = non_full[0];
                let idx = cur.parts()[pos].index();
                let l_new = Sublattice2::from_triple(
                    BigInt::one(),
                    BigInt::zero(),
                    idx.clone(),
                )
                .unwrap();
                cur = replace_pair_move(&cur, z_pos, pos, &l_new)?;
                chain.push(cur.clone());
            }
            _ => {
                let (pi, pj) = (non_full[0], non_full[1]);
                let li = cur.parts()[pi].clone();
                let lj = cur.parts()[pj].clone();
                let ii = li.index();
                let ij = lj.index();
                if join(&li, &lj).is_full() {
                    // merge the pair into (Z^2, L') with index ii+ij-1
                    let l_new = Sublattice2::from_triple(
                        BigInt::one(),
                        BigInt::zero(),
                        &ii + &ij - BigInt::one(),
                    )
                    .unwrap();
                    cur = replace_pair_move(&cur, pi, pj, &l_new)?;
                    chain.push(cur.clone());
                } else {
                    // rotate one of the pair into a transverse shape so
                    // their join becomes Z^2
                    let horiz =
                        Sublattice2::from_triple(BigInt::one(), BigInt::zero(), ii.clone())
                            .unwrap();
                    let vert =
                        Sublattice2::from_triple(ij.clone(), BigInt::zero(), BigInt::one())
                            .unwrap();
                    let (pos, l_new) = if li != horiz { (pi, horiz) } else { (pj, vert) };
                    cur = replace_pair_move(&cur, z_pos, pos, &l_new)?;
                    chain.push(cur.clone());
                }
            }
        }
    }
    Ok(chain)
}

fn sub_of_relative_index(m: &Sublattice2, rel: &BigInt) -> Sublattice2 {
    // scale the second basis vector of m by rel
    let gens = m.generators();
    hnf_from_generators(&[
        (gens[0][0].clone(), gens[0][1].clone()),
        (&gens[1][0] * rel, &gens[1][1] * rel),
    ])
    .expect("scaled basis keeps full rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(a: i64, b: i64, c: i64) -> Sublattice2 {
        Sublattice2::from_ints(a, b, c).unwrap()
    }

    fn part(parts: Vec<Sublattice2>) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn partition_requires_spanning() {
        assert!(Partition::new(vec![lat(2, 0, 1), lat(2, 0, 2)]).is_err());
        assert!(Partition::new(vec![lat(2, 0, 1), lat(1, 0, 2)]).is_ok());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_partitions(2, 2).unwrap(),
            vec![part(vec![Sublattice2::full(), Sublattice2::full()])]
        );
        assert_eq!(enumerate_partitions(4, 2).unwrap().len(), 7);
        assert!(enumerate_partitions(1, 2).unwrap().is_empty());
        assert!(matches!(
            enumerate_partitions(PARTITION_MAX_DEGREE + 1, 2),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn nonemptiness_boundary() {
        // Pi_d^1 is nonempty only for d = 1 (a single part must span)
        assert_eq!(enumerate_partitions(1, 1).unwrap().len(), 1);
        for d in 2..=8 {
            assert!(enumerate_partitions(d, 1).unwrap().is_empty());
        }
        for d in 2..=8u64 {
            for k in 2..=(d + 2) {
                let nonempty = !enumerate_partitions(d, k).unwrap().is_empty();
                assert_eq!(nonempty, k <= d, "d={} k={}", d, k);
            }
        }
    }

    #[test]
    fn witness_examples() {
        let w = witness_partition(5, 3).unwrap();
        assert_eq!(
            w,
            part(vec![Sublattice2::full(), Sublattice2::full(), lat(1, 0, 3)])
        );
        assert_eq!(w.degree(), BigInt::from(5));
        assert_eq!(
            witness_partition(2, 2).unwrap(),
            part(vec![Sublattice2::full(), Sublattice2::full()])
        );
        assert!(matches!(witness_partition(3, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn merge_examples() {
        let p = part(vec![lat(2, 0, 1), lat(1, 0, 2)]);
        assert_eq!(
            merge_arrow(&p, 0, 1).unwrap(),
            part(vec![Sublattice2::full()])
        );
        let p = part(vec![Sublattice2::full(), lat(3, 1, 2)]);
        assert_eq!(
            merge_arrow(&p, 0, 1).unwrap(),
            part(vec![Sublattice2::full()])
        );
        assert!(matches!(
            merge_arrow(&p, 0, 5),
            Err(Error::IndexOutOfRange(_, _))
        ));
    }

    #[test]
    fn edge_examples() {
        let p1 = part(vec![lat(2, 0, 1), lat(1, 0, 2)]);
        let p2 = part(vec![lat(2, 1, 1), lat(1, 0, 2)]);
        assert!(is_edge(&p1, &p2).unwrap());
        assert!(!is_edge(&p1, &p1).unwrap());
        // k = 2 leaves no "other parts", so matching joins and sums make
        // an edge even across different index splits
        let q1 = part(vec![Sublattice2::full(), lat(1, 0, 3)]);
        let q2 = part(vec![lat(2, 0, 1), lat(2, 1, 1)]);
        assert!(is_edge(&q1, &q2).unwrap());
        let shorter = part(vec![Sublattice2::full()]);
        assert!(matches!(
            is_edge(&p1, &shorter),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn roof_equivalence_small() {
        for d in 2..=5u64 {
            for k in 2..=d {
                let vs = enumerate_partitions(d, k).unwrap();
                for a in &vs {
                    for b in &vs {
                        assert_eq!(
                            is_edge(a, b).unwrap(),
                            is_edge_via_roof(a, b).unwrap(),
                            "d={} k={} a={} b={}",
                            d,
                            k,
                            a,
                            b
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn connectivity_small() {
        let comps = connected_components(4, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 7);
        let comps = connected_components(2, 2).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 1);
        assert_eq!(connected_components(6, 2).unwrap().len(), 1);
    }

    #[test]
    fn replace_pair_examples() {
        let p = part(vec![lat(2, 0, 1), lat(1, 0, 2)]);
        // M = Z^2, required index 2 + 2 - 1 = 3: four choices, all edges
        let mut found = 0;
        for cand in enumerate_by_index(3) {
            let q = replace_pair_move(&p, 0, 1, &cand).unwrap();
            assert!(is_edge(&p, &q).unwrap());
            assert_eq!(q.degree(), p.degree());
            found += 1;
        }
        assert_eq!(found, 4);
        // self-map is refused
        let p = part(vec![Sublattice2::full(), lat(1, 0, 3)]);
        assert!(matches!(
            replace_pair_move(&p, 0, 1, &lat(1, 0, 3)),
            Err(Error::InvalidMove(_))
        ));
        // wrong index is refused
        assert!(matches!(
            replace_pair_move(&p, 0, 1, &lat(1, 0, 2)),
            Err(Error::InvalidMove(_))
        ));
    }

    #[test]
    fn canonical_path_basics() {
        let w = witness_partition(5, 3).unwrap();
        let chain = canonical_path(&w).unwrap();
        assert_eq!(chain, vec![w]);

        let p = part(vec![lat(2, 0, 1), lat(2, 1, 1), lat(1, 0, 2)]);
        let chain = canonical_path(&p).unwrap();
        assert_eq!(chain.first().unwrap(), &p);
        assert_eq!(chain.last().unwrap(), &canonical_partition(6, 3).unwrap());
        for w in chain.windows(2) {
            assert!(is_edge(&w[0], &w[1]).unwrap());
        }
    }

    #[test]
    fn canonical_path_all_small() {
        for d in 2..=6u64 {
            for k in 2..=d {
                let target = canonical_partition(d, k).unwrap();
                for p in enumerate_partitions(d, k).unwrap() {
                    let chain = canonical_path(&p).unwrap();
                    assert_eq!(chain.first().unwrap(), &p);
                    assert_eq!(chain.last().unwrap(), &target);
                    for w in chain.windows(2) {
                        assert!(is_edge(&w[0], &w[1]).unwrap());
                    }
                }
            }
        }
    }
}
