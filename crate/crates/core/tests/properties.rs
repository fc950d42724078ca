use kronkit::reductions::stability_inflate;
use kronkit::{
    kron_coeff, kron_coeff_direct, parse_partition, partitions_of, Partition, RectangleFrame,
};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// Three partitions of a common size `m ≤ max_m`.
fn triple(max_m: usize) -> impl Strategy<Value = [Partition; 3]> {
    (0..=max_m).prop_flat_map(|m| {
        let ps: Vec<Partition> = partitions_of(m, None, None).collect();
        let n = ps.len();
        (0..n, 0..n, 0..n).prop_map(move |(i, j, k)| [ps[i].clone(), ps[j].clone(), ps[k].clone()])
    })
}

proptest! {
    #[test]
    fn format_parse_round_trip(p in partition(8, 20)) {
        prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn conjugate_is_involution(p in partition(10, 10)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn dispatcher_matches_direct(t in triple(11)) {
        let [a, b, c] = &t;
        let e = kron_coeff(a, b, c).unwrap();
        prop_assert_eq!(e.value, kron_coeff_direct(a, b, c).unwrap());
        prop_assert!(e.trace.is_linked());
    }

    #[test]
    fn cyclic_symmetry(t in triple(9)) {
        let [a, b, c] = &t;
        prop_assert_eq!(kron_coeff_direct(a, b, c).unwrap(), kron_coeff_direct(b, c, a).unwrap());
    }

    #[test]
    fn stability_random_frame(t in triple(6), q in 1usize..=2, r in 1usize..=3, s in 1u32..=2) {
        let [a, b, c] = &t;
        let frame = RectangleFrame { p: q * r, q, r, t: s };
        prop_assume!(a.len() <= frame.p && b.len() <= q && c.len() <= r);
        let big = stability_inflate(a, b, c, frame).unwrap();
        prop_assert_eq!(
            kron_coeff_direct(a, b, c).unwrap(),
            kron_coeff_direct(&big[0], &big[1], &big[2]).unwrap()
        );
    }
}
