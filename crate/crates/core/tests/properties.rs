use catpark::{
    build_caterpillar, decompose, eta, eta_inv, from_lattice_path, is_tree_pk, is_u_pk, luck_tree,
    recompose, simulate, tau, theta, theta_inv, to_lattice_path, u_luck, u_omega, BoundFamily,
    ParkingSeq, Step,
};
use proptest::prelude::*;

/// A canonical u-parking distribution: `p_i <= m(i - 1) + 1`, nondecreasing.
fn u_parking() -> impl Strategy<Value = (u32, ParkingSeq)> {
    (1u32..=4, prop::collection::vec(any::<u32>(), 0..=9)).prop_map(|(m, seeds)| {
        let mut values: Vec<u32> = Vec::with_capacity(seeds.len());
        for (i, s) in seeds.into_iter().enumerate() {
            let cap = m * i as u32 + 1;
            let prev = values.last().copied().unwrap_or(1);
            values.push(prev.max(1 + s % cap));
        }
        (m, ParkingSeq::new(values).unwrap())
    })
}

proptest! {
    #[test]
    fn generated_sequences_park((m, p) in u_parking()) {
        prop_assert!(is_u_pk(&p, &BoundFamily::canonical(m).unwrap()));
    }

    #[test]
    fn theta_round_trips_and_parks_on_the_tree((m, p) in u_parking()) {
        prop_assume!(!p.is_empty());
        let image = theta(&p, m).unwrap();
        prop_assert_eq!(theta_inv(&image, m).unwrap(), p.clone());
        let tree = build_caterpillar(m, p.len() as u32).unwrap();
        prop_assert_eq!(image.len(), tree.node_count());
        prop_assert!(is_tree_pk(&tree, &image).unwrap());
        prop_assert!(simulate(&tree, &image).unwrap().all_parked());
        prop_assert_eq!(luck_tree(&tree, &image).unwrap(), u_luck(&p, m));
    }

    #[test]
    fn lattice_path_round_trips((m, p) in u_parking()) {
        let path = to_lattice_path(&p, m).unwrap();
        let n = p.len() as u64;
        prop_assert_eq!(path.endpoint(), (m as u64 * n.saturating_sub(1), n));
        prop_assert_eq!(path.steps().iter().filter(|s| **s == Step::North).count(), p.len());
        prop_assert_eq!(from_lattice_path(&path, m).unwrap(), p);
    }

    #[test]
    fn decomposition_round_trips((m, p) in u_parking()) {
        prop_assume!(!p.is_empty());
        let d = decompose(&p, m).unwrap();
        let parts: Vec<ParkingSeq> = (1..=m as usize + 1).map(|j| d.component(j).clone()).collect();
        prop_assert_eq!(parts.iter().map(ParkingSeq::len).sum::<usize>() + 1, p.len());
        prop_assert_eq!(recompose(&parts, m).unwrap(), p);
    }

    #[test]
    fn tau_is_an_involution_exchanging_luck_and_ones((m, p) in u_parking()) {
        let t = tau(&p, m).unwrap();
        prop_assert_eq!(tau(&t, m).unwrap(), p.clone());
        prop_assert_eq!(u_luck(&p, m), u_omega(&t, 1));
        prop_assert_eq!(u_omega(&p, 1), u_luck(&t, m));
    }

    #[test]
    fn eta_is_invertible((m, p) in u_parking()) {
        let e = eta(&p, m).unwrap();
        prop_assert!(is_u_pk(&e, &BoundFamily::canonical(m).unwrap()));
        prop_assert_eq!(eta_inv(&e, m).unwrap(), p);
    }
}
