use std::sync::OnceLock;

use level2::brute::ExecMode;
use level2::closedform::{h3_count, m08_count, Group};
use level2::poly::CountPolynomial;
use level2::reptheory::{ClassFunction, Partition};
use level2::sp6::*;

fn group() -> &'static GroupEnumeration {
    static G: OnceLock<GroupEnumeration> = OnceLock::new();
    G.get_or_init(generate_group)
}

fn embedding() -> &'static S8Embedding {
    static E: OnceLock<S8Embedding> = OnceLock::new();
    E.get_or_init(|| embed_s8().unwrap())
}

fn fused() -> &'static Fusion {
    static F: OnceLock<Fusion> = OnceLock::new();
    F.get_or_init(|| fusion(group(), embedding(), ExecMode::Parallel))
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> usize {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) as usize
    }

    fn perm(&mut self) -> [usize; 8] {
        let mut p = [0, 1, 2, 3, 4, 5, 6, 7];
        for i in (1..8).rev() {
            p.swap(i, self.next() % (i + 1));
        }
        p
    }
}

#[test]
fn group_order_and_membership() {
    let g = group();
    assert_eq!(g.len(), GROUP_ORDER);
    assert!(g.elements().iter().all(|m| m.is_symplectic()));
    assert!(g.contains(SpMatrix::IDENTITY));
    for v in 1u8..64 {
        assert!(g.contains(SpMatrix::transvection(v)));
    }
    let mut rng = Lcg(7);
    for _ in 0..10_000 {
        let a = g.elements()[rng.next() % g.len()];
        let b = g.elements()[rng.next() % g.len()];
        assert!(g.contains(a.mul(b)));
        assert!(g.contains(a.symplectic_inverse()));
        assert_eq!(a.mul(a.symplectic_inverse()), SpMatrix::IDENTITY);
    }
}

#[test]
fn embedding_is_an_injective_homomorphism_into_the_group() {
    let emb = embedding();
    assert_eq!(emb.image_size(), S8_ORDER);
    assert!(emb.image().all(|m| group().contains(m)));
    assert_eq!(group().len() / emb.image_size(), 36);
    let mut rng = Lcg(11);
    for _ in 0..10_000 {
        let (s, t) = (rng.perm(), rng.perm());
        let st: [usize; 8] = std::array::from_fn(|i| s[t[i]]);
        assert_eq!(emb.forward(&st), emb.forward(&s).mul(emb.forward(&t)));
    }
}

#[test]
fn induced_table_matches_hyperelliptic_s8_counts() {
    let psi = ClassFunction::try_from_fn(8, m08_count).unwrap();
    let induced = fused().induce(&psi).unwrap();
    for (mu, v) in &induced.values {
        assert_eq!(*v, h3_count(mu, Group::S8).unwrap(), "{mu}");
    }
    let id: Partition = "[1^8]".parse().unwrap();
    assert_eq!(*induced.get(&id).unwrap(), psi.get(&id).unwrap().scale(36));
    let seven_one: Partition = "[7,1]".parse().unwrap();
    assert_eq!(*induced.get(&seven_one).unwrap(), CountPolynomial::parse("q^5+q^4+q^3+q^2+q+1").unwrap());
}

#[test]
fn restriction_matches_hyperelliptic_s7_counts() {
    let psi = ClassFunction::try_from_fn(8, m08_count).unwrap();
    let restricted = restrict_induced_to_s7(&fused().induce(&psi).unwrap());
    for (mu, v) in &restricted.values {
        assert_eq!(*v, h3_count(mu, Group::S7).unwrap(), "{mu}");
    }
    let get = |s: &str| restricted.get(&s.parse().unwrap()).unwrap().clone();
    assert_eq!(get("[4,3]"), CountPolynomial::parse("2q^5+2q^4-2q^3-2q^2").unwrap());
    assert_eq!(get("[1^7]").coeffs(), &[-25920, 37584, -20880, 5580, -720, 36]);
}

#[test]
fn trivial_character_induces_to_the_permutation_character() {
    let one = ClassFunction::from_fn(8, |_| CountPolynomial::constant(1));
    let induced = fused().induce(&one).unwrap();
    assert_eq!(*induced.get(&"[1^8]".parse().unwrap()).unwrap(), CountPolynomial::constant(36));
    // fixed cosets: nonnegative and at most the index
    for (_, v) in &induced.values {
        assert!((0..=36).contains(&v.coeff(0)));
    }
}

#[test]
fn induction_is_independent_of_the_representative() {
    let emb = embedding();
    let mut rng = Lcg(3);
    for (i, mu) in emb.classes().iter().enumerate() {
        let rep = class_representative(mu);
        let rho = rng.perm();
        let mut rho_inv = [0usize; 8];
        for (k, &r) in rho.iter().enumerate() {
            rho_inv[r] = k;
        }
        let other: [usize; 8] = std::array::from_fn(|k| rho[rep[rho_inv[k]]]);
        assert_eq!(cycle_type(&other), *mu);
        let counts = conjugate_counts(group(), emb, emb.forward(&other), ExecMode::Parallel);
        assert_eq!(counts, fused().counts[i], "{mu}");
    }
}

#[test]
fn sequential_fusion_matches_parallel() {
    let emb = embedding();
    let alpha = emb.representative(&"[4,2,1^2]".parse().unwrap());
    assert_eq!(
        conjugate_counts(group(), emb, alpha, ExecMode::Sequential),
        conjugate_counts(group(), emb, alpha, ExecMode::Parallel)
    );
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    write_cache(dir.path(), group()).unwrap();
    let size = std::fs::metadata(cache_path(dir.path())).unwrap().len();
    assert_eq!(size, 52 + 8 * GROUP_ORDER as u64);
    assert_eq!(&read_cache(dir.path()).unwrap(), group());
    let (g, status) = load_or_generate(dir.path()).unwrap();
    assert_eq!((g.len(), status), (GROUP_ORDER, CacheStatus::Loaded));

    let path = cache_path(dir.path());
    let mut bytes = std::fs::read(&path).unwrap();
    let last = bytes.len() - 3;
    bytes[last] ^= 0x10;
    std::fs::write(&path, &bytes).unwrap();
    assert!(matches!(read_cache(dir.path()), Err(Sp6Error::CacheCorrupt { .. })));
    let (g, status) = load_or_generate(dir.path()).unwrap();
    assert_eq!((g.len(), status), (GROUP_ORDER, CacheStatus::Rebuilt));
    assert_eq!(&read_cache(dir.path()).unwrap(), group());
}

#[test]
fn reverse_lookup_sorts_the_image_into_s8_classes() {
    let emb = embedding();
    assert_eq!(emb.classes().len(), 22);
    for (mu, &size) in emb.classes().iter().zip(&emb.class_sizes()) {
        assert_eq!(size as u128, mu.class_size(), "{mu}");
        assert_eq!(emb.cycle_type_of(emb.representative(mu)), Some(mu));
    }
    assert_eq!(emb.cycle_type_of(SpMatrix::transvection(1)).is_some(), emb.image().any(|m| m == SpMatrix::transvection(1)));
}
