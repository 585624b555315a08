use prm_cli::commands::{self, Format};
use prm_cli::records::*;
use prm_core::{Field, ProjectiveSpace};
use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(text: &str) -> T {
    let parsed: T = serde_json::from_str(text).unwrap();
    let again: T = serde_json::from_str(&serde_json::to_string(&parsed).unwrap()).unwrap();
    assert_eq!(again, parsed);
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text);
    parsed
}

const ORDERS: &[u64] = &[2, 3, 4, 5, 7];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn params_json(q in prop::sample::select(ORDERS), m in 1usize..4, nu_seed: u32) {
        let f = Field::from_order(q).unwrap();
        let nu = 1 + nu_seed % (m as u32 * (q as u32 - 1));
        let text = commands::params(&f, m, nu, Format::Json).unwrap();
        let r: ParamsRecord = round_trip(&text);
        prop_assert_eq!(r.nu, nu);
    }

    #[test]
    fn matrix_json(q in prop::sample::select(ORDERS), m in 1usize..3, nu_seed: u32) {
        let f = Field::from_order(q).unwrap();
        let nu = 1 + nu_seed % (m as u32 * (q as u32 - 1)).min(4);
        let text = commands::matrix(&f, m, nu, Format::Json).unwrap();
        let _: MatrixRecord = round_trip(&text);
    }

    #[test]
    fn gapdemo_json(seed: u64) {
        let f = Field::from_order(3).unwrap();
        let text = commands::gapdemo(&f, 2, 3, seed, 20_000, None, Format::Json).unwrap();
        let r: GapRecord = round_trip(&text);
        prop_assert!(r.isolated);
        prop_assert_eq!(r.nonvanishing.len(), 1);
        prop_assert_eq!(&r.nonvanishing[0], r.points.last().unwrap());
    }

    #[test]
    fn separate_and_flats_json(q in prop::sample::select(ORDERS), m in 2usize..4, seed: u64) {
        use rand::{Rng, SeedableRng};
        let f = Field::from_order(q).unwrap();
        let s = ProjectiveSpace::new(&f, m).unwrap();
        let mut rng = rand_xoshiro::SplitMix64::seed_from_u64(seed);
        let t = rng.gen_range(1..=q as usize + 1);
        let pts = prm_core::sample::random_points(&s, t, &mut rng);
        let text = commands::separate(&s, pts, None, Format::Json).unwrap();
        let r: SeparationRecord = round_trip(&text);
        prop_assert!(r.verified);

        let dim = rng.gen_range(0..m - 1);
        let flat = prm_core::sample::random_flat(&s, dim, &mut rng);
        let text = commands::flats(&s, &flat, Format::Json).unwrap();
        let r: FlatsRecord = round_trip(&text);
        prop_assert_eq!(r.status, Status::Match);
    }
}

#[test]
fn sweep_and_lemma4_json() {
    let text = commands::sweep(&[2, 3], &[1, 2], 2_000_000, Format::Json).unwrap();
    let rows: Vec<CheckRow> = round_trip(&text);
    assert_eq!(rows.len(), 9);
    let text = commands::lemma4(&Field::from_order(3).unwrap(), 1, 1000, Format::Json).unwrap();
    let r: Lemma4Record = round_trip(&text);
    assert!(r.holds);
}
