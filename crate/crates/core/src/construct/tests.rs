use super::*;
use crate::z4code::Z4WeightDistribution;
use crate::z4vec::WeightKind::{Euclidean, Lee};
use num_bigint::BigUint;

fn anf(s: &str, n: usize) -> BooleanFunction {
    BooleanFunction::from_anf(s, n).unwrap()
}

fn cf(a: &str, b: &str, n: usize) -> String {
    build_cf(&anf(a, n), &anf(b, n)).unwrap().to_string()
}

fn m3() -> Z4Code {
    let (a, b) = reference_pair(3).unwrap();
    build_code(&a, &b).unwrap()
}

#[test]
fn fixture_vectors() {
    assert_eq!(cf("x1*x2", "x1+x1*x2", 2), "01010321");
    assert_eq!(cf("x1*x2", "x1*x2", 2), "01010123");
    assert_eq!(
        cf("x1*x2+x1*x3+x2*x4", "x1*x2+x3*x4", 4),
        "01010103012101230101212323030321"
    );
    assert!(build_cf(&anf("x1*x2", 2), &anf("x1*x2+x3*x4", 4)).is_err());
}

#[test]
fn circulant_types() {
    assert_eq!(m3().type_of(), (2, 3));
    let pair = circulant_code(&"22".parse().unwrap());
    assert_eq!(pair.codewords().unwrap().len(), 2);
}

#[test]
fn extension_m3() {
    let ext = extend_type_ii(&m3()).unwrap();
    assert_eq!(ext.k2, 3);
    assert_eq!(ext.k3, 1);
    assert_eq!(ext.added_rows[0].to_string(), "00000202");
    let code = &ext.code;
    assert_eq!(code.type_of(), (2, 4));
    assert!(code.is_self_dual());
    assert!(code.type_ii().holds());
    assert_eq!(
        code.weight_distribution(Euclidean).unwrap(),
        Z4WeightDistribution::from_pairs(
            Euclidean,
            &[(0, 1), (8, 140), (16, 102), (24, 12), (32, 1)]
        )
    );
    assert_eq!(
        code.weight_distribution(Lee).unwrap(),
        Z4WeightDistribution::from_pairs(
            Lee,
            &[
                (0, 1),
                (4, 12),
                (6, 64),
                (8, 102),
                (10, 64),
                (12, 12),
                (16, 1)
            ]
        )
    );
    assert_eq!(code.paut_order().unwrap(), 1152);
}

#[test]
fn extension_rejects_bad_input() {
    assert!(extend_type_ii(&Z4Code::zero(8)).is_err());
    assert!(extend_type_ii(&circulant_code(&"0101".parse().unwrap())).is_err());
    assert!(extend_type_ii(&Z4Code::full(8)).is_err());
}

#[test]
fn variants_m3() {
    let c = m3();
    let ext = extend_type_ii(&c).unwrap();
    let variants = four_variant_codes(&c).unwrap();
    assert_eq!(variants.len(), 4);
    let e = ext.code.weight_distribution(Euclidean).unwrap();
    for v in &variants {
        assert_eq!(v.code.weight_distribution(Euclidean).unwrap(), e);
        assert_eq!(v.code.residue(), ext.code.residue());
    }
    for (i, x) in variants.iter().enumerate() {
        for y in &variants[i + 1..] {
            assert!(x.code.monomial_equivalent(&y.code).unwrap().is_some());
        }
    }
    // a sign change on one of the last two coordinates toggles a column of B
    let orders: Vec<u64> = variants
        .iter()
        .map(|v| v.code.paut_order().unwrap())
        .collect();
    assert_eq!(orders.iter().filter(|&&o| o == 1152).count(), 2);
    assert_eq!(orders.iter().filter(|&&o| o == 576).count(), 2);
    assert!(variants.iter().any(|v| v.code.same_code(&ext.code)));
}

#[test]
fn closed_form_m3() {
    let cf = closed_form(3).unwrap();
    assert_eq!(
        cf.torsion,
        crate::bincode::BinaryWeightDistribution::from_u64(&[1, 0, 12, 0, 38, 0, 12, 0, 1])
    );
    assert_eq!(
        cf.euclidean,
        Z4WeightDistribution::from_pairs(
            Euclidean,
            &[(0, 1), (8, 140), (16, 102), (24, 12), (32, 1)]
        )
    );
    assert!(cf.lee.is_none());
    assert_eq!(cf.s[&8], BigUint::from(64u8));
    assert_eq!(cf.t[&8], BigUint::from(64u8));
    assert_eq!(cf.t[&16], BigUint::from(64u8));
    let ext = extend_type_ii(&m3()).unwrap();
    assert_eq!(ext.code.swe().unwrap(), cf.swe);
    assert_ne!(cf.swe_literal, cf.swe);
    assert!(cf.literal_swe_overcounts());
}

#[test]
fn closed_form_m5() {
    let cf = closed_form(5).unwrap();
    assert_eq!(cf.torsion.get(2), BigUint::from(240u32));
    let lee = cf.lee.as_ref().unwrap();
    assert_eq!(lee.get(4), BigUint::from(240u32));
    let size = BigUint::from(1u8) << 32;
    assert_eq!(cf.euclidean.total(), size);
    assert_eq!(lee.total(), size);
    assert_eq!(cf.swe.total(), size);
    assert!(cf.euclidean.counts.keys().all(|w| w % 8 == 0));
    assert!(lee.counts.keys().all(|w| w % 4 == 0));
    assert!(cf.literal_swe_overcounts());
    assert!(closed_form(4).is_err());
    assert!(closed_form(1).is_err());
}

#[test]
fn gray_images_m3() {
    let c = m3();
    let image = gray_image_code(&c).unwrap();
    assert_eq!((image.length(), image.dimension()), (16, 7));
    assert_eq!(image.minimum_distance().unwrap(), Some(4));
    let ext = extend_type_ii(&c).unwrap();
    let full = gray_image_code(&ext.code).unwrap();
    assert!(full.is_self_dual());
    // Lee weight 6 occurs at m = 3
    assert!(!full.is_doubly_even());
    assert!(!image.is_doubly_even());
    let mut words: Vec<BinVec> = ext
        .code
        .codewords()
        .unwrap()
        .iter()
        .map(|w| w.gray_map())
        .collect();
    words.sort();
    let mut spanned = Vec::new();
    full.for_each_codeword(|w| spanned.push(w.clone())).unwrap();
    spanned.sort();
    assert_eq!(words, spanned);
}

#[test]
fn nonlinear_gray_image() {
    let c = Z4Code::new(3, vec!["110".parse().unwrap(), "011".parse().unwrap()]).unwrap();
    assert!(matches!(gray_image_code(&c), Err(Error::NonlinearImage(_))));
}

#[test]
fn pipeline_m3() {
    let (a, b) = reference_pair(3).unwrap();
    let opts = PipelineOptions {
        samples: 10_000,
        ..PipelineOptions::default()
    };
    let r = pipeline_with(&a, &b, &opts).unwrap();
    let failed: Vec<_> = r.failures().collect();
    assert!(failed.is_empty(), "{failed:?}");
    let j = r.to_json();
    assert_eq!(j["c_f"]["digits"], "01010321");
    assert_eq!(j["inputs"]["a"], "x1*x2");
    assert_eq!(j["C_f"]["paut_order"], 64);
    assert_eq!(j["designs"]["rows"].as_array().unwrap().len(), 7);
    let again = pipeline_with(&a, &b, &opts).unwrap().to_json();
    assert_eq!(
        serde_json::to_string(&j).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
    assert!(pipeline(&anf("x1*x2", 2), &anf("x1*x2+x3*x4", 4)).is_err());
}
