//! Built-in fixtures: the five frame presentations the engine ships with,
//! with their contact structures, named tangent subframes, and default
//! parameter assignments.

use crate::error::{Error, Result};
use crate::frame::{dual_connection, Connection, ConnectionRole, FramePresentation, Tensor3, VectorField};
use crate::ring::{ParamRing, Poly, Rational};
use crate::structures::{warp_kenmotsu, ContactTriple, HolomorphicBase};
use std::collections::BTreeMap;

/// A fixture bundles a presentation with optional contact data and named
/// tangent subframes for the submanifold commands.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub presentation: FramePresentation,
    pub contact: Option<ContactTriple>,
    /// Named tangent subframes, by frame index.
    pub submanifolds: Vec<(String, Vec<usize>)>,
    pub description: &'static str,
    /// Assignment used when a command needs numbers and none are given.
    pub default_assignment: BTreeMap<String, Rational>,
}

pub const NAMES: [&str; 5] = [
    "kenmotsu5d",
    "hyperbolic2",
    "flat2-einstein",
    "flat3-einstein",
    "kenmotsu5d-sub-invariant",
];

/// The same fixtures in document form, as shipped in `fixtures/`.
pub mod files {
    pub const KENMOTSU5D: &str = include_str!("../fixtures/kenmotsu5d.stm");
    pub const HYPERBOLIC2: &str = include_str!("../fixtures/hyperbolic2.stm");
    pub const FLAT2_EINSTEIN: &str = include_str!("../fixtures/flat2-einstein.stm");
    pub const FLAT3_EINSTEIN: &str = include_str!("../fixtures/flat3-einstein.stm");
    pub const KENMOTSU5D_SUB_INVARIANT: &str =
        include_str!("../fixtures/kenmotsu5d-sub-invariant.stm");

    pub fn source_for(name: &str) -> Option<&'static str> {
        match name {
            "kenmotsu5d" => Some(KENMOTSU5D),
            "hyperbolic2" => Some(HYPERBOLIC2),
            "flat2-einstein" => Some(FLAT2_EINSTEIN),
            "flat3-einstein" => Some(FLAT3_EINSTEIN),
            "kenmotsu5d-sub-invariant" => Some(KENMOTSU5D_SUB_INVARIANT),
            _ => None,
        }
    }
}

pub fn get(name: &str) -> Result<Fixture> {
    match name {
        "kenmotsu5d" => Ok(kenmotsu5d()),
        "hyperbolic2" => Ok(hyperbolic2()),
        "flat2-einstein" => Ok(flat2_einstein()),
        "flat3-einstein" => Ok(flat3_einstein()),
        "kenmotsu5d-sub-invariant" => Ok(kenmotsu5d_sub_invariant()),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn identity_metric(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn assignment(pairs: &[(&str, i64)]) -> BTreeMap<String, Rational> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), Rational::int(*v)))
        .collect()
}

/// Flat abelian base of dimension `2s` with the block complex structure
/// `J e_i = e_{i+s}`, `J e_{i+s} = −e_i`, zero base difference tensor.
fn flat_holomorphic_base(ring: &ParamRing, s: usize) -> HolomorphicBase {
    let n = 2 * s;
    let names = (0..n).map(|i| format!("e{}", i + 1)).collect();
    let pres = FramePresentation::new(
        format!("flat{n}"),
        names,
        ring.clone(),
        identity_metric(n),
        Tensor3::zeros(ring, n),
    )
    .expect("flat base is a valid presentation");
    let mut j_images = Vec::with_capacity(n);
    for i in 0..s {
        j_images.push(VectorField::basis(ring, n, i + s));
    }
    for i in 0..s {
        j_images.push(VectorField::basis(ring, n, i).neg());
    }
    HolomorphicBase::new(pres, j_images, Tensor3::zeros(ring, n)).expect("valid base")
}

/// Warped Kenmotsu statistical presentation of dimension `2s+1` over the
/// flat base, with `K(ξ,ξ) = a ξ`.
fn warped_kenmotsu(s: usize, name: &str) -> (FramePresentation, ContactTriple) {
    let ring = ParamRing::new(["a"]).expect("single parameter");
    let base = flat_holomorphic_base(&ring, s);
    let beta = Poly::var(&ring, "a").expect("a declared");
    let out = warp_kenmotsu(&base, &beta).expect("warp of the flat base succeeds");
    let mut pres = out.presentation;
    pres.name = name.to_string();
    (pres, out.contact)
}

/// 5-dimensional Kenmotsu statistical manifold: frame `e1..e4, xi`,
/// `[e_i, xi] = e_i`, identity metric, `∇ = ∇^g + a η⊗η⊗ξ`,
/// `φ e1 = e3, φ e2 = e4`.
pub fn kenmotsu5d() -> Fixture {
    let (presentation, contact) = warped_kenmotsu(2, "kenmotsu5d");
    Fixture {
        presentation,
        contact: Some(contact),
        submanifolds: vec![
            ("invariant".to_string(), vec![0, 2, 4]),
            ("umbilical".to_string(), vec![0, 1, 2, 3]),
            ("anti_invariant".to_string(), vec![0, 1, 4]),
        ],
        description: "5-dimensional Kenmotsu statistical manifold over a flat holomorphic base",
        default_assignment: assignment(&[("a", 0)]),
    }
}

/// The invariant 3-dimensional slice of the 5D fixture as a presentation
/// of its own.
pub fn kenmotsu5d_sub_invariant() -> Fixture {
    let (presentation, contact) = warped_kenmotsu(1, "kenmotsu5d-sub-invariant");
    Fixture {
        presentation,
        contact: Some(contact),
        submanifolds: vec![],
        description: "3-dimensional Kenmotsu statistical manifold (invariant slice of kenmotsu5d)",
        default_assignment: assignment(&[("a", 0)]),
    }
}

/// Upper half-plane in the orthonormal frame `E1 = y ∂x`, `E2 = y ∂y`
/// ([E1,E2] = −E1) with the flat statistical connection.
pub fn hyperbolic2() -> Fixture {
    let ring = ParamRing::empty();
    let mut br = Tensor3::zeros(&ring, 2);
    br.set(0, 1, 0, Poly::int(&ring, -1));
    br.set(1, 0, 0, Poly::int(&ring, 1));
    let mut pres = FramePresentation::new(
        "hyperbolic2",
        vec!["E1".into(), "E2".into()],
        ring.clone(),
        identity_metric(2),
        br,
    )
    .expect("valid presentation");
    let mut g = Tensor3::zeros(&ring, 2);
    g.set(0, 0, 1, Poly::int(&ring, 2));
    g.set(1, 0, 0, Poly::int(&ring, 1));
    g.set(1, 1, 1, Poly::int(&ring, 2));
    let nabla = Connection::new(g, ConnectionRole::Given);
    let star = dual_connection(&pres, &nabla).expect("dual exists");
    pres.add_connection("nabla", nabla).unwrap();
    pres.add_connection("nabla_star", star).unwrap();
    Fixture {
        presentation: pres,
        contact: None,
        submanifolds: vec![],
        description: "upper half-plane, flat statistical connection (steady Ricci soliton)",
        default_assignment: BTreeMap::new(),
    }
}

/// Euclidean plane with the constant-curvature −1 statistical connection
/// `∇_dx dx = −dy`, `∇_dx dy = ∇_dy dx = −dx`.
pub fn flat2_einstein() -> Fixture {
    let ring = ParamRing::empty();
    let br = Tensor3::zeros(&ring, 2);
    let mut pres = FramePresentation::new(
        "flat2-einstein",
        vec!["dx".into(), "dy".into()],
        ring.clone(),
        identity_metric(2),
        br,
    )
    .expect("valid presentation");
    let mut g = Tensor3::zeros(&ring, 2);
    g.set(0, 0, 1, Poly::int(&ring, -1));
    g.set(0, 1, 0, Poly::int(&ring, -1));
    g.set(1, 0, 0, Poly::int(&ring, -1));
    let nabla = Connection::new(g, ConnectionRole::Given);
    let star = dual_connection(&pres, &nabla).expect("dual exists");
    pres.add_connection("nabla", nabla).unwrap();
    pres.add_connection("nabla_star", star).unwrap();
    Fixture {
        presentation: pres,
        contact: None,
        submanifolds: vec![],
        description: "Euclidean plane, constant-curvature -1 statistical connection (shrinking)",
        default_assignment: BTreeMap::new(),
    }
}

/// Euclidean 3-space with the one-parameter statistical connection over b
/// (constant curvature b^2/4).
pub fn flat3_einstein() -> Fixture {
    let ring = ParamRing::new(["b"]).expect("single parameter");
    let br = Tensor3::zeros(&ring, 3);
    let mut pres = FramePresentation::new(
        "flat3-einstein",
        vec!["e1".into(), "e2".into(), "e3".into()],
        ring.clone(),
        identity_metric(3),
        br,
    )
    .expect("valid presentation");
    let b = Poly::var(&ring, "b").expect("b declared");
    let hb = b.scale(&Rational::new(1, 2).unwrap());
    let mut g = Tensor3::zeros(&ring, 3);
    g.set(0, 0, 0, b.clone());
    g.set(1, 1, 0, hb.clone());
    g.set(2, 2, 0, hb.clone());
    g.set(0, 1, 1, hb.clone());
    g.set(1, 0, 1, hb.clone());
    g.set(0, 2, 2, hb.clone());
    g.set(2, 0, 2, hb);
    let nabla = Connection::new(g, ConnectionRole::Given);
    let star = dual_connection(&pres, &nabla).expect("dual exists");
    pres.add_connection("nabla", nabla).unwrap();
    pres.add_connection("nabla_star", star).unwrap();
    Fixture {
        presentation: pres,
        contact: None,
        submanifolds: vec![],
        description: "Euclidean 3-space, constant-curvature b^2/4 statistical connection (expanding)",
        default_assignment: assignment(&[("b", 2)]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::{check_statistical, curvature, SignConvention};
    use crate::structures::check_almost_contact;

    #[test]
    fn registry_resolves_all_names() {
        for name in NAMES {
            let f = get(name).unwrap();
            assert_eq!(f.presentation.name, name);
            assert!(f.presentation.connections.contains_key("nabla"));
            assert!(f.presentation.connections.contains_key("nabla_star"));
        }
        assert!(get("nope").is_err());
    }

    #[test]
    fn kenmotsu_fixture_matches_printed_tables() {
        let f = kenmotsu5d();
        let m = &f.presentation;
        let nabla = m.connection("nabla").unwrap();
        let ring = m.ring();
        let a = Poly::var(ring, "a").unwrap();
        let xi = VectorField::basis(ring, 5, 4);
        for i in 0..4 {
            assert_eq!(nabla.entry(i, i), xi.neg());
            assert_eq!(nabla.entry(i, 4), VectorField::basis(ring, 5, i));
            assert!(nabla.entry(4, i).is_zero());
        }
        assert_eq!(nabla.entry(4, 4), xi.scale_poly(&a));
        let ct = f.contact.as_ref().unwrap();
        assert!(check_almost_contact(m, ct).verdict());
        assert_eq!(ct.phi_image(0), &VectorField::basis(ring, 5, 2));
        assert_eq!(ct.phi_image(1), &VectorField::basis(ring, 5, 3));
    }

    #[test]
    fn statistical_fixtures_pass_the_check() {
        for name in NAMES {
            let f = get(name).unwrap();
            let rep = check_statistical(&f.presentation, f.presentation.connection("nabla").unwrap()).unwrap();
            assert!(rep.verdict(), "{name}");
        }
    }

    #[test]
    fn hyperbolic_fixture_is_flat() {
        let f = hyperbolic2();
        let r = curvature(
            &f.presentation,
            f.presentation.connection("nabla").unwrap(),
            SignConvention::Standard,
        );
        assert!(r.is_zero());
    }

    #[test]
    fn shipped_files_match_the_builtins() {
        for name in NAMES {
            let src = files::source_for(name).unwrap();
            let doc = crate::dsl::parse(src)
                .unwrap_or_else(|d| panic!("{name} fails to parse: {d:?}"));
            let (pres, ct) = doc.build().unwrap_or_else(|e| panic!("{name}: {e}"));
            let builtin = get(name).unwrap();
            assert_eq!(pres.frame_names(), builtin.presentation.frame_names(), "{name}");
            assert_eq!(pres.metric(), builtin.presentation.metric(), "{name}");
            assert_eq!(pres.brackets(), builtin.presentation.brackets(), "{name}");
            for cname in ["nabla", "nabla_star"] {
                assert_eq!(
                    pres.connection(cname).unwrap().gamma,
                    builtin.presentation.connection(cname).unwrap().gamma,
                    "{name}/{cname}"
                );
            }
            assert_eq!(ct.as_ref(), builtin.contact.as_ref(), "{name}");
            let doc_subs: Vec<(String, Vec<usize>)> = doc.submanifolds.clone();
            assert_eq!(doc_subs, builtin.submanifolds, "{name}");
        }
    }

    #[test]
    fn shipped_5d_file_shape() {
        let doc = crate::dsl::parse(files::KENMOTSU5D).unwrap();
        assert_eq!(doc.frame.len(), 5);
        assert_eq!(doc.params.len(), 1);
        assert_eq!(doc.connection_entry_count, 50);
    }

    #[test]
    fn shipped_files_survive_the_print_fixpoint() {
        for name in NAMES {
            let src = files::source_for(name).unwrap();
            let doc = crate::dsl::parse(src).unwrap();
            let printed = crate::dsl::print_doc(&doc);
            let doc2 = crate::dsl::parse(&printed)
                .unwrap_or_else(|d| panic!("{name} printed form fails to parse: {d:?}"));
            assert_eq!(doc, doc2, "{name}");
        }
    }
}
