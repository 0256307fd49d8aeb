use super::*;
use crate::generator::{fixture, GenConfig, Variant};

fn k4_file() -> GraphFile {
    fixture("k4-cross").unwrap().to_file()
}

fn dummy_id(file: &GraphFile) -> u32 {
    file.vertices
        .iter()
        .find(|v| v.kind == VertexKind::Dummy)
        .unwrap()
        .id
}

#[test]
fn k4_cross_has_five_faces_and_four_kites() {
    let e = OnePlaneEmbedding::from_file(&k4_file()).unwrap();
    assert_eq!(e.original_count(), 4);
    assert_eq!(e.crossing_count(), 1);
    let faces = e.trace_faces();
    assert_eq!(faces.len(), 5);
    let triangles = faces.iter().filter(|f| f.boundary.len() == 3).count();
    assert_eq!(triangles, 4);
    assert!(e.missing_kites().is_empty());
    assert!(e.is_locally_maximal().ok());
}

#[test]
fn boundary_lengths_sum_to_dart_count() {
    for name in crate::generator::FIXTURE_NAMES {
        let e = fixture(name).unwrap();
        let total: usize = e.trace_faces().iter().map(|f| f.boundary.len()).sum();
        assert_eq!(total, 2 * e.map().edge_count(), "{name}");
        let crossed = e.originals().iter().filter(|o| o.is_crossed()).count();
        assert_eq!(crossed, 2 * e.crossing_count());
        assert_eq!(e.map().edge_count(), e.originals().len() + 2 * e.crossing_count());
    }
}

#[test]
fn non_alternating_dummy_rejected() {
    let mut file = k4_file();
    let x = dummy_id(&file);
    let rot = file.rotation.get_mut(&x).unwrap();
    rot.swap(1, 2);
    assert_eq!(
        OnePlaneEmbedding::from_file(&file).unwrap_err(),
        EmbeddingError::NonAlternating { vertex: x }
    );
}

#[test]
fn dummy_degree_checked() {
    let mut file = k4_file();
    let x = dummy_id(&file);
    let dart = file.rotation.get_mut(&x).unwrap().pop().unwrap();
    let edge = (dart / 2) as u32;
    file.edges.retain(|e| e.id != edge);
    let other = file.rotation.iter_mut().find(|(_, r)| r.contains(&(dart ^ 1))).unwrap().1;
    other.retain(|&d| d != dart ^ 1);
    let err = OnePlaneEmbedding::from_file(&file).unwrap_err();
    assert!(
        matches!(err, EmbeddingError::DummyDegree { degree: 3, .. } | EmbeddingError::Dangling(_)),
        "{err:?}"
    );
}

#[test]
fn broken_rotation_is_not_a_sphere() {
    let mut file = k4_file();
    // Reverse the rotation at one original vertex of degree 3.
    let v = file.vertices.iter().find(|v| v.kind == VertexKind::Original).unwrap().id;
    file.rotation.get_mut(&v).unwrap().reverse();
    assert_eq!(OnePlaneEmbedding::from_file(&file).unwrap_err(), EmbeddingError::NotSphere);
}

#[test]
fn bad_json_and_ids() {
    assert!(matches!(OnePlaneEmbedding::from_json("{"), Err(EmbeddingError::Json(_))));
    let mut file = k4_file();
    file.edges[0].head = 999;
    assert!(matches!(
        OnePlaneEmbedding::from_file(&file),
        Err(EmbeddingError::Dangling(_))
    ));
    let mut file = k4_file();
    let t = file.edges[0].tail;
    file.edges[0].head = t;
    assert!(matches!(
        OnePlaneEmbedding::from_file(&file),
        Err(EmbeddingError::Loop { .. })
    ));
}

#[test]
fn angles_at_vertices() {
    let e = fixture("k4-cross").unwrap();
    for v in 0..e.vertex_count() as u32 {
        let angles = e.angles_at(Vertex(v)).unwrap();
        assert_eq!(angles.len(), e.map().degree(Vertex(v)));
        assert!(angles.iter().all(|a| a.at == Vertex(v)));
    }
    let dummy = e.crossings()[0].dummy;
    let angles = e.angles_at(dummy).unwrap();
    assert!(angles.iter().all(|a| e.is_original(a.before) && e.is_original(a.after)));
    assert_eq!(e.angles_at(Vertex(99)).unwrap_err(), EmbeddingError::UnknownVertex(99));

    // A leaf has a single angle that returns to its only neighbour.
    let p = OnePlaneEmbedding::from_json(
        r#"{"vertices":[{"id":0,"kind":"original"},{"id":1,"kind":"original"}],
            "edges":[{"id":0,"tail":0,"head":1}],
            "rotation":{"0":[0],"1":[1]},
            "original_edges":[{"id":0,"u":0,"v":1,"segments":[0]}],
            "crossings":[]}"#,
    )
    .unwrap();
    let a = p.angles_at(Vertex(0)).unwrap();
    assert_eq!(a, vec![Angle { before: Vertex(1), at: Vertex(0), after: Vertex(1) }]);
    assert_eq!(p.trace_faces().len(), 1);
}

#[test]
fn grid_and_arrow_are_not_locally_maximal() {
    let grid = fixture("grid-no-kites").unwrap();
    let report = grid.is_locally_maximal();
    for i in 0..grid.crossing_count() {
        assert_eq!(report.missing.iter().filter(|m| m.crossing == i).count(), 4);
    }
    assert!(matches!(
        grid.complete_kites(),
        Err(EmbeddingError::NotLocallyMaximal { missing: 48 })
    ));
    let arrow = fixture("arrow-two-kites").unwrap();
    assert!(!arrow.is_locally_maximal().ok());
}

#[test]
fn complete_kites_fills_each_gap_once() {
    let g = GenConfig { n: 25, crossing_fraction: 0.5, seed: 4, variant: Variant::Triangulation }
        .generate()
        .unwrap();
    let d = crate::generator::displace_kites(&g, 0.6, 1).unwrap();
    let gaps = d.missing_kites().len();
    assert!(gaps > 0);
    let done = d.complete_kites().unwrap();
    assert_eq!(done.originals().len(), d.originals().len() + gaps);
    assert!(done.missing_kites().is_empty());
    let again = done.complete_kites().unwrap();
    assert_eq!(again, done);
    OnePlaneEmbedding::from_file(&done.to_file()).unwrap();
}

#[test]
fn file_round_trip_preserves_labels() {
    let mut file = k4_file();
    // Shift all ids to make labels differ from indices.
    for v in &mut file.vertices {
        v.id += 10;
    }
    for e in &mut file.edges {
        e.tail += 10;
        e.head += 10;
    }
    file.rotation = file.rotation.into_iter().map(|(k, v)| (k + 10, v)).collect();
    for o in &mut file.original_edges {
        o.u += 10;
        o.v += 10;
    }
    for c in &mut file.crossings {
        c.dummy += 10;
    }
    let e = OnePlaneEmbedding::from_file(&file).unwrap();
    assert_eq!(e.vertex_label(Vertex(0)), 10);
    assert_eq!(e.vertex_by_label(13), Some(Vertex(3)));
    let back = e.to_file();
    assert_eq!(OnePlaneEmbedding::from_file(&back).unwrap(), e);
}

#[test]
fn sparse_labels_round_trip() {
    let mut file = k4_file();
    let big = |x: u32| x * 100_000 + 7;
    for v in &mut file.vertices {
        v.id = big(v.id);
    }
    for e in &mut file.edges {
        e.id = big(e.id);
        e.tail = big(e.tail);
        e.head = big(e.head);
    }
    file.rotation = file
        .rotation
        .into_iter()
        .map(|(k, v)| (big(k), v.into_iter().map(|d| big((d / 2) as u32) as u64 * 2 + (d & 1)).collect()))
        .collect();
    for o in &mut file.original_edges {
        o.id = big(o.id);
        o.u = big(o.u);
        o.v = big(o.v);
        o.segments.iter_mut().for_each(|s| *s = big(*s));
    }
    for c in &mut file.crossings {
        c.dummy = big(c.dummy);
        c.edge_a = big(c.edge_a);
        c.edge_b = big(c.edge_b);
    }
    let e = OnePlaneEmbedding::from_file(&file).unwrap();
    assert_eq!(e.vertex_by_label(big(3)), Some(Vertex(3)));
    assert_eq!(e.to_file(), file);
}
