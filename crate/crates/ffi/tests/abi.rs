use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use turan_ffi::*;

fn last_error() -> Option<String> {
    let p = turan_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn construct(family: TuranFamily, params: &[usize]) -> *mut TuranGraph {
    let mut g = ptr::null_mut();
    let status = unsafe { turan_construct(family, params.as_ptr(), params.len(), &mut g) };
    assert_eq!(status, TuranStatus::Ok, "{:?}", last_error());
    g
}

#[test]
fn graph_lifecycle() {
    let g = turan_graph_new(4);
    assert!(!g.is_null());
    for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3)] {
        assert_eq!(turan_graph_add_edge(g, u, v), TuranStatus::Ok);
    }
    assert_eq!(turan_graph_order(g), 4);
    assert_eq!(turan_graph_edge_count(g), 4);
    assert_eq!(turan_graph_triangle_count(g), 1);
    let mut t = 0;
    assert_eq!(turan_graph_triangles_at(g, 3, &mut t), TuranStatus::Ok);
    assert_eq!(t, 0);
    assert_eq!(turan_graph_triangles_at_pair(g, 0, 3, &mut t), TuranStatus::Ok);
    assert_eq!(t, 1);
    let mut has = false;
    assert_eq!(turan_graph_has_edge(g, 2, 3, &mut has), TuranStatus::Ok);
    assert!(has);

    let h = turan_graph_clone(g);
    assert_eq!(turan_graph_remove_edge(h, 0, 1), TuranStatus::Ok);
    assert_eq!(turan_graph_triangle_count(h), 0);
    assert_eq!(turan_graph_triangle_count(g), 1);
    unsafe {
        turan_graph_free(h);
        turan_graph_free(g);
        turan_graph_free(ptr::null_mut());
    }
}

#[test]
fn error_codes_and_messages() {
    let g = turan_graph_new(3);
    assert_eq!(turan_graph_add_edge(g, 0, 7), TuranStatus::OutOfRange);
    assert!(last_error().unwrap().contains("out of range"));
    assert_eq!(turan_graph_add_edge(g, 1, 1), TuranStatus::InvalidArgument);
    assert_eq!(turan_graph_add_edge(g, 0, 1), TuranStatus::Ok);
    assert_eq!(last_error(), None);
    assert_eq!(turan_graph_add_edge(ptr::null_mut(), 0, 1), TuranStatus::NullPointer);
    assert_eq!(turan_graph_has_edge(g, 0, 1, ptr::null_mut()), TuranStatus::NullPointer);

    let mut b = TuranBound { n: 0, value: 0, kind: TuranBoundKind::Exact, valid_from: 0, odd_case: false };
    assert_eq!(turan_formula(TuranFormula::C33Triangles, 5, &mut b), TuranStatus::BelowThreshold);

    let mut out = ptr::null_mut();
    let bad = CString::new("A`x").unwrap();
    assert_eq!(unsafe { turan_graph_from_graph6(bad.as_ptr(), &mut out) }, TuranStatus::ParseError);
    assert!(out.is_null());
    assert_eq!(unsafe { turan_construct(TuranFamily::Cycle, [2].as_ptr(), 1, &mut out) }, TuranStatus::InvalidArgument);
    assert_eq!(unsafe { turan_construct(TuranFamily::HNpt, [2].as_ptr(), 1, &mut out) }, TuranStatus::InvalidArgument);

    let mut v = 0;
    assert_eq!(turan_ex_exact(40, TuranPattern::C33, &mut v, ptr::null_mut()), TuranStatus::BudgetExceeded);
    unsafe { turan_graph_free(g) };
}

#[test]
fn graph6_round_trip() {
    let g = construct(TuranFamily::MatchingJoin, &[24]);
    let text = turan_graph_to_graph6(g);
    assert!(!text.is_null());
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { turan_graph_from_graph6(text, &mut back) }, TuranStatus::Ok);
    assert_eq!(turan_graph_triangle_count(back), 144);
    assert_eq!(turan_graph_edge_count(back), turan_graph_edge_count(g));
    let k2 = CString::new("A_").unwrap();
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { turan_graph_from_graph6(k2.as_ptr(), &mut k) }, TuranStatus::Ok);
    assert_eq!(turan_graph_edge_count(k), 1);
    unsafe {
        turan_string_free(text);
        turan_graph_free(g);
        turan_graph_free(back);
        turan_graph_free(k);
    }
}

#[test]
fn containment_with_embedding() {
    let k6 = construct(TuranFamily::Complete, &[6]);
    let mut found = false;
    let mut buf = [usize::MAX; 8];
    let mut len = 0;
    let s = turan_contains(k6, TuranPattern::C33, &mut found, buf.as_mut_ptr(), buf.len(), &mut len);
    assert_eq!(s, TuranStatus::Ok);
    assert!(found);
    assert_eq!(len, 6);
    assert_eq!(&buf[..6], &[0, 1, 2, 3, 4, 5]);

    let mut small = [0usize; 2];
    let s = turan_contains(k6, TuranPattern::C33, &mut found, small.as_mut_ptr(), small.len(), &mut len);
    assert_eq!(s, TuranStatus::BufferTooSmall);
    assert_eq!(len, 6);

    let m = construct(TuranFamily::MatchingJoin, &[12]);
    let s = turan_contains(m, TuranPattern::C33, &mut found, ptr::null_mut(), 0, &mut len);
    assert_eq!(s, TuranStatus::Ok);
    assert!(!found);
    assert_eq!(len, 0);

    let tri = construct(TuranFamily::Complete, &[3]);
    let s = turan_contains_graph(k6, tri, &mut found, buf.as_mut_ptr(), buf.len(), &mut len);
    assert_eq!(s, TuranStatus::Ok);
    assert!(found && len == 3);
    unsafe {
        turan_graph_free(k6);
        turan_graph_free(m);
        turan_graph_free(tri);
    }
}

#[test]
fn constructions_and_formulas() {
    let mut b = TuranBound { n: 0, value: 0, kind: TuranBoundKind::Exact, valid_from: 0, odd_case: false };
    assert_eq!(turan_formula(TuranFormula::P33Triangles, 9, &mut b), TuranStatus::Ok);
    assert_eq!((b.value, b.kind), (16, TuranBoundKind::LowerBound));
    let apex = construct(TuranFamily::ApexBipartite, &[9]);
    assert_eq!(turan_graph_triangle_count(apex), b.value);

    assert_eq!(turan_formula(TuranFormula::C33Triangles, 23, &mut b), TuranStatus::Ok);
    assert!(b.odd_case && b.kind == TuranBoundKind::UpperBound);

    let c4 = construct(TuranFamily::Cycle, &[4]);
    let mut blow = ptr::null_mut();
    assert_eq!(turan_edge_blowup(c4, 3, &mut blow), TuranStatus::Ok);
    assert_eq!((turan_graph_order(blow), turan_graph_edge_count(blow)), (8, 12));

    let e = construct(TuranFamily::EdgeExtremal, &[10, 2]);
    assert_eq!(turan_graph_edge_count(e), 29);
    let h = construct(TuranFamily::HPlus, &[10, 2, 2]);
    assert_eq!(turan_graph_order(h), 10);
    unsafe {
        for g in [apex, c4, blow, e, h] {
            turan_graph_free(g);
        }
    }
}

#[test]
fn searches() {
    let mut v = 0;
    let mut w = ptr::null_mut();
    assert_eq!(turan_ex_exact(8, TuranPattern::C33, &mut v, &mut w), TuranStatus::Ok);
    assert_eq!(v, 16);
    assert_eq!(turan_graph_triangle_count(w), 16);
    unsafe { turan_graph_free(w) };

    let mut a = 0;
    let mut b = 0;
    assert_eq!(turan_ex_search(24, TuranPattern::C33, 7, 4, 50, &mut a, ptr::null_mut()), TuranStatus::Ok);
    assert_eq!(turan_ex_search(24, TuranPattern::C33, 7, 4, 50, &mut b, ptr::null_mut()), TuranStatus::Ok);
    assert_eq!(a, b);
    assert!(a >= 144);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(turan_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

/// The generated header compiles as C and as C++.
#[test]
fn header_compiles() {
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(include.join("turan.h").exists());
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("turan_header_check.c");
    std::fs::write(
        &src,
        "#include \"turan.h\"\n\
         int probe(void) {\n\
           TuranGraph *g = turan_graph_new(3);\n\
           TuranStatus s = turan_graph_add_edge(g, 0, 1);\n\
           TuranBound b;\n\
           s = turan_formula(TURAN_FORMULA_M23_TRIANGLES, 9, &b);\n\
           turan_graph_free(g);\n\
           return s == TURAN_STATUS_OK ? (int)b.value : -1;\n\
         }\n",
    )
    .unwrap();
    for (compiler, lang) in [("cc", "c"), ("c++", "c++")] {
        let status = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-x", lang])
            .arg("-I")
            .arg(&include)
            .arg(&src)
            .status();
        match status {
            Ok(s) => assert!(s.success(), "{compiler} rejected the header"),
            Err(e) => eprintln!("skipping {compiler}: {e}"),
        }
    }
}
