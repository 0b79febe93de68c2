use copwin_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

const H7: &str = "(1,2) (3,5) (3,6) (4,5) (4,6) (5,7) (6,7) (1,4) (1,3) (2,4) (2,3) (2,5) (1,6) (3,7)";

fn parse(text: &str) -> *mut CwGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { cw_graph_parse(c.as_ptr(), &mut g) }, CwStatus::Ok);
    assert!(!g.is_null());
    g
}

fn last_error() -> String {
    let p = cw_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn h7_through_the_abi() {
    let g = parse(H7);
    unsafe {
        assert_eq!(cw_graph_order(g), 7);
        assert_eq!(cw_graph_edge_count(g), 14);

        let mut ranks = [0u32; 7];
        assert_eq!(cw_corner_ranks(g, ranks.as_mut_ptr(), 7), CwStatus::Ok);
        // Pairs input numbers vertices by first appearance; go back to labels.
        let mut by_label = [0u32; 7];
        for (v, &k) in ranks.iter().enumerate() {
            let mut label = 0;
            assert_eq!(cw_graph_label(g, v, &mut label), CwStatus::Ok);
            by_label[label as usize - 1] = k;
        }
        assert_eq!(by_label, [4, 4, 3, 3, 2, 2, 1]);

        let mut alpha = 0;
        assert_eq!(cw_graph_rank(g, &mut alpha), CwStatus::Ok);
        assert_eq!(alpha, 4);

        let mut len = 0;
        assert_eq!(cw_rank_vector(g, ptr::null_mut(), 0, &mut len), CwStatus::BufferTooSmall);
        assert_eq!(len, 4);
        let mut v = vec![0u32; len];
        assert_eq!(cw_rank_vector(g, v.as_mut_ptr(), v.len(), &mut len), CwStatus::Ok);
        assert_eq!(v, [2, 2, 2, 1]);

        let mut top = CwTop::Top0;
        assert_eq!(cw_top_class(g, &mut top), CwStatus::Ok);
        assert_eq!(top, CwTop::Top1);

        let (mut a, mut b) = (0, 0);
        assert_eq!(cw_capture_time_rank(g, &mut a), CwStatus::Ok);
        assert_eq!(cw_capture_time_game(g, &mut b), CwStatus::Ok);
        assert_eq!((a, b), (3, 3));

        cw_graph_free(g);
    }
}

#[test]
fn from_edges_and_labels() {
    // P4 as 0-based pairs, with a loop that is dropped.
    let edges = [0u32, 1, 1, 2, 2, 3, 2, 2];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(cw_graph_from_edges(4, edges.as_ptr(), 4, &mut g), CwStatus::Ok);
        assert_eq!(cw_graph_edge_count(g), 3);
        let mut label = 0;
        assert_eq!(cw_graph_label(g, 3, &mut label), CwStatus::Ok);
        assert_eq!(label, 4);
        assert_eq!(cw_graph_label(g, 4, &mut label), CwStatus::Range);
        let mut top = CwTop::Top1;
        assert_eq!(cw_top_class(g, &mut top), CwStatus::Ok);
        assert_eq!(top, CwTop::Top0);
        let mut t = 0;
        assert_eq!(cw_capture_time_rank(g, &mut t), CwStatus::Ok);
        assert_eq!(t, 2);
        cw_graph_free(g);
    }
}

#[test]
fn robber_win_graphs() {
    let g = parse("(1,2) (2,3) (3,4) (4,1)");
    unsafe {
        let mut ranks = [0u32; 4];
        assert_eq!(cw_corner_ranks(g, ranks.as_mut_ptr(), 4), CwStatus::Ok);
        assert_eq!(ranks, [CW_INFINITE; 4]);
        let mut t = 0;
        assert_eq!(cw_capture_time_rank(g, &mut t), CwStatus::Ok);
        assert_eq!(t, CW_INFINITE);
        assert_eq!(cw_capture_time_game(g, &mut t), CwStatus::Ok);
        assert_eq!(t, CW_INFINITE);
        let mut len = 0;
        assert_eq!(cw_rank_vector(g, ptr::null_mut(), 0, &mut len), CwStatus::NotCopWin);
        let mut top = CwTop::Top0;
        assert_eq!(cw_top_class(g, &mut top), CwStatus::NotCopWin);
        assert!(last_error().contains("not cop-win"));
        cw_graph_free(g);
    }
}

#[test]
fn canonical_forms_agree_on_isomorphic_inputs() {
    let a = parse("(1,2) (2,3) (3,4) (1,3)");
    let b = parse("(4,3) (3,2) (2,1) (4,2)");
    let c = parse("(1,2) (2,3) (3,4) (4,1)");
    let form = |g| unsafe {
        let mut need = 0;
        assert_eq!(cw_canonical_form(g, ptr::null_mut(), 0, &mut need), CwStatus::BufferTooSmall);
        let mut buf = vec![0 as std::ffi::c_char; need];
        assert_eq!(cw_canonical_form(g, buf.as_mut_ptr(), need, &mut need), CwStatus::Ok);
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    };
    assert_eq!(form(a), form(b));
    assert_ne!(form(a), form(c));
    assert!(form(a).starts_with("4:"));
    unsafe {
        cw_graph_free(a);
        cw_graph_free(b);
        cw_graph_free(c);
    }
}

#[test]
fn errors() {
    let mut g = ptr::null_mut();
    unsafe {
        let bad = CString::new("(1,2) (2,").unwrap();
        assert_eq!(cw_graph_parse(bad.as_ptr(), &mut g), CwStatus::Parse);
        assert!(g.is_null());
        assert!(last_error().contains("line 1"));

        assert_eq!(cw_graph_parse(ptr::null(), &mut g), CwStatus::NullPointer);
        let edges = [0u32, 5];
        assert_eq!(cw_graph_from_edges(3, edges.as_ptr(), 1, &mut g), CwStatus::Range);
        assert_eq!(cw_graph_from_edges(65, ptr::null(), 0, &mut g), CwStatus::Range);
        assert_eq!(cw_graph_from_edges(3, ptr::null(), 1, &mut g), CwStatus::NullPointer);

        let mut x = 0;
        assert_eq!(cw_graph_rank(ptr::null(), &mut x), CwStatus::NullPointer);
        assert_eq!(cw_graph_order(ptr::null()), 0);
        cw_graph_free(ptr::null_mut());

        let h = parse(H7);
        let mut ranks = [0u32; 6];
        assert_eq!(cw_corner_ranks(h, ranks.as_mut_ptr(), 6), CwStatus::BufferTooSmall);
        cw_graph_free(h);

        let bytes = [0xffu8, 0];
        assert_eq!(cw_graph_parse(bytes.as_ptr().cast(), &mut g), CwStatus::Utf8);
    }
    let s = unsafe { CStr::from_ptr(cw_status_str(CwStatus::NotCopWin)) };
    assert_eq!(s.to_str().unwrap(), "graph is not cop-win");
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/copwin.h")).unwrap();
    for f in [
        "cw_graph_from_edges",
        "cw_graph_parse",
        "cw_graph_free",
        "cw_corner_ranks",
        "cw_rank_vector",
        "cw_top_class",
        "cw_capture_time_rank",
        "cw_capture_time_game",
        "cw_canonical_form",
        "cw_last_error",
        "typedef struct CwGraph CwGraph;",
    ] {
        assert!(header.contains(f), "{f} missing from copwin.h");
    }
}
