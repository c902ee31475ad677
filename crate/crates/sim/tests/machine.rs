mod common;

use common::*;
use dprt_core::{partial_dprt, Image, StripPlan};
use dprt_sim::{add_partial_result, flip, Access, LoadMode, MemModel, SfdprtMachine};

fn loaded(img: &Image, h: usize) -> SfdprtMachine {
    let mut m = SfdprtMachine::new(img.n(), img.bits(), h).unwrap();
    m.load_shifted_image(img).unwrap();
    m
}

fn column_read(mem: &MemModel, d: usize) -> Vec<u64> {
    let mut mem = mem.clone();
    mem.read(Access::Column(d))
}

#[test]
fn shifted_image_cycle_count() {
    let img = random_image(&mut rng(1), 7, 8);
    let mut m = SfdprtMachine::new(7, 8, 2).unwrap();
    assert_eq!(m.load_shifted_image(&img).unwrap(), 19);
    assert!(m.load_shifted_image(&img).is_err());
}

#[test]
fn column_read_returns_image_column() {
    let m = loaded(&example3(), 2);
    assert_eq!(column_read(m.mem_in(), 0), vec![1, 4, 7]);
    for n in [5usize, 7, 11, 13] {
        for h in 2..=n {
            let img = random_image(&mut rng((n * 100 + h) as u64), n, 8);
            let m = loaded(&img, h);
            for d in 0..n {
                let expected: Vec<u64> = (0..n).map(|i| img.get((d + i) % n, d)).collect();
                assert_eq!(column_read(m.mem_in(), d), expected, "n={n} h={h} d={d}");
            }
        }
    }
}

#[test]
fn delta_image_stays_a_single_word() {
    for (i, j) in [(0, 0), (3, 5), (6, 1)] {
        let img = Image::from_fn(7, 8, |a, b| u64::from((a, b) == (i, j)) * 9).unwrap();
        let m = loaded(&img, 3);
        let mem = m.mem_in();
        let nonzero: Vec<(usize, usize)> = (0..7)
            .flat_map(|b| (0..7).map(move |a| (b, a)))
            .filter(|&(b, a)| mem.word(b, a) != 0)
            .collect();
        assert_eq!(nonzero, vec![((i + 7 - j) % 7, i)]);
    }
}

#[test]
fn row_mode_strip_holds_image_rows() {
    let mut m = loaded(&example3(), 2);
    assert_eq!(m.load_strip(0, LoadMode::Row).unwrap(), 3);
    assert_eq!(m.registers().rows(), &[vec![1, 2, 3], vec![4, 5, 6]]);
    m.load_strip(1, LoadMode::Row).unwrap();
    assert_eq!(m.registers().rows(), &[vec![7, 8, 9], vec![0, 0, 0]]);
    assert!(m.load_strip(2, LoadMode::Row).is_err());
}

#[test]
fn column_mode_strip_holds_reversed_columns() {
    let img = example3();
    let mut m = loaded(&img, 2);
    m.load_strip(0, LoadMode::Column).unwrap();
    // row a holds column a with rows in reversed periodic order
    for a in 0..2 {
        let expected: Vec<u64> = (0..3).map(|j| img.get((3 - j) % 3, a)).collect();
        assert_eq!(m.registers().row(a), expected.as_slice());
    }
}

#[test]
fn strip_steps_emit_partial_projections() {
    for (n, h) in [(3usize, 2usize), (7, 3), (11, 4), (13, 13)] {
        let img = random_image(&mut rng(n as u64), n, 8);
        let plan = StripPlan::new(n, h).unwrap();
        let mut m = loaded(&img, h);
        for r in 0..plan.strips() {
            m.load_strip(r, LoadMode::Row).unwrap();
            for k in 0..n {
                m.step_projection(k).unwrap();
            }
        }
        m.flush();
        for r in 0..plan.strips() {
            let want = partial_dprt(&img, &plan, r).unwrap();
            let got: Vec<_> = m.emitted().iter().filter(|p| p.strip == r).collect();
            assert_eq!(got.len(), n);
            for (k, p) in got.iter().enumerate() {
                assert_eq!(p.direction, k);
                assert_eq!(p.sums.as_slice(), want.projection(k), "n={n} h={h} r={r} k={k}");
            }
        }
    }
}

#[test]
fn first_capture_matches_partial_column_sums() {
    let img = random_image(&mut rng(2), 7, 6);
    let plan = StripPlan::new(7, 3).unwrap();
    let mut m = loaded(&img, 3);
    m.load_strip(2, LoadMode::Row).unwrap();
    m.step_projection(0).unwrap();
    m.flush();
    let want = partial_dprt(&img, &plan, 2).unwrap();
    assert_eq!(m.emitted()[0].sums.as_slice(), want.projection(0));
}

#[test]
fn saturated_two_row_strip() {
    let img = Image::constant(5, 8, 255).unwrap();
    let mut m = loaded(&img, 2);
    m.load_strip(0, LoadMode::Row).unwrap();
    m.step_projection(0).unwrap();
    m.flush();
    assert_eq!(m.emitted()[0].sums, vec![510; 5]);
}

#[test]
fn steps_need_a_row_mode_strip() {
    let mut m = loaded(&example3(), 2);
    assert!(m.step_projection(0).is_err());
    m.load_strip(0, LoadMode::Row).unwrap();
    assert!(m.step_projection(3).is_err());
}

#[test]
fn partial_results_accumulate() {
    let mut mem = MemModel::with_depth(3, 4, 8);
    assert_eq!(add_partial_result(&mut mem, 1, &[1, 2, 3]), vec![1, 2, 3]);
    mem.clock();
    assert_eq!(add_partial_result(&mut mem, 1, &[10, 10, 10]), vec![11, 12, 13]);
    mem.clock();
    assert_eq!(add_partial_result(&mut mem, 3, &[1, 2, 3]), vec![1, 3, 2]);
    mem.clock();
    assert_eq!(add_partial_result(&mut mem, 3, &[5, 4, 4]), flip(&[6, 6, 7]));
    mem.clock();
    // a row equal to its own flip is unaffected by the flip
    let mut mem = MemModel::with_depth(5, 6, 8);
    assert_eq!(add_partial_result(&mut mem, 5, &[9, 1, 2, 2, 1]), vec![9, 1, 2, 2, 1]);
}

#[test]
fn both_strip_partials_give_the_full_transform() {
    let img = example3();
    let run = dprt_sim::run_sfdprt(&img, 2).unwrap();
    assert_eq!(
        run.output.values(),
        &[12, 15, 18, 15, 15, 15, 15, 15, 15, 6, 15, 24]
    );
}
