use qpoly::verify::{self, Mode, TheoremId, Universe};

#[test]
fn every_theorem_holds_on_seeded_samples() {
    for (m, n) in [(4, 2), (2, 3)] {
        for u in [Universe::sample(m, n, 1500, 31), Universe::sample_nondecreasing(m, n, 500, 32)] {
            for &t in TheoremId::ALL {
                if t == TheoremId::BooleanHorizontal && m != 2 {
                    continue;
                }
                let report = verify::verify(t, &u).unwrap();
                assert!(report.holds(), "{} at ({m},{n}) {}: {}", t.name(), u.mode.name(), report.summary());
            }
        }
    }
}

#[test]
fn every_theorem_holds_exhaustively_on_small_chains() {
    for (m, n) in [(2, 1), (3, 1), (4, 1), (2, 2)] {
        for &t in TheoremId::ALL {
            if t == TheoremId::BooleanHorizontal && m != 2 {
                continue;
            }
            let report = verify::verify(t, &Universe::exhaustive(m, n)).unwrap();
            assert!(report.holds(), "{} at ({m},{n}): {}", t.name(), report.summary());
            assert_eq!(report.functions_checked, (m as u64).pow(m.pow(n as u32) as u32));
        }
    }
}

#[test]
fn nondecreasing_universe_matches_filter() {
    let all: Vec<_> = verify::enumerate_functions(&Universe::exhaustive(3, 2)).unwrap().collect();
    let nd: Vec<_> = verify::enumerate_functions(&Universe::exhaustive_nondecreasing(3, 2)).unwrap().collect();
    let filtered: Vec<_> = all.into_iter().filter(|f| f.is_nondecreasing()).collect();
    assert_eq!(nd, filtered);
    let u = Universe::exhaustive_nondecreasing(3, 1);
    assert_eq!(u.mode, Mode::ExhaustiveNondecreasing);
    assert_eq!(verify::enumerate_functions(&u).unwrap().count(), 10);
}

#[test]
fn samples_are_reproducible() {
    let u = Universe::sample(4, 2, 50, 99);
    let a: Vec<_> = verify::enumerate_functions(&u).unwrap().collect();
    let b: Vec<_> = verify::enumerate_functions(&u).unwrap().collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), 50);
}
