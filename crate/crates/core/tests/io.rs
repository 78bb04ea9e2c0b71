use proptest::prelude::*;
use qpoly::io::{self, TableFile};
use qpoly::poly::SetFunction;
use qpoly::{Chain, DiscreteFunction, Elem, UnaryMap};

fn function() -> impl Strategy<Value = DiscreteFunction> {
    (2usize..6, 1usize..4).prop_flat_map(|(m, n)| {
        prop::collection::vec(0..m as Elem, m.pow(n as u32))
            .prop_map(move |t| DiscreteFunction::new(Chain::new(m).unwrap(), n, t).unwrap())
    })
}

proptest! {
    #[test]
    fn function_round_trip(f in function()) {
        let text = io::format_function(&f);
        prop_assert_eq!(io::parse_function(&text).unwrap(), f.clone());
        prop_assert_eq!(io::parse_any(&text).unwrap(), TableFile::Function(f));
    }

    #[test]
    fn reflowed_values_parse(f in function(), width in 1usize..7) {
        let body: Vec<String> = f.table().chunks(width)
            .map(|c| c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("  "))
            .collect();
        let text = format!("qpf 1\nchain {} arity {}\n{}\n", f.chain().size(), f.arity(), body.join("\n"));
        prop_assert_eq!(io::parse_function(&text).unwrap(), f);
    }

    #[test]
    fn unary_round_trip(m in 2usize..8, seed in any::<u64>()) {
        let chain = Chain::new(m).unwrap();
        let values: Vec<Elem> = (0..m).map(|i| ((seed >> (i % 60)) % m as u64) as Elem).collect();
        let phi = UnaryMap::new(chain, values).unwrap();
        prop_assert_eq!(io::parse_unary_map(&io::format_unary_map(&phi)).unwrap(), phi);
    }

    #[test]
    fn truncated_tables_are_rejected(f in function()) {
        let text = io::format_function(&f);
        let cut = text.trim_end().rsplit_once(' ').map(|(head, _)| head.to_string());
        if let Some(cut) = cut {
            prop_assert!(io::parse_function(&cut).is_err());
        }
    }
}

#[test]
fn set_function_round_trip() {
    let chain = Chain::new(3).unwrap();
    for alpha in SetFunction::all_isotone(chain, 2).unwrap() {
        let text = io::format_set_function(&alpha);
        assert_eq!(io::parse_set_function(&text).unwrap(), alpha.clone());
        assert_eq!(io::parse_any(&text).unwrap(), TableFile::SetFunction(alpha));
    }
}

#[test]
fn malformed_inputs() {
    for text in [
        "",
        "qpf 2\nchain 2 arity 1\n0 1\n",
        "qpf 1\nchain 2 arity 1\n0 2\n",
        "qpf 1\nchain 2 arity 1\n0 1 1\n",
        "qpf 1\nchain 1 arity 1\n0\n",
        "qpf 1\narity 1 chain 2\n0 1\n",
        "qpf 1\nchain 2 arity 1\n0 x\n",
        "qxx 1\nchain 2\n0 1\n",
    ] {
        assert!(io::parse_any(text).is_err(), "{text:?}");
    }
}
