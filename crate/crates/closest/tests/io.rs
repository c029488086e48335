use closest::io::{
    generate_instance, parse_instance, read_bench_csv, write_bench_csv, write_instance, BenchRow, Format, FormatHint,
    InstanceDoc, BENCH_HEADER,
};
use closest_core::{Alphabet, Heuristic, Status};
use proptest::prelude::*;

fn doc_strategy() -> impl Strategy<Value = InstanceDoc> {
    (1usize..6, 1usize..20, any::<bool>()).prop_flat_map(|(n, l, fasta)| {
        let strings = prop::collection::vec(prop::collection::vec(prop::sample::select(vec!['A', 'C', 'G', 'T']), l), n)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().collect::<String>()).collect::<Vec<_>>());
        let names = prop::collection::vec("[a-zA-Z0-9_][a-zA-Z0-9_ |.-]{0,12}[a-zA-Z0-9_]", n);
        (strings, names).prop_map(move |(strings, names)| InstanceDoc {
            format: if fasta { Format::Fasta } else { Format::Plain },
            names: fasta.then_some(names),
            strings,
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_write(doc in doc_strategy()) {
        let text = write_instance(&doc);
        prop_assert_eq!(parse_instance(&text, FormatHint::Auto, &Alphabet::dna()).unwrap(), doc);
    }

    #[test]
    fn fasta_line_wrapping_is_ignored(doc in doc_strategy(), width in 1usize..7) {
        let mut text = String::new();
        for (i, s) in doc.strings.iter().enumerate() {
            text.push_str(&format!(">r{i}\n"));
            for chunk in s.as_bytes().chunks(width) {
                text.push_str(&String::from_utf8_lossy(chunk).to_lowercase());
                text.push('\n');
            }
        }
        let parsed = parse_instance(&text, FormatHint::Fasta, &Alphabet::dna()).unwrap();
        prop_assert_eq!(parsed.strings, doc.strings);
    }
}

#[test]
fn distinct_seeds_give_distinct_instances() {
    let a = Alphabet::dna();
    let docs: Vec<_> = (0..50).map(|s| generate_instance(4, 12, &a, s).strings).collect();
    for i in 0..docs.len() {
        for j in i + 1..docs.len() {
            assert_ne!(docs[i], docs[j], "seeds {i} and {j}");
        }
    }
}

#[test]
fn custom_alphabet() {
    let a = Alphabet::new("ACDEFGHIKLMNPQRSTVWY".chars()).unwrap();
    let d = generate_instance(3, 30, &a, 1);
    assert!(d.strings.iter().all(|s| s.chars().all(|c| a.encode(c).is_some())));
    assert!(parse_instance("MKV\nMKW\n", FormatHint::Plain, &a).is_ok());
}

fn row(id: &str, trace: Vec<f64>) -> BenchRow {
    BenchRow {
        instance_id: id.into(),
        n: 3,
        l: 10,
        seed: 7,
        heuristic: Heuristic::Sdf,
        mode: "certified".into(),
        status: Status::Solved,
        best_d: Some(4),
        nodes: 123,
        wall_ms: 1.5,
        incumbent_ms: trace,
    }
}

#[test]
fn bench_csv_shape() {
    let mut buf = Vec::new();
    write_bench_csv(&mut buf, &[]).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text, format!("{}\n", BENCH_HEADER.join(",")));

    let mut buf = Vec::new();
    write_bench_csv(&mut buf, &[row("x", vec![0.5])]).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 2);
}

#[test]
fn bench_csv_round_trip() {
    let rows = vec![
        row("plain", vec![0.125, 0.5, 2.0]),
        row("needs,\"quoting\"", vec![]),
        BenchRow {
            best_d: None,
            status: Status::ResourceLimit,
            ..row("limited", vec![1.0])
        },
    ];
    let mut buf = Vec::new();
    write_bench_csv(&mut buf, &rows).unwrap();
    assert_eq!(read_bench_csv(&buf[..]).unwrap(), rows);
}
