use std::path::PathBuf;

use drinfeld_core::cli::{run, PairFile};

fn drinfeld(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("drinfeld").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn pair_path(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../pairs");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn temp_pair(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("drinfeld-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn torsion_command() {
    let (code, out, _) = drinfeld(&[
        "torsion",
        "--p",
        "3",
        "--rho",
        "tau^2 + T*tau + T",
        "--a",
        "T",
        "--strip",
    ]);
    assert_eq!((code, out.as_str()), (0, "y^8 + T*y^2 + T\n"));

    let (code, out, _) = drinfeld(&[
        "torsion",
        "--p",
        "2",
        "--rho",
        "tau^2 + tau + T",
        "--a",
        "T^2 + T + 1",
        "--strip",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "y^15 + (T^4 + T)*y^3 + (T^2 + T + 1)*y + T^2 + T + 1\n"
    );

    let (code, out, err) = drinfeld(&[
        "torsion",
        "--p",
        "3",
        "--rho",
        "tau^2 + T*tau + 1",
        "--a",
        "T",
        "--strip",
    ]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("a_0 must equal T"), "{err}");
}

#[test]
fn factor_command() {
    let (code, out, _) = drinfeld(&[
        "factor",
        "--p",
        "3",
        "--prime",
        "T + 1",
        "--poly",
        "y^8 + T*y^2 + T",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("8\t1\ty^8 + 2*y^2 + 2\n"), "{out}");
    assert!(out.ends_with("degrees=[8]\n"));

    let (code, out, _) = drinfeld(&[
        "factor",
        "--p",
        "3",
        "--prime",
        "T^2 + 1",
        "--poly",
        "y^8 + T*y^2 + T",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with("degrees=[2,6]\n"), "{out}");

    let (code, _, err) = drinfeld(&[
        "factor",
        "--p",
        "3",
        "--prime",
        "T^2 + 2",
        "--poly",
        "y^8 + T*y^2 + T",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("reducible"), "{err}");

    let file = temp_pair("poly.txt", "y^8 + T*y^2 + T\n");
    let at = format!("@{file}");
    let (code, out, _) = drinfeld(&["factor", "--p", "3", "--prime", "T^2 + 1", "--poly", &at]);
    assert_eq!(code, 0);
    assert!(out.ends_with("degrees=[2,6]\n"));
}

#[test]
fn split_check_on_shipped_pair() {
    let pair = pair_path("gl2_f3_deg8.pair");
    let (code, out, _) = drinfeld(&["split-check", "--pair", &pair, "--max-degree", "2"]);
    assert_eq!(code, 0, "{out}");
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with('#') && l.contains('\t'))
        .collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.contains(&"T + 1\t1\t[8]\t[8]\tequal"));
    assert!(rows.contains(&"T^2 + 1\t2\t[2,6]\t[2,6]\tequal"));
    assert!(out.starts_with("# pair=gl2_f3_deg8 primes=exhaustive(max_degree=2) seed=0\n"));
    assert!(out.ends_with("overall=consistent\n"));
}

#[test]
fn split_check_identical_and_corrupted() {
    let same = temp_pair(
        "same.pair",
        "p = 3\nf = y^8 + T*y^2 + T\ng = y^8 + T*y^2 + T\n",
    );
    let (code, out, _) = drinfeld(&["split-check", "--pair", &same, "--max-degree", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("unequal=0"));
    assert!(!out.contains("UNEQUAL"));

    let bad = temp_pair(
        "corrupt.pair",
        "p = 3\nf = y^8 + T*y^2 + T\ng = y^8 + T*y^2 + T + 1\n",
    );
    let (code, out, _) = drinfeld(&["split-check", "--pair", &bad, "--max-degree", "2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("UNEQUAL"));
    assert!(out.ends_with("overall=refuted\n"));
}

#[test]
fn split_check_flag_errors() {
    let pair = pair_path("gl2_f3_deg8.pair");
    let (code, _, _) = drinfeld(&[
        "split-check",
        "--pair",
        &pair,
        "--max-degree",
        "2",
        "--samples",
        "3",
        "--degree",
        "2",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = drinfeld(&["split-check", "--pair", &pair]);
    assert_eq!(code, 2);
    let (code, _, err) = drinfeld(&[
        "split-check",
        "--pair",
        "/nonexistent.pair",
        "--max-degree",
        "1",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot read"));
}

#[test]
fn sampled_split_check_is_reproducible() {
    let pair = pair_path("gl2_f3_deg8.pair");
    let args = [
        "split-check",
        "--pair",
        &pair,
        "--samples",
        "4",
        "--degree",
        "3",
        "--seed",
        "11",
    ];
    let (code, first, _) = drinfeld(&args);
    assert_eq!(code, 0);
    assert_eq!(drinfeld(&args).1, first);
}

#[test]
fn gassmann_command() {
    let (code, out, _) = drinfeld(&[
        "gassmann",
        "--p",
        "3",
        "--n",
        "2",
        "--construction",
        "example1",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with("gassmann=true nontrivial=true index=8\n"));

    let (code, out, _) = drinfeld(&[
        "gassmann",
        "--p",
        "2",
        "--ext-modulus",
        "x^2+x+1",
        "--n",
        "2",
        "--construction",
        "stabilizers",
        "--scalar-subgroup",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.ends_with("gassmann=true nontrivial=true index=15\n"));

    let (code, out, _) = drinfeld(&[
        "gassmann",
        "--p",
        "2",
        "--n",
        "2",
        "--construction",
        "stabilizers",
        "--scalar-subgroup",
        "1",
    ]);
    assert_eq!(code, 1);
    assert!(out.ends_with("gassmann=true nontrivial=false index=3\n"));

    let (code, out, _) = drinfeld(&[
        "gassmann",
        "--p",
        "5",
        "--n",
        "2",
        "--construction",
        "stabilizers",
        "--scalar-subgroup",
        "4",
    ]);
    assert!(out.ends_with("index=12\n"), "{out}");
    assert!(code == 0 || code == 1);

    let (code, _, err) = drinfeld(&[
        "gassmann",
        "--p",
        "5",
        "--n",
        "4",
        "--construction",
        "stabilizers",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"), "{err}");

    let (code, _, _) = drinfeld(&[
        "gassmann",
        "--p",
        "2",
        "--n",
        "2",
        "--construction",
        "example1",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn primes_command() {
    let (code, out, _) = drinfeld(&["primes", "--p", "3", "--degree", "1"]);
    assert_eq!((code, out.as_str()), (0, "T\nT + 1\nT + 2\ncount=3\n"));
    let (_, out, _) = drinfeld(&["primes", "--p", "3", "--degree", "2"]);
    assert!(out.ends_with("count=3\n"));
    let (_, out, _) = drinfeld(&["primes", "--p", "2", "--degree", "4"]);
    assert!(out.ends_with("count=3\n"));
    let (_, out, _) = drinfeld(&[
        "primes",
        "--p",
        "2",
        "--ext-modulus",
        "x^2 + x + 1",
        "--degree",
        "2",
    ]);
    assert!(out.ends_with("count=6\n"), "{out}");
    let (code, _, _) = drinfeld(&["primes", "--p", "4", "--degree", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn shipped_pairs_carry_generated_torsion_polynomials() {
    let cases = [
        ("gl2_f3_deg8.pair", "3", "tau^2 + T*tau + T", "T"),
        ("gl2_f4_deg15.pair", "2", "tau^2 + tau + T", "T^2 + T + 1"),
    ];
    for (file, p, rho, a) in cases {
        let (code, torsion, _) =
            drinfeld(&["torsion", "--p", p, "--rho", rho, "--a", a, "--strip"]);
        assert_eq!(code, 0);
        let pair = PairFile::load(pair_path(file).as_ref()).unwrap();
        assert_eq!(pair.f, torsion.trim_end());
        assert_eq!(pair.p.to_string(), p);

        let generated = temp_pair(
            &format!("generated-{file}"),
            &format!("p = {p}\nf = {}\ng = {}\n", torsion.trim_end(), pair.g),
        );
        let (code, out, _) = drinfeld(&["split-check", "--pair", &generated, "--max-degree", "2"]);
        assert_eq!(code, 0, "{out}");
    }
}

#[test]
fn pair_file_format() {
    let pair = PairFile::parse("# c\n\np=3\n  f = y^2 + T \ng=y^2+1\ndescription = two\n").unwrap();
    assert_eq!(pair.p, 3);
    assert_eq!(pair.f, "y^2 + T");
    assert_eq!(pair.g, "y^2+1");
    assert_eq!(pair.description, "two");
    assert!(PairFile::parse("p=3\nf=y\n").is_err());
    assert!(PairFile::parse("p=3\nf=y\ng=y\nh=y\n").is_err());
    assert!(PairFile::parse("p=3\np=3\nf=y\ng=y\n").is_err());
    assert!(PairFile::parse("p=3\nf y\ng=y\n").is_err());
    assert!(PairFile::parse("p=x\nf=y\ng=y\n").is_err());
}

#[test]
fn help_and_usage() {
    let (code, out, _) = drinfeld(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("split-check"));
    let (code, _, err) = drinfeld(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}
