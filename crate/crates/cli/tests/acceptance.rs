//! Acceptance report: one PASS/FAIL line per criterion, with pinned time
//! bounds. Exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use ncbruhat::bijections::{
    diagonal_map, diagonal_word, equivalence_mismatches, vertical_map, vertical_word,
};
use ncbruhat::general::{
    cycle_standard_form, general_vector, parse_coxeter_word, phi, standard_form_general,
    CoxeterElement,
};
use ncbruhat::noncrossing::{enumerate_nc, NoncrossingPartition};
use ncbruhat::nonnesting::{enumerate_ideals, ideal_of_antichain, Root};
use ncbruhat::perm::{Permutation, SWord};
use ncbruhat::type_b::{enumerate_ideals_b, enumerate_pc_b};
use ncbruhat::vectors::enumerate_vertical_vectors;
use ncbruhat::verify::{binomial, catalan, default_rank, narayana_printed, nc_rank_census, Check};

type Outcome = Result<String, String>;

/// Number, name, time bound in seconds, and the check itself.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(check: Check, n: usize) -> Outcome {
    let v = check.run(n).map_err(|e| e.to_string())?;
    if v.passed {
        Ok(format!(
            "{} n=1..{n}, {} findings",
            check.name(),
            v.findings.len()
        ))
    } else {
        Err(format!(
            "{}: {}",
            check.name(),
            v.counterexample.unwrap_or_else(|| v.findings.join("; "))
        ))
    }
}

fn counting() -> Outcome {
    for n in 1..=8 {
        let want = catalan(n + 1);
        let got = [
            enumerate_nc(n).len(),
            enumerate_ideals(n).len(),
            enumerate_vertical_vectors(n).len(),
        ];
        ensure(got == [want; 3], || {
            format!("n={n}: {got:?} vs Catalan {want}")
        })?;
    }
    ensure(catalan(4) == 14 && catalan(7) == 429, || {
        "Catalan table".into()
    })?;
    Ok("NC = NN = V = Catalan(n+1) for n=1..8".into())
}

fn equivalence() -> Outcome {
    for n in 1..=8 {
        let bad = equivalence_mismatches(n);
        ensure(bad.is_empty(), || {
            format!("n={n}: {} mismatches, first {}", bad.len(), bad[0])
        })?;
    }
    suite(Check::Equivalence, 8)
}

fn generated(
    n: usize,
    pairs: &[(usize, usize)],
) -> Result<ncbruhat::nonnesting::OrderIdeal, String> {
    let roots: Vec<Root> = pairs
        .iter()
        .map(|&(i, j)| Root::new(n, i, j))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ideal_of_antichain(n, &roots).map_err(|e| e.to_string())
}

fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cs).unwrap()
}

fn worked_examples() -> Outcome {
    let e = |e: ncbruhat::Error| e.to_string();

    let x = NoncrossingPartition::from_blocks(5, &[[1, 6].as_slice(), &[2, 3, 5]]).map_err(e)?;
    let word = x.standard_form();
    ensure(
        word.letters() == [2, 4, 3, 4, 5, 4, 3, 2, 1, 2, 3, 4, 5],
        || format!("standard form {word}"),
    )?;

    let p = generated(7, &[(1, 3), (2, 4), (5, 6), (6, 8)])?;
    let word = vertical_word(7, p.roots());
    ensure(word.letters() == [7, 3, 2, 1, 2, 3, 5, 6, 7], || {
        format!("vertical word {word}")
    })?;
    let image = vertical_map(&p).map_err(e)?;
    ensure(
        image.permutation() == &cycles(7, &[&[1, 4], &[5, 6, 8]]),
        || format!("vertical image {image}"),
    )?;

    let p = generated(5, &[(1, 5), (4, 6)])?;
    let word = diagonal_word(5, p.roots());
    ensure(
        word.letters() == [5, 4, 3, 2, 4, 3, 4, 1, 2, 3, 4, 5],
        || format!("diagonal word {word}"),
    )?;
    let image = diagonal_map(&p).map_err(e)?;
    ensure(
        image.permutation() == &cycles(5, &[&[2, 4], &[1, 6]]),
        || format!("diagonal image {image}"),
    )?;

    let set = |n| -> BTreeSet<Vec<usize>> {
        enumerate_vertical_vectors(n)
            .iter()
            .map(|v| v.entries().to_vec())
            .collect()
    };
    let two: BTreeSet<Vec<usize>> = [[0, 0], [1, 0], [0, 1], [1, 1], [1, 2]]
        .map(Vec::from)
        .into();
    let three: BTreeSet<Vec<usize>> = [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
        [1, 1, 1],
        [1, 2, 0],
        [0, 1, 2],
        [1, 2, 1],
        [1, 1, 2],
        [1, 2, 2],
        [1, 3, 2],
    ]
    .map(Vec::from)
    .into();
    ensure(set(2) == two && set(3) == three, || {
        "vertical vector lists".into()
    })?;

    let c = parse_coxeter_word(3, "2,1,3").map_err(e)?;
    let x = SWord::new(vec![2, 1, 3, 2]).evaluate(3).map_err(e)?;
    let word = standard_form_general(&x, &c).map_err(e)?;
    ensure(
        word.letters() == [2, 1, 2, 3, 2, 3] && !word.is_reduced(3).map_err(e)?,
        || format!("unreduced form {word}"),
    )?;
    let v = general_vector(&x, &c).map_err(e)?;
    ensure(v == [1, 3, 2], || format!("unreduced vector {v:?}"))?;

    let c = CoxeterElement::from_cycle(4, &[1, 3, 5, 4, 2]).map_err(e)?;
    let word = cycle_standard_form(&[1, 3, 5, 2], &c).map_err(e)?;
    ensure(word.letters() == [2, 4, 3, 4, 1], || {
        format!("cycle form {word}")
    })?;
    ensure(word.letter_counts(4) == [1, 1, 1, 2], || {
        format!("cycle vector {:?}", word.letter_counts(4))
    })?;

    let c = CoxeterElement::from_cycle(5, &[1, 2, 5, 6, 4, 3]).map_err(e)?;
    let y = phi(&cycles(5, &[&[2, 5], &[1, 6, 3]]), &c).map_err(e)?;
    ensure(
        y.permutation() == &cycles(5, &[&[2, 3, 5], &[1, 6]]),
        || format!("phi image {y}"),
    )?;

    Ok("standard form, vertical and diagonal images, 5 + 14 vectors, unreduced form, cycle form, phi image".into())
}

fn type_b() -> Outcome {
    for n in 1..=4 {
        let want = binomial(2 * n, n);
        let (nn, pc) = (enumerate_ideals_b(n).len(), enumerate_pc_b(n).len());
        ensure(nn == want && pc == want, || {
            format!("n={n}: |NN|={nn}, |P_c|={pc}, want {want}")
        })?;
    }
    suite(Check::TypeB, 4)
}

fn narayana() -> Outcome {
    let census = nc_rank_census(3);
    ensure(census == [1, 6, 6, 1], || format!("census {census:?}"))?;
    let printed: Vec<usize> = (0..=3).map(|k| narayana_printed(3, k)).collect();
    let v = Check::Narayana.run(3).map_err(|e| e.to_string())?;
    ensure(v.passed, || v.findings.join("; "))?;
    let flagged = v.findings.iter().any(|f| f.contains("printed closed form"));
    ensure(printed != census && flagged, || {
        format!("printed formula {printed:?} not flagged")
    })?;
    Ok(format!(
        "census {census:?}; printed closed form gives {printed:?} and is flagged"
    ))
}

fn headless_cli() -> Outcome {
    let mut failed = Vec::new();
    for check in Check::ALL {
        let out = Command::new(env!("CARGO_BIN_EXE_ncbruhat"))
            .args(["verify", check.name()])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            failed.push(format!("{} (exit {:?})", check.name(), out.status.code()));
        }
    }
    ensure(failed.is_empty(), || {
        format!("failed: {}", failed.join(", "))
    })?;
    let ranks: Vec<String> = Check::ALL
        .iter()
        .map(|&c| format!("{}={}", c.name(), default_rank(c)))
        .collect();
    Ok(format!(
        "all {} suites pass via the CLI ({})",
        Check::ALL.len(),
        ranks.join(" ")
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "counting", 10, counting),
        (2, "three maps agree", 30, equivalence),
        (3, "worked examples", 10, worked_examples),
        (4, "Bruhat, vector and ideal orders", 60, || {
            suite(Check::BruhatLattice, 6)
        }),
        (5, "cover sets", 60, || suite(Check::Covers, 5)),
        (6, "root deletion", 60, || suite(Check::Deletion, 5)),
        (7, "general Coxeter elements", 60, || suite(Check::Phi, 5)),
        (8, "type B", 60, type_b),
        (9, "Narayana census", 10, narayana),
        (10, "headless verification", 300, headless_cli),
    ];
    let mut all_passed = true;
    for (k, name, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(bound);
        let (status, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; exceeded {bound} s")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        all_passed &= status == "PASS";
        println!(
            "criterion {k:>2} {status} {name} [{:.2} s, bound {bound} s]: {detail}",
            elapsed.as_secs_f64()
        );
    }
    if !all_passed {
        std::process::exit(1);
    }
}
