//! The standard 100 random 15-puzzle instances in plain-text form: one
//! instance per line, 16 whitespace-separated numbers giving the tile at
//! each position, 0 for the blank.

use std::path::Path;

use thiserror::Error;

use crate::domains::tiles::{TileError, TilePuzzleState};

const KORF100: &str = include_str!("../../data/korf100.txt");

#[derive(Debug, Error)]
pub enum KorfError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read instance file: {0}")]
    Io(#[from] std::io::Error),
}

/// Parses an instance file. Blank lines and lines starting with `#` are
/// skipped; `line` numbers in errors are 1-based.
pub fn parse_korf_instances(text: &str) -> Result<Vec<TilePuzzleState>, KorfError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| KorfError::Parse { line: i + 1, message };
        let cells = line
            .split_whitespace()
            .map(|tok| tok.parse::<u8>().map_err(|_| err(format!("not a tile number: {tok:?}"))))
            .collect::<Result<Vec<u8>, _>>()?;
        if cells.len() != 16 {
            return Err(err(format!("expected 16 numbers, found {}", cells.len())));
        }
        let state = TilePuzzleState::from_cells(&cells).map_err(|e: TileError| err(e.to_string()))?;
        out.push(state);
    }
    Ok(out)
}

pub fn load_korf_instances(path: impl AsRef<Path>) -> Result<Vec<TilePuzzleState>, KorfError> {
    parse_korf_instances(&std::fs::read_to_string(path)?)
}

/// The bundled instance set, in its usual order (instance `i` at index
/// `i - 1`).
pub fn korf100() -> Vec<TilePuzzleState> {
    parse_korf_instances(KORF100).expect("bundled instance file is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Cost;
    use crate::domains::tiles::{is_solvable, stp_space, tile_cost};
    use crate::space::StateSpace;

    #[test]
    fn bundled_set() {
        let all = korf100();
        assert_eq!(all.len(), 100);
        for s in &all {
            assert!(is_solvable(4, s, 16));
        }
        assert_eq!(all[0].cells()[..], [14, 13, 15, 7, 11, 12, 9, 5, 6, 0, 2, 1, 4, 8, 10, 3]);
        assert_eq!(all[99].cells()[..], [11, 4, 0, 8, 6, 10, 5, 13, 12, 7, 14, 3, 1, 2, 9, 15]);
    }

    #[test]
    fn unit_manhattan_distances_of_first_instances() {
        let md: Vec<usize> = korf100()[..10]
            .iter()
            .map(|s| {
                s.cells()
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| t != 0)
                    .map(|(p, &t)| (p / 4).abs_diff(t as usize / 4) + (p % 4).abs_diff(t as usize % 4))
                    .sum()
            })
            .collect();
        assert_eq!(md, vec![41, 43, 41, 42, 42, 36, 30, 32, 32, 43]);
    }

    #[test]
    fn weighted_h_of_first_instance() {
        let res = 1_000_000;
        let s = korf100()[0];
        let p = stp_space(s, res).unwrap();
        let mut expected = Cost::ZERO;
        for (pos, &t) in s.cells().iter().enumerate() {
            if t == 0 {
                continue;
            }
            let d = (pos / 4).abs_diff(t as usize / 4) + (pos % 4).abs_diff(t as usize % 4);
            for _ in 0..d {
                expected = expected + tile_cost(t, res).unwrap();
            }
        }
        assert_eq!(p.h(&s), expected);
        assert!(p.h(&s) > Cost::ZERO);
    }

    #[test]
    fn identity_line_is_the_goal() {
        let states = parse_korf_instances("0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n").unwrap();
        let p = stp_space(states[0], 1).unwrap();
        assert!(p.is_goal(&states[0]));
    }

    #[test]
    fn errors_name_the_line() {
        let text = "0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15\n\n0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 14\n";
        match parse_korf_instances(text) {
            Err(KorfError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_korf_instances("1 2 x"), Err(KorfError::Parse { line: 1, .. })));
        assert!(matches!(parse_korf_instances("1 2 3"), Err(KorfError::Parse { line: 1, .. })));
        assert!(matches!(load_korf_instances("/nonexistent/korf.txt"), Err(KorfError::Io(_))));
    }
}
