//! Sliding-tile puzzles where moving tile `t` costs `1 + 1/(1+t)`.

use std::fmt;

use thiserror::Error;

use crate::baselines::RawCosts;
use crate::cost::{discretize_ratio, Cost, CostError};
use crate::space::StateSpace;

pub const MAX_CELLS: usize = 16;

#[derive(Debug, Error, PartialEq)]
pub enum TileError {
    #[error("board {0}x{1} is not supported (need 2..=4 columns and rows, at most 16 cells)")]
    BadShape(usize, usize),
    #[error("expected {expected} cells, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("cells are not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("instance cannot reach the goal (wrong permutation parity)")]
    Unsolvable,
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// A board position: `cells[p]` is the tile at position `p`, 0 is the blank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TilePuzzleState {
    cells: [u8; MAX_CELLS],
    blank: u8,
}

impl TilePuzzleState {
    /// Validates that `cells` is a permutation of `0..cells.len()`.
    pub fn from_cells(cells: &[u8]) -> Result<Self, TileError> {
        let n = cells.len();
        if n > MAX_CELLS {
            return Err(TileError::WrongLength {
                expected: MAX_CELLS,
                found: n,
            });
        }
        let mut seen = [false; MAX_CELLS];
        for &c in cells {
            if c as usize >= n || seen[c as usize] {
                return Err(TileError::NotAPermutation(n));
            }
            seen[c as usize] = true;
        }
        let mut state = TilePuzzleState {
            cells: [0; MAX_CELLS],
            blank: 0,
        };
        state.cells[..n].copy_from_slice(cells);
        state.blank = cells.iter().position(|&c| c == 0).expect("permutation has a blank") as u8;
        Ok(state)
    }

    /// The goal layout: blank in position 0, tile `i` in position `i`.
    pub fn goal(n_cells: usize) -> Self {
        let cells: Vec<u8> = (0..n_cells as u8).collect();
        TilePuzzleState::from_cells(&cells).expect("identity is a permutation")
    }

    pub fn cells(&self) -> &[u8; MAX_CELLS] {
        &self.cells
    }

    pub fn blank(&self) -> usize {
        self.blank as usize
    }
}

impl fmt::Debug for TilePuzzleState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tiles{:?}", &self.cells)
    }
}

/// Direction the blank moves in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Up,
    Left,
    Right,
    Down,
}

impl Dir {
    pub fn opposite(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TileMove {
    pub tile: u8,
    pub dir: Dir,
}

/// Weighted sliding-tile puzzle.
///
/// Successors move the blank Up, Left, Right, Down, in that order. The
/// heuristic is the Manhattan distance of every tile weighted by that tile's
/// move cost, which is admissible and consistent.
#[derive(Debug, Clone)]
pub struct TilePuzzle {
    width: usize,
    height: usize,
    init: TilePuzzleState,
    resolution: u64,
    tile_cost: [Cost; MAX_CELLS],
    // weighted[t][p]: cost of tile t's Manhattan distance from position p.
    weighted: [[u64; MAX_CELLS]; MAX_CELLS],
    raw_weighted: [[f64; MAX_CELLS]; MAX_CELLS],
}

/// Permutation parity must match the parity of the blank's distance from
/// its home square, because every move is one transposition.
pub fn is_solvable(width: usize, state: &TilePuzzleState, n_cells: usize) -> bool {
    let cells = &state.cells[..n_cells];
    let mut visited = [false; MAX_CELLS];
    let mut transpositions = 0;
    for start in 0..n_cells {
        let mut len = 0;
        let mut p = start;
        while !visited[p] {
            visited[p] = true;
            p = cells[p] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    let b = state.blank();
    let blank_distance = b / width + b % width;
    transpositions % 2 == blank_distance % 2
}

/// Integer cost of moving `tile`.
pub fn tile_cost(tile: u8, resolution: u64) -> Result<Cost, CostError> {
    discretize_ratio(tile as u64 + 2, tile as u64 + 1, resolution)
}

impl TilePuzzle {
    pub fn new(width: usize, height: usize, init: TilePuzzleState, resolution: u64) -> Result<Self, TileError> {
        if !(2..=4).contains(&width) || !(2..=4).contains(&height) || width * height > MAX_CELLS {
            return Err(TileError::BadShape(width, height));
        }
        let n = width * height;
        if init.cells[n..].iter().any(|&c| c != 0) || init.cells[..n].iter().any(|&c| c as usize >= n) {
            return Err(TileError::NotAPermutation(n));
        }
        if !is_solvable(width, &init, n) {
            return Err(TileError::Unsolvable);
        }
        let mut tile_costs = [Cost::ZERO; MAX_CELLS];
        let mut weighted = [[0u64; MAX_CELLS]; MAX_CELLS];
        let mut raw_weighted = [[0f64; MAX_CELLS]; MAX_CELLS];
        for t in 1..n {
            tile_costs[t] = tile_cost(t as u8, resolution)?;
            let raw = 1.0 + 1.0 / (1.0 + t as f64);
            for p in 0..n {
                let d = (p / width).abs_diff(t / width) + (p % width).abs_diff(t % width);
                weighted[t][p] = d as u64 * tile_costs[t].get();
                raw_weighted[t][p] = d as f64 * raw;
            }
        }
        Ok(TilePuzzle {
            width,
            height,
            init,
            resolution,
            tile_cost: tile_costs,
            weighted,
            raw_weighted,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn resolution(&self) -> u64 {
        self.resolution
    }

    fn n_cells(&self) -> usize {
        self.width * self.height
    }

    /// Every layout of this board size that can reach the goal.
    pub fn all_solvable_states(&self) -> Vec<TilePuzzleState> {
        let n = self.n_cells();
        let mut cells: Vec<u8> = (0..n as u8).collect();
        let mut out = Vec::new();
        permute(&mut cells, 0, &mut |c| {
            let s = TilePuzzleState::from_cells(c).expect("permutation");
            if is_solvable(self.width, &s, n) {
                out.push(s);
            }
        });
        out
    }

    /// Same puzzle started from `init`.
    pub fn with_init(&self, init: TilePuzzleState) -> Result<Self, TileError> {
        TilePuzzle::new(self.width, self.height, init, self.resolution)
    }
}

fn permute(cells: &mut Vec<u8>, k: usize, visit: &mut impl FnMut(&[u8])) {
    if k == cells.len() {
        visit(cells);
        return;
    }
    for i in k..cells.len() {
        cells.swap(k, i);
        permute(cells, k + 1, visit);
        cells.swap(k, i);
    }
}

/// The 4x4 puzzle at `resolution`.
pub fn stp_space(instance: TilePuzzleState, resolution: u64) -> Result<TilePuzzle, TileError> {
    TilePuzzle::new(4, 4, instance, resolution)
}

impl StateSpace for TilePuzzle {
    type State = TilePuzzleState;
    type Action = TileMove;

    fn init(&self) -> TilePuzzleState {
        self.init
    }

    fn is_goal(&self, s: &TilePuzzleState) -> bool {
        s.blank == 0 && s.cells[..self.n_cells()].iter().enumerate().all(|(i, &c)| c as usize == i)
    }

    fn succ(&self, s: &TilePuzzleState, out: &mut Vec<(TileMove, TilePuzzleState)>) {
        let b = s.blank();
        let (row, col) = (b / self.width, b % self.width);
        let mut push = |dir: Dir, to: usize| {
            let mut next = *s;
            let tile = next.cells[to];
            next.cells[b] = tile;
            next.cells[to] = 0;
            next.blank = to as u8;
            out.push((TileMove { tile, dir }, next));
        };
        if row > 0 {
            push(Dir::Up, b - self.width);
        }
        if col > 0 {
            push(Dir::Left, b - 1);
        }
        if col + 1 < self.width {
            push(Dir::Right, b + 1);
        }
        if row + 1 < self.height {
            push(Dir::Down, b + self.width);
        }
    }

    fn cost(&self, a: &TileMove) -> Cost {
        self.tile_cost[a.tile as usize]
    }

    fn h(&self, s: &TilePuzzleState) -> Cost {
        let mut sum = 0;
        for (p, &t) in s.cells[..self.n_cells()].iter().enumerate() {
            sum += self.weighted[t as usize][p];
        }
        Cost::new(sum)
    }

    fn undoes(&self, previous: &TileMove, next: &TileMove) -> bool {
        next.dir == previous.dir.opposite()
    }
}

impl RawCosts for TilePuzzle {
    fn raw_cost(&self, a: &TileMove) -> f64 {
        1.0 + 1.0 / (1.0 + a.tile as f64)
    }

    fn raw_h(&self, s: &TilePuzzleState) -> f64 {
        s.cells[..self.n_cells()]
            .iter()
            .enumerate()
            .map(|(p, &t)| self.raw_weighted[t as usize][p])
            .sum()
    }
}
