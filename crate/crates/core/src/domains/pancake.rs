//! Pancake stacks where flipping the top `f` of `N` pancakes costs
//! `1 + f/(10N)`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::baselines::RawCosts;
use crate::cost::{discretize_ratio, Cost, CostError};
use crate::space::StateSpace;

pub const MAX_PANCAKES: usize = 32;

#[derive(Debug, Error, PartialEq)]
pub enum PancakeError {
    #[error("stack size {0} is outside 2..={MAX_PANCAKES}")]
    BadSize(usize),
    #[error("stack is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// A stack listed from the top; pancakes are numbered `1..=N` by size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PancakeState {
    cakes: [u8; MAX_PANCAKES],
    n: u8,
}

impl PancakeState {
    pub fn new(stack: &[u8]) -> Result<Self, PancakeError> {
        let n = stack.len();
        if !(2..=MAX_PANCAKES).contains(&n) {
            return Err(PancakeError::BadSize(n));
        }
        let mut seen = [false; MAX_PANCAKES + 1];
        for &c in stack {
            if c == 0 || c as usize > n || seen[c as usize] {
                return Err(PancakeError::NotAPermutation(n));
            }
            seen[c as usize] = true;
        }
        let mut cakes = [0; MAX_PANCAKES];
        cakes[..n].copy_from_slice(stack);
        Ok(PancakeState { cakes, n: n as u8 })
    }

    pub fn sorted(n: usize) -> Self {
        let stack: Vec<u8> = (1..=n as u8).collect();
        PancakeState::new(&stack).expect("identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.n as usize
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn stack(&self) -> &[u8] {
        &self.cakes[..self.n as usize]
    }

    /// Adjacent pairs, including the bottom pancake and the plate, whose
    /// sizes differ by more than one.
    pub fn gaps(&self) -> u64 {
        let s = self.stack();
        let plate = self.n + 1;
        let inner = s.windows(2).filter(|w| w[0].abs_diff(w[1]) > 1).count() as u64;
        inner + u64::from(s[s.len() - 1].abs_diff(plate) > 1)
    }

    fn flipped(&self, f: usize) -> Self {
        let mut next = *self;
        next.cakes[..f].reverse();
        next
    }
}

impl fmt::Debug for PancakeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pancakes{:?}", self.stack())
    }
}

/// Flips the top `self.0` pancakes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Flip(pub u8);

/// Weighted pancake puzzle with the GAP heuristic priced at one unit of
/// cost per gap. Every flip costs more than one unit and changes at most
/// one adjacency, so the heuristic stays admissible.
#[derive(Debug, Clone)]
pub struct PancakePuzzle {
    init: PancakeState,
    resolution: u64,
    flip_cost: [Cost; MAX_PANCAKES + 1],
    unit: Cost,
}

/// Integer cost of flipping the top `f` of `n` pancakes.
pub fn flip_cost(f: usize, n: usize, resolution: u64) -> Result<Cost, CostError> {
    let ten_n = 10 * n as u64;
    discretize_ratio(ten_n + f as u64, ten_n, resolution)
}

pub fn pancake_space(instance: PancakeState, resolution: u64) -> Result<PancakePuzzle, PancakeError> {
    let n = instance.len();
    let mut costs = [Cost::ZERO; MAX_PANCAKES + 1];
    for (f, c) in costs.iter_mut().enumerate().take(n + 1).skip(2) {
        *c = flip_cost(f, n, resolution)?;
    }
    Ok(PancakePuzzle {
        init: instance,
        resolution,
        flip_cost: costs,
        unit: discretize_ratio(1, 1, resolution)?,
    })
}

impl PancakePuzzle {
    pub fn resolution(&self) -> u64 {
        self.resolution
    }

    pub fn size(&self) -> usize {
        self.init.len()
    }

    pub fn with_init(&self, init: PancakeState) -> Result<Self, PancakeError> {
        if init.len() != self.size() {
            return Err(PancakeError::BadSize(init.len()));
        }
        pancake_space(init, self.resolution)
    }
}

impl StateSpace for PancakePuzzle {
    type State = PancakeState;
    type Action = Flip;

    fn init(&self) -> PancakeState {
        self.init
    }

    fn is_goal(&self, s: &PancakeState) -> bool {
        s.stack().iter().enumerate().all(|(i, &c)| c as usize == i + 1)
    }

    fn succ(&self, s: &PancakeState, out: &mut Vec<(Flip, PancakeState)>) {
        for f in 2..=s.len() {
            out.push((Flip(f as u8), s.flipped(f)));
        }
    }

    fn cost(&self, a: &Flip) -> Cost {
        self.flip_cost[a.0 as usize]
    }

    fn h(&self, s: &PancakeState) -> Cost {
        Cost::new(s.gaps() * self.unit.get())
    }

    fn undoes(&self, previous: &Flip, next: &Flip) -> bool {
        previous == next
    }
}

impl RawCosts for PancakePuzzle {
    fn raw_cost(&self, a: &Flip) -> f64 {
        1.0 + a.0 as f64 / (10.0 * self.size() as f64)
    }

    fn raw_h(&self, s: &PancakeState) -> f64 {
        s.gaps() as f64
    }
}

/// `count` uniformly random stacks of `n` pancakes, deterministic per seed.
pub fn generate_hard_pancakes(count: usize, n: usize, seed: u64) -> Vec<PancakeState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stack: Vec<u8> = (1..=n as u8).collect();
    (0..count)
        .map(|_| {
            stack.shuffle(&mut rng);
            PancakeState::new(&stack).expect("shuffle keeps the permutation")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::brute_force_cstar;

    #[test]
    fn flip_costs() {
        assert_eq!(flip_cost(2, 20, 1_000_000).unwrap(), Cost::new(1_010_000));
        assert_eq!(flip_cost(20, 20, 1_000_000).unwrap(), Cost::new(1_100_000));
        assert_eq!(flip_cost(3, 14, 1_000_000_000).unwrap(), Cost::new(1_021_428_571));
    }

    #[test]
    fn gap_counts() {
        assert_eq!(PancakeState::sorted(20).gaps(), 0);
        let mut stack: Vec<u8> = (1..=20).collect();
        stack.swap(0, 1);
        // 2 1 3 ...: only the 1-3 pair is a gap.
        assert_eq!(PancakeState::new(&stack).unwrap().gaps(), 1);
        // Bottom pancake away from the plate.
        assert_eq!(PancakeState::new(&[2, 3, 1]).unwrap().gaps(), 2);
        assert_eq!(PancakeState::new(&[3, 2, 1]).unwrap().gaps(), 1);
    }

    #[test]
    fn flip_order_and_inverse() {
        let p = pancake_space(PancakeState::new(&[3, 1, 2, 4]).unwrap(), 10).unwrap();
        let mut out = Vec::new();
        p.succ(&p.init(), &mut out);
        let got: Vec<(u8, &[u8])> = out.iter().map(|(f, s)| (f.0, s.stack())).collect();
        assert_eq!(
            got,
            vec![(2, &[1, 3, 2, 4][..]), (3, &[2, 1, 3, 4][..]), (4, &[4, 2, 1, 3][..])]
        );
        for (f, s) in &out {
            assert_eq!(s.flipped(f.0 as usize), p.init());
            assert!(p.undoes(f, f));
        }
    }

    #[test]
    fn validation() {
        assert_eq!(PancakeState::new(&[1]), Err(PancakeError::BadSize(1)));
        assert_eq!(PancakeState::new(&[1, 1, 2]), Err(PancakeError::NotAPermutation(3)));
        assert_eq!(PancakeState::new(&[0, 1]), Err(PancakeError::NotAPermutation(2)));
    }

    #[test]
    fn generator_is_deterministic() {
        let a = generate_hard_pancakes(3, 20, 1);
        assert_eq!(a, generate_hard_pancakes(3, 20, 1));
        assert_ne!(a, generate_hard_pancakes(3, 20, 2));
        for s in &a {
            let mut v = s.stack().to_vec();
            v.sort();
            assert_eq!(v, (1..=20).collect::<Vec<u8>>());
        }
    }

    fn all_stacks(n: usize) -> Vec<PancakeState> {
        let mut out = Vec::new();
        let mut v: Vec<u8> = (1..=n as u8).collect();
        heap_permutations(&mut v, n, &mut out);
        out
    }

    fn heap_permutations(v: &mut Vec<u8>, k: usize, out: &mut Vec<PancakeState>) {
        if k == 1 {
            out.push(PancakeState::new(v).unwrap());
            return;
        }
        for i in 0..k {
            heap_permutations(v, k - 1, out);
            let j = if k % 2 == 0 { i } else { 0 };
            v.swap(j, k - 1);
        }
    }

    #[test]
    fn gap_admissible_exhaustively() {
        for n in 2..=6 {
            let base = pancake_space(PancakeState::sorted(n), 1_000).unwrap();
            let stacks = all_stacks(n);
            assert_eq!(stacks.len(), (1..=n).product::<usize>());
            for s in stacks {
                let p = base.with_init(s).unwrap();
                assert!(p.h(&s) <= brute_force_cstar(&p).unwrap(), "{s:?}");
            }
        }
    }

    #[test]
    fn generated_small_stacks_admissible() {
        for s in generate_hard_pancakes(20, 5, 1) {
            let p = pancake_space(s, 1_000_000).unwrap();
            let c = brute_force_cstar(&p).unwrap();
            assert!(c.is_finite());
            assert!(p.h(&s) <= c);
        }
    }
}
