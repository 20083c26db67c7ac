//! Party layout for teleporting `M` anyons through a Bell resource of
//! `4N+2` anyons.
//!
//! Anyons are numbered from 1, left to right:
//!
//! ```text
//! [ Bob: 1 ..= 2N+1 | Alice (Bell): 2N+2 ..= 4N+2 | φ: 4N+3 ..= 4N+2+M ]
//! ```
//!
//! The Bell block starts at anyon 1 and has even length, so its pairs and the
//! pairs of φ both line up with qubits. If `M` is odd, φ's last anyon is the
//! unpaired anyon of the whole register. Bob's anyon `ℓ` is cupped with
//! Alice's anyon `4N+3-ℓ`, so after a successful run the teleported state
//! sits on Bob's anyons `1 ..= M`, in φ's own order.

use std::ops::RangeInclusive;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    m: usize,
    n: usize,
}

impl Layout {
    /// `m` anyons to teleport, `n` fixing the Bell resource size `4n+2`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidLabels("nothing to teleport (M = 0)".into()));
        }
        if n == 0 || m > 2 * n + 1 {
            return Err(Error::StateTooLarge { m, n });
        }
        Ok(Layout { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total_anyons(&self) -> usize {
        self.m + self.bell_anyons()
    }

    pub fn bell_anyons(&self) -> usize {
        4 * self.n + 2
    }

    /// Number of Bell pairs, `2N+1`.
    pub fn bell_pairs(&self) -> usize {
        2 * self.n + 1
    }

    pub fn bob(&self) -> RangeInclusive<usize> {
        1..=2 * self.n + 1
    }

    pub fn alice_bell(&self) -> RangeInclusive<usize> {
        2 * self.n + 2..=4 * self.n + 2
    }

    pub fn phi(&self) -> RangeInclusive<usize> {
        4 * self.n + 3..=4 * self.n + 2 + self.m
    }

    /// Alice's measured block: her `M` Bell anyons nearest φ, then φ.
    pub fn alice_block(&self) -> RangeInclusive<usize> {
        self.alice_block_start()..=4 * self.n + 2 + self.m
    }

    pub fn alice_block_start(&self) -> usize {
        4 * self.n + 3 - self.m
    }

    /// Global generator whose monodromy measures Alice's pair `k`
    /// (block positions `2k-1, 2k`), `1 <= k <= M`.
    pub fn alice_pair_generator(&self, k: usize) -> usize {
        assert!((1..=self.m).contains(&k), "Alice pair {k} out of range 1..={}", self.m);
        self.alice_block_start() + 2 * k - 2
    }

    /// Bob's anyons that end up holding φ.
    pub fn bob_register(&self) -> RangeInclusive<usize> {
        1..=self.m
    }

    /// Leading qubits that hold φ's qubits after the protocol.
    pub fn bob_register_qubits(&self) -> usize {
        self.m / 2
    }

    /// First qubit of φ's register inside the full state.
    pub fn phi_first_qubit(&self) -> usize {
        self.bell_pairs() + 1
    }

    /// Bob's local label `ℓ` (0 = auxiliary anyon next to his register) to
    /// the global anyon index.
    pub fn bob_local_to_global(&self, label: usize) -> usize {
        assert!(label <= self.m, "Bob label {label} out of range 0..={}", self.m);
        self.m + 1 - label
    }

    /// Bob's local generator `b_j` (exchanging labels `j, j+1`) as a global
    /// generator index.
    pub fn bob_local_generator(&self, j: usize) -> usize {
        assert!(j < self.m, "Bob generator b{j} out of range 0..{}", self.m);
        self.m - j
    }
}
