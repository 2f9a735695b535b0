use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn matrix(&self) -> CMatrix {
        let c = Complex64::new;
        match self {
            PauliLetter::I => CMatrix::identity(2),
            PauliLetter::X => CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap(),
            PauliLetter::Y => {
                CMatrix::from_entries(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap()
            }
            PauliLetter::Z => CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap(),
        }
    }

    pub fn to_char(&self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }
}

/// A weighted n-qubit Pauli word.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PauliString {
    pub letters: Vec<PauliLetter>,
    pub coefficient: Complex64,
}

impl PauliString {
    pub fn new(letters: Vec<PauliLetter>, coefficient: Complex64) -> Self {
        PauliString { letters, coefficient }
    }

    /// Identity word with a single letter replaced.
    pub fn single(n: usize, site: usize, letter: PauliLetter, coefficient: Complex64) -> Self {
        let mut letters = vec![PauliLetter::I; n];
        letters[site] = letter;
        PauliString { letters, coefficient }
    }

    pub fn n_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters_string(&self) -> String {
        self.letters.iter().map(PauliLetter::to_char).collect()
    }

    /// Kronecker product of the letters times the coefficient.
    pub fn dense(&self) -> CMatrix {
        let mut m = CMatrix::identity(1);
        for l in &self.letters {
            m = m.kron(&l.matrix());
        }
        m.scale(self.coefficient)
    }

    /// Sites with a non-identity letter.
    pub fn support(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| **l != PauliLetter::I)
            .map(|(i, _)| i)
            .collect()
    }

    /// Two Pauli words commute iff they anticommute at an even number of
    /// sites (i.e. sites where both letters differ and neither is I).
    pub fn commutes_with(&self, other: &PauliString) -> bool {
        let clashes = self
            .letters
            .iter()
            .zip(&other.letters)
            .filter(|(a, b)| **a != PauliLetter::I && **b != PauliLetter::I && a != b)
            .count();
        clashes % 2 == 0
    }
}

/// Hermitian sum of Pauli words with an optional two-way split used by
/// Trotterization. The split stores term indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PauliHamiltonian {
    pub n: usize,
    pub terms: Vec<PauliString>,
    pub split: Option<(Vec<usize>, Vec<usize>)>,
}

impl PauliHamiltonian {
    pub fn new(n: usize, terms: Vec<PauliString>) -> Result<Self> {
        for t in &terms {
            if t.n_qubits() != n {
                return Err(Error::DimensionMismatch { left: t.n_qubits(), right: n });
            }
            if t.coefficient.im.abs() > 1e-12 {
                return Err(Error::NotHermitian { deviation: t.coefficient.im.abs() });
            }
        }
        Ok(PauliHamiltonian { n, terms, split: None })
    }

    pub fn dense(&self) -> CMatrix {
        pauli_sum_dense(self.n, &self.terms)
    }

    pub fn split_parts(&self) -> Result<(Vec<&PauliString>, Vec<&PauliString>)> {
        let (a, b) = self.split.as_ref().ok_or(Error::NoSplit)?;
        Ok((
            a.iter().map(|&i| &self.terms[i]).collect(),
            b.iter().map(|&i| &self.terms[i]).collect(),
        ))
    }

    pub fn part_dense(&self, first: bool) -> Result<CMatrix> {
        let (a, b) = self.split_parts()?;
        let part = if first { a } else { b };
        let terms: Vec<PauliString> = part.into_iter().cloned().collect();
        Ok(pauli_sum_dense(self.n, &terms))
    }
}

pub fn pauli_sum_dense(n: usize, terms: &[PauliString]) -> CMatrix {
    let mut acc = CMatrix::zeros(1 << n, 1 << n);
    for t in terms {
        acc = acc.add(&t.dense());
    }
    acc
}

/// Transverse-field Ising model `H = -sum Z_i Z_{i+1} - g sum X_i`, with
/// the ZZ/X split recorded for Trotterization.
pub fn tfim(n: usize, g: f64, periodic: bool) -> Result<PauliHamiltonian> {
    if !(2..=10).contains(&n) {
        return Err(Error::DimensionCap { dim: 1 << n, cap: 1 << 10 });
    }
    let mut terms = Vec::new();
    let bonds = if periodic { n } else { n - 1 };
    for i in 0..bonds {
        let mut letters = vec![PauliLetter::I; n];
        letters[i] = PauliLetter::Z;
        letters[(i + 1) % n] = PauliLetter::Z;
        terms.push(PauliString::new(letters, Complex64::new(-1.0, 0.0)));
    }
    for i in 0..n {
        terms.push(PauliString::single(n, i, PauliLetter::X, Complex64::new(-g, 0.0)));
    }
    let mut h = PauliHamiltonian::new(n, terms)?;
    h.split = Some(((0..bonds).collect(), (bonds..bonds + n).collect()));
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FermionOp {
    Create,
    Annihilate,
    Number,
}

/// Jordan-Wigner image of a fermionic mode operator on `n` modes (1-based
/// mode index `i`), as a two-term Pauli sum:
/// `a_i = Z^(i-1) (x) (X + iY)/2 (x) I^(n-i)`, `n_i = (I - Z_i)/2`.
pub fn jordan_wigner(i: usize, n: usize, kind: FermionOp) -> Result<Vec<PauliString>> {
    if i == 0 || i > n || n > 6 {
        return Err(Error::IndexOutOfRange { index: i, limit: n });
    }
    let site = i - 1;
    let z_prefix = |letters: &mut Vec<PauliLetter>| {
        for l in letters.iter_mut().take(site) {
            *l = PauliLetter::Z;
        }
    };
    Ok(match kind {
        FermionOp::Annihilate => {
            let mut x = vec![PauliLetter::I; n];
            z_prefix(&mut x);
            x[site] = PauliLetter::X;
            let mut y = vec![PauliLetter::I; n];
            z_prefix(&mut y);
            y[site] = PauliLetter::Y;
            vec![
                PauliString::new(x, Complex64::new(0.5, 0.0)),
                PauliString::new(y, Complex64::new(0.0, 0.5)),
            ]
        }
        FermionOp::Create => {
            let mut x = vec![PauliLetter::I; n];
            z_prefix(&mut x);
            x[site] = PauliLetter::X;
            let mut y = vec![PauliLetter::I; n];
            z_prefix(&mut y);
            y[site] = PauliLetter::Y;
            vec![
                PauliString::new(x, Complex64::new(0.5, 0.0)),
                PauliString::new(y, Complex64::new(0.0, -0.5)),
            ]
        }
        FermionOp::Number => vec![
            PauliString::new(vec![PauliLetter::I; n], Complex64::new(0.5, 0.0)),
            PauliString::single(n, site, PauliLetter::Z, Complex64::new(-0.5, 0.0)),
        ],
    })
}
