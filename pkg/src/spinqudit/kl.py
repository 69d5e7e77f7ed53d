"""Knill-Laflamme certification of spin-qudit codes.

Two tiers: for diagonal (S_Z) errors the conditions reduce to equal rational
moments ``<i|S_Z^n|i>``, checked exactly; general operator words are checked
numerically through the Gram matrix of the error-mapped codewords.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from spinqudit.codes import CodeFamily, Codeword
from spinqudit.spin_core import make_operator, make_sminus, make_splus, make_sz

DEFAULT_TOL = 1e-12
DEFAULT_DIMENSION_CAP = 4096

# A factor is (operator letter, qudit index); a word is an ordered product of factors.
Factor = tuple[str, int]
Word = tuple[Factor, ...]


class DimensionOverflow(ValueError):
    pass


@dataclass(frozen=True)
class ErrorSet:
    words: tuple[Word, ...]

    def __post_init__(self):
        if () not in self.words:
            object.__setattr__(self, "words", ((),) + tuple(self.words))

    @classmethod
    def all_words(cls, letters: str = "XYZ", max_length: int = 1, n_qudits: int = 1) -> ErrorSet:
        """Every product of at most ``max_length`` single-qudit factors."""
        factors = [(letter, q) for q in range(n_qudits) for letter in letters]
        words: list[Word] = [()]
        for length in range(1, max_length + 1):
            words.extend(itertools.product(factors, repeat=length))
        return cls(tuple(words))

    @staticmethod
    def label(word: Word) -> str:
        if not word:
            return "I"
        return "*".join(f"S{letter}[{q}]" if q else f"S{letter}" for letter, q in word)


@dataclass
class KLReport:
    code: str
    mode: str
    moments: list[list[Fraction]] = field(default_factory=list)
    max_offdiag: float = 0.0
    max_diag_mismatch: float = 0.0
    tol: float = 0.0
    violations: list[dict] = field(default_factory=list)
    disjoint_supports: bool = True
    max_abs_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return (
            self.disjoint_supports
            and not self.violations
            and self.max_offdiag <= self.tol
            and self.max_diag_mismatch <= self.tol
        )

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "mode": self.mode,
            "verdict": self.verdict,
            "tol": self.tol,
            "disjoint_supports": self.disjoint_supports,
            "max_offdiag_residual": self.max_offdiag,
            "max_diag_mismatch_residual": self.max_diag_mismatch,
            "max_abs_residual": self.max_abs_residual,
            "moments": [[str(v) for v in row] for row in self.moments],
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def moment_exact(codeword: Codeword, n: int, qudit: int = 0) -> Fraction:
    """``<cw|S_Z^n|cw>`` on one qudit, in exact rational arithmetic."""
    if n < 0:
        raise ValueError("moment order must be non-negative")
    return sum((amp.square() * levels[qudit].value**n for levels, amp in codeword.terms), Fraction(0))


def verify_z_kl(code: CodeFamily, t: int | None = None) -> KLReport:
    """Exact check: disjoint supports plus equal S_Z moments for n = 0..2t.

    With disjoint supports every diagonal error word has vanishing
    off-diagonal elements, so the moments are the only remaining conditions.
    Multi-qudit codes are checked on every qudit.
    """
    t = code.spec.t if t is None else t
    report = KLReport(code.name, "exact", tol=0.0, disjoint_supports=code.supports_disjoint())
    for q in range(code.n_qudits):
        table = [[moment_exact(cw, n, q) for n in range(2 * t + 1)] for cw in code.codewords]
        if q == 0:
            report.moments = table
        for n in range(2 * t + 1):
            for j in range(1, len(table)):
                if table[j][n] != table[0][n]:
                    report.violations.append({
                        "i": 0, "j": j, "n": n, "qudit": q,
                        "lhs": str(table[0][n]), "rhs": str(table[j][n]),
                    })
    for k, cw in enumerate(code.codewords):
        if cw.norm_squared() != 1:
            report.violations.append({"i": k, "j": k, "n": 0, "norm": str(cw.norm_squared())})
    mismatch = max(
        (abs(Fraction(v["lhs"]) - Fraction(v["rhs"])) for v in report.violations if "lhs" in v),
        default=Fraction(0),
    )
    report.max_diag_mismatch = float(mismatch)
    return report


def _dense_columns(code: CodeFamily, error_set: ErrorSet) -> np.ndarray:
    """Columns ``E_w|k>`` ordered word-major, shape ``(dimension, W*d)``."""
    space = code.spin
    vecs = code.vectors()
    ops = {}
    cols = []
    for word in error_set.words:
        mat = np.eye(space.dimension, dtype=complex)
        for letter, q in word:
            if q != 0:
                raise ValueError("single-qudit code has only qudit 0")
            if letter not in ops:
                ops[letter] = make_operator(space, letter).matrix
            mat = mat @ ops[letter]
        cols.append(mat @ vecs)
    return np.concatenate(cols, axis=1)


def _sparse_columns(code: CodeFamily, error_set: ErrorSet) -> np.ndarray:
    """Same as :func:`_dense_columns` but on sparse level-tuple maps."""
    space = code.spin
    mats = {letter: make_operator(space, letter).matrix for letter in "IZ+-XY"}
    vectors: list[dict[tuple[int, ...], complex]] = []
    for word in error_set.words:
        for cw in code.codewords:
            state = {
                tuple(space.index(m) for m in lv): complex(amp.to_float()) for lv, amp in cw.terms
            }
            # rightmost factor acts first
            for letter, q in reversed(word):
                col_op = mats[letter]
                new: dict[tuple[int, ...], complex] = {}
                for key, val in state.items():
                    column = col_op[:, key[q]]
                    for row in np.flatnonzero(column):
                        nk = key[:q] + (int(row),) + key[q + 1:]
                        new[nk] = new.get(nk, 0) + column[row] * val
                state = new
            vectors.append(state)
    index: dict[tuple[int, ...], int] = {}
    for state in vectors:
        for key in state:
            index.setdefault(key, len(index))
    out = np.zeros((len(index), len(vectors)), dtype=complex)
    for col, state in enumerate(vectors):
        for key, val in state.items():
            out[index[key], col] = val
    return out


def _word_norms(code: CodeFamily, error_set: ErrorSet) -> np.ndarray:
    letter_norm = {
        letter: np.linalg.norm(make_operator(code.spin, letter).matrix, 2) for letter in "IZ+-XY"
    }
    return np.array([np.prod([letter_norm[f[0]] for f in w]) if w else 1.0 for w in error_set.words])


def verify_full_kl(
    code: CodeFamily,
    error_set: ErrorSet | None = None,
    tol: float = DEFAULT_TOL,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
) -> KLReport:
    """Numeric check of ``<i|Ea^dag Eb|j> = c_ab delta_ij`` for all word pairs."""
    if error_set is None:
        error_set = ErrorSet.all_words("XYZ", code.spec.t, code.n_qudits)
    if code.n_qudits == 1:
        if code.spin.dimension > dimension_cap:
            raise DimensionOverflow(f"dimension {code.spin.dimension} exceeds cap {dimension_cap}")
        columns = _dense_columns(code, error_set)
    else:
        columns = _sparse_columns(code, error_set)
        if columns.shape[0] > dimension_cap * 64:
            raise DimensionOverflow(f"{columns.shape[0]} sparse support states exceed cap")

    d = code.spec.d
    n_words = len(error_set.words)
    gram = (columns.conj().T @ columns).reshape(n_words, d, n_words, d).transpose(0, 2, 1, 3)
    # gram[a, b, i, j] = <i| Ea^dag Eb |j>
    diag = np.einsum("abii->abi", gram)
    offdiag = gram.copy()
    idx = np.arange(d)
    offdiag[:, :, idx, idx] = 0
    # residuals are relative to ||Ea|| ||Eb|| (floored at 1): entries grow like S^(2t)
    # and float64 cannot resolve them to an absolute 1e-12 at large S
    norms = _word_norms(code, error_set)
    scale = np.maximum(1.0, np.outer(norms, norms))
    off_abs = np.abs(offdiag)
    diag_abs = np.abs(diag - diag[:, :, :1])
    off_res = off_abs / scale[:, :, None, None]
    diag_res = diag_abs / scale[:, :, None]

    report = KLReport(code.name, "numeric", tol=tol, disjoint_supports=code.supports_disjoint())
    report.max_offdiag = float(off_res.max(initial=0.0))
    report.max_diag_mismatch = float(diag_res.max(initial=0.0))
    report.max_abs_residual = float(max(off_abs.max(initial=0.0), diag_abs.max(initial=0.0)))
    labels = [ErrorSet.label(w) for w in error_set.words]
    for a, b, i, j in zip(*np.nonzero(off_res > tol)):
        if len(report.violations) >= 50:
            break
        report.violations.append({
            "kind": "offdiag", "Ea": labels[a], "Eb": labels[b], "i": int(i), "j": int(j),
            "value": float(off_res[a, b, i, j]),
        })
    for a, b, i in zip(*np.nonzero(diag_res > tol)):
        if len(report.violations) >= 100:
            break
        report.violations.append({
            "kind": "diag", "Ea": labels[a], "Eb": labels[b], "i": 0, "j": int(i),
            "value": float(diag_res[a, b, i]),
        })
    return report


@dataclass
class B6Report:
    rows: list[dict]
    tol: float

    @property
    def passed(self) -> bool:
        return all(row["residual"] <= self.tol for row in self.rows)


def ladder_anticommutator_expectation(space, state: np.ndarray) -> float:
    """``<psi|(S+S- + S-S+)|psi>`` by explicit matrix action."""
    plus, minus = make_splus(space).matrix, make_sminus(space).matrix
    op = plus @ minus + minus @ plus
    return float(np.real(np.vdot(state, op @ state)))


def casimir_form(space, state: np.ndarray) -> float:
    """``2S(S+1) - 2<psi|S_Z^2|psi>``."""
    s = space.two_s / 2
    sz = make_sz(space).matrix
    return 2 * s * (s + 1) - 2 * float(np.real(np.vdot(state, sz @ sz @ state)))


def reduced_density(codeword, space, qudit: int) -> np.ndarray:
    """Single-qudit density matrix of a codeword, tracing out the other qudits."""
    rho = np.zeros((space.dimension, space.dimension))
    terms = [(levels, amp.to_float()) for levels, amp in codeword.terms]
    for la, ca in terms:
        rest_a = la[:qudit] + la[qudit + 1:]
        for lb, cb in terms:
            if lb[:qudit] + lb[qudit + 1:] == rest_a:
                rho[space.index(la[qudit]), space.index(lb[qudit])] += ca * cb
    return rho


def verify_b6_identity(code: CodeFamily, tol: float = DEFAULT_TOL) -> B6Report:
    """Compare the ladder anticommutator with the closed form on every codeword.

    The closed-form side uses the exact S_Z^2 moment. Multi-qudit codewords
    are checked one qudit at a time on the reduced state.
    """
    s = Fraction(code.spin.two_s, 2)
    plus, minus = make_splus(code.spin).matrix, make_sminus(code.spin).matrix
    ladder = plus @ minus + minus @ plus
    rows = []
    for k, cw in enumerate(code.codewords):
        for q in range(code.n_qudits):
            if code.n_qudits == 1:
                lhs = ladder_anticommutator_expectation(code.spin, code.vector(k))
            else:
                lhs = float(np.real(np.trace(reduced_density(cw, code.spin, q) @ ladder)))
            rhs = 2 * s * (s + 1) - 2 * moment_exact(cw, 2, qudit=q)
            rows.append({"label": k, "qudit": q, "lhs": lhs, "rhs": str(rhs), "residual": abs(lhs - float(rhs))})
    return B6Report(rows, tol)
