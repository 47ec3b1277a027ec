"""Exact finite-blocklength code evaluation.

A codebook pairs a stochastic encoder for the confidential user (each
message pair maps to a weighted list of codewords) with a deterministic
encoder for the other user. Evaluation enumerates output sequences
exactly: no sampling, no asymptotics. The headline quantity is the
conditional entropy H(W1 | Y2^n, X2^n, W0) of the confidential message
given everything the non-confidential side ever sees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .channels import FiniteGmac, marginals

__all__ = [
    "EnumerationLimitError",
    "Codebook",
    "OracleReport",
    "evaluate",
    "concatenate_codes",
    "repeat_code",
    "corner_secrecy_code",
    "corner_common_code",
    "random_superposition_code",
]

OUTPUT_SEQUENCE_LIMIT = 2**24
LIKELIHOOD_ENTRY_LIMIT = 2**26
CODEBOOK_WORD_LIMIT = 1_000_000
WEIGHT_SUM_TOL = 1e-12
PERFECT_SECRECY_TOL = 1e-9


class EnumerationLimitError(RuntimeError):
    """The requested exact enumeration is beyond the desk-scale guard."""


WeightedWord = tuple[tuple[int, ...], float]


@dataclass(frozen=True)
class Codebook:
    """Blocklength-n code for message sets of sizes m0 (common) and m1
    (confidential).

    encoder1[w0][w1] is a weighted list of x1 codewords whose weights sum
    to 1; encoder2[w0] is the single x2 codeword sent alongside.
    """

    n: int
    m0: int
    m1: int
    encoder1: tuple[tuple[tuple[WeightedWord, ...], ...], ...]
    encoder2: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.m0 < 1 or self.m1 < 1:
            raise ValueError("n, m0 and m1 must all be at least 1")
        enc1 = []
        if len(self.encoder1) != self.m0:
            raise ValueError(f"encoder1 must have {self.m0} rows, got {len(self.encoder1)}")
        for w0, row in enumerate(self.encoder1):
            if len(row) != self.m1:
                raise ValueError(
                    f"encoder1 row {w0} must have {self.m1} entries, got {len(row)}"
                )
            new_row = []
            for w1, support in enumerate(row):
                if len(support) == 0:
                    raise ValueError(f"encoder1[{w0}][{w1}] has empty support")
                total = 0.0
                words = []
                for word, prob in support:
                    word = tuple(word)
                    if len(word) != self.n:
                        raise ValueError(
                            f"encoder1[{w0}][{w1}] codeword length {len(word)} != n = {self.n}"
                        )
                    if prob < 0.0:
                        raise ValueError("codeword weights must be nonnegative")
                    total += prob
                    words.append((word, float(prob)))
                if abs(total - 1.0) > WEIGHT_SUM_TOL:
                    raise ValueError(
                        f"encoder1[{w0}][{w1}] weights sum to {total!r}, not 1"
                    )
                new_row.append(tuple(words))
            enc1.append(tuple(new_row))
        if len(self.encoder2) != self.m0:
            raise ValueError(f"encoder2 must have {self.m0} rows, got {len(self.encoder2)}")
        enc2 = []
        for w0, word in enumerate(self.encoder2):
            word = tuple(word)
            if len(word) != self.n:
                raise ValueError(
                    f"encoder2[{w0}] codeword length {len(word)} != n = {self.n}"
                )
            enc2.append(word)
        object.__setattr__(self, "encoder1", tuple(enc1))
        object.__setattr__(self, "encoder2", tuple(enc2))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "M0": self.m0,
            "M1": self.m1,
            "encoder1": [
                [
                    [{"codeword": list(word), "prob": prob} for word, prob in support]
                    for support in row
                ]
                for row in self.encoder1
            ],
            "encoder2": [list(word) for word in self.encoder2],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Codebook":
        try:
            n, m0, m1 = int(data["n"]), int(data["M0"]), int(data["M1"])
            encoder1 = tuple(
                tuple(
                    tuple((tuple(e["codeword"]), float(e["prob"])) for e in support)
                    for support in row
                )
                for row in data["encoder1"]
            )
            encoder2 = tuple(tuple(word) for word in data["encoder2"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"codebook document is missing required field: {exc}") from exc
        return cls(n, m0, m1, encoder1, encoder2)


@dataclass(frozen=True)
class OracleReport:
    equivocation_bits: float
    equivocation_rate: float
    error_prob: float
    perfect_secrecy: bool

    def to_dict(self) -> dict:
        return {
            "equivocation_bits": self.equivocation_bits,
            "equivocation_rate": self.equivocation_rate,
            "error_prob": self.error_prob,
            "perfect_secrecy": self.perfect_secrecy,
        }


def corner_secrecy_code() -> Codebook:
    """Two-codeword blocklength-1 code for the noiseless multiplier channel:
    x2 stays 1, the confidential bit rides on x1, and y2 = [x1 <= x2] never
    moves, so the bit stays perfectly hidden while y = x1 decodes it."""
    return Codebook(
        n=1,
        m0=1,
        m1=2,
        encoder1=(((((0,), 1.0),), (((1,), 1.0),)),),
        encoder2=((1,),),
    )


def corner_common_code() -> Codebook:
    """Blocklength-1 code carrying one common bit and nothing confidential."""
    return Codebook(
        n=1,
        m0=2,
        m1=1,
        encoder1=(((((0,), 1.0),),), ((((1,), 1.0),),)),
        encoder2=((1,), (1,)),
    )


def concatenate_codes(a: Codebook, b: Codebook) -> Codebook:
    """Time share two codes over consecutive blocks.

    Message indices combine as w = w_a * m_b + w_b; supports multiply, so
    equivocations add block by block.
    """
    words = (
        a.m0 * a.m1 * max(len(s) for row in a.encoder1 for s in row)
        * b.m0 * b.m1 * max(len(s) for row in b.encoder1 for s in row)
    )
    if words > CODEBOOK_WORD_LIMIT:
        raise EnumerationLimitError(
            f"concatenated codebook would hold about {words} weighted words"
        )
    encoder1 = tuple(
        tuple(
            tuple(
                (wa + wb, pa * pb)
                for wa, pa in a.encoder1[w0a][w1a]
                for wb, pb in b.encoder1[w0b][w1b]
            )
            for w1a in range(a.m1)
            for w1b in range(b.m1)
        )
        for w0a in range(a.m0)
        for w0b in range(b.m0)
    )
    encoder2 = tuple(
        a.encoder2[w0a] + b.encoder2[w0b]
        for w0a in range(a.m0)
        for w0b in range(b.m0)
    )
    return Codebook(a.n + b.n, a.m0 * b.m0, a.m1 * b.m1, encoder1, encoder2)


def repeat_code(code: Codebook, k: int) -> Codebook:
    """Apply the same code independently over k blocks, with the product
    message sets; the total equivocation is k times the base one."""
    if k < 1:
        raise ValueError(f"repetition count must be at least 1, got {k}")
    return reduce(concatenate_codes, [code] * k)


def _index_words(words, alphabet, who: str) -> list[tuple[int, ...]]:
    lookup = {sym: i for i, sym in enumerate(alphabet)}
    out = []
    for word in words:
        try:
            out.append(tuple(lookup[sym] for sym in word))
        except KeyError as exc:
            raise ValueError(
                f"{who} codeword symbol {exc.args[0]!r} is not in the channel alphabet"
            ) from exc
    return out


def _word_output(table: np.ndarray, x1_idx: tuple[int, ...], x2_idx: tuple[int, ...]) -> np.ndarray:
    """Distribution over output sequences given one codeword pair, as the
    outer product of per-symbol rows (first symbol varies slowest)."""
    out = np.ones(1)
    for a, b in zip(x1_idx, x2_idx):
        out = np.multiply.outer(out, table[a, b]).ravel()
    return out


def evaluate(code: Codebook, ch: FiniteGmac) -> OracleReport:
    """Exact equivocation and maximum-likelihood error of a code on a channel.

    Messages are uniform. The equivocation is H(W1 | Y2^n, X2^n, W0) in
    bits, computed from the full joint law; since x2^n is a function of
    w0, conditioning on (x2^n, w0) reduces to conditioning on w0. The
    error probability is that of the maximum-likelihood decoder for the
    pair (w0, w1) from y^n, ties broken toward the lowest message index.
    Per-w0 contributions are accumulated in index order, so the result is
    reproducible bit for bit.
    """
    ny, ny2 = len(ch.alphabet_y), len(ch.alphabet_y2)
    out_seqs = ny**code.n * ny2**code.n
    if out_seqs > OUTPUT_SEQUENCE_LIMIT:
        raise EnumerationLimitError(
            f"{out_seqs} joint output sequences exceed the limit {OUTPUT_SEQUENCE_LIMIT}"
        )
    if code.m0 * code.m1 * ny**code.n > LIKELIHOOD_ENTRY_LIMIT:
        raise EnumerationLimitError("likelihood table exceeds the enumeration limit")

    p_y, p_y2 = marginals(ch)
    x2_words = _index_words(code.encoder2, ch.alphabet_x2, "encoder2")
    likelihood = np.empty((code.m0 * code.m1, ny**code.n))
    equivocation = 0.0
    for w0 in range(code.m0):
        x2_idx = x2_words[w0]
        tap = np.empty((code.m1, ny2**code.n))
        for w1 in range(code.m1):
            support = code.encoder1[w0][w1]
            x1_words = _index_words(
                (word for word, _ in support), ch.alphabet_x1, "encoder1"
            )
            v_tap = np.zeros(ny2**code.n)
            v_dest = np.zeros(ny**code.n)
            for x1_idx, (_, prob) in zip(x1_words, support):
                if prob == 0.0:
                    continue
                v_tap += prob * _word_output(p_y2, x1_idx, x2_idx)
                v_dest += prob * _word_output(p_y, x1_idx, x2_idx)
            tap[w1] = v_tap
            likelihood[w0 * code.m1 + w1] = v_dest
        joint = tap / code.m1
        seq_mass = joint.sum(axis=0)
        pos = joint > 0.0
        logs = np.zeros_like(joint)
        logs[pos] = np.log2(joint[pos]) - np.log2(np.broadcast_to(seq_mass, joint.shape)[pos])
        equivocation += -float(np.sum(joint * logs)) / code.m0

    decoded = np.argmax(likelihood, axis=0)
    p_correct = float(
        likelihood[decoded, np.arange(likelihood.shape[1])].sum() / (code.m0 * code.m1)
    )
    error = max(0.0, 1.0 - p_correct)
    return OracleReport(
        equivocation_bits=equivocation,
        equivocation_rate=equivocation / code.n,
        error_prob=error,
        perfect_secrecy=equivocation >= math.log2(code.m1) - PERFECT_SECRECY_TOL,
    )


def random_superposition_code(
    p: float,
    alpha: float,
    n: int,
    m0: int,
    m1: int,
    aux_bins: int,
    seed: int,
) -> Codebook:
    """Draw a random layered code for the binary multiplier channel.

    Cloud centers q^n(w0) are uniform bits, satellites x'^n per (w1, bin)
    pair are Bernoulli(alpha), codewords are their xor, and the encoder
    picks a bin uniformly; x2 stays at the all-ones word. The tap
    crossover p only labels the channel the draw targets; the construction
    itself depends on alpha alone. The same seed reproduces the same code.
    """
    if not 0.0 <= p <= 0.5:
        raise ValueError(f"tap crossover p must lie in [0, 1/2], got {p}")
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"satellite bias alpha must lie in [0, 1], got {alpha}")
    if n < 1 or m0 < 1 or m1 < 1 or aux_bins < 1:
        raise ValueError("n, m0, m1 and aux_bins must all be at least 1")
    if m0 * m1 * aux_bins > CODEBOOK_WORD_LIMIT:
        raise EnumerationLimitError("requested codebook is beyond the desk-scale guard")
    rng = np.random.default_rng(seed)
    clouds = rng.integers(0, 2, size=(m0, n))
    satellites = (rng.random(size=(m1, aux_bins, n)) < alpha).astype(int)
    weight = 1.0 / aux_bins
    encoder1 = tuple(
        tuple(
            tuple(
                (tuple(int(b) for b in clouds[w0] ^ satellites[w1, k]), weight)
                for k in range(aux_bins)
            )
            for w1 in range(m1)
        )
        for w0 in range(m0)
    )
    encoder2 = tuple(tuple([1] * n) for _ in range(m0))
    return Codebook(n, m0, m1, encoder1, encoder2)
