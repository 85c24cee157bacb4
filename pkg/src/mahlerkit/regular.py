"""k-kernels, k-regularity evidence, linear representations and automata.

Everything here works on finite prefixes, so "closed" and "rank" are
statements about the available data only.

Matrix products read base-k digits least-significant first, matching the
kernel maps ``n -> k n + j``. The exported automaton reads digits
most-significant first, the usual way automata are drawn.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .algebra import RatMatrix, RowEchelon
from .algebra.poly import Scalar
from .errors import NotAutomatic, NotClosed, PrefixTooShort

MIN_COMPARE = 4
MAX_STATES = 256


@dataclass(frozen=True)
class SequencePrefix:
    values: tuple[Fraction, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if not self.values:
            raise ValueError("a sequence prefix needs at least one value")
        if self.k < 2:
            raise ValueError("radix k must be at least 2")

    @classmethod
    def of(cls, values: Sequence[Scalar], k: int) -> SequencePrefix:
        return cls(tuple(values), k)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class KernelElement:
    """The subsequence ``n -> f(k^level * n + residue)``."""

    level: int
    residue: int
    values: tuple[Fraction, ...]

    @property
    def label(self) -> str:
        return f"l{self.level}r{self.residue}"


def kernel_subsequence(s: SequencePrefix, level: int, residue: int) -> tuple[Fraction, ...]:
    step = s.k ** level
    return s.values[residue::step]


def _comparison_length(s: SequencePrefix, depth: int) -> int:
    if depth < 0:
        raise ValueError("depth must be non-negative")
    c = len(s) // s.k ** depth
    if c < MIN_COMPARE:
        raise PrefixTooShort(
            f"depth {depth} leaves {c} comparable terms from a prefix of length {len(s)}; need {MIN_COMPARE}")
    return c


def _kernel_upto(s: SequencePrefix, depth: int, cmp: int) -> list[KernelElement]:
    seen: dict[tuple[Fraction, ...], KernelElement] = {}
    for level in range(depth + 1):
        for r in range(s.k ** level):
            vals = kernel_subsequence(s, level, r)
            key = vals[:cmp]
            if key not in seen:
                seen[key] = KernelElement(level, r, vals)
    return list(seen.values())


def kernel_elements(s: SequencePrefix, depth: int) -> list[KernelElement]:
    """Distinct kernel sequences up to ``depth``, compared on ``len(s) // k^depth`` terms."""
    return _kernel_upto(s, depth, _comparison_length(s, depth))


@dataclass(frozen=True)
class Closed:
    size: int


@dataclass(frozen=True)
class NotClosedAtDepth:
    depth: int


AutomaticityResult = Union[Closed, NotClosedAtDepth]


def is_automatic_prefix(s: SequencePrefix, depth: int) -> AutomaticityResult:
    """Closed if the level ``depth + 1`` children add no new kernel sequence."""
    cmp = _comparison_length(s, depth + 1)
    elements = _kernel_upto(s, depth, cmp)
    known = {e.values[:cmp] for e in elements}
    k = s.k
    for e in elements:
        if e.level != depth:
            continue
        for j in range(k):
            child = kernel_subsequence(s, depth + 1, k ** depth * j + e.residue)
            if child[:cmp] not in known:
                return NotClosedAtDepth(depth)
    return Closed(len(elements))


def regular_rank(s: SequencePrefix, depth: int, cmp_len: int) -> int:
    """Rank over Q of the kernel sequences up to ``depth`` as vectors of length ``cmp_len``."""
    if cmp_len < 1 or cmp_len * s.k ** depth > len(s):
        raise PrefixTooShort(f"cmp_len * k^depth = {cmp_len * s.k ** depth} exceeds prefix length {len(s)}")
    ech = RowEchelon(cmp_len)
    for level in range(depth + 1):
        for r in range(s.k ** level):
            ech.add(kernel_subsequence(s, level, r)[:cmp_len])
            if ech.full:
                return ech.rank
    return ech.rank


# -- linear representations ------------------------------------------------


@dataclass(frozen=True)
class LinearRepresentation:
    """``f(n) = u A[n_0] A[n_1] ... A[n_(l-1)] v`` with ``n_0`` the least significant digit."""

    k: int
    matrices: tuple[RatMatrix, ...]
    u: tuple[Fraction, ...]
    v: tuple[Fraction, ...]
    basis: tuple[tuple[int, int], ...]
    """``(level, residue)`` of each basis sequence."""

    @property
    def rank(self) -> int:
        return len(self.u)

    def evaluate(self, n: int) -> Fraction:
        vec = list(self.u)
        m = self.rank
        while n:
            n, digit = divmod(n, self.k)
            a = self.matrices[digit]
            vec = [sum((vec[i] * a.entries[i * m + j] for i in range(m)), Fraction(0)) for j in range(m)]
        return sum((x * y for x, y in zip(vec, self.v)), Fraction(0))


def linear_representation(s: SequencePrefix, depth: int, cmp_len: int) -> LinearRepresentation:
    """Digit matrices for ``s`` from a kernel basis chosen in first-seen order.

    Basis sequences come from levels below ``depth``; a child at level
    ``depth`` outside their span raises :class:`NotClosed`.
    """
    k = s.k
    if cmp_len < 1 or cmp_len * k ** depth > len(s):
        raise PrefixTooShort(f"cmp_len * k^depth = {cmp_len * k ** depth} exceeds prefix length {len(s)}")
    zero = Fraction(0)
    basis: list[tuple[int, int]] = []
    # the sequences themselves serve as rows; coordinates come from solving in the basis
    ech = RowEchelon(cmp_len)
    vectors: list[tuple[Fraction, ...]] = []

    def vec(level, r):
        return kernel_subsequence(s, level, r)[:cmp_len]

    first = vec(0, 0)
    if not any(first):
        return LinearRepresentation(k, tuple(RatMatrix(0, 0, ()) for _ in range(k)), (), (), ())
    ech.add(first)
    basis.append((0, 0))
    vectors.append(first)
    queue = [(0, 0)]
    while queue:
        level, r = queue.pop(0)
        for j in range(k):
            child = (level + 1, k ** level * j + r)
            cv = vec(*child)
            if not any(ech.reduce(cv)):
                continue
            if child[0] >= depth:
                raise NotClosed(f"kernel child l{child[0]}r{child[1]} leaves the span at depth {depth}")
            ech.add(cv)
            basis.append(child)
            vectors.append(cv)
            queue.append(child)

    m = len(basis)
    coords = _span_solver(vectors, cmp_len)
    mats = []
    for j in range(k):
        entries = []
        for level, r in basis:
            c = coords(vec(level + 1, k ** level * j + r))
            entries.extend(c)
        mats.append(RatMatrix(m, m, tuple(entries)))
    u = tuple(Fraction(1) if i == 0 else zero for i in range(m))
    v = tuple(kernel_subsequence(s, level, r)[0] for level, r in basis)
    rep = LinearRepresentation(k, tuple(mats), u, v, tuple(basis))
    for n in range(cmp_len):
        if rep.evaluate(n) != s.values[n]:
            raise NotClosed(f"representation fails to reproduce f({n})")
    return rep


def _span_solver(vectors: list[tuple[Fraction, ...]], length: int):
    """Return a function giving coordinates of a vector in the basis ``vectors``."""
    m = len(vectors)
    # augmented rows [vector | e_i] so that reduction tracks the combination
    ech = RowEchelon(length + m, pivot_limit=length)
    for i, v in enumerate(vectors):
        ech.add(list(v) + [Fraction(1) if t == i else Fraction(0) for t in range(m)])

    def coords(w):
        r = ech.reduce(list(w) + [Fraction(0)] * m)
        if any(r[:length]):
            raise NotClosed("vector outside the kernel span")
        # r = w - sum c_i v_i restricted to the tag part gives -c
        return [-x for x in r[length:]]

    return coords


# -- automata --------------------------------------------------------------


@dataclass(frozen=True)
class Automaton:
    """Deterministic automaton with output, reading base-k digits most significant first.

    State ``i`` is represented by the integer ``reps[i]``: the state reached
    after reading the digits of ``reps[i]``. Its display label is
    ``l{ndigits}r{reps[i]}``.
    """

    k: int
    reps: tuple[int, ...]
    outputs: tuple[Fraction, ...]
    transitions: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.reps)

    def label(self, state: int) -> str:
        rep = self.reps[state]
        ndigits = 0
        while rep:
            rep //= self.k
            ndigits += 1
        return f"l{ndigits}r{self.reps[state]}"

    def run(self, n: int) -> Fraction:
        digits = []
        while n:
            n, d = divmod(n, self.k)
            digits.append(d)
        state = 0
        for d in reversed(digits):
            state = self.transitions[state][d]
        return self.outputs[state]


def _future_signature(s: SequencePrefix, m: int, levels: int) -> tuple | None:
    """Values ``f(m k^l + w)`` for ``l < levels``, ``w < k^l``; None if they leave the prefix."""
    k, vals = s.k, s.values
    out = []
    for level in range(levels):
        step = k ** level
        start = m * step
        if start + step > len(vals):
            return None
        out.append(vals[start:start + step])
    return tuple(out)


def build_automaton(s: SequencePrefix, depth: int) -> Automaton:
    """Most-significant-digit-first automaton for a prefix whose kernel closes at ``depth``.

    Two integers ``m, m'`` share a state when ``f(m k^l + w) = f(m' k^l + w)``
    for all levels ``l`` the prefix supports.
    """
    if isinstance(is_automatic_prefix(s, depth), NotClosedAtDepth):
        raise NotAutomatic(f"kernel is not closed at depth {depth}")
    k = s.k
    levels = depth + 2
    reps: list[int] = [0]
    sigs = [_future_signature(s, 0, levels)]
    transitions: list[list[int]] = []
    i = 0
    while i < len(reps):
        row = []
        for d in range(k):
            target = k * reps[i] + d
            if target == 0:
                row.append(0)
                continue
            sig = _future_signature(s, target, levels)
            if sig is None:
                raise PrefixTooShort(f"prefix too short to classify state {target}")
            found = next((t for t, other in enumerate(sigs) if other == sig), None)
            if found is None:
                if len(reps) >= MAX_STATES:
                    raise NotAutomatic(f"more than {MAX_STATES} states")
                reps.append(target)
                sigs.append(sig)
                found = len(reps) - 1
            row.append(found)
        transitions.append(row)
        i += 1
    outputs = tuple(s.values[r] for r in reps)
    aut = Automaton(k, tuple(reps), outputs, tuple(tuple(r) for r in transitions))
    for n in range(len(s)):
        if aut.run(n) != s.values[n]:
            raise NotAutomatic(f"automaton disagrees with the prefix at n = {n}")
    return aut


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def automaton_to_dot(aut: Automaton, name: str = "automaton") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  digit_order="msd";',
             '  start [shape=point];']
    for i in range(aut.size):
        out = _fmt(aut.outputs[i])
        lines.append(f'  {aut.label(i)} [label="{out}", output="{out}"];')
    lines.append(f"  start -> {aut.label(0)};")
    for i, row in enumerate(aut.transitions):
        for d, t in enumerate(row):
            lines.append(f'  {aut.label(i)} -> {aut.label(t)} [label="{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def automaton_export(s: SequencePrefix, depth: int) -> str:
    """DOT text for the automaton of ``s``; raises :class:`NotAutomatic` if the kernel is not closed."""
    return automaton_to_dot(build_automaton(s, depth))


# -- Thue-Morse ------------------------------------------------------------


def thue_morse(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return -1 if bin(n).count("1") & 1 else 1


def thue_morse_prefix(length: int) -> list[int]:
    return [thue_morse(n) for n in range(length)]
