"""Monoid models and exact element enumeration up to a degree cutoff.

The central object is the :class:`ElementTable`: a frozen enumeration of all
elements of degree <= cutoff, with degree, product, divisibility and atom
queries.  Tables are immutable after construction and safe to share across
threads; models memoize one table per cutoff.

Two model families live here:

* :class:`RewriteModel` wraps a positive homogeneous presentation.  Elements
  of one degree are computed exhaustively: every word of that degree is
  generated, single-relation substring substitutions (degree preserving, by
  homogeneity) connect words, and the classes are the connected components.
  Canonical representatives are shortlex-least (length, then declaration
  order).  Exhaustive closure is exact for any homogeneous presentation, at
  the price of a word count that may grow exponentially with the degree; a
  per-degree word cap turns runaway enumerations into a clean error.  When
  every generator has the same degree the closure is run vectorized over
  integer-encoded words; the general path handles mixed degrees word by
  word.  Both produce identical tables.

* :class:`MultIntegerModel` is the positive integers under multiplication
  with multiplicative-integer degree keys; enumeration up to a cutoff just
  lists 1..cutoff.

The normal-form family model is in :mod:`skewgrowth.mp_family`.
"""
from __future__ import annotations

import abc
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .dirichlet import KeyKind, coerce_key, key_add, key_sub, key_zero, render_key
from .errors import (
    CutoffTooLargeError,
    EmptyAlphabetError,
    InvalidParamsError,
    NoWitnessError,
)
from .presentation import Presentation

DEFAULT_WORD_CAP = 10_000_000


@dataclass(frozen=True)
class CancellativityViolation:
    """Evidence that left cancellation fails: left * first == left * second
    with first != second.  Element ids refer to the table that produced it."""

    left: int
    first: int
    second: int


class ElementTable(abc.ABC):
    """Enumerated elements of a monoid up to a degree cutoff.

    Element ids are dense integers ordered by (degree, canonical form);
    id 0 is always the unit.  The table is complete and duplicate-free for
    every degree <= cutoff.
    """

    kind: str

    def __init__(self, key_kind: KeyKind, cutoff, degrees: list, by_degree: dict):
        self.key_kind = key_kind
        self.cutoff = cutoff
        self._degrees = degrees
        self._by_degree = by_degree
        self._realized = tuple(sorted(by_degree))
        self._atoms: tuple[int, ...] | None = None
        self._poset = None

    # -- basic queries ------------------------------------------------------

    @property
    def n_elements(self) -> int:
        return len(self._degrees)

    @property
    def unit(self) -> int:
        return 0

    def degree(self, eid: int):
        return self._degrees[eid]

    def realized_degrees(self) -> tuple:
        return self._realized

    def elements_of_degree(self, degree) -> tuple[int, ...]:
        return self._by_degree.get(degree, ())

    def all_elements(self) -> range:
        return range(len(self._degrees))

    @abc.abstractmethod
    def product(self, u: int, v: int) -> int | None:
        """Element id of u*v, or None when the degree exceeds the cutoff.
        Out-of-range is an expected value, not a failure."""

    @abc.abstractmethod
    def label(self, eid: int) -> str:
        """Canonical human-readable form; stable across runs and cutoffs."""

    # -- divisibility by witness scan ----------------------------------------

    def left_divides(self, u: int, v: int) -> bool:
        """True when some x solves u*x == v.  Decided exactly by scanning
        the full degree slice deg(v) - deg(u)."""
        if u == v:
            return True
        rest = key_sub(self.key_kind, self._degrees[v], self._degrees[u])
        if rest is None:
            return False
        return any(self.product(u, x) == v for x in self.elements_of_degree(rest))

    def left_quotients(self, u: int, v: int) -> list[int]:
        rest = key_sub(self.key_kind, self._degrees[v], self._degrees[u])
        if rest is None:
            return []
        return [x for x in self.elements_of_degree(rest) if self.product(u, x) == v]

    def left_quotient(self, u: int, v: int) -> int | CancellativityViolation:
        """The unique x with u*x == v.  Raises NoWitnessError when v is not
        a right multiple of u; two distinct witnesses are returned as a
        CancellativityViolation value rather than hidden."""
        witnesses = self.left_quotients(u, v)
        if not witnesses:
            raise NoWitnessError(
                f"{self.label(v)} is not a right multiple of {self.label(u)}"
            )
        if len(witnesses) > 1:
            return CancellativityViolation(u, witnesses[0], witnesses[1])
        return witnesses[0]

    # -- atoms ---------------------------------------------------------------

    def atoms(self) -> tuple[int, ...]:
        """Elements u != 1 with no proper divisor besides the unit: exactly
        the non-units that are not a product of two non-units within the
        cutoff.  Exact at every degree <= cutoff."""
        if self._atoms is None:
            non_atoms: set[int] = set()
            positive = [d for d in self._realized if self.elements_of_degree(d) and d != key_zero(self.key_kind)]
            for du in positive:
                for dx in positive:
                    if key_add(self.key_kind, du, dx) > self.cutoff:
                        continue
                    for u in self.elements_of_degree(du):
                        for x in self.elements_of_degree(dx):
                            non_atoms.add(self.product(u, x))
            self._atoms = tuple(
                eid for eid in self.all_elements()
                if eid != self.unit and eid not in non_atoms
            )
        return self._atoms

    def poset(self):
        """Memoized left-divisibility poset for this table."""
        if self._poset is None:
            from .divisibility import DivPoset

            self._poset = DivPoset.build(self)
        return self._poset


# ---------------------------------------------------------------------------
# presentation-backed model
# ---------------------------------------------------------------------------

def _validate_cutoff(key_kind: KeyKind, cutoff):
    cutoff = coerce_key(key_kind, cutoff)
    if cutoff <= key_zero(key_kind):
        raise ValueError(f"cutoff must exceed the zero degree, got {cutoff}")
    return cutoff


class RewriteModel:
    """A monoid given by a positive homogeneous presentation."""

    kind = "rewrite-presented"

    def __init__(self, presentation: Presentation, word_cap: int = DEFAULT_WORD_CAP,
                 default_cutoff=Fraction(8), name: str | None = None):
        self.presentation = presentation
        self.word_cap = int(word_cap)
        self.default_cutoff = Fraction(default_cutoff)
        self.name = name or "presented"
        self.key_kind = KeyKind.RATIONAL
        self._tables: dict = {}

    def enumerate_up_to(self, cutoff, force_general: bool = False) -> "RewriteTable":
        cutoff = _validate_cutoff(KeyKind.RATIONAL, cutoff)
        key = (cutoff, force_general)
        if key not in self._tables:
            self._tables[key] = RewriteTable(
                self.presentation, cutoff, self.word_cap, force_general
            )
        return self._tables[key]


class RewriteTable(ElementTable):
    kind = "rewrite-presented"

    def __init__(self, presentation: Presentation, cutoff: Fraction, word_cap: int,
                 force_general: bool = False):
        if not presentation.generators:
            raise EmptyAlphabetError("presentation declares no generators")
        self.presentation = presentation
        # generators of degree > cutoff cannot occur in any enumerated word
        self._gen_names = [g.name for g in presentation.generators if g.degree <= cutoff]
        self._gen_degrees = [g.degree for g in presentation.generators if g.degree <= cutoff]
        self._joiner = "" if all(len(n) == 1 for n in self._gen_names) else " "
        name_to_idx = {n: i for i, n in enumerate(self._gen_names)}

        # relations whose sides fit under the cutoff, as index tuples, with
        # both orientations collapsed to one unordered pair
        rules: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
        for rel in presentation.relations:
            if any(n not in name_to_idx for n in rel.lhs + rel.rhs):
                continue  # mentions a generator too heavy for this cutoff
            lhs = tuple(name_to_idx[n] for n in rel.lhs)
            rhs = tuple(name_to_idx[n] for n in rel.rhs)
            if lhs == rhs:
                continue
            rules.add((min(lhs, rhs), max(lhs, rhs)))
        self._rules = sorted(rules)

        uniform = len(set(self._gen_degrees)) == 1 and not force_general
        self._uniform = uniform
        degrees: list = []
        by_degree: dict = {}
        self._words: list[tuple[int, ...]] = []
        if uniform and self._gen_names:
            self._levels: dict[int, _UniformLevel] = {}
            self._enumerate_uniform(cutoff, word_cap, degrees, by_degree)
        else:
            self._word_class: dict[tuple[int, ...], int] = {}
            self._enumerate_general(cutoff, word_cap, degrees, by_degree)
        super().__init__(KeyKind.RATIONAL, cutoff, degrees, by_degree)

    # -- uniform-degree path --------------------------------------------------

    def _enumerate_uniform(self, cutoff, word_cap, degrees, by_degree):
        delta = self._gen_degrees[0]
        k = len(self._gen_names)
        max_len = int(cutoff / delta)
        enc_rules = []
        for lhs, rhs in self._rules:
            # uniform degrees force equal side lengths
            ell = len(lhs)
            enc_rules.append((_encode(lhs, k), _encode(rhs, k), ell))
        for length in range(max_len + 1):
            count = k ** length
            if count > word_cap:
                raise CutoffTooLargeError(
                    f"{count} words of degree {length * delta} exceed the word cap {word_cap}"
                )
            level = _close_uniform_level(length, k, enc_rules)
            level.first_eid = len(degrees)
            self._levels[length] = level
            degree = delta * length
            eids = []
            for rep in level.rep_encs:
                eid = len(degrees)
                degrees.append(degree)
                self._words.append(_decode(int(rep), length, k))
                eids.append(eid)
            by_degree[degree] = tuple(eids)
        self._delta, self._k = delta, k

    # -- general path ----------------------------------------------------------

    def _enumerate_general(self, cutoff, word_cap, degrees, by_degree):
        gen_degrees = self._gen_degrees
        reachable = _degree_closure(gen_degrees, cutoff)
        words_at: dict[Fraction, list[tuple[int, ...]]] = {Fraction(0): [()]}
        for target in reachable:
            if target == 0:
                continue
            bucket: list[tuple[int, ...]] = []
            for gi, gd in enumerate(gen_degrees):
                lower = words_at.get(target - gd)
                if lower is None:
                    continue
                bucket.extend((gi,) + w for w in lower)
                if len(bucket) > word_cap:
                    raise CutoffTooLargeError(
                        f"more than {word_cap} words at degree {target}"
                    )
            if bucket:
                words_at[target] = bucket

        for target in sorted(words_at):
            bucket = words_at[target]
            classes = _close_word_bucket(bucket, self._rules)
            degree = target
            eids = []
            for members in classes:  # already sorted by shortlex-least member
                eid = len(degrees)
                degrees.append(degree)
                self._words.append(min(members, key=lambda w: (len(w), w)))
                for w in members:
                    self._word_class[w] = eid
                eids.append(eid)
            by_degree[degree] = tuple(eids)

    # -- queries ---------------------------------------------------------------

    def word(self, eid: int) -> tuple[int, ...]:
        return self._words[eid]

    def word_degree(self, word: Sequence[int]) -> Fraction:
        return sum((self._gen_degrees[i] for i in word), Fraction(0))

    def class_of_word(self, word: Sequence[int]) -> int | None:
        """Element id of an arbitrary word, or None past the cutoff."""
        word = tuple(word)
        if self._uniform:
            level = self._levels.get(len(word))
            if level is None:
                return None
            enc = _encode(word, self._k)
            if level.labels is None:
                return level.first_eid + enc
            return level.first_eid + int(level.comp_rank[level.labels[enc]])
        if self.word_degree(word) > self.cutoff:
            return None
        return self._word_class[word]

    def class_of_names(self, names: Sequence[str]) -> int | None:
        degrees = {g.name: g.degree for g in self.presentation.generators}
        for name in names:
            if name not in degrees:
                raise KeyError(f"unknown generator {name!r}")
        if sum((degrees[n] for n in names), Fraction(0)) > self.cutoff:
            return None
        index = {n: i for i, n in enumerate(self._gen_names)}
        return self.class_of_word(tuple(index[n] for n in names))

    def product(self, u: int, v: int) -> int | None:
        if key_add(self.key_kind, self._degrees[u], self._degrees[v]) > self.cutoff:
            return None
        return self.class_of_word(self._words[u] + self._words[v])

    def label(self, eid: int) -> str:
        word = self._words[eid]
        if not word:
            return "1"
        return self._joiner.join(self._gen_names[i] for i in word)


@dataclass
class _UniformLevel:
    labels: np.ndarray | None  # enc -> component, or None when classes are trivial
    comp_rank: np.ndarray | None  # component -> index in rep order
    rep_encs: np.ndarray  # sorted canonical encodings
    first_eid: int = 0


def _encode(word: Sequence[int], k: int) -> int:
    enc = 0
    for letter in word:
        enc = enc * k + letter
    return enc


def _decode(enc: int, length: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        enc, letter = divmod(enc, k)
        out.append(letter)
    return tuple(reversed(out))


def _close_uniform_level(length: int, k: int, enc_rules) -> _UniformLevel:
    """Partition all k**length words into rewrite classes, vectorized.

    Words are base-k integers, most significant letter first.  For a rule
    with encoded sides (a, b) of length ell at position i, the words carrying
    pattern a at i are exactly those whose digit window equals a, and the
    substitution is the constant shift (b - a) * k**(length - i - ell); the
    class partition is then one connected-components run over all windows.
    """
    count = k ** length
    applicable = [r for r in enc_rules if r[2] <= length]
    if not applicable:
        return _UniformLevel(None, None, np.arange(count, dtype=np.int64))

    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    dtype = np.int32 if count <= np.iinfo(np.int32).max else np.int64
    enc = np.arange(count, dtype=dtype)
    two_power = k & (k - 1) == 0
    bits = k.bit_length() - 1
    rows, cols = [], []
    for enc_a, enc_b, ell in applicable:
        span = k ** ell
        for pos in range(length - ell + 1):
            shift = k ** (length - pos - ell)
            if two_power:
                window = (enc >> (bits * (length - pos - ell))) & (span - 1)
            else:
                window = (enc // shift) % span
            hits = np.nonzero(window == enc_a)[0].astype(dtype, copy=False)
            if hits.size:
                rows.append(hits)
                cols.append(hits + dtype((enc_b - enc_a) * shift))
    if not rows:
        return _UniformLevel(None, None, np.arange(count, dtype=np.int64))
    row = np.concatenate(rows)
    col = np.concatenate(cols)
    graph = coo_matrix(
        (np.ones(len(row), dtype=np.int8), (row, col)), shape=(count, count)
    )
    n_comp, labels = connected_components(graph, directed=False)
    if n_comp == count:
        return _UniformLevel(None, None, np.arange(count, dtype=np.int64))
    # first occurrence of each label value is the least encoding in the class
    _, rep = np.unique(labels, return_index=True)
    order = np.argsort(rep)
    comp_rank = np.empty(n_comp, dtype=np.int64)
    comp_rank[order] = np.arange(n_comp)
    return _UniformLevel(labels, comp_rank, np.sort(rep))


def _degree_closure(gen_degrees: Iterable[Fraction], cutoff: Fraction) -> list[Fraction]:
    """All degrees <= cutoff realizable as sums of generator degrees."""
    base = sorted(set(gen_degrees))
    seen = {Fraction(0)}
    frontier = [Fraction(0)]
    while frontier:
        current = frontier.pop()
        for d in base:
            nxt = current + d
            if nxt <= cutoff and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen)


def _close_word_bucket(bucket: list[tuple[int, ...]], rules) -> list[list[tuple[int, ...]]]:
    """Union words of one degree under single-rule substring substitutions.

    Returns classes as member lists, ordered by their shortlex-least member.
    Replacing lhs by rhs only (per unordered rule) already yields every
    undirected substitution edge.
    """
    index = {w: i for i, w in enumerate(bucket)}
    parent = list(range(len(bucket)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for word, wid in index.items():
        for lhs, rhs in rules:
            ell = len(lhs)
            for pos in range(len(word) - ell + 1):
                if word[pos:pos + ell] != lhs:
                    continue
                neighbor = word[:pos] + rhs + word[pos + ell:]
                ra, rb = find(wid), find(index[neighbor])
                if ra != rb:
                    parent[rb] = ra

    classes: dict[int, list[tuple[int, ...]]] = {}
    for word, wid in index.items():
        classes.setdefault(find(wid), []).append(word)
    return sorted(classes.values(), key=lambda ws: min((len(w), w) for w in ws))


# ---------------------------------------------------------------------------
# positive integers under multiplication
# ---------------------------------------------------------------------------

class MultIntegerModel:
    """The positive integers under multiplication, degree key = the integer
    itself (standing for log n).  ``nmax`` is the default enumeration bound."""

    kind = "multiplicative-integer"

    def __init__(self, nmax: int):
        nmax = int(nmax)
        if nmax < 1:
            raise InvalidParamsError(f"nmax must be >= 1, got {nmax}")
        self.nmax = nmax
        self.default_cutoff = nmax
        self.name = f"zpos:{nmax}"
        self.key_kind = KeyKind.MULTINT
        self._tables: dict = {}

    def enumerate_up_to(self, cutoff=None) -> "MultIntTable":
        cutoff = self.nmax if cutoff is None else cutoff
        cutoff = _validate_cutoff(KeyKind.MULTINT, cutoff)
        if cutoff not in self._tables:
            self._tables[cutoff] = MultIntTable(cutoff)
        return self._tables[cutoff]


class MultIntTable(ElementTable):
    kind = "multiplicative-integer"

    def __init__(self, cutoff: int):
        degrees = list(range(1, cutoff + 1))
        by_degree = {n: (n - 1,) for n in degrees}
        super().__init__(KeyKind.MULTINT, cutoff, degrees, by_degree)

    def value(self, eid: int) -> int:
        return eid + 1

    def element_id(self, n: int) -> int | None:
        return n - 1 if 1 <= n <= self.cutoff else None

    def product(self, u: int, v: int) -> int | None:
        n = (u + 1) * (v + 1)
        return n - 1 if n <= self.cutoff else None

    def label(self, eid: int) -> str:
        return str(eid + 1)
