"""Alphabets, cyclic symbol sequences, shift operations, k-tours, and
de Bruijn sequence validation and generation.

Symbols are integer indices ``0..a-1`` rendered as the characters 0-9
then A-Z, so every sequence has an exact one-character-per-symbol text
form. Sequences are always read cyclically; there is no linear mode.
All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvariantViolation, ResourceCapError

SYMBOL_CHARS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

#: Generators and graph builders refuse instances with a**k above this cap
#: unless the caller passes a larger one explicitly.
DEFAULT_SIZE_CAP = 4096


@dataclass(frozen=True)
class Alphabet:
    """The symbol set {0, ..., size-1} with its canonical character form."""

    size: int

    def __post_init__(self) -> None:
        if not 2 <= self.size <= len(SYMBOL_CHARS):
            raise DomainError(
                f"alphabet size must be between 2 and {len(SYMBOL_CHARS)}, "
                f"got {self.size}"
            )

    @property
    def symbols(self) -> range:
        return range(self.size)

    def char(self, symbol: int) -> str:
        if not 0 <= symbol < self.size:
            raise DomainError(
                f"symbol {symbol} out of range for alphabet of size {self.size}"
            )
        return SYMBOL_CHARS[symbol]

    def decode(self, ch: str) -> int:
        symbol = SYMBOL_CHARS.find(ch) if len(ch) == 1 else -1
        if not 0 <= symbol < self.size:
            raise DomainError(
                f"character {ch!r} is not a symbol of an alphabet of size {self.size}"
            )
        return symbol


def _check_symbols(symbols: tuple[int, ...], alphabet: Alphabet) -> None:
    for s in symbols:
        if not 0 <= s < alphabet.size:
            raise DomainError(
                f"symbol {s} out of range for alphabet of size {alphabet.size}"
            )


@dataclass(frozen=True)
class KString:
    """A fixed-length word over an alphabet; labels one digraph vertex."""

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if len(self.symbols) < 1:
            raise DomainError("a k-string needs at least one symbol")
        _check_symbols(self.symbols, self.alphabet)

    @property
    def order(self) -> int:
        return len(self.symbols)

    @property
    def text(self) -> str:
        return "".join(SYMBOL_CHARS[s] for s in self.symbols)

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class CyclicSequence:
    """A symbol string read cyclically; indexing is modulo the length."""

    symbols: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        if len(self.symbols) < 1:
            raise DomainError("a cyclic sequence needs at least one symbol")
        _check_symbols(self.symbols, self.alphabet)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i % len(self.symbols)]

    @property
    def text(self) -> str:
        return "".join(SYMBOL_CHARS[s] for s in self.symbols)

    def __str__(self) -> str:
        return self.text

    def window(self, start: int, k: int) -> KString:
        n = len(self.symbols)
        return KString(
            tuple(self.symbols[(start + j) % n] for j in range(k)), self.alphabet
        )

    def rotate(self, offset: int) -> "CyclicSequence":
        off = offset % len(self.symbols)
        return CyclicSequence(self.symbols[off:] + self.symbols[:off], self.alphabet)

    def rotations(self) -> list["CyclicSequence"]:
        return [self.rotate(r) for r in range(len(self.symbols))]

    def is_least_rotation(self) -> bool:
        """True iff no rotation of this sequence is lexicographically smaller."""
        s = self.symbols
        doubled = s + s
        n = len(s)
        return all(s <= doubled[i : i + n] for i in range(n))


@dataclass(frozen=True)
class KTour:
    """All cyclic length-k windows of a sequence, one per start position."""

    windows: tuple[KString, ...]
    source: CyclicSequence
    order: int


def parse_sequence(text: str, a: int) -> CyclicSequence:
    """Decode a character string into a cyclic sequence over ``a`` symbols."""
    alphabet = Alphabet(a)
    if not text:
        raise DomainError("empty sequence text")
    symbols = []
    for pos, ch in enumerate(text):
        sym = SYMBOL_CHARS.find(ch)
        if not 0 <= sym < a:
            raise DomainError(
                f"invalid symbol {ch!r} at position {pos} for alphabet size {a}"
            )
        symbols.append(sym)
    return CyclicSequence(tuple(symbols), alphabet)


def read_sequences(text: str, a: int) -> list[CyclicSequence]:
    """Parse the sequence file format: one sequence per line, ``#`` comments."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_sequence(line, a))
        except DomainError as exc:
            raise DomainError(f"line {lineno}: {exc}") from exc
    return out


def cycle_shift(s: KString) -> KString:
    """Drop the first symbol and re-append it at the end."""
    return KString(s.symbols[1:] + s.symbols[:1], s.alphabet)


def de_bruijn_shift_successors(s: KString) -> set[KString]:
    """The a-1 left shifts appending a symbol different from the dropped one."""
    first = s.symbols[0]
    tail = s.symbols[1:]
    return {
        KString(tail + (c,), s.alphabet) for c in s.alphabet.symbols if c != first
    }


def successors(s: KString) -> list[KString]:
    """All ``a`` left shifts of ``s``, appended symbol in canonical order."""
    tail = s.symbols[1:]
    return [KString(tail + (c,), s.alphabet) for c in s.alphabet.symbols]


def k_tour(d: CyclicSequence, k: int) -> KTour:
    """All cyclic windows of length ``k`` in order, starting at position 0."""
    if k < 1:
        raise DomainError("order must be at least 1")
    if len(d) < k:
        raise DomainError(f"sequence shorter than order: length {len(d)} < k = {k}")
    return KTour(tuple(d.window(i, k) for i in range(len(d))), d, k)


def is_de_bruijn_sequence(s: CyclicSequence, k: int) -> bool:
    """True iff ``s`` has length a**k and its k-tour windows are all distinct.

    Equivalently: every k-tuple over the alphabet occurs exactly once.
    Wrong-length input yields False, never an error.
    """
    if k < 1:
        raise DomainError("order must be at least 1")
    if len(s) != s.alphabet.size ** k:
        return False
    seen = {w.symbols for w in k_tour(s, k).windows}
    return len(seen) == len(s)


def _check_generator_args(a: int, k: int, size_cap: int) -> Alphabet:
    alphabet = Alphabet(a)
    if k < 1:
        raise DomainError("order must be at least 1")
    if a**k > size_cap:
        raise ResourceCapError(f"a^k = {a ** k} exceeds size cap {size_cap}")
    return alphabet


def gen_fkm(a: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> CyclicSequence:
    """Lexicographically least de Bruijn sequence of order ``k``.

    Concatenates, in lexicographic order, every Lyndon word over the
    alphabet whose length divides ``k``. Deterministic; the canonical
    reference generator.
    """
    alphabet = _check_generator_args(a, k, size_cap)
    seq: list[int] = []
    work = [0] * (k + 1)

    def extend(t: int, p: int) -> None:
        if t > k:
            if k % p == 0:
                seq.extend(work[1 : p + 1])
            return
        work[t] = work[t - p]
        extend(t + 1, p)
        for c in range(work[t - p] + 1, a):
            work[t] = c
            extend(t + 1, t)

    extend(1, 1)
    return CyclicSequence(tuple(seq), alphabet)


def gen_greedy(a: int, k: int, size_cap: int = DEFAULT_SIZE_CAP) -> CyclicSequence:
    """Greedy de Bruijn generator seeded with k copies of the largest symbol.

    Repeatedly appends the smallest symbol whose new k-window is unused,
    then keeps the first a**k symbols once every window has appeared
    (Martin's construction). Independent of gen_fkm; output starts with
    the largest symbols, e.g. (2,2) -> 1100.
    """
    alphabet = _check_generator_args(a, k, size_cap)
    seq = [a - 1] * k
    used = {tuple(seq)}
    target = a**k
    while len(used) < target:
        tail = tuple(seq[len(seq) - k + 1 :]) if k > 1 else ()
        for c in range(a):
            window = tail + (c,)
            if window not in used:
                used.add(window)
                seq.append(c)
                break
        else:  # pragma: no cover - the greedy rule never stalls
            raise InvariantViolation(f"greedy generator stalled at length {len(seq)}")
    assert len(seq) == target + k - 1
    return CyclicSequence(tuple(seq[:target]), alphabet)
