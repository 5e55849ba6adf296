import re
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from gekr.exceptions import ArrayFormatError, DomainError

WORD_BITS = 64

# массив без строк хранит только число столбцов
EMPTY_HEADER_RE = re.compile(r"#\s*empty\s+0x(\d+)\s*$")

Pattern = tuple[int, int, int]
Triple = tuple[int, int, int]


@dataclass(frozen=True)
class PatternSet:
    """Подмножество {0,1}³, которое должна покрыть каждая тройка строк."""

    members: frozenset[Pattern]

    def __post_init__(self):
        if not self.members:
            raise DomainError("pattern set must be non-empty")
        for pattern in self.members:
            if len(pattern) != 3 or any(bit not in (0, 1) for bit in pattern):
                raise DomainError(f"not a binary triple: {pattern!r}")

    @classmethod
    def of(cls, patterns: Iterable[Sequence[int]]) -> "PatternSet":
        return cls(frozenset(tuple(int(b) for b in p) for p in patterns))

    @classmethod
    def parse(cls, text: str) -> "PatternSet":
        """"011,101,110,111" -> PatternSet; "gekr" и "all" задают именованные наборы."""
        name = text.strip().lower()
        if name == "gekr":
            return GEKR
        if name == "all":
            return cls.of(product((0, 1), repeat=3))
        patterns = []
        for chunk in name.replace(";", ",").split(","):
            chunk = chunk.strip().strip("()").replace(" ", "")
            if not chunk:
                continue
            if len(chunk) != 3 or set(chunk) - {"0", "1"}:
                raise DomainError(f"bad pattern {chunk!r}, expected three of 0/1")
            patterns.append(tuple(int(c) for c in chunk))
        return cls.of(patterns)

    @property
    def ordered(self) -> list[Pattern]:
        return sorted(self.members)

    def __iter__(self):
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, pattern: object) -> bool:
        return pattern in self.members

    def __str__(self) -> str:
        return ",".join("".join(map(str, p)) for p in self.ordered)


GEKR = PatternSet(frozenset({(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)}))


def word_count(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def valid_mask(n: int) -> np.ndarray:
    """Маска значащих битов по словам: хвост последнего слова обнулён."""
    mask = np.full(word_count(n), np.iinfo(np.uint64).max, dtype=np.uint64)
    tail = n % WORD_BITS
    if tail:
        mask[-1] = np.uint64((1 << tail) - 1)
    return mask


def pack_bits(bits: np.ndarray, n: int) -> np.ndarray:
    """(m, n) из 0/1 -> (m, W) uint64, бит j строки лежит в слове j // 64."""
    bits = np.asarray(bits, dtype=np.uint8).reshape(-1, n)
    padded = np.zeros((bits.shape[0], word_count(n) * WORD_BITS), dtype=np.uint8)
    padded[:, :n] = bits
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_words(words: np.ndarray, n: int) -> np.ndarray:
    as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :n]


@dataclass(frozen=True, eq=False)
class ArrayMatrix:
    """Бинарный массив m×n; строки упакованы в 64-битные слова.

    Неизменяем: массив слов помечен только для чтения и может
    разделяться между потоками проверки.
    """

    n: int
    words: np.ndarray
    declared_weight: int | None = None
    complement: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"column count must be positive, got {self.n}")
        words = np.array(self.words, dtype=np.uint64).reshape(-1, word_count(self.n))
        mask = valid_mask(self.n)
        if np.any(words & ~mask):
            raise DomainError("bits set beyond column n")
        words.setflags(write=False)
        object.__setattr__(self, "words", words)

        complement = ~words & mask
        complement.setflags(write=False)
        object.__setattr__(self, "complement", complement)

        if self.declared_weight is not None:
            k = self.declared_weight
            if not 0 <= k <= self.n:
                raise DomainError(f"declared weight {k} outside [0, {self.n}]")
            if self.m and np.any(self.weights() != k):
                raise DomainError(f"not every row has weight {k}")

    @classmethod
    def from_bits(
        cls,
        bits: Sequence[Sequence[int]] | np.ndarray,
        n: int | None = None,
        declared_weight: int | None = None,
    ) -> "ArrayMatrix":
        bits = np.asarray(bits, dtype=np.uint8)
        if n is None:
            if bits.ndim != 2:
                raise DomainError("column count is required for an empty array")
            n = bits.shape[1]
        bits = bits.reshape(-1, n)
        return cls(n=n, words=pack_bits(bits, n), declared_weight=declared_weight)

    @property
    def m(self) -> int:
        return self.words.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def row(self, i: int) -> np.ndarray:
        return self.words[i]

    def bits(self) -> np.ndarray:
        return unpack_words(self.words, self.n)

    def weights(self) -> np.ndarray:
        return np.bitwise_count(self.words).sum(axis=1, dtype=np.int64)

    def common_weight(self) -> int | None:
        weights = self.weights()
        if len(weights) and np.all(weights == weights[0]):
            return int(weights[0])
        return None

    def permute_columns(self, order: Sequence[int]) -> "ArrayMatrix":
        return ArrayMatrix.from_bits(self.bits()[:, list(order)], self.n, self.declared_weight)

    def to_text(self) -> str:
        return render_array(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArrayMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.words, other.words)

    def __hash__(self) -> int:
        return hash((self.n, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"ArrayMatrix(m={self.m}, n={self.n}, declared_weight={self.declared_weight})"


@dataclass
class DeficiencyReport:
    """Итог проверки: дефицитные тройки (i<j<l) и их непокрытые шаблоны."""

    deficient_triples: list[Triple]
    missing_patterns: list[frozenset[Pattern]]
    total_checked: int

    @property
    def deficient_count(self) -> int:
        """X, число дефицитных троек (при ранней остановке 0 или 1)."""
        return len(self.deficient_triples)

    @property
    def ok(self) -> bool:
        return not self.deficient_triples


def parse_array(text: bytes | str) -> ArrayMatrix:
    """Текстовый формат: строка массива на строку, символы 0/1, '#' начинает комментарий."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ArrayFormatError("array text is not valid UTF-8") from exc

    rows = []
    empty_n = None
    for number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#"):
            header = EMPTY_HEADER_RE.match(line)
            if header:
                empty_n = int(header.group(1))
            continue
        if not line.strip():
            continue
        line = line.strip()
        bad = set(line) - {"0", "1"}
        if bad:
            raise ArrayFormatError(f"line {number}: unexpected characters {''.join(sorted(bad))!r}")
        if rows and len(line) != len(rows[0]):
            raise ArrayFormatError(
                f"line {number}: ragged rows ({len(line)} columns, expected {len(rows[0])})"
            )
        rows.append(line)

    if not rows:
        if empty_n:
            return ArrayMatrix(n=empty_n, words=np.zeros((0, word_count(empty_n)), dtype=np.uint64))
        raise ArrayFormatError("empty input: no array rows")

    n = len(rows[0])
    bits = np.frombuffer("".join(rows).encode("ascii"), dtype=np.uint8).reshape(len(rows), n) - ord("0")
    array = ArrayMatrix.from_bits(bits, n)
    weight = array.common_weight()
    if weight is not None:
        array = ArrayMatrix(n=n, words=array.words, declared_weight=weight)
    return array


def render_array(array: ArrayMatrix) -> str:
    if array.m == 0:
        return f"# empty 0x{array.n}\n"
    bits = array.bits()
    return "".join("".join("1" if b else "0" for b in row) + "\n" for row in bits)
