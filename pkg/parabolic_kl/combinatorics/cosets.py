"""Coset representatives in S_N and their Robinson-Schensted tableaux."""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from parabolic_kl.combinatorics.paths import BinaryString
from parabolic_kl.utils.errors import InvalidInputError

# one-line notation, values 1..N
Permutation = Tuple[int, ...]


def validate_permutation(perm: Sequence[int]) -> Permutation:
    perm = tuple(int(v) for v in perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidInputError(f"{perm} is not a permutation of 1..{len(perm)}")
    return perm


def parse_permutation(text: str) -> Permutation:
    cleaned = text.strip().strip("()[]")
    try:
        values = [int(v) for v in cleaned.replace(",", " ").split()]
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation {text!r}")
    return validate_permutation(values)


def format_permutation(perm: Permutation) -> str:
    return "(" + ",".join(str(v) for v in perm) + ")"


@dataclass(frozen=True)
class Tableau:
    """A standard Young tableau stored row by row."""
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if r))

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        if not self.rows:
            return ()
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]))
        )

    @property
    def size(self) -> int:
        return sum(self.shape)

    def is_standard(self) -> bool:
        entries = sorted(v for row in self.rows for v in row)
        if entries != list(range(1, len(entries) + 1)):
            return False
        if any(len(a) < len(b) for a, b in zip(self.rows, self.rows[1:])):
            return False
        if any(list(row) != sorted(set(row)) for row in self.rows):
            return False
        return all(list(col) == sorted(set(col)) for col in self.columns)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]


def grassmannian(s: BinaryString) -> Permutation:
    """
    Shortest coset representative: positions of the 1s, then positions of the 2s.

    >>> grassmannian(BinaryString.parse("2112212111"))
    (2, 3, 6, 8, 9, 10, 1, 4, 5, 7)
    """
    return tuple(s.positions(1) + s.positions(2))


def longest_in_parabolic(N: int, K: int) -> Permutation:
    """w~_0: reverses 1..K and K+1..N."""
    return tuple(range(K, 0, -1)) + tuple(range(N, K, -1))


def longest_representative(s: BinaryString) -> Permutation:
    """
    sigma composed with w~_0.

    >>> longest_representative(BinaryString.parse("2112212111"))
    (10, 9, 8, 6, 3, 2, 7, 5, 4, 1)
    """
    sigma = grassmannian(s)
    w0_tilde = longest_in_parabolic(s.N, s.ones)
    return tuple(sigma[j - 1] for j in w0_tilde)


def string_from_permutation(perm: Permutation, K: int) -> BinaryString:
    """Coset of any representative: letter p is 1 iff perm^{-1}(p) <= K."""
    perm = validate_permutation(perm)
    if not 0 <= K <= len(perm):
        raise InvalidInputError(f"K={K} out of range for N={len(perm)}")
    letters = [0] * len(perm)
    for position, value in enumerate(perm, 1):
        letters[value - 1] = 1 if position <= K else 2
    return BinaryString(tuple(letters))


def _rs_insert(perm: Sequence[int]) -> Tuple[List[List[int]], List[List[int]]]:
    insertion: List[List[int]] = []
    recording: List[List[int]] = []
    for step, value in enumerate(perm, 1):
        row = 0
        while True:
            if row == len(insertion):
                insertion.append([value])
                recording.append([step])
                break
            current = insertion[row]
            pos = bisect_right(current, value)
            if pos == len(current):
                current.append(value)
                recording[row].append(step)
                break
            current[pos], value = value, current[pos]
            row += 1
    return insertion, recording


def rs_tableaux(perm: Permutation) -> Tuple[Tableau, Tableau]:
    """Insertion and recording tableaux of row-insertion Robinson-Schensted."""
    insertion, recording = _rs_insert(validate_permutation(perm))
    return Tableau(tuple(map(tuple, insertion))), Tableau(tuple(map(tuple, recording)))


def rs_first_tableau(perm: Permutation) -> Tableau:
    return rs_tableaux(perm)[0]


def rs_inverse(insertion: Tableau, recording: Tableau) -> Permutation:
    """Reverse bumping: rebuild the permutation from a pair of tableaux of equal shape."""
    if insertion.shape != recording.shape:
        raise InvalidInputError("tableaux of different shapes")
    if not insertion.is_standard() or not recording.is_standard():
        raise InvalidInputError("tableaux must be standard")
    rows = [list(r) for r in insertion.rows]
    where = {v: r for r, row in enumerate(recording.rows) for v in row}
    n = insertion.size
    result = [0] * n
    for step in range(n, 0, -1):
        row = where[step]
        value = rows[row].pop()
        for upper in range(row - 1, -1, -1):
            current = rows[upper]
            pos = bisect_left(current, value) - 1
            current[pos], value = value, current[pos]
        result[step - 1] = value
        if not rows[row]:
            rows.pop(row)
    return tuple(result)


def grassmannian_recording_tableau(N: int, K: int, second_row: int) -> Tableau:
    """The recording tableau shared by every Grassmannian permutation of shape (N-i, i)."""
    i = second_row
    first = tuple(range(1, K + 1)) + tuple(range(K + i + 1, N + 1))
    second = tuple(range(K + 1, K + i + 1))
    return Tableau((first, second))


def string_from_tableau(tableau: Tableau, K: int) -> BinaryString:
    """Inverse of s -> rs_first_tableau(grassmannian(s)) for tableaux with at most two rows."""
    if len(tableau.rows) > 2 or not tableau.is_standard():
        raise InvalidInputError("expected a standard tableau with at most two rows")
    N = tableau.size
    i = tableau.shape[1] if len(tableau.rows) == 2 else 0
    if i > min(K, N - K):
        raise InvalidInputError(f"shape {tableau.shape} is not reachable with K={K}")
    perm = rs_inverse(tableau, grassmannian_recording_tableau(N, K, i))
    return string_from_permutation(perm, K)
