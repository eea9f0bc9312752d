"""
Braid words in the Artin generators and their closures.

A braid on n strands is stored as a tuple of nonzero integers: the letter +k is
the positive generator sigma_k (strand k crosses over strand k+1) and -k is its
inverse. Generators are 1-based, so every letter satisfies 1 <= |k| <= n-1.

The closure of a braid joins the top endpoints to the bottom endpoints in order
(the standard trace closure). Its number of components is the number of cycles
of the underlying permutation, which ignores crossing signs.
"""

from __future__ import annotations

import dataclasses

MAX_WORD_LENGTH = 10**6


class ParseError(ValueError):
    """Raised on malformed braid or front text. Carries the offending token position."""

    def __init__(self, message: str, token_index: int | None = None, offset: int | None = None):
        self.detail = message
        self.token_index = token_index
        self.offset = offset
        if token_index is not None and offset is not None:
            message = f"token {token_index + 1} (column {offset + 1}): {message}"
        elif token_index is not None:
            message = f"event {token_index + 1}: {message}"
        super().__init__(message)


class NotAKnotError(ValueError):
    """Raised when a knot-only operation receives a multi-component closure."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(k) for k in self.letters))
        if self.strands < 1:
            raise ValueError(f"strand count must be positive, got {self.strands}")
        for i, k in enumerate(self.letters):
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k} at index {i} is not a generator of the {self.strands}-strand braid group"
                )

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return render_braid(self)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def size(self) -> int:
        return len(self.images)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out

    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, self.size + 1))


def _tokens(text: str):
    """Yield (index, offset, token) for whitespace-separated tokens."""
    pos = 0
    index = 0
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        start = pos
        while pos < n and not text[pos].isspace():
            pos += 1
        yield index, start, text[start:pos]
        index += 1


def parse_braid(text: str, strands: int | None = None, max_length: int = MAX_WORD_LENGTH) -> BraidWord:
    """Parse whitespace-separated signed generator indices.

    Without ``strands`` the count is inferred as ``max|k| + 1`` (1 for the
    empty word). An explicit count must exceed every ``|k|``.
    """
    if strands is not None and strands < 1:
        raise ParseError(f"strand count must be positive, got {strands}")
    letters = []
    for index, offset, tok in _tokens(text):
        if index >= max_length:
            raise ParseError(f"word exceeds the maximum length of {max_length} letters", index, offset)
        try:
            k = int(tok, 10)
        except ValueError:
            raise ParseError(f"{tok!r} is not an integer", index, offset) from None
        if k == 0:
            raise ParseError("0 is not a braid generator", index, offset)
        if strands is not None and abs(k) >= strands:
            raise ParseError(f"generator {k} needs at least {abs(k) + 1} strands, got {strands}", index, offset)
        letters.append(k)
    if strands is None:
        strands = max((abs(k) for k in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def render_braid(b: BraidWord) -> str:
    return " ".join(str(k) for k in b.letters)


def crossing_counts(b: BraidWord) -> tuple[int, int]:
    """Return ``(x_plus, x_minus)``, the numbers of positive and negative letters."""
    x_plus = sum(1 for k in b.letters if k > 0)
    return x_plus, len(b.letters) - x_plus


def writhe(b: BraidWord) -> int:
    x_plus, x_minus = crossing_counts(b)
    return x_plus - x_minus


def closure_permutation(b: BraidWord) -> Permutation:
    # follow each strand through the word; letter k swaps positions k and k+1
    images = []
    for start in range(1, b.strands + 1):
        pos = start
        for k in b.letters:
            k = abs(k)
            if pos == k:
                pos = k + 1
            elif pos == k + 1:
                pos = k
        images.append(pos)
    return Permutation(tuple(images))


def component_count(b: BraidWord) -> int:
    return len(closure_permutation(b).cycles())


def is_knot_closure(b: BraidWord) -> bool:
    return component_count(b) == 1


def require_knot(b: BraidWord) -> None:
    c = component_count(b)
    if c != 1:
        raise NotAKnotError(f"closure of braid [{render_braid(b)}] on {b.strands} strands has {c} components")


def self_linking(b: BraidWord) -> int:
    """Self-linking number of the transverse closure: ``x_plus - x_minus - n``."""
    x_plus, x_minus = crossing_counts(b)
    return x_plus - x_minus - b.strands


def torus_braid(p: int, q: int) -> BraidWord:
    """``(sigma_1 ... sigma_{p-1})^q`` on p strands, closing to T(p, q)."""
    if p < 1 or q < 1:
        raise ValueError(f"torus braid needs p, q >= 1, got ({p}, {q})")
    return BraidWord(p, tuple(range(1, p)) * q)


def positive_resolution(b: BraidWord) -> tuple[BraidWord, int]:
    """Switch every negative crossing to a positive one; also return how many were switched."""
    _, x_minus = crossing_counts(b)
    return BraidWord(b.strands, tuple(abs(k) for k in b.letters)), x_minus


def crossing_change(b: BraidWord, index: int) -> BraidWord:
    """Negate the letter at ``index`` (0-based)."""
    if not 0 <= index < len(b.letters):
        raise IndexError(f"crossing index {index} out of range for a word of length {len(b.letters)}")
    letters = list(b.letters)
    letters[index] = -letters[index]
    return BraidWord(b.strands, tuple(letters))


def conjugate(b: BraidWord, k: int) -> BraidWord:
    """Conjugate by sigma_k: the word ``-k, b, +k``."""
    if not 1 <= k <= b.strands - 1:
        raise ValueError(f"generator index {k} out of range 1..{b.strands - 1}")
    return BraidWord(b.strands, (-k,) + b.letters + (k,))


def stabilize(b: BraidWord, sign: int) -> BraidWord:
    """Markov stabilization: add a strand and append ``sign * n``."""
    if sign not in (1, -1):
        raise ValueError(f"stabilization sign must be +1 or -1, got {sign}")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def mirror(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-k for k in b.letters))
