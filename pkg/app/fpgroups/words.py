"""Words in a free group as tuples of signed 1-based generator indices."""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Word:
    stack: list[int] = []
    for letter in letters:
        if letter == 0:
            raise ValueError("0 is not a generator index.")
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def power(word: Sequence[int], k: int) -> Word:
    base = tuple(word) if k >= 0 else inverse(word)
    return free_reduce(base * abs(k))


def concat(*words: Sequence[int]) -> Word:
    return free_reduce(x for w in words for x in w)


def exponent_sums(word: Sequence[int], ngens: int) -> tuple[int, ...]:
    sums = [0] * ngens
    for letter in word:
        sums[abs(letter) - 1] += 1 if letter > 0 else -1
    return tuple(sums)


def format_word(word: Sequence[int], names: Sequence[str]) -> str:
    """``(1, 1, -2)`` with names ``a, b`` becomes ``a^2*b^-1``; the empty word is ``1``."""
    if not word:
        return "1"
    parts, i = [], 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = names[abs(word[i]) - 1]
        exponent = (j - i) * (1 if word[i] > 0 else -1)
        parts.append(name if exponent == 1 else f"{name}^{exponent}")
        i = j
    return "*".join(parts)
