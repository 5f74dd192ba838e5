"""Words over {d, y}, gradings, linear combinations, tensors.

A word is a plain str over the two letters; the admissible ones end in y (or
are empty) and form the basis of the quotient by the trailing-d ideal.  The
nonempty admissible words biject with index vectors of non-negative integers:

    (k_1, ..., k_n)  <->  d^{k_1} y d^{k_2} y ... d^{k_n} y

Linear combinations are finitely supported dicts word -> Fraction (WordSum)
or (word, word) -> Fraction (TensorSum), normalized to carry no zeros.  The
canonical ordering for printing and JSON is graded lexicographic — weight
first, then letterwise with d < y — which plain (len(w), w) delivers since
'd' < 'y' in ASCII.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .errors import NotAdmissible

Fr = Fraction

WordSum = dict  # word -> Fraction
TensorSum = dict  # (word, word) -> Fraction

__all__ = [
    "admissible_words",
    "depth",
    "indices_to_word",
    "is_admissible",
    "parse_word",
    "prepend",
    "project_T",
    "tensorsum_from_json",
    "tensorsum_to_json",
    "weight",
    "word_key",
    "word_to_indices",
    "wordsum_from_json",
    "wordsum_to_json",
    "ws_add",
    "ws_scale",
]


def parse_word(text: str) -> str:
    """Validate and return a word over {d, y} ("" is the empty word)."""
    for ch in text:
        if ch not in "dy":
            raise SyntaxError(f"invalid letter {ch!r} in word {text!r}")
    return text


def is_admissible(w: str) -> bool:
    return w == "" or w[-1] == "y"


def weight(w: str) -> int:
    return len(w)


def depth(w: str) -> int:
    return w.count("y")


def word_key(w: str):
    """Graded-lexicographic sort key (weight first, then d < y)."""
    return (len(w), w)


def indices_to_word(k: Iterable[int]) -> str:
    k = tuple(k)
    if not k:
        raise ValueError("index vector must have length >= 1")
    if any(ki < 0 for ki in k):
        raise ValueError("index vector entries must be non-negative")
    return "".join("d" * ki + "y" for ki in k)


def word_to_indices(w: str) -> tuple[int, ...]:
    """Inverse of indices_to_word on nonempty admissible words."""
    if w == "" or w[-1] != "y":
        raise NotAdmissible(f"word {w!r} is empty or ends in d")
    return tuple(len(run) for run in w.split("y")[:-1])


def project_T(s: WordSum) -> WordSum:
    """Drop every word ending in d (projection modulo the trailing-d ideal)."""
    return {w: c for w, c in s.items() if is_admissible(w)}


def prepend(letter: str, s: WordSum) -> WordSum:
    return {letter + w: c for w, c in s.items()}


def ws_add(*sums: WordSum) -> WordSum:
    acc: WordSum = {}
    for s in sums:
        for w, c in s.items():
            acc[w] = acc.get(w, Fr(0)) + c
    return {w: c for w, c in acc.items() if c != 0}


def ws_scale(s: WordSum, c) -> WordSum:
    c = Fr(c)
    if c == 0:
        return {}
    return {w: cv * c for w, cv in s.items()}


def admissible_words(
    max_weight: int, min_weight: int = 1, include_empty: bool = False
) -> Iterator[str]:
    """Nonempty admissible words of weight in [min_weight, max_weight],
    in canonical order; the empty word first if requested."""
    if include_empty:
        yield ""
    for n in range(max(min_weight, 1), max_weight + 1):
        for prefix in product("dy", repeat=n - 1):
            yield "".join(prefix) + "y"


# ---------------------------------------------------------------------------
# JSON forms
#   WordSum:   {"terms": [{"word": "dydy", "coeff": "1"}, ...]}
#   TensorSum: {"terms": [{"left": "dy", "right": "ddy", "coeff": "3"}, ...]}
# ---------------------------------------------------------------------------


def wordsum_to_json(s: WordSum) -> dict:
    return {
        "terms": [
            {"word": w, "coeff": str(s[w])} for w in sorted(s, key=word_key)
        ]
    }


def wordsum_from_json(obj: dict) -> WordSum:
    acc: WordSum = {}
    for term in obj["terms"]:
        w = parse_word(term["word"])
        acc[w] = acc.get(w, Fr(0)) + Fr(term["coeff"])
    return {w: c for w, c in acc.items() if c != 0}


def tensorsum_to_json(t: TensorSum) -> dict:
    ordered = sorted(t, key=lambda p: (word_key(p[0]), word_key(p[1])))
    return {
        "terms": [
            {"left": l, "right": r, "coeff": str(t[(l, r)])} for l, r in ordered
        ]
    }


def tensorsum_from_json(obj: dict) -> TensorSum:
    acc: TensorSum = {}
    for term in obj["terms"]:
        key = (parse_word(term["left"]), parse_word(term["right"]))
        acc[key] = acc.get(key, Fr(0)) + Fr(term["coeff"])
    return {k: c for k, c in acc.items() if c != 0}
