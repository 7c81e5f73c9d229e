"""Qualitative sign arithmetic.

Every quantity in a trend model is known only by its sign. Products of
signs are exact; sums of opposite signs are not, so ``qsum`` returns a
set of possible signs.
"""

from __future__ import annotations

import enum
import functools
from typing import Iterable


@functools.total_ordering
class QSign(enum.Enum):
    PLUS = "+"
    ZERO = "0"
    MINUS = "-"

    @property
    def num(self) -> int:
        return _NUM[self]

    @classmethod
    def from_num(cls, n: int) -> "QSign":
        if n > 0:
            return cls.PLUS
        if n < 0:
            return cls.MINUS
        return cls.ZERO

    @classmethod
    def parse(cls, ch: str) -> "QSign":
        # the en dash and the unicode minus both show up in pasted tables
        ch = {"–": "-", "−": "-"}.get(ch, ch)
        try:
            return cls(ch)
        except ValueError:
            raise ValueError(f"not a sign: {ch!r}") from None

    # members are singletons; identity hashing keeps set/dict lookups in C
    __hash__ = object.__hash__

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, QSign):
            return NotImplemented
        return _RANK[self] < _RANK[other]

    def __str__(self) -> str:
        return self.value

    def __repr__(self) -> str:
        return f"QSign({self.value!r})"


PLUS, ZERO, MINUS = QSign.PLUS, QSign.ZERO, QSign.MINUS
SIGNS: tuple[QSign, ...] = (PLUS, ZERO, MINUS)

_NUM = {PLUS: 1, ZERO: 0, MINUS: -1}
# canonical order: increasing first, steady in the middle, decreasing last
_RANK = {PLUS: 0, ZERO: 1, MINUS: 2}

QSignSet = frozenset  # frozenset[QSign]; the full set stands for "any direction"
ANY: frozenset[QSign] = frozenset(SIGNS)


def qmul(a: QSign, b: QSign) -> QSign:
    return QSign.from_num(a.num * b.num)


def qsq(a: QSign) -> QSign:
    return ZERO if a is ZERO else PLUS


def qneg(a: QSign) -> QSign:
    return QSign.from_num(-a.num)


def qsum(a: QSign, b: QSign) -> frozenset[QSign]:
    """Possible signs of ``a + b``; opposite nonzero signs give ``ANY``."""
    if b is ZERO:
        return frozenset((a,))
    if a is ZERO or a is b:
        return frozenset((b,))
    return ANY


def render_signs(signs: Iterable[QSign]) -> str:
    """``*`` for the full set, a single sign bare, otherwise ``[+,0]`` style."""
    members = sorted(set(signs))
    if len(members) == 3:
        return "*"
    if len(members) == 1:
        return members[0].value
    return "[" + ",".join(s.value for s in members) + "]"


def parse_signs(text: str) -> frozenset[QSign]:
    """Inverse of :func:`render_signs`; also accepts run-together signs like ``+0``."""
    text = text.strip()
    if text == "*":
        return ANY
    if text.startswith("[") and text.endswith("]"):
        parts = [p.strip() for p in text[1:-1].split(",") if p.strip()]
    else:
        parts = list(text)
    if not parts:
        raise ValueError("empty sign set")
    return frozenset(QSign.parse(p) for p in parts)
