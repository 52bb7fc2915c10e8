"""Biparsers: a parser and a printer defined together, one combinator at a time.

A :class:`Biparser` pairs

* ``forward``:  ``text -> (value, remainder) | None``
* ``backward``: ``pre_view -> (value, printed_text) | None``

and is a monadic profunctor: ``bind`` sequences both directions at once
(the parser threads the remaining input, the printer reuses the same
pre-view and concatenates output) while ``comap`` only touches the printer,
selecting which part of a larger pre-view is printed.

    >>> parse(string(), "6 lambda calculus")
    ('lambda', ' calculus')
    >>> print_(string(), "SKI")
    ('SKI', '3 SKI')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, Optional, Tuple, TypeVar

from .core import LawSubject, PartialFn, partial, safe_head, safe_tail

U = TypeVar("U")
V = TypeVar("V")
W = TypeVar("W")

DIGITS = "0123456789"


@dataclass(frozen=True)
class Biparser(Generic[U, V]):
    forward: Callable[[str], Optional[Tuple[V, str]]]
    backward: Callable[[U], Optional[Tuple[V, str]]]

    def parse(self, s: str) -> Optional[Tuple[V, str]]:
        return self.forward(s)

    def print(self, u: U) -> Optional[Tuple[V, str]]:
        return self.backward(u)

    def bind(self, k: Callable[[V], "Biparser[U, W]"]) -> "Biparser[U, W]":
        return bind(self, k)

    def upon(self, f) -> "Biparser":
        """``comap`` with flipped arguments: print ``self`` on ``f(u)``."""
        return comap(f, self)

    def map(self, fn: Callable[[V], W]) -> "Biparser[U, W]":
        return bind(self, lambda v: pure(fn(v)))


def mk_biparser(fwd, bwd) -> Biparser:
    return Biparser(fwd, bwd)


def parse(p: Biparser, s: str):
    return p.forward(s)


def print_(p: Biparser, u):
    return p.backward(u)


def pure(x) -> Biparser:
    return Biparser(lambda s: (x, s), lambda _: (x, ""))


def fail() -> Biparser:
    """The biparser that fails in both directions."""
    return Biparser(lambda _: None, lambda _: None)


def bind(p: Biparser, k: Callable[[Any], Biparser]) -> Biparser:
    def forward(s):
        r = p.forward(s)
        if r is None:
            return None
        v, rest = r
        return k(v).forward(rest)

    def backward(u):
        r = p.backward(u)
        if r is None:
            return None
        v, out = r
        r2 = k(v).backward(u)
        if r2 is None:
            return None
        w, out2 = r2
        return w, out + out2

    return Biparser(forward, backward)


def to_failure(opt):
    """Lift an optional value into the printer's writer-with-failure effect."""
    return None if opt is None else (opt, "")


def comap(f, p: Biparser) -> Biparser:
    f = partial(f)

    def backward(u):
        lifted = to_failure(f.apply(u))
        if lifted is None:
            return None
        u2, out = lifted
        r = p.backward(u2)
        return None if r is None else (r[0], out + r[1])

    return Biparser(p.forward, backward)


def purify(p: Biparser) -> PartialFn:
    """Drop the printed text, keeping only the printer's value."""

    def pure_projection(u):
        r = p.backward(u)
        return None if r is None else r[0]

    return PartialFn(pure_projection)


# ---------------------------------------------------------------------------
# Primitive and derived biparsers


def _char_forward(s):
    if not s:
        return None
    return s[0], s[1:]


def _char_backward(c):
    if isinstance(c, str) and len(c) == 1:
        return c, c
    return None


def char() -> Biparser:
    return mk_biparser(_char_forward, _char_backward)


def digits() -> Biparser:
    """A run of decimal digits terminated by one space; the space is kept."""

    def after_head(d):
        if d in DIGITS:
            return digits().upon(safe_tail).bind(lambda igits: pure(d + igits))
        if d == " ":
            return pure(" ")
        return fail()

    return char().upon(safe_head).bind(after_head)


def _printed_int(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        return None
    return f"{n} "


def _read_decimal(ds):
    run = ds[:-1]
    return pure(int(run)) if run else fail()


def int_() -> Biparser:
    """A nonnegative decimal integer followed by one space."""
    return digits().upon(_printed_int).bind(_read_decimal)


def replicate_bp(n: int, p: Biparser) -> Biparser:
    """Run ``p`` exactly ``n`` times; the printer consumes a sequence's prefix."""
    if n < 0:
        raise ValueError("replicate count must be nonnegative")
    if n == 0:
        return pure([])
    return p.upon(safe_head).bind(
        lambda v: replicate_bp(n - 1, p).upon(safe_tail).bind(lambda vs: pure([v] + vs))
    )


def _length(xs):
    return len(xs) if isinstance(xs, (str, list, tuple)) else None


length = PartialFn(_length)


def string() -> Biparser:
    """Length-prefixed text: ``<decimal length><SPACE><payload>``."""
    return int_().upon(length).bind(lambda n: replicate_bp(n, char())).map("".join)


# ---------------------------------------------------------------------------
# Directly coded parser and printer for the same wire format.  They share no
# code with the combinators above and serve as a cross-check.


def oracle_print_string(x: str) -> str:
    return str(len(x)) + " " + x


def oracle_parse_string(s: str) -> Optional[Tuple[str, str]]:
    i = 0
    while i < len(s) and s[i] in DIGITS:
        i += 1
    if i == 0 or i >= len(s) or s[i] != " ":
        return None
    n = int(s[:i])
    body = s[i + 1:]
    if len(body) < n:
        return None
    return body[:n], body[n:]


# ---------------------------------------------------------------------------
# Round-tripping properties.  Each returns True when the property holds for
# the given inputs, vacuously so when its premise fails.


def backward_rt(p: Biparser, x, suffix: str) -> bool:
    r = p.backward(x)
    if r is None:
        return True
    return p.forward(r[1] + suffix) == (x, suffix)


def forward_rt(p: Biparser, s: str) -> bool:
    r = p.forward(s)
    if r is None or r[1] != "":
        return True
    printed = p.backward(r[0])
    return printed is not None and printed[1] == s


def weak_backward_rt(p: Biparser, x, suffix: str) -> bool:
    r = p.backward(x)
    if r is None:
        return True
    y, s = r
    return p.forward(s + suffix) == (y, suffix)


def weak_forward_rt(p: Biparser, x, s01: str) -> bool:
    parsed = p.forward(s01)
    printed = p.backward(x)
    if parsed is None or printed is None:
        return True
    (y, s1), (y2, s0) = parsed, printed
    if y != y2:
        return True
    return s01 == s0 + s1


# ---------------------------------------------------------------------------
# Law-harness subject

PROBE_PREVIEWS = ("", "a", "x", "abc", "12 ", "12 xyz", "007 z", "4a ", " ", "lambda",
                  0, 7, 42, -3, ["q", "r"], [], ("a", "b", "c"))
PROBE_TEXTS = ("", "a", "abc", "6 lambda calculus", "3 SKI", "0 rest", "12 x", " x",
               "00 y", "5 ab", "9", "2 é中!")


def _observe(p: Biparser, probes_u, probes_v) -> list:
    return [p.forward(s) for s in probes_v] + [p.backward(u) for u in probes_u]


def law_subject(probes_u=PROBE_PREVIEWS, probes_v=PROBE_TEXTS):

    return LawSubject("biparser", pure, bind, comap, tuple(probes_u), tuple(probes_v),
                      _observe, purify)
