"""Monadic-profunctor plumbing shared by biparsers, lenses and bigenerators.

Failure is represented by ``None`` throughout the package: a partial
function, a printer, a getter or a checker that cannot produce a result
returns ``None`` and never raises.  Consequently ``None`` is never a valid
success value of any bidirectional program built here.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Callable, Generic, Optional, Sequence, TypeVar

U = TypeVar("U")
V = TypeVar("V")
W = TypeVar("W")


@dataclass(frozen=True)
class PartialFn(Generic[U, V]):
    """A total function from ``U`` to ``Optional[V]``."""

    fn: Callable[[U], Optional[V]]

    def apply(self, x: U) -> Optional[V]:
        return self.fn(x)

    __call__ = apply

    def then(self, other: "PartialFn[V, W]") -> "PartialFn[U, W]":
        return partial_compose(self, other)

    def bind(self, k: Callable[[V], "PartialFn[U, W]"]) -> "PartialFn[U, W]":
        return partial_bind(self, k)

    def comap(self, f: "PartialFn[Any, U] | Callable") -> "PartialFn[Any, V]":
        return partial_comap(f, self)


def partial(f: "PartialFn[U, V] | Callable[[U], Optional[V]]") -> PartialFn[U, V]:
    """Wrap a plain callable as a :class:`PartialFn` (idempotent)."""
    return f if isinstance(f, PartialFn) else PartialFn(f)


def partial_identity() -> PartialFn[U, U]:
    return PartialFn(lambda x: x)


def partial_compose(f: PartialFn[U, V], g: PartialFn[V, W]) -> PartialFn[U, W]:
    """Left-to-right Kleisli composition of partial functions."""
    f, g = partial(f), partial(g)

    def composed(x):
        y = f.apply(x)
        return None if y is None else g.apply(y)

    return PartialFn(composed)


# Partial functions form a monadic profunctor themselves; this is the
# codomain of every purification.


def partial_pure(x: V) -> PartialFn[Any, V]:
    return PartialFn(lambda _: x)


def partial_bind(p: PartialFn[U, V], k: Callable[[V], PartialFn[U, W]]) -> PartialFn[U, W]:
    p = partial(p)

    def bound(u):
        y = p.apply(u)
        return None if y is None else partial(k(y)).apply(u)

    return PartialFn(bound)


def partial_comap(f, p: PartialFn[U, V]) -> PartialFn[Any, V]:
    return partial_compose(partial(f), p)


# Common extraction functions.  Each is defensive about the shape of its
# argument so that heterogeneous probe sets never raise.


def _safe_head(xs):
    if isinstance(xs, (str, list, tuple)) and len(xs) > 0:
        return xs[0]
    return None


def _safe_tail(xs):
    if isinstance(xs, (str, list, tuple)) and len(xs) > 0:
        return xs[1:]
    return None


safe_head: PartialFn = PartialFn(_safe_head)
safe_tail: PartialFn = PartialFn(_safe_tail)


def head_option(xs) -> Optional[tuple]:
    """Total head: ``()`` for an empty sequence, ``(x,)`` otherwise.

    Tuples of length 0 or 1 play the role of an optional value wherever
    ``None`` would be confused with failure.
    """
    if isinstance(xs, (str, list, tuple)):
        return tuple(xs[:1])
    return None


# ---------------------------------------------------------------------------
# Law harness


@dataclass(frozen=True)
class LawSubject:
    """One instantiation of the monadic-profunctor interface plus probes.

    ``probes_u`` are inputs to the backward direction (pre-views) and
    ``probes_v`` are inputs to the forward direction (texts, sources or
    seeds).  ``observe(p, probes_u, probes_v)`` runs a value on every probe
    and returns a list of comparable results; two values are equivalent
    when their observations coincide.
    """

    name: str
    pure: Callable[[Any], Any]
    bind: Callable[[Any, Callable[[Any], Any]], Any]
    comap: Callable[[Any, Any], Any]
    probes_u: Sequence[Any]
    probes_v: Sequence[Any]
    observe: Callable[[Any, Sequence[Any], Sequence[Any]], list]
    purify: Optional[Callable[[Any], PartialFn]] = field(default=None)

    def __post_init__(self):
        if not self.probes_u or not self.probes_v:
            raise ValueError("probe sets must be nonempty")

    def observations(self, p) -> list:
        return self.observe(p, self.probes_u, self.probes_v)

    def counterexample(self, p, q) -> Optional[str]:
        """Describe the first probe on which ``p`` and ``q`` differ."""
        for i, (a, b) in enumerate(zip(self.observations(p), self.observations(q))):
            if a != b:
                return f"{self.name}: observation #{i} differs: {a!r} != {b!r}"
        return None

    def equiv(self, p, q) -> bool:
        return self.counterexample(p, q) is None


def law_comap_identity(s: LawSubject, p) -> bool:
    return s.equiv(s.comap(partial_identity(), p), p)


def law_comap_compose(s: LawSubject, f, g, p) -> bool:
    lhs = s.comap(partial_compose(f, g), p)
    rhs = s.comap(f, s.comap(g, p))
    return s.equiv(lhs, rhs)


def law_monad(s: LawSubject, p, k, h, x0) -> bool:
    left_identity = s.equiv(s.bind(s.pure(x0), k), k(x0))
    right_identity = s.equiv(s.bind(p, s.pure), p)
    assoc = s.equiv(
        s.bind(s.bind(p, k), h),
        s.bind(p, lambda y: s.bind(k(y), h)),
    )
    return left_identity and right_identity and assoc


def law_promonad(s: LawSubject, f, p, k, x0) -> bool:
    """``comap f`` commutes with ``pure`` and with ``bind``.

    ``comap f (pure y)`` fails wherever ``f`` does while ``pure y`` never
    fails, so the ``pure`` equation is compared on the domain of ``f`` only.
    """
    f = partial(f)
    domain = [u for u in s.probes_u if f.apply(u) is not None]
    ret = not domain or replace(s, probes_u=domain).equiv(s.comap(f, s.pure(x0)), s.pure(x0))
    seq = s.equiv(
        s.comap(f, s.bind(p, k)),
        s.bind(s.comap(f, p), lambda y: s.comap(f, k(y))),
    )
    return ret and seq


def law_purify_homomorphism(s: LawSubject, proj, f, p, k, x0) -> bool:
    """Check that ``proj`` maps comap/bind/pure to their partial-function forms.

    All three equations are compared pointwise on ``s.probes_u``.
    """
    lhs_comap, rhs_comap = proj(s.comap(f, p)), partial_comap(f, proj(p))
    lhs_bind = proj(s.bind(p, k))
    rhs_bind = partial_bind(proj(p), lambda y: proj(k(y)))
    ret = proj(s.pure(x0))
    for u in s.probes_u:
        if lhs_comap.apply(u) != rhs_comap.apply(u):
            return False
        if lhs_bind.apply(u) != rhs_bind.apply(u):
            return False
        if ret.apply(u) != x0:
            return False
    return True


def check_injective_arrow(s: LawSubject, k, k_inv, samples: Sequence[Any]) -> bool:
    """True iff ``k_inv`` is a left arrow inverse of ``k`` on ``samples``."""
    if not samples:
        raise ValueError("samples must be nonempty")
    for x in samples:
        tagged_input = s.bind(k(x), lambda y, x=x: s.pure((x, y)))
        recovered = s.bind(k(x), lambda y: s.pure((k_inv(y), y)))
        if not s.equiv(tagged_input, recovered):
            return False
    return True
