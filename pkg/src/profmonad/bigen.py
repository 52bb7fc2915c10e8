"""Bidirectional generators: a seeded random generator paired with a checker.

The generator half is a function ``Rng -> (value, Rng)``; randomness is
threaded explicitly so every draw is reproducible from its seed.  The
checker half is a partial function from pre-views to values, and its
domain is the predicate described by the bigenerator.

    >>> g = bst(0, 20)
    >>> t, _ = generate(g, Rng(7))
    >>> to_predicate(g, t)
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Any, Callable, Generic, Iterator, List, Optional, Tuple, TypeVar

from .core import LawSubject, PartialFn, partial
from .tree import LEAF, Leaf, Node, Tree, is_leaf, node_left, node_right, node_value

U = TypeVar("U")
V = TypeVar("V")

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


@dataclass(frozen=True)
class Rng:
    """SplitMix64 state.  Immutable: each draw returns the advanced state."""

    state: int

    def __post_init__(self):
        object.__setattr__(self, "state", self.state & _MASK64)

    def next_u64(self) -> Tuple[int, "Rng"]:
        state = (self.state + _GOLDEN) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31), Rng(state)

    def uniform(self) -> Tuple[float, "Rng"]:
        """A float in [0, 1) with 53 random bits."""
        z, r = self.next_u64()
        return (z >> 11) * (1.0 / (1 << 53)), r

    def randint(self, lo: int, hi: int) -> Tuple[int, "Rng"]:
        """Uniform on ``[lo, hi]`` inclusive, by rejection (no modulo bias)."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = (1 << 64) - ((1 << 64) % span)
        r = self
        while True:
            z, r = r.next_u64()
            if z < limit:
                return lo + z % span, r


Gen = Callable[[Rng], Tuple[Any, Rng]]


@dataclass(frozen=True)
class Bigen(Generic[U, V]):
    generator: Gen
    checker: Callable[[U], Optional[V]]

    def bind(self, k: Callable[[V], "Bigen"]) -> "Bigen":
        return g_bind(self, k)

    def upon(self, f) -> "Bigen":
        return g_comap(f, self)


def mk_g(gen: Gen, chk) -> Bigen:
    return Bigen(gen, chk)


def mk_aligned_g(gen: Gen, pred: Callable[[Any], bool]) -> Bigen:
    return Bigen(gen, lambda y: y if pred(y) else None)


def generate(g: Bigen, r: Rng):
    return g.generator(r)


def check(g: Bigen, u):
    return g.checker(u)


def to_predicate(g: Bigen, u) -> bool:
    return g.checker(u) is not None


def purify(g: Bigen) -> PartialFn:
    """The pure projection of a bigenerator is its checker."""
    return PartialFn(g.checker)


def g_pure(x) -> Bigen:
    return Bigen(lambda r: (x, r), lambda _u: x)


def g_bind(g: Bigen, k: Callable[[Any], Bigen]) -> Bigen:
    def generator(r):
        v, r = g.generator(r)
        return k(v).generator(r)

    def checker(u):
        v = g.checker(u)
        return None if v is None else k(v).checker(u)

    return Bigen(generator, checker)


def to_failure(opt):
    """The checker's effect is plain partiality, so the lift is the identity."""
    return opt


def g_comap(f, g: Bigen) -> Bigen:
    f = partial(f)

    def checker(u):
        u2 = to_failure(f.apply(u))
        return None if u2 is None else g.checker(u2)

    return Bigen(g.generator, checker)


def _gen_bool(p: float) -> Gen:
    def gen(r):
        x, r = r.uniform()
        return x < p, r

    return gen


def g_bool(p: float) -> Bigen:
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    return mk_aligned_g(_gen_bool(p), lambda _b: True)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def in_range(lo: int, hi: int) -> Bigen:
    return mk_aligned_g(lambda r: r.randint(lo, hi), lambda x: _is_int(x) and lo <= x <= hi)


def leaf() -> Bigen:
    return mk_aligned_g(lambda r: (LEAF, r), is_leaf)


def _is_leaf_total(t):
    if isinstance(t, (Leaf, Node)):
        return is_leaf(t)
    return None


def bst(lo: int, hi: int) -> Bigen:
    """Binary search trees with labels in ``[lo, hi]``."""
    if lo > hi:
        return leaf()

    def branch(leaf_here):
        if leaf_here:
            return g_pure(LEAF)
        return in_range(lo, hi).upon(node_value).bind(
            lambda n: bst(lo, n - 1).upon(node_left).bind(
                lambda l: bst(n + 1, hi).upon(node_right).bind(
                    lambda r: g_pure(Node(l, n, r)))))

    return g_bool(0.5).upon(_is_leaf_total).bind(branch)


def sample(g: Bigen, seed: int, count: int) -> List[Any]:
    out, r = [], Rng(seed)
    for _ in range(count):
        v, r = g.generator(r)
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# Independent oracles


def check_bst(lo: int, hi: int, t) -> bool:
    if isinstance(t, Leaf):
        return True
    if not isinstance(t, Node):
        return False
    return (lo <= t.label <= hi
            and check_bst(lo, t.label - 1, t.left)
            and check_bst(t.label + 1, hi, t.right))


def iter_bsts(lo: int, hi: int) -> Iterator[Tree]:
    yield LEAF
    for n in range(lo, hi + 1):
        for l, r in product(list(iter_bsts(lo, n - 1)), list(iter_bsts(n + 1, hi))):
            yield Node(l, n, r)


def enumerate_bsts(lo: int, hi: int) -> List[Tree]:
    """Every tree accepted by ``check_bst(lo, hi, .)``, without duplicates."""
    return list(iter_bsts(lo, hi))


# ---------------------------------------------------------------------------
# Round-tripping properties


def sound_on(g: Bigen, seed: int, draws: int) -> Optional[Any]:
    """Return the first generated value the checker rejects, if any."""
    r = Rng(seed)
    for _ in range(draws):
        v, r = g.generator(r)
        if not to_predicate(g, v):
            return v
    return None


def coverage(g: Bigen, targets, seed: int, cap: int) -> Tuple[int, set]:
    """Draw until every target has been seen or ``cap`` draws are spent.

    Returns the number of draws used and the set of targets never seen.
    """
    missing = set(targets)
    r = Rng(seed)
    draws = 0
    while missing and draws < cap:
        v, r = g.generator(r)
        missing.discard(v)
        draws += 1
    return draws, missing


def checker_projects_identity(g: Bigen, x) -> bool:
    """``check g x = Just y`` implies ``y == x`` and ``y`` is itself accepted."""
    y = g.checker(x)
    if y is None:
        return True
    return y == x and to_predicate(g, y)


# ---------------------------------------------------------------------------
# Law-harness subject

PROBE_SEEDS = (0, 1, 2, 42, 2**63 + 5)


def _probe_previews():
    from .tree import parse_tree

    return (0, 3, 10, 11, -1, True, [], [1], LEAF, parse_tree("(N (N L 0 L) 1 (N L 2 L))"),
            parse_tree("(N L 5 (N L 3 L))"), parse_tree("(N L 2 L)"))


PROBE_PREVIEWS = _probe_previews()


def _observe(g: Bigen, probes_u, seeds) -> list:
    return [g.generator(Rng(s)) for s in seeds] + [g.checker(u) for u in probes_u]


def law_subject(probes_u=PROBE_PREVIEWS, seeds=PROBE_SEEDS):

    return LawSubject("bigen", g_pure, g_bind, g_comap, tuple(probes_u), tuple(seeds),
                      _observe, purify)
