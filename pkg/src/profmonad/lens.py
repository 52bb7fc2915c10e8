"""Monadic lenses with partial ``get`` and conflict-detecting ``put``.

``put(u, s)`` returns ``((view, new_source), predicate)`` or ``None``.  The
predicate accepts exactly those sources in which the view just written is
still intact; ``bind`` conjoins the predicates of both stages so a later
stage overwriting an earlier one is detected.

Maps are plain ``dict`` objects and are never mutated; every ``put`` builds
a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, Generic, Iterable, List, Optional, Tuple, TypeVar

from .core import LawSubject, PartialFn, head_option, partial, safe_head, safe_tail
from .tree import LEAF, Leaf, Node

S = TypeVar("S")
U = TypeVar("U")
V = TypeVar("V")

SourcePredicate = Callable[[Any], bool]
PutResult = Optional[Tuple[Tuple[Any, Any], SourcePredicate]]
KvMap = Dict[str, str]


def always_true(_s) -> bool:
    return True


def pred_and(p: SourcePredicate, q: SourcePredicate) -> SourcePredicate:
    if p is always_true:
        return q
    if q is always_true:
        return p
    return lambda s: p(s) and q(s)


@dataclass(frozen=True)
class Lens(Generic[S, U, V]):
    get: Callable[[S], Optional[V]]
    put: Callable[[U, S], PutResult]

    def bind(self, k: Callable[[V], "Lens"]) -> "Lens":
        return lens_bind(self, k)

    def upon(self, f) -> "Lens":
        return lens_comap(f, self)

    def __rshift__(self, other: "Lens") -> "Lens":
        return compose_vv(self, other)


def mk_lens(get, put) -> Lens:
    return Lens(get, put)


def lens_pure(x) -> Lens:
    return Lens(lambda _s: x, lambda _u, s: ((x, s), always_true))


def lens_fail() -> Lens:
    return Lens(lambda _s: None, lambda _u, _s: None)


def lens_bind(l: Lens, k: Callable[[Any], Lens]) -> Lens:
    def get(s):
        v = l.get(s)
        return None if v is None else k(v).get(s)

    def put(u, s):
        r = l.put(u, s)
        if r is None:
            return None
        (v, s1), p1 = r
        r2 = k(v).put(u, s1)
        if r2 is None:
            return None
        (w, s2), p2 = r2
        return (w, s2), pred_and(p1, p2)

    return Lens(get, put)


def to_failure(opt):
    """Lift an optional value into the putter's state/writer/failure effect."""
    if opt is None:
        return lambda _s: None
    return lambda s: ((opt, s), always_true)


def lens_comap(f, l: Lens) -> Lens:
    f = partial(f)

    def put(u, s):
        lifted = to_failure(f.apply(u))(s)
        if lifted is None:
            return None
        (u2, s1), p0 = lifted
        r = l.put(u2, s1)
        if r is None:
            return None
        return r[0], pred_and(p0, r[1])

    return Lens(l.get, put)


def lens_purify(s, l: Lens) -> PartialFn:
    """Pure projection of ``l`` at the fixed source ``s``."""

    def projection(u):
        r = l.put(u, s)
        return None if r is None else r[0][0]

    return PartialFn(projection)


def compose_vv(lt: Lens, ly: Lens) -> Lens:
    """Classical (vertical) composition: view ``s`` as ``t``, then ``t`` as ``u``."""

    def get(s):
        t = lt.get(s)
        return None if t is None else ly.get(t)

    def put(xu, s):
        t = lt.get(s)
        if t is None:
            return None
        inner = ly.put(xu, t)
        if inner is None:
            return None
        (y, xt), q = inner
        outer = lt.put(xt, s)
        if outer is None:
            return None
        (_, s2), p = outer
        return ((y, s2), p) if q(xt) else None

    return Lens(get, put)


# ---------------------------------------------------------------------------
# Key-value maps


def at_key(k: str) -> Lens:
    def put(v, m):
        if v is None or not isinstance(m, dict):
            return None
        return (v, {**m, k: v}), lambda m2: m2.get(k) == v

    return mk_lens(lambda m: m.get(k) if isinstance(m, dict) else None, put)


def at_keys(ks: List[str]) -> Lens:
    if not ks:
        return lens_pure([])
    k, rest = ks[0], ks[1:]
    return at_key(k).upon(safe_head).bind(
        lambda x: at_keys(rest).upon(safe_tail).bind(lambda xs: lens_pure([x] + xs))
    )


class KvSyntaxError(ValueError):
    pass


def parse_kv(text: str) -> KvMap:
    m: KvMap = {}
    for n, line in enumerate(text.splitlines(), 1):
        if "=" not in line:
            raise KvSyntaxError(f"line {n}: expected key=value")
        key, value = line.split("=", 1)
        if key in m:
            raise KvSyntaxError(f"line {n}: duplicate key {key!r}")
        m[key] = value
    return m


def format_kv(m: KvMap) -> str:
    return "".join(f"{k}={v}\n" for k, v in m.items())


# ---------------------------------------------------------------------------
# Trees.  A root label is viewed as ``()`` (no label, the tree is a leaf) or
# ``(n,)``.


def _root_get(t):
    if isinstance(t, Node):
        return (t.label,)
    if isinstance(t, Leaf):
        return ()
    return None


def root_l() -> Lens:
    def put(n, t):
        if not isinstance(n, tuple) or len(n) > 1 or _root_get(t) is None:
            return None
        if not n:
            t2 = LEAF
        elif isinstance(t, Leaf):
            t2 = Node(LEAF, n[0], LEAF)
        else:
            t2 = Node(t.left, n[0], t.right)
        view = _root_get(t2)
        return (n, t2), lambda t3: _root_get(t3) == view

    return mk_lens(_root_get, put)


def _right_get(t):
    return t.right if isinstance(t, Node) else None


def right_l() -> Lens:
    def put(r, t):
        if not isinstance(t, Node):
            return None
        return (r, Node(t.left, t.label, r)), lambda t2: _right_get(t2) == r

    return mk_lens(_right_get, put)


def spine_l() -> Lens:
    """The right spine of a tree as a list of labels."""

    def rest(hd):
        if not hd:
            return lens_pure([])
        (n,) = hd
        return (right_l() >> spine_l()).upon(safe_tail).bind(lambda tl: lens_pure([n] + tl))

    return root_l().upon(head_option).bind(rest)


# ---------------------------------------------------------------------------
# Round-tripping properties (vacuously true when the premise fails)


def put_get(l: Lens, x, s) -> bool:
    r = l.put(x, s)
    if r is None:
        return True
    (_, s2), p = r
    return not p(s2) or l.get(s2) == x


def get_put(l: Lens, s) -> bool:
    x = l.get(s)
    if x is None:
        return True
    r = l.put(x, s)
    return r is not None and r[0][1] == s


def weak_put_get(l: Lens, x, s, s_later) -> bool:
    r = l.put(x, s)
    if r is None:
        return True
    (y, _), p = r
    return not p(s_later) or l.get(s_later) == y


def weak_get_put(l: Lens, x, s) -> bool:
    y = l.get(s)
    r = l.put(x, s)
    if y is None or r is None or r[0][0] != y:
        return True
    return r[0][1] == s


def put_self_consistent(l: Lens, x, s) -> bool:
    r = l.put(x, s)
    if r is None:
        return True
    (_, s2), p = r
    return p(s2)


def sources_agree(pred: SourcePredicate, sources: Iterable) -> Tuple[bool, ...]:
    return tuple(bool(pred(s)) for s in sources)


# ---------------------------------------------------------------------------
# Law-harness subjects: one over key-value maps, one over trees.  Predicates
# are observed by applying them to every probe source.

PROBE_MAPS = ({}, {"k": "v"}, {"a": "1", "b": "2"}, {"k": "z", "a": "9"}, {"a": "1", "k": "v", "b": "3"})
PROBE_MAP_PREVIEWS = ("v", "w", "1", ["1", "2"], ["x"], [], ["v", "v", "v"], "", 3)


def _probe_trees():
    from .tree import parse_tree

    return tuple(parse_tree(t) for t in (
        "L", "(N L 1 L)", "(N (N L 0 L) 1 (N L 2 L))", "(N L 4 (N L 5 (N L 6 L)))",
        "(N (N L 2 L) 7 L)"))


PROBE_TREES = _probe_trees()
PROBE_TREE_PREVIEWS = ((), (3,), [], [1], [1, 2], [3, 4, 5], PROBE_TREES[0],
                       PROBE_TREES[2], (1, 2), "ab")


def _observe(l: Lens, probes_u, sources) -> list:
    out = [l.get(s) for s in sources]
    for u in probes_u:
        for s in sources:
            r = l.put(u, s)
            if r is None:
                out.append(None)
            else:
                (v, s2), p = r
                out.append(((v, s2), sources_agree(p, list(sources) + [s2])))
    return out


def law_subject(sources=PROBE_MAPS, probes_u=PROBE_MAP_PREVIEWS, name="lens-kv"):

    return LawSubject(name, lens_pure, lens_bind, lens_comap, tuple(probes_u),
                      tuple(sources), _observe, None)


def tree_law_subject():
    return law_subject(PROBE_TREES, PROBE_TREE_PREVIEWS, name="lens-tree")
