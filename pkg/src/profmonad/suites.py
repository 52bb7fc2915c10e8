"""Registered law and round-trip suites, run by ``profmonad laws``.

Every suite receives its own ``random.Random`` seeded from the global seed
and the suite name, plus a case budget, and returns ``None`` on success or a
counterexample description.  Library values are looked up through their
modules at run time so tests can substitute a mutated combinator.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional

from . import bigen, biparser, core, lens
from .tree import LEAF, Node, format_tree

# ---------------------------------------------------------------------------
# Random inputs


def random_scalar(rnd: random.Random) -> str:
    """One unicode scalar value, biased towards characters the format cares about."""
    roll = rnd.random()
    if roll < 0.3:
        return rnd.choice("0123456789 ")
    if roll < 0.6:
        return chr(rnd.randrange(0x20, 0x7F))
    while True:
        cp = rnd.randrange(0, 0x110000)
        if not 0xD800 <= cp <= 0xDFFF:
            return chr(cp)


def random_text(rnd: random.Random, max_len: int = 100) -> str:
    return "".join(random_scalar(rnd) for _ in range(rnd.randint(0, max_len)))


def random_canonical_int(rnd: random.Random) -> int:
    return rnd.choice([0, rnd.randint(1, 9), rnd.randint(10, 999), rnd.randrange(10**12)])


def random_digit_run(rnd: random.Random) -> str:
    return "".join(rnd.choice("0123456789") for _ in range(rnd.randint(0, 6))) + " "


def canonical_prefix(s: str) -> str:
    """Strip redundant leading zeros so an integer prefix is canonical."""
    return re.sub(r"^0+(?=[0-9])", "", s)


def random_tree(rnd: random.Random, depth: int = 4, lo: int = -2, hi: int = 6):
    if depth == 0 or rnd.random() < 0.3:
        return LEAF
    return Node(random_tree(rnd, depth - 1, lo, hi), rnd.randint(lo, hi),
                random_tree(rnd, depth - 1, lo, hi))


def random_kv(rnd: random.Random, keys="abck") -> dict:
    return {k: str(rnd.randint(0, 3)) for k in keys if rnd.random() < 0.5}


def random_keys(rnd: random.Random, keys="abck", max_len: int = 4) -> List[str]:
    return [rnd.choice(keys) for _ in range(rnd.randint(0, max_len))]


def random_values(rnd: random.Random, n: int) -> List[str]:
    return [str(rnd.randint(0, 3)) for _ in range(n)]


# ---------------------------------------------------------------------------
# Suite plumbing


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[[random.Random, int], Optional[str]]


@dataclass(frozen=True)
class SuiteResult:
    name: str
    counterexample: Optional[str]

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def for_cases(cases: int, draw, prop, describe=repr) -> Optional[str]:
    """Run ``prop(*draw())`` ``cases`` times and report the first failure."""
    for _ in range(cases):
        args = draw()
        if not prop(*args):
            return describe(args)
    return None


def first_failure(checks: Iterable) -> Optional[str]:
    """``checks`` yields ``(label, ok)``; return the first failing label."""
    for label, ok in checks:
        if not ok:
            return label
    return None


# ---------------------------------------------------------------------------
# Biparser suites

BP = biparser


def _bp_aligned():
    """(name, biparser, draw pre-view) for aligned combinators."""
    return [
        ("char", BP.char(), lambda r: random_scalar(r)),
        ("int", BP.int_(), random_canonical_int),
        ("string", BP.string(), random_text),
    ]


def _bp_all():
    """(name, biparser, draw pre-view, draw forward input) for every combinator."""

    def text_or_encoding(r):
        s = BP.oracle_print_string(random_text(r, 20)) + random_text(r, 5) if r.random() < 0.7 else random_text(r, 10)
        return canonical_prefix(s)

    def int_text(r):
        s = f"{random_canonical_int(r)} " + random_text(r, 5) if r.random() < 0.8 else random_text(r, 6)
        return canonical_prefix(s)

    def digit_text(r):
        return random_digit_run(r) + random_text(r, 5) if r.random() < 0.8 else random_text(r, 6)

    rep_n = 7
    return [
        ("char", BP.char(), lambda r: random_scalar(r), lambda r: random_text(r, 5)),
        ("digits", BP.digits(), lambda r: random_digit_run(r) + (random_text(r, 4) if r.random() < 0.3 else ""), digit_text),
        ("int", BP.int_(), random_canonical_int, int_text),
        (f"replicate_bp({rep_n},char)", BP.replicate_bp(rep_n, BP.char()),
         lambda r: list(random_text(r, 12)), lambda r: random_text(r, 12)),
        ("string", BP.string(), random_text, text_or_encoding),
        ("comap(safe_head,char)", BP.char().upon(core.safe_head), lambda r: random_text(r, 4), lambda r: random_text(r, 4)),
        ("comap(length,int)", BP.int_().upon(BP.length), lambda r: random_text(r, 30), int_text),
    ]


def bp_backward_rt(rnd, cases):
    for name, p, draw_x in _bp_aligned():
        bad = for_cases(cases, lambda: (draw_x(rnd), random_text(rnd, 10)),
                        lambda x, s2: BP.backward_rt(p, x, s2),
                        lambda a: f"{name}: print then parse of {a[0]!r} with suffix {a[1]!r}")
        if bad:
            return bad
    return None


def bp_weak_backward_rt(rnd, cases):
    for name, p, draw_x, _ in _bp_all():
        bad = for_cases(cases, lambda: (draw_x(rnd), random_text(rnd, 10)),
                        lambda x, s2: BP.weak_backward_rt(p, x, s2),
                        lambda a: f"{name}: pre-view {a[0]!r}, suffix {a[1]!r}")
        if bad:
            return bad
    return None


def bp_weak_forward_rt(rnd, cases):
    for name, p, draw_x, draw_s in _bp_all():
        def draw():
            s01 = draw_s(rnd)
            parsed = p.forward(s01)
            # Half the time print the parsed value back, otherwise a random pre-view.
            x = parsed[0] if parsed is not None and rnd.random() < 0.5 else draw_x(rnd)
            return x, s01

        bad = for_cases(cases, draw, lambda x, s01: BP.weak_forward_rt(p, x, s01),
                        lambda a: f"{name}: pre-view {a[0]!r}, input {a[1]!r}")
        if bad:
            return bad
    return None


def bp_forward_rt_string(rnd, cases):
    p = BP.string()
    return for_cases(cases, lambda: (BP.oracle_print_string(random_text(rnd)),),
                     lambda s: p.forward(s) is not None and BP.forward_rt(p, s),
                     lambda a: f"string: canonical encoding {a[0]!r}")


def bp_identity_projection(rnd, cases):
    proj = BP.purify(BP.string())
    return for_cases(cases, lambda: (random_text(rnd),), lambda x: proj(x) == x,
                     lambda a: f"purify(string)({a[0]!r}) != {a[0]!r}")


def bp_oracle_agreement(rnd, cases):
    p = BP.string()

    def draw():
        x = random_text(rnd)
        s = BP.oracle_print_string(random_text(rnd, 30)) + random_text(rnd, 10)
        if rnd.random() < 0.3:
            s = s[: rnd.randint(0, len(s))]
        return x, s

    def agree(x, s):
        printed = p.backward(x)
        return (p.forward(s) == BP.oracle_parse_string(s)
                and printed is not None and printed[1] == BP.oracle_print_string(x))

    return for_cases(cases, draw, agree, lambda a: f"payload {a[0]!r}, encoding {a[1]!r}")


def bp_prefix_consumption(rnd, cases):
    for name, p, _, draw_s in _bp_all():
        def consumed_prefix(s):
            r = p.forward(s)
            return r is None or s.endswith(r[1]) and len(r[1]) <= len(s)

        bad = for_cases(cases, lambda: (draw_s(rnd),), consumed_prefix, lambda a: f"{name}: {a[0]!r}")
        if bad:
            return bad
    return None


# ---------------------------------------------------------------------------
# Monadic-profunctor laws on the shipped probe sets


def _mp_checks(s: core.LawSubject, values, fs, k, h, x0):
    for vname, p in values:
        yield f"{s.name}: comap identity on {vname}", core.law_comap_identity(s, p)
        yield f"{s.name}: monad laws on {vname}", core.law_monad(s, p, k, h, x0)
        for f_name, f in fs:
            for g_name, g in fs:
                yield (f"{s.name}: comap composition ({f_name}, {g_name}) on {vname}",
                       core.law_comap_compose(s, f, g, p))
            yield f"{s.name}: promonad laws with {f_name} on {vname}", core.law_promonad(s, f, p, k, x0)


_FS = [
    ("identity", core.partial_identity()),
    ("safe_head", core.safe_head),
    ("safe_tail", core.safe_tail),
    ("never", core.PartialFn(lambda _: None)),
]


def mp_laws_biparser(rnd, cases):
    s = BP.law_subject()
    values = [("char", BP.char()), ("digits", BP.digits()), ("int", BP.int_()),
              ("string", BP.string()), ("replicate_bp(2,char)", BP.replicate_bp(2, BP.char())),
              ("pure(1)", BP.pure(1))]
    return first_failure(_mp_checks(s, values, _FS, lambda v: BP.char(), lambda v: BP.pure((v, v)), "q"))


def mp_laws_lens(rnd, cases):
    kv = lens.law_subject()
    kv_values = [("at_key k", lens.at_key("k")), ("at_keys [a,b]", lens.at_keys(["a", "b"])),
                 ("at_keys []", lens.at_keys([])), ("pure(1)", lens.lens_pure(1))]
    tree = lens.tree_law_subject()
    tree_values = [("root_l", lens.root_l()), ("right_l", lens.right_l()), ("spine_l", lens.spine_l()),
                   ("right_l >>> spine_l", lens.right_l() >> lens.spine_l())]
    return first_failure([
        *_mp_checks(kv, kv_values, _FS, lambda v: lens.at_key("a"), lambda v: lens.lens_pure([v]), "x"),
        *_mp_checks(tree, tree_values, _FS + [("head_option", core.PartialFn(core.head_option))],
                    lambda v: lens.root_l(), lambda v: lens.lens_pure((v,)), (7,)),
    ])


def mp_laws_bigen(rnd, cases):
    s = bigen.law_subject()
    values = [("in_range(0,10)", bigen.in_range(0, 10)), ("bool(0.5)", bigen.g_bool(0.5)),
              ("leaf", bigen.leaf()), ("bst(0,3)", bigen.bst(0, 3)), ("pure(1)", bigen.g_pure(1))]
    fs = _FS + [("node_left", core.PartialFn(lambda t: getattr(t, "left", None)))]
    return first_failure(_mp_checks(s, values, fs, lambda v: bigen.in_range(0, 3),
                                    lambda n: bigen.bst(0, n) if isinstance(n, int) else bigen.g_pure(n), 2))


def partial_compose_assoc(rnd, cases):
    fns = [core.partial_identity(), core.safe_head, core.safe_tail,
           core.PartialFn(lambda x: x * 2 if isinstance(x, int) else None),
           core.PartialFn(lambda x: [x] if x is not None else None),
           core.PartialFn(lambda _: None)]
    inputs = [0, 3, "", "ab", [], [[7], [8]], [1, 2, 3], ("x",)]

    def draw():
        return rnd.choice(fns), rnd.choice(fns), rnd.choice(fns), rnd.choice(inputs)

    def assoc(f, g, h, x):
        return (core.partial_compose(core.partial_compose(f, g), h).apply(x)
                == core.partial_compose(f, core.partial_compose(g, h)).apply(x))

    return for_cases(cases, draw, assoc)


def purify_homomorphism(rnd, cases):
    bp = BP.law_subject()
    kv = lens.law_subject()
    tree = lens.tree_law_subject()
    g = bigen.law_subject()

    def checks():
        for name, p in [("char", BP.char()), ("string", BP.string()), ("int", BP.int_()),
                        ("pure(9)", BP.pure(9))]:
            for fname, f in _FS:
                yield (f"biparser purify: {name} with {fname}",
                       core.law_purify_homomorphism(bp, BP.purify, f, p, lambda c: BP.char(), 9))
        for src in kv.probes_v:
            proj = lambda l, src=src: lens.lens_purify(src, l)
            for name, l in [("at_key k", lens.at_key("k")), ("at_keys [a,b]", lens.at_keys(["a", "b"])),
                            ("pure(3)", lens.lens_pure(3))]:
                for fname, f in _FS:
                    yield (f"lens purify at {src!r}: {name} with {fname}",
                           core.law_purify_homomorphism(kv, proj, f, l, lambda v: lens.at_key("a"), 9))
        for src in tree.probes_v:
            proj = lambda l, src=src: lens.lens_purify(src, l)
            yield (f"lens purify at {format_tree(src)}: spine_l",
                   core.law_purify_homomorphism(tree, proj, core.PartialFn(core.head_option), lens.root_l(),
                                                lambda v: lens.spine_l(), (9,)))
        for name, p in [("in_range(0,10)", bigen.in_range(0, 10)), ("bst(0,3)", bigen.bst(0, 3))]:
            for fname, f in _FS:
                yield (f"bigen purify: {name} with {fname}",
                       core.law_purify_homomorphism(g, bigen.purify, f, p, lambda v: bigen.leaf(), 9))

    return first_failure(checks())


def injective_arrows(rnd, cases):
    s = BP.law_subject()
    read_decimal = lambda ds: BP.pure(int(ds))
    candidates = [str, lambda y: "0", lambda y: "00", lambda y: "0" * (y + 1)]
    return first_failure([
        ("identity arrow accepted", core.check_injective_arrow(s, BP.pure, lambda y: y, ["0", "00", "7"])),
        ("replicate arrow accepted",
         core.check_injective_arrow(s, lambda n: BP.replicate_bp(n, BP.char()), len, [0, 1, 2, 3])),
        *((f"read-decimal rejected for inverse #{i}",
           not core.check_injective_arrow(s, read_decimal, inv, ["0", "00"]))
          for i, inv in enumerate(candidates)),
        ("constant arrow rejected", not core.check_injective_arrow(s, lambda _: BP.pure(0), lambda y: 1, [1, 2])),
    ])


def to_failure_laws(rnd, cases):
    srcs = list(lens.PROBE_MAPS) + list(lens.PROBE_TREES)

    def checks():
        for x in ["a", 0, [1]]:
            yield f"biparser to_failure(some {x!r})", BP.to_failure(x) == (x, "")
            yield f"bigen to_failure(some {x!r})", bigen.to_failure(x) == x
            for s in srcs:
                r = lens.to_failure(x)(s)
                yield f"lens to_failure(some {x!r}) at {s!r}", r is not None and r[0] == (x, s) and r[1] is lens.always_true
        yield "biparser to_failure(none)", BP.to_failure(None) is None
        yield "lens to_failure(none)", all(lens.to_failure(None)(s) is None for s in srcs)
        yield "bigen to_failure(none)", bigen.to_failure(None) is None

    return first_failure(checks())


# ---------------------------------------------------------------------------
# Lens suites


def _aligned_lenses(rnd):
    """(name, lens, draw source, draw view) for lenses whose laws hold as stated."""

    def draw_keys_and_values():
        ks = random_keys(rnd)
        return ks, random_values(rnd, len(ks))

    fixed_keys = ["a", "b", "a"]
    return [
        ("at_key k", lens.at_key("k"), lambda: random_kv(rnd), lambda: str(rnd.randint(0, 3))),
        ("at_keys [a,b,a]", lens.at_keys(fixed_keys), lambda: random_kv(rnd),
         lambda: random_values(rnd, len(fixed_keys))),
        ("root_l", lens.root_l(), lambda: random_tree(rnd),
         lambda: rnd.choice([(), (rnd.randint(0, 9),)])),
        ("spine_l", lens.spine_l(), lambda: random_tree(rnd),
         lambda: [rnd.randint(0, 9) for _ in range(rnd.randint(0, 5))]),
    ]


def lens_put_get(rnd, cases):
    for name, l, draw_s, draw_x in _aligned_lenses(rnd):
        bad = for_cases(cases, lambda: (draw_x(), draw_s()), lambda x, s: lens.put_get(l, x, s),
                        lambda a: f"{name}: put {a[0]!r} into {a[1]!r}")
        if bad:
            return bad
    # at_keys with a key list drawn per case (length-matched values).
    def draw():
        ks = random_keys(rnd)
        return ks, random_values(rnd, len(ks)), random_kv(rnd)

    return for_cases(cases, draw, lambda ks, vs, s: lens.put_get(lens.at_keys(ks), vs, s),
                     lambda a: f"at_keys {a[0]!r}: put {a[1]!r} into {a[2]!r}")


def lens_get_put(rnd, cases):
    for name, l, draw_s, _ in _aligned_lenses(rnd):
        bad = for_cases(cases, lambda: (draw_s(),), lambda s: lens.get_put(l, s),
                        lambda a: f"{name}: get then put on {a[0]!r}")
        if bad:
            return bad
    return for_cases(cases, lambda: (random_keys(rnd), random_kv(rnd)),
                     lambda ks, s: lens.get_put(lens.at_keys(ks), s),
                     lambda a: f"at_keys {a[0]!r}: get then put on {a[1]!r}")


def _all_lenses(rnd):
    """Every shipped lens, including non-aligned comap'd forms."""
    out = list(_aligned_lenses(rnd))
    out += [
        ("comap(safe_head, at_key k)", lens.at_key("k").upon(core.safe_head), lambda: random_kv(rnd),
         lambda: random_values(rnd, rnd.randint(0, 2))),
        ("comap(head_option, root_l)", lens.root_l().upon(core.head_option), lambda: random_tree(rnd),
         lambda: [rnd.randint(0, 9) for _ in range(rnd.randint(0, 3))]),
        ("right_l", lens.right_l(), lambda: random_tree(rnd), lambda: random_tree(rnd, 2)),
        ("right_l >>> spine_l", lens.right_l() >> lens.spine_l(), lambda: random_tree(rnd),
         lambda: [rnd.randint(0, 9) for _ in range(rnd.randint(0, 4))]),
        ("at_keys [a,b] (any length)", lens.at_keys(["a", "b"]), lambda: random_kv(rnd),
         lambda: random_values(rnd, rnd.randint(0, 4))),
    ]
    return out


def lens_weak_put_get(rnd, cases):
    for name, l, draw_s, draw_x in _all_lenses(rnd):
        def draw():
            x, s = draw_x(), draw_s()
            r = l.put(x, s)
            # Probe the predicate on the updated source half the time, a fresh one otherwise.
            later = r[0][1] if r is not None and rnd.random() < 0.5 else draw_s()
            return x, s, later

        bad = for_cases(cases, draw, lambda x, s, later: lens.weak_put_get(l, x, s, later),
                        lambda a: f"{name}: put {a[0]!r} into {a[1]!r}, later source {a[2]!r}")
        if bad:
            return bad
    return None


def lens_weak_get_put(rnd, cases):
    for name, l, draw_s, draw_x in _all_lenses(rnd):
        def draw():
            s = draw_s()
            y = l.get(s)
            x = y if y is not None and rnd.random() < 0.5 else draw_x()
            return x, s

        bad = for_cases(cases, draw, lambda x, s: lens.weak_get_put(l, x, s),
                        lambda a: f"{name}: put {a[0]!r} into {a[1]!r}")
        if bad:
            return bad
    return None


def lens_identity_projection(rnd, cases):
    def draw():
        ks = random_keys(rnd)
        return ks, random_values(rnd, len(ks)), random_kv(rnd)

    bad = for_cases(cases, draw, lambda ks, vs, s: lens.lens_purify(s, lens.at_keys(ks))(vs) == vs,
                    lambda a: f"at_keys {a[0]!r} at {a[2]!r}: projection of {a[1]!r}")
    if bad:
        return bad
    return for_cases(cases, lambda: (random_kv(rnd), str(rnd.randint(0, 3))),
                     lambda s, v: lens.lens_purify(s, lens.at_key("k"))(v) == v)


def lens_predicate_monoid(rnd, cases):
    preds = [lens.always_true, lambda m: "a" in m, lambda m: m.get("k") == "1", lambda m: len(m) < 2]

    def draw():
        return rnd.choice(preds), rnd.choice(preds), rnd.choice(preds), random_kv(rnd)

    def laws(p, q, r, s):
        and_ = lens.pred_and
        return (and_(lens.always_true, p)(s) == p(s) == and_(p, lens.always_true)(s)
                and and_(and_(p, q), r)(s) == and_(p, and_(q, r))(s))

    return for_cases(cases, draw, laws)


def lens_self_consistency(rnd, cases):
    # Duplicate keys are exactly the conflicts the predicate exists to reject.
    conflict_free = [entry for entry in _all_lenses(rnd) if entry[0] != "at_keys [a,b,a]"]
    for name, l, draw_s, draw_x in conflict_free:
        bad = for_cases(cases, lambda: (draw_x(), draw_s()), lambda x, s: lens.put_self_consistent(l, x, s),
                        lambda a: f"{name}: put {a[0]!r} into {a[1]!r}")
        if bad:
            return bad
    return None


# ---------------------------------------------------------------------------
# Bigenerator suites

SOUNDNESS_DRAWS_PER_CASE = 10
COMPLETENESS_CAP = 200_000


def bigen_soundness(rnd, cases):
    draws = SOUNDNESS_DRAWS_PER_CASE * cases
    for lo, hi in [(0, 3), (0, 20)]:
        g = bigen.bst(lo, hi)
        r = bigen.Rng(rnd.getrandbits(64))
        for _ in range(draws):
            t, r = g.generator(r)
            if not (bigen.to_predicate(g, t) and bigen.check_bst(lo, hi, t)):
                return f"bst({lo},{hi}) generated {format_tree(t)}, which its checker rejects"
    for name, g in [("in_range(0,3)", bigen.in_range(0, 3)), ("bool(0.5)", bigen.g_bool(0.5)),
                    ("leaf", bigen.leaf())]:
        v = bigen.sound_on(g, rnd.getrandbits(64), draws)
        if v is not None:
            return f"{name} generated {v!r}, which its checker rejects"
    return None


def bigen_completeness(rnd, cases):
    if cases == 0:
        return None
    targets = bigen.enumerate_bsts(0, 3)
    used, missing = bigen.coverage(bigen.bst(0, 3), targets, rnd.getrandbits(64), COMPLETENESS_CAP)
    if missing:
        return f"bst(0,3) never generated {sorted(map(format_tree, missing))[:3]} in {used} draws"
    return None


def bigen_predicate_agreement(rnd, cases):
    g = bigen.bst(0, 3)
    trees = bigen.enumerate_bsts(0, 3) + [random_tree(rnd, lo=-1, hi=4) for _ in range(cases)]
    for t in trees:
        if bigen.to_predicate(g, t) != bigen.check_bst(0, 3, t):
            return f"to_predicate(bst(0,3)) and check_bst disagree on {format_tree(t)}"
    return None


def bigen_checker_identity(rnd, cases):
    gs = [("bst(0,3)", bigen.bst(0, 3), lambda: random_tree(rnd, lo=-1, hi=4)),
          ("bst(0,20)", bigen.bst(0, 20), lambda: random_tree(rnd, lo=0, hi=20)),
          ("in_range(0,10)", bigen.in_range(0, 10), lambda: rnd.randint(-3, 13)),
          ("bool(0.5)", bigen.g_bool(0.5), lambda: rnd.random() < 0.5),
          ("leaf", bigen.leaf(), lambda: random_tree(rnd, 2))]
    for name, g, draw in gs:
        bad = for_cases(cases, lambda: (draw(),), lambda x: bigen.checker_projects_identity(g, x),
                        lambda a: f"{name}: check({a[0]!r})")
        if bad:
            return bad
    return None


def bigen_determinism(rnd, cases):
    g = bigen.bst(0, 20)
    return for_cases(cases, lambda: (rnd.getrandbits(64),),
                     lambda seed: bigen.generate(g, bigen.Rng(seed)) == bigen.generate(g, bigen.Rng(seed)))


SUITES: List[Suite] = [
    Suite("core/partial-compose-associativity", partial_compose_assoc),
    Suite("core/to-failure", to_failure_laws),
    Suite("core/monadic-profunctor-laws/biparser", mp_laws_biparser),
    Suite("core/monadic-profunctor-laws/lens", mp_laws_lens),
    Suite("core/monadic-profunctor-laws/bigen", mp_laws_bigen),
    Suite("core/purify-homomorphism", purify_homomorphism),
    Suite("core/injective-arrows", injective_arrows),
    Suite("biparser/backward-rt", bp_backward_rt),
    Suite("biparser/weak-backward-rt", bp_weak_backward_rt),
    Suite("biparser/weak-forward-rt", bp_weak_forward_rt),
    Suite("biparser/forward-rt-string", bp_forward_rt_string),
    Suite("biparser/identity-projection-string", bp_identity_projection),
    Suite("biparser/oracle-agreement", bp_oracle_agreement),
    Suite("biparser/prefix-consumption", bp_prefix_consumption),
    Suite("lens/put-get", lens_put_get),
    Suite("lens/get-put", lens_get_put),
    Suite("lens/weak-put-get", lens_weak_put_get),
    Suite("lens/weak-get-put", lens_weak_get_put),
    Suite("lens/identity-projection", lens_identity_projection),
    Suite("lens/predicate-monoid", lens_predicate_monoid),
    Suite("lens/put-self-consistency", lens_self_consistency),
    Suite("bigen/soundness", bigen_soundness),
    Suite("bigen/completeness", bigen_completeness),
    Suite("bigen/predicate-agreement", bigen_predicate_agreement),
    Suite("bigen/checker-identity", bigen_checker_identity),
    Suite("bigen/determinism", bigen_determinism),
]


def run_suite(suite: Suite, seed: int, cases: int) -> SuiteResult:
    rnd = random.Random(f"{seed}:{suite.name}")
    return SuiteResult(suite.name, suite.run(rnd, cases))


def run_all(seed: int = 42, cases: int = 1000, suites: Optional[List[Suite]] = None) -> List[SuiteResult]:
    return [run_suite(s, seed, cases) for s in (SUITES if suites is None else suites)]


def format_report(results: List[SuiteResult]) -> str:
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS\t{r.name}")
        else:
            lines.append(f"FAIL\t{r.name}\t{r.counterexample}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} suites passed")
    return "\n".join(lines) + "\n"
