"""The ten acceptance criteria, each at its stated case count and tolerance.

Every test records one ``criterion N: PASS|FAIL`` line (shown in the pytest
terminal summary) before asserting.
"""

import random
from math import comb

import pytest

from conftest import ACCEPTANCE_LINES
from profmonad import bigen, biparser as bp, core, lens, suites
from profmonad.suites import canonical_prefix, random_kv, random_keys, random_text, random_tree, random_values
from profmonad.tree import format_tree, parse_tree

T0 = parse_tree("(N (N L 0 L) 1 (N L 2 L))")


def record(n, title, failure):
    """Record and assert.  ``failure`` is None or a counterexample."""
    line = f"criterion {n}: {'PASS' if failure is None else 'FAIL'}  {title}"
    if failure is not None:
        line += f"  [{failure}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert failure is None, line


def first_bad(items, ok):
    for item in items:
        if not ok(*item):
            return repr(item)
    return None


def test_criterion_01_worked_examples():
    results = (bp.parse(bp.string(), "6 lambda calculus"), bp.print_(bp.string(), "SKI"))
    expected = (("lambda", " calculus"), ("SKI", "3 SKI"))
    record(1, "parse/print of string on the worked examples",
           None if results == expected else f"got {results!r}")


def test_criterion_02_backward_round_trip_string():
    rnd = random.Random(2)
    p = bp.string()
    cases = [(random_text(rnd, 100), random_text(rnd, 20)) for _ in range(1000)]

    def ok(x, suffix):
        printed = p.backward(x)
        return printed is not None and p.forward(printed[1] + suffix) == (x, suffix)

    record(2, "backward round trip of string, 1000 payloads", first_bad(cases, ok))


def test_criterion_03_forward_round_trip_string():
    rnd = random.Random(3)
    p = bp.string()
    # Canonical encodings come from the standalone printer.
    texts = [bp.oracle_print_string(random_text(rnd, 100)) for _ in range(1000)]

    def ok(s):
        parsed = p.forward(s)
        if parsed is None or parsed[1] != "":
            return False
        printed = p.backward(parsed[0])
        return printed is not None and printed[1] == s

    record(3, "forward round trip of string, 1000 canonical encodings", first_bad([(t,) for t in texts], ok))


def _weak_rt_subjects(rnd):
    """(name, biparser, draw pre-view, draw forward input)."""

    def int_text():
        if rnd.random() < 0.8:
            return canonical_prefix(f"{rnd.randrange(10**9)} " + random_text(rnd, 5))
        return canonical_prefix(random_text(rnd, 6))

    def digit_text():
        run = "".join(rnd.choice("0123456789") for _ in range(rnd.randint(0, 6)))
        return run + " " + random_text(rnd, 5) if rnd.random() < 0.8 else random_text(rnd, 6)

    def string_text():
        if rnd.random() < 0.7:
            return canonical_prefix(bp.oracle_print_string(random_text(rnd, 30)) + random_text(rnd, 5))
        return canonical_prefix(random_text(rnd, 10))

    out = [
        ("char", bp.char(), lambda: rnd.choice([random_text(rnd, 1), random_text(rnd, 3)]),
         lambda: random_text(rnd, 5)),
        ("digits", bp.digits(),
         lambda: "".join(rnd.choice("0123456789") for _ in range(rnd.randint(0, 6))) + " " + random_text(rnd, 2),
         digit_text),
        ("int", bp.int_(), lambda: rnd.choice([rnd.randrange(10**9), -rnd.randint(1, 9)]), int_text),
        ("string", bp.string(), lambda: random_text(rnd, 40), string_text),
    ]
    for n in range(11):
        out.append((f"replicate_bp({n}, char)", bp.replicate_bp(n, bp.char()),
                    lambda: list(random_text(rnd, 12)), lambda: random_text(rnd, 12)))
    return out


def test_criterion_04_weak_round_trips():
    rnd = random.Random(4)
    failure = None
    for name, p, draw_x, draw_s in _weak_rt_subjects(rnd):
        for _ in range(1000):
            x, suffix = draw_x(), random_text(rnd, 10)
            if not bp.weak_backward_rt(p, x, suffix):
                failure = f"{name}: weak backward, pre-view {x!r}, suffix {suffix!r}"
                break
            s01 = draw_s()
            parsed = p.forward(s01)
            x2 = parsed[0] if parsed is not None and rnd.random() < 0.5 else draw_x()
            if not bp.weak_forward_rt(p, x2, s01):
                failure = f"{name}: weak forward, pre-view {x2!r}, input {s01!r}"
                break
        if failure:
            break
    record(4, "weak backward and weak forward round trips, 1000 cases per combinator", failure)


def test_criterion_05_purification():
    rnd = random.Random(5)
    proj = bp.purify(bp.string())
    texts = [(random_text(rnd, 100),) for _ in range(1000)]
    failure = first_bad(texts, lambda x: proj(x) == x)
    if failure is None:
        failure = suites.purify_homomorphism(rnd, 0)
    record(5, "purify(string) is the identity; purify homomorphism suite", failure)


def test_criterion_06_monadic_profunctor_laws():
    rnd = random.Random(6)
    failure = (suites.mp_laws_biparser(rnd, 0) or suites.mp_laws_lens(rnd, 0)
               or suites.mp_laws_bigen(rnd, 0))
    if failure is None:
        s = bp.law_subject()
        read_decimal = lambda ds: bp.pure(int(ds))
        if core.check_injective_arrow(s, read_decimal, str, ["0", "00"]):
            failure = "read-decimal arrow accepted as injective on {'0', '00'}"
        elif not core.check_injective_arrow(s, bp.pure, lambda y: y, ["0", "00", "abc"]):
            failure = "identity arrow rejected"
        elif not core.check_injective_arrow(lens.law_subject(), lens.lens_pure, lambda y: y, ["v", "w"]):
            failure = "identity arrow rejected for lenses"
        elif not core.check_injective_arrow(bigen.law_subject(), bigen.g_pure, lambda y: y, [0, 1]):
            failure = "identity arrow rejected for bigenerators"
    record(6, "monadic-profunctor laws for all instances; injective-arrow checker", failure)


def test_criterion_07_lens_laws():
    rnd = random.Random(7)
    subjects = [
        ("at_key k", lambda: lens.at_key("k"), lambda: str(rnd.randint(0, 3)), lambda: random_kv(rnd)),
        ("root_l", lens.root_l, lambda: rnd.choice([(), (rnd.randint(0, 9),)]), lambda: random_tree(rnd)),
        ("spine_l", lens.spine_l, lambda: [rnd.randint(0, 9) for _ in range(rnd.randint(0, 5))],
         lambda: random_tree(rnd)),
    ]
    failure = None
    for name, mk, draw_x, draw_s in subjects:
        l = mk()
        for _ in range(500):
            x, s = draw_x(), draw_s()
            if not lens.put_get(l, x, s):
                failure = f"{name}: put-get, {x!r} into {s!r}"
            elif not lens.get_put(l, s):
                failure = f"{name}: get-put on {s!r}"
            if failure:
                break
        if failure:
            break
    if failure is None:
        for _ in range(500):
            ks = random_keys(rnd)
            vs, s = random_values(rnd, len(ks)), random_kv(rnd)
            l = lens.at_keys(ks)
            if not (lens.put_get(l, vs, s) and lens.get_put(l, s)):
                failure = f"at_keys {ks!r}: {vs!r} into {s!r}"
                break
    if failure is None:
        got = lens.spine_l().get(T0)
        put = lens.spine_l().put([3, 4, 5], T0)
        printed = None if put is None else format_tree(put[0][1])
        if got != [1, 2] or printed != "(N (N L 0 L) 3 (N L 4 (N L 5 L)))":
            failure = f"worked example: get {got!r}, put {printed!r}"
    record(7, "lens put-get and get-put, 500 cases per lens; spine example", failure)


def test_criterion_08_oracle_agreement():
    rnd = random.Random(8)
    p = bp.string()
    failure = None
    for _ in range(1000):
        x = random_text(rnd, 100)
        printed = p.backward(x)
        if printed is None or printed[1] != bp.oracle_print_string(x):
            failure = f"print {x!r}"
            break
        encoding = bp.oracle_print_string(random_text(rnd, 100)) + random_text(rnd, 10)
        if rnd.random() < 0.3:
            encoding = encoding[: rnd.randint(0, len(encoding))]
        if p.forward(encoding) != bp.oracle_parse_string(encoding):
            failure = f"parse {encoding!r}"
            break
    record(8, "combinator biparser agrees with the standalone codec, 1000 cases", failure)


def _catalan(m):
    return comb(2 * m, m) // (m + 1)


def test_criterion_09_bigen_soundness_and_completeness():
    g = bigen.bst(0, 20)
    r = bigen.Rng(9)
    failure = None
    for _ in range(10_000):
        t, r = g.generator(r)
        if not bigen.check_bst(0, 20, t):
            failure = f"unsound draw {format_tree(t)}"
            break
    if failure is None:
        targets = bigen.enumerate_bsts(0, 3)
        # A tree on labels 0..3 uses some subset of them; each subset of size
        # m admits Catalan(m) shapes.
        formula = sum(comb(4, m) * _catalan(m) for m in range(5))
        distinct = len(set(targets))
        if not len(targets) == distinct == formula == 51:
            failure = f"enumeration {len(targets)}/{distinct}, formula {formula}"
        elif not all(bigen.check_bst(0, 3, t) for t in targets):
            failure = "enumeration contains a non-BST"
        else:
            used, missing = bigen.coverage(bigen.bst(0, 3), targets, seed=9, cap=200_000)
            if missing:
                failure = f"{len(missing)} trees unseen after {used} draws"
    record(9, "bst(0,20) sound on 10000 draws; bst(0,3) covers all 51 trees", failure)


def test_criterion_10_predicate_agreement():
    rnd = random.Random(10)
    g = bigen.bst(0, 3)
    trees = bigen.enumerate_bsts(0, 3) + [random_tree(rnd, depth=4, lo=-1, hi=4) for _ in range(1000)]
    valid = sum(bigen.check_bst(0, 3, t) for t in trees[51:])
    failure = first_bad([(t,) for t in trees], lambda t: bigen.to_predicate(g, t) == bigen.check_bst(0, 3, t))
    if failure is None and not 0 < valid < 1000:
        failure = f"random sample not mixed: {valid} valid of 1000"
    record(10, "to_predicate(bst(0,3)) agrees with check_bst on 51 + 1000 trees", failure)
