"""Independent reference computations for the frozen values in the unit tests.

Pure Python with fractions; no code shared with the C++ library. Run:
    python3 tests/oracles/derive.py
"""
from fractions import Fraction
from itertools import product, combinations


def qrst_atoms(r, s, t):
    return ([(f"R{k}", ("x",)) for k in range(1, r + 1)]
            + [(f"S{k}", ("x", "y")) for k in range(1, s + 1)]
            + [(f"T{k}", ("y",)) for k in range(1, t + 1)])


def holds(atoms, world):
    """Naive homomorphism search over the active domain."""
    variables = sorted({a for _, args in atoms for a in args if a[0].islower()})
    domain = sorted({c for _, args in world for c in args})
    for values in product(domain, repeat=len(variables)):
        nu = dict(zip(variables, values))
        if all((rel, tuple(nu.get(a, a) for a in args)) in world for rel, args in atoms):
            return True
    return not variables and all((rel, args) in world for rel, args in atoms)


def model_count(atoms, facts):
    facts = sorted(facts)
    return sum(holds(atoms, {f for f, keep in zip(facts, bits) if keep})
               for bits in product((0, 1), repeat=len(facts)))


def probability(atoms, probs):
    facts = sorted(probs)
    total = Fraction(0)
    for bits in product((0, 1), repeat=len(facts)):
        weight = Fraction(1)
        for f, keep in zip(facts, bits):
            weight *= probs[f] if keep else 1 - probs[f]
        if holds(atoms, {f for f, keep in zip(facts, bits) if keep}):
            total += weight
    return total


def gadget(kind, r, s, t, ends):
    out = set()
    def unary(p, n, e):
        out.update((f"{p}{k}", (e,)) for k in range(1, n + 1))
    def binary(a, b):
        out.update((f"S{k}", (a, b)) for k in range(1, s + 1))
    if kind == "ab":
        a, b = ends
        unary("R", r, a); binary(a, b); unary("T", t, b)
        return out
    a, b, c, d = ends
    if kind in ("abcd", "left"):
        unary("R", r, a)
    binary(a, b); unary("T", t, b); binary(c, b); unary("R", r, c); binary(c, d)
    if kind in ("abcd", "right"):
        unary("T", t, d)
    return out


def violating(atoms, facts, present=(), absent=()):
    free = sorted(set(facts) - set(present) - set(absent))
    count = 0
    for bits in product((0, 1), repeat=len(free)):
        world = set(present) | {f for f, keep in zip(free, bits) if keep}
        count += not holds(atoms, world)
    return count


def gadget_counts(r, s, t):
    q = qrst_atoms(r, s, t)
    ra = [(f"R{k}", ("a",)) for k in range(1, r + 1)]
    tb = [(f"T{k}", ("b",)) for k in range(1, t + 1)]
    td = [(f"T{k}", ("d",)) for k in range(1, t + 1)]
    ab = gadget("ab", r, s, t, ("a", "b"))
    abcd = ("a", "b", "c", "d")
    g = dict(
        lambda_R=violating(q, ab, present=ra), lambda_bar_R=violating(q, ab, absent=ra),
        lambda_T=violating(q, ab, present=tb), lambda_bar_T=violating(q, ab, absent=tb),
        gamma=violating(q, gadget("abcd", r, s, t, abcd), present=ra + td),
        delta_R=violating(q, gadget("left", r, s, t, abcd), present=ra),
        delta_T=violating(q, gadget("right", r, s, t, abcd), present=td),
        delta_bot=violating(q, gadget("trimmed", r, s, t, abcd)))
    g["kappa"] = g["delta_R"] * g["delta_T"] - g["gamma"] * g["delta_bot"]
    return g


def independent_pairs(left, right, edges):
    total = 0
    for i in range(len(left) + 1):
        for rs in combinations(left, i):
            for j in range(len(right) + 1):
                for ts in combinations(right, j):
                    total += not any((u, w) in edges for u in rs for w in ts)
    return total


def main():
    print("gadget counts by world enumeration")
    for rst in [(1, 1, 1), (2, 1, 1), (1, 1, 2), (1, 2, 1)]:
        print(" ", rst, gadget_counts(*rst))

    q1 = [("R", ("x",)), ("S", ("x", "y")), ("T", ("y",))]
    five = {("R", ("a",)), ("S", ("a", "b")), ("S", ("a", "c")), ("T", ("b",)), ("T", ("c",))}
    print("UR(Q1) on the five-fact instance:", model_count(q1, five))

    # single-edge D_1 with every multiplicity 1
    d1 = {("R1", ("u",)), ("T1", ("w",))}
    d1 |= gadget("abcd", 1, 1, 1, ("u", "e.b", "e.c", "w"))
    d1 |= gadget("ab", 1, 1, 1, ("u", "g"))
    d1 |= gadget("ab", 1, 1, 1, ("u", "ub"))
    d1 |= gadget("ab", 1, 1, 1, ("wa", "w"))
    print("downsized D_1: facts", len(d1), "N_1 =", 2 ** len(d1) - model_count(qrst_atoms(1, 1, 1), d1))

    half = Fraction(1, 2)
    edge = {("R", ("u",)): half, ("S", ("u", "w")): Fraction(1), ("T", ("w",)): half}
    print("Pi_00 single edge:", 1 - probability(q1, edge))
    i11 = dict(edge)
    i11.update({("T", ("w'",)): half, ("S", ("u", "w'")): Fraction(1),
                ("R", ("u'",)): half, ("S", ("u'", "w")): Fraction(1)})
    print("Pi_11 single edge:", 1 - probability(q1, i11))

    path = independent_pairs(["u", "u2"], ["w"], {("u", "w"), ("u2", "w")})
    print("independent pairs, path u-w-u2:", path)
    print("independent pairs, K22:", independent_pairs(["a", "b"], ["c", "d"],
          {("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")}))

    lemma_q = [("A", ("x", "z")), ("S", ("x", "y")), ("B", ("y", "w")), ("U", ("v",))]
    print("UR(lemma query) on image of single edge:",
          model_count(lemma_q, {("A", ("u", "@c0")), ("S", ("u", "w")), ("B", ("w", "@c0")), ("U", ("@c0",))}))

    q211 = qrst_atoms(2, 1, 1)
    i211 = {("R1", ("a",)), ("R2", ("a",)), ("S1", ("a", "b")), ("T1", ("b",))}
    print("UR(Q211) complete bundle:", model_count(q211, i211))


if __name__ == "__main__":
    main()
