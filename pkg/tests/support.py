"""Shared helpers for the test suite.

The word-rewriting oracle here re-implements noncommutative multiplication
from scratch: elements are dictionaries of raw words (tuples of generator
index vectors), and out-of-order adjacent pairs are rewritten one at a time,
always at the *last* descent, with no memoization.  The engine under test
orders at the first descent and caches aggressively, so agreement between
the two is a real confluence check rather than the same code run twice.
"""

from fractions import Fraction
from math import gcd

from greenfan import TropicalSeed, validate_fixed_data


def word_key(n):
    return (sum(n), tuple(-x for x in n))


def pairing(omega, n, m):
    return sum(
        Fraction(n[i]) * omega[i][j] * m[j]
        for i in range(len(n))
        for j in range(len(m))
    )


def oracle_straighten(word, omega, level):
    """Normal-form coefficients of one word, by exhaustive rewriting."""
    out = {}
    stack = [(tuple(word), Fraction(1))]
    while stack:
        w, coeff = stack.pop()
        if sum(sum(n) for n in w) > level:
            continue
        descent = None
        for i in range(len(w) - 1):
            if word_key(w[i]) > word_key(w[i + 1]):
                descent = i
        if descent is None:
            out[w] = out.get(w, Fraction(0)) + coeff
            continue
        a, b = w[descent], w[descent + 1]
        stack.append((w[:descent] + (b, a) + w[descent + 2 :], coeff))
        c = pairing(omega, a, b)
        if c:
            merged = tuple(x + y for x, y in zip(a, b))
            stack.append((w[:descent] + (merged,) + w[descent + 2 :], coeff * c))
    return {w: c for w, c in out.items() if c}


def oracle_multiply(a_terms, b_terms, omega, level):
    """Product of two word dictionaries, fully rewritten."""
    out = {}
    for wa, ca in a_terms.items():
        for wb, cb in b_terms.items():
            for w, c in oracle_straighten(wa + wb, omega, level).items():
                coeff = out.get(w, Fraction(0)) + ca * cb * c
                if coeff:
                    out[w] = coeff
                else:
                    out.pop(w, None)
    return out


def relabel_seed(seed, perm):
    """Apply a direction relabeling: conjugate B, permute C/G columns."""
    r = seed.rank
    b = tuple(tuple(seed.b[perm[i]][perm[j]] for j in range(r)) for i in range(r))
    c = tuple(tuple(row[perm[j]] for j in range(r)) for row in seed.c)
    g = tuple(tuple(row[perm[j]] for j in range(r)) for row in seed.g)
    return TropicalSeed(b=b, c=c, g=g, path=())


def random_fixed_data(rng, rank=None):
    """A random valid (B, delta) pair: B = diag(delta) * S with S skew."""
    r = rank if rank is not None else rng.choice((2, 2, 3))
    delta = tuple(rng.choice((1, 1, 2, 3)) for _ in range(r))
    while True:
        s = [[0] * r for _ in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                s[i][j] = rng.randint(-2, 2)
                s[j][i] = -s[i][j]
        if any(any(row) for row in s):
            break
    b = [[delta[i] * s[i][j] for j in range(r)] for i in range(r)]
    return validate_fixed_data(b, delta)


def random_positive_vector(rng, rank, max_entry=3, primitive=False):
    while True:
        n = [rng.randint(0, max_entry) for _ in range(rank)]
        if any(n):
            break
    if primitive:
        g = 0
        for x in n:
            g = gcd(g, x)
        n = [x // g for x in n]
    return tuple(n)


def random_algebra_element(alg, rng, max_terms=3, max_letters=2):
    """Random element with composite PBW monomials (not only Lie elements)."""
    rank = len(alg.omega)
    total = alg.zero()
    for _ in range(rng.randint(1, max_terms)):
        coeff = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if not coeff:
            continue
        term = alg.one()
        for _ in range(rng.randint(1, max_letters)):
            term = term * alg.generator(random_positive_vector(rng, rank, 2))
        total = total + coeff * term
    return total


def element_words(element):
    """The raw term dictionary of an engine element, for oracle comparison."""
    return dict(element.terms)
