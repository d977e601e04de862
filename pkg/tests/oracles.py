"""Brute-force reference computations that read only the raw multiplication
table.  Nothing here calls into the package's structural code, so agreement
with it is evidence rather than tautology."""

from itertools import product
from math import gcd


def powers(table, m, upto):
    out, x = [], m
    for _ in range(upto):
        out.append(x)
        x = table[x][m]
    return out


def index_period(table, m):
    seq = powers(table, m, 2 * len(table) + 2)
    for r in range(1, len(seq) + 1):
        for s in range(1, len(seq) - r + 1):
            if seq[r - 1] == seq[r + s - 1]:
                return r, s
    raise AssertionError("no repetition")


def omega(table, m):
    """The unique idempotent among the powers of m."""
    (e,) = {x for x in powers(table, m, 2 * len(table) + 2) if table[x][x] == x}
    return e


def order(table, g):
    """Minimal s > 0 with g = g^{s+1}, or None when g is not a group element."""
    seq = powers(table, g, len(table) + 2)
    for s in range(1, len(seq)):
        if seq[s] == g:
            return s
    return None


def is_p_regular(table, m, p):
    s = order(table, m)
    return s is not None and (p == 0 or s % p != 0)


def p_prime_part(table, m, p):
    """g = m^{omega+1}; split g = u v inside <g> with u of p-power order and
    v of order prime to p, by search."""
    e = omega(table, m)
    g = table[e][m]
    if p == 0:
        return g
    cyc = set(powers(table, g, len(table) + 1))

    def is_p_power(k):
        while k % p == 0:
            k //= p
        return k == 1

    found = {
        v for u in cyc for v in cyc
        if table[u][v] == g and table[v][u] == g
        and is_p_power(order(table, u)) and order(table, v) % p != 0
    }
    (v,) = found
    return v


def group_pow(table, g, j):
    s = order(table, g)
    k = j % s or s
    return powers(table, g, k)[-1]


def galois_members(kind, q, n):
    units = [j for j in range(1, n + 1) if gcd(j, n) == 1]
    if kind == "AC":
        return [1]
    if kind == "Q":
        return units
    return sorted({pow(q, k, n) or n for k in range(len(units) + 1)})


def field_params(name):
    """(kind, p, q) from a field name such as 'Q', 'F4', 'AC2'."""
    if name == "Q":
        return "Q", 0, None
    if name.startswith("AC"):
        return "AC", int(name[2:]), None
    q = int(name[1:])
    p = next(d for d in range(2, q + 1) if q % d == 0)
    return "F", p, q


def lcm_orders(table, p):
    n = 1
    for m in range(len(table)):
        if is_p_regular(table, m, p):
            s = order(table, m)
            n = n * s // gcd(n, s)
    return n


def transitive_closure(rel):
    n = len(rel)
    r = [row[:] for row in rel]
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return r


def classes_of(rel):
    n = len(rel)
    return sorted({tuple(j for j in range(n) if rel[i][j]) for i in range(n)})


def generated_equivalence(table, field_name):
    """Least equivalence containing the three generating families."""
    kind, p, q = field_params(field_name)
    n = len(table)
    T = galois_members(kind, q, lcm_orders(table, p))
    rel = [[i == j for j in range(n)] for i in range(n)]

    def link(a, b):
        rel[a][b] = rel[b][a] = True

    for a, b in product(range(n), repeat=2):
        link(table[a][b], table[b][a])
    for m in range(n):
        link(m, p_prime_part(table, m, p))
        if is_p_regular(table, m, p):
            for j in T:
                link(m, group_pow(table, m, j))
    return classes_of(transitive_closure(rel))


def witness_relation(table, field_name):
    """Pairs (a, b) admitting x, y, j by exhaustive search over M x M x T."""
    kind, p, q = field_params(field_name)
    n = len(table)
    T = galois_members(kind, q, lcm_orders(table, p))
    om = [omega(table, m) for m in range(n)]
    part = [p_prime_part(table, m, p) for m in range(n)]
    rel = [[False] * n for _ in range(n)]
    for a, b in product(range(n), repeat=2):
        hits = {group_pow(table, part[b], j) for j in T}
        rel[a][b] = any(
            table[table[x][y]][x] == x and table[table[y][x]][y] == y
            and table[x][y] == om[b] and table[y][x] == om[a]
            and table[table[x][part[a]]][y] in hits
            for x in range(n) for y in range(n)
        )
    return rel


def maximal_subgroup(table, e):
    n = len(table)
    local = [m for m in range(n) if table[e][m] == m and table[m][e] == m]
    return [g for g in local if any(table[g][u] == e and table[u][g] == e for u in local)]


def k_conjugacy_count(table, e, field_name, modulus=None):
    """Classes of p-regular elements of G_e under x g x^-1 = h^j, by testing
    every (g, h, x, j)."""
    kind, p, q = field_params(field_name)
    n = modulus or lcm_orders(table, p)
    T = galois_members(kind, q, n)
    G = maximal_subgroup(table, e)
    inv = {g: next(u for u in G if table[g][u] == e) for g in G}
    preg = [g for g in G if is_p_regular(table, g, p)]
    idx = {g: i for i, g in enumerate(preg)}
    rel = [[False] * len(preg) for _ in preg]
    for g, h in product(preg, repeat=2):
        rel[idx[g]][idx[h]] = any(
            table[table[x][g]][inv[x]] == group_pow(table, h, j) for x in G for j in T
        )
    assert rel == transitive_closure(rel), "K-conjugacy should already be transitive"
    return len(classes_of(rel))


def d_class_reps(table):
    n = len(table)
    idem = [e for e in range(n) if table[e][e] == e]

    def ideal(m):
        return frozenset(table[table[x][m]][y] for x in range(n) for y in range(n))

    seen = {}
    for e in idem:
        seen.setdefault(ideal(e), e)
    return list(seen.values())


def irreducible_count(table, field_name):
    return sum(k_conjugacy_count(table, e, field_name) for e in d_class_reps(table))
