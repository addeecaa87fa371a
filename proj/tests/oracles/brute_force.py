#!/usr/bin/env python3
"""Brute-force oracle for expected values frozen into the C++ tests.

Independent of the C++ implementation: groups are plain Python callables on
tuples, closure is a naive fixed-point iteration, rank is sympy-free Gaussian
elimination written out longhand.  Run: python3 brute_force.py
"""
import itertools


def cyclic(n):
    return list(range(n)), (lambda a, b: (a + b) % n), 0


def dihedral(n):
    # ('r', i) for r^i, ('s', i) for r^i a
    els = [('r', i) for i in range(n)] + [('s', i) for i in range(n)]

    def mul(x, y):
        (tx, i), (ty, j) = x, y
        if tx == 'r' and ty == 'r':
            return ('r', (i + j) % n)
        if tx == 'r' and ty == 's':
            return ('s', (i + j) % n)
        if tx == 's' and ty == 'r':
            return ('s', (i - j) % n)
        return ('r', (i - j) % n)
    return els, mul, ('r', 0)


def symmetric(n):
    els = list(itertools.permutations(range(n)))
    return els, (lambda a, b: tuple(a[b[i]] for i in range(n))), tuple(range(n))


def product(g, h):
    ge, gm, gi = g
    he, hm, hi = h
    els = [(x, y) for x in ge for y in he]
    return els, (lambda a, b: (gm(a[0], b[0]), hm(a[1], b[1]))), (gi, hi)


def config(els, k):
    return list(itertools.permutations(els, k))


def closure(gens, mul, ident):
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def power_mul(mul, k):
    return lambda a, b: tuple(mul(a[i], b[i]) for i in range(k))


def closure_size(group, k):
    els, mul, ident = group
    gens = config(els, k)
    return len(closure(gens, power_mul(mul, k), tuple([ident] * k)))


def rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def claimed_basis(p):
    out = []
    for i in range(1, p):
        if i == 1:
            v = [1, 0] + list(range(2, p))
        elif i == 2:
            v = list(range(p))
        elif i == p - 1:
            v = [0] * (p - 2) + [1, p - 1]
        else:
            tail = [1, i] + list(range(i + 3, 2 * p - i, 2))
            v = [0] * (p - len(tail)) + tail
        out.append([x % p for x in v])
    return out


def main():
    groups = {
        'Z2': cyclic(2), 'Z3': cyclic(3), 'Z4': cyclic(4), 'Z5': cyclic(5),
        'Z6': cyclic(6), 'S3': symmetric(3), 'D4': dihedral(4),
        'Z2xZ2': product(cyclic(2), cyclic(2)),
        'Z2xZ3': product(cyclic(2), cyclic(3)),
    }
    matrix = [('Z2', 2), ('Z3', 2), ('Z4', 2), ('S3', 2), ('Z4', 3), ('Z5', 3),
              ('Z5', 4), ('Z6', 3), ('S3', 3), ('S3', 4), ('D4', 3),
              ('Z3', 3), ('Z4', 4), ('Z2xZ2', 4), ('Z5', 5), ('Z6', 6),
              ('Z2xZ3', 6)]
    for name, k in matrix:
        g = groups[name]
        size = closure_size(g, k)
        total = len(g[0]) ** k
        print(f'closure {name}^{k}: {size} / {total} index {total // size}')

    for p in (3, 5, 7):
        rows = list(itertools.permutations(range(p)))
        b = claimed_basis(p)
        print(f'p={p} dim={rank_mod_p(rows, p)} basis={b} basis_rank={rank_mod_p(b, p)}'
              f' basis_sums={[sum(v) % p for v in b]}')

    # S3 vs D3 element orders
    def orders(group):
        els, mul, ident = group
        res = []
        for g in els:
            m, x = 1, g
            while x != ident:
                x, m = mul(x, g), m + 1
            res.append(m)
        return sorted(res)
    print('orders D3', orders(dihedral(3)), 'S3', orders(symmetric(3)))

    # D3^6, the expensive one
    d3 = dihedral(3)
    els, mul, ident = d3
    gens = config(els, 6)
    pm = power_mul(mul, 6)
    sub = closure(gens, pm, tuple([ident] * 6))
    print(f'closure D3^6: {len(sub)} / {6 ** 6}')


if __name__ == '__main__':
    main()
