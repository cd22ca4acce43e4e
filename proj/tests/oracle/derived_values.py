"""Independent recomputation of the values frozen in the unit tests.

Plain Python with Fraction arithmetic; structure constants are dicts
{(i, j): [c_1, ..., c_n]} with 0-based indices.
"""
import itertools
from fractions import Fraction as F


def table(n, entries):
    t = {(i, j): [F(0)] * n for i in range(n) for j in range(n)}
    for (i, j, k), c in entries.items():
        t[(i, j)][k] = F(c)
    return t


def mul(t, n, x, y):
    out = [F(0)] * n
    for i in range(n):
        for j in range(n):
            if x[i] and y[j]:
                for k in range(n):
                    out[k] += x[i] * y[j] * t[(i, j)][k]
    return out


def add(*vs):
    return [sum(c) for c in zip(*vs)]


def neg(v):
    return [-c for c in v]


def unit(n, i):
    return [F(int(k == i)) for k in range(n)]


def br(t, n, x, y):
    return add(mul(t, n, x, y), neg(mul(t, n, y, x)))


def anti_pre_lie(t, n):
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        r1 = add(mul(t, n, x, mul(t, n, y, z)), neg(mul(t, n, y, mul(t, n, x, z))), neg(mul(t, n, br(t, n, y, x), z)))
        r2 = add(mul(t, n, br(t, n, x, y), z), mul(t, n, br(t, n, y, z), x), mul(t, n, br(t, n, z, x), y))
        if any(r1):
            bad.append(("anti_pre_lie_1", (i, j, k), r1))
        if any(r2):
            bad.append(("anti_pre_lie_2", (i, j, k), r2))
    return bad


def mixed(c, s, n):
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        m1 = add(mul(c, n, x, mul(s, n, y, z)), mul(s, n, x, mul(c, n, y, z)),
                 neg(mul(c, n, y, mul(s, n, x, z))), neg(mul(s, n, y, mul(c, n, x, z))),
                 neg(mul(c, n, br(s, n, y, x), z)), neg(mul(s, n, br(c, n, y, x), z)))
        if any(m1):
            bad.append(("mixed_1", (i, j, k), m1))
    return bad


def mixed_2(c, s, n):
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        terms = []
        for a, b, d in ((x, y, z), (y, z, x), (z, x, y)):
            terms.append(mul(c, n, br(s, n, a, b), d))
            terms.append(mul(s, n, br(c, n, a, b), d))
        m2 = add(*terms)
        if any(m2):
            bad.append(("mixed_2", (i, j, k), m2))
    return bad


def compatible_lie_mixed(b1, b2, n):
    bad = []
    for i, j, k in itertools.product(range(n), repeat=3):
        x, y, z = unit(n, i), unit(n, j), unit(n, k)
        terms = []
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            terms.append(mul(b2, n, mul(b1, n, a, b), c))
            terms.append(mul(b1, n, mul(b2, n, a, b), c))
        r = add(*terms)
        if any(r):
            bad.append(((i, j, k), r))
    return bad


def jacobi(b, n):
    return compatible_lie_mixed(b, b, n)


def matvec(m, v):
    return [sum(m[r][c] * v[c] for c in range(len(v))) for r in range(len(m))]


def main():
    # Sign-flipped A5: e1 e1 = +e2, e2 e1 = -e1.
    a5_bad = table(2, {(0, 0, 1): 1, (1, 0, 0): -1})
    bad = anti_pre_lie(a5_bad, 2)
    print("flipped A5 failures:", len(bad))
    for w in bad:
        print("  ", w[0], w[1], [str(c) for c in w[2]])

    # (A2, A3) as a pair: mixed condition 1 at (e1, e1, e1).
    a2 = table(2, {(0, 0, 0): 1})
    a3 = table(2, {(0, 0, 1): 1})
    bad = mixed(a2, a3, 2) + mixed_2(a2, a3, 2)
    print("(A2, A3) mixed failures:", [(w[0], w[1], [str(c) for c in w[2]]) for w in bad])

    # A5 with e2 e1 = -e1 moved to e1 e2 = -e1.
    a5_moved = table(2, {(0, 0, 1): -1, (0, 1, 0): -1})
    bad = anti_pre_lie(a5_moved, 2)
    print("moved A5 failures:", len(bad))
    for w in bad:
        print("  ", w[0], w[1], [str(c) for c in w[2]])

    # sl2-type bracket with [e1,e2] = e1 in dim 3.
    sl2 = table(3, {(0, 1, 2): 1, (1, 0, 2): -1, (1, 2, 0): 1, (2, 1, 0): -1, (2, 0, 1): 1, (0, 2, 1): -1})
    b2 = table(3, {(0, 1, 0): 1, (1, 0, 0): -1})
    print("sl2 jacobi failures:", len(jacobi(sl2, 3)), " b2 jacobi failures:", len(jacobi(b2, 3)))
    bad = compatible_lie_mixed(sl2, b2, 3)
    print("sl2 + b2 mixed failures:", len(bad))
    for w in bad:
        print("  ", w[0], [str(c) for c in w[1]])

    # rho = ad_1, mu = 0 on g with both brackets [e1,e2] = e1.
    g = table(2, {(0, 1, 0): 1, (1, 0, 0): -1})
    ad = [[[g[(i, j)][k] for j in range(2)] for k in range(2)] for i in range(2)]  # ad[i][k][j]
    fails = {"representation_1": 0, "representation_2": 0, "representation_mixed": 0}
    for i, j in itertools.product(range(2), repeat=2):
        xy = mul(g, 2, unit(2, i), unit(2, j))
        # mixed: rho([x,y]_2) + mu([x,y]_1) - [rho x, mu y] - [mu x, rho y]; mu = 0
        lhs = [[sum(xy[a] * ad[a][r][c] for a in range(2)) for c in range(2)] for r in range(2)]
        if any(any(row) for row in lhs):
            fails["representation_mixed"] += 1
        # eq1: rho([x,y]_1) - [rho x, rho y]
        rx, ry = ad[i], ad[j]
        comm = [[sum(rx[r][t] * ry[t][c] - ry[r][t] * rx[t][c] for t in range(2)) for c in range(2)] for r in range(2)]
        d = [[lhs[r][c] - comm[r][c] for c in range(2)] for r in range(2)]
        if any(any(row) for row in d):
            fails["representation_1"] += 1
    print("rho=ad, mu=0:", fails)

    # CA5 as a pair: rho(e2) = -L_circ(e2).
    a5 = table(2, {(0, 0, 1): -1, (1, 0, 0): -1})
    rho_e2 = [[-a5[(1, j)][k] for j in range(2)] for k in range(2)]
    print("CA5 rho(e2):", [[str(c) for c in row] for row in rho_e2])

    # anti-O with T = id on the adjoint pair of g (both brackets as above).
    bad = 0
    for i, j in itertools.product(range(2), repeat=2):
        u, v = unit(2, i), unit(2, j)
        lhs = mul(g, 2, u, v)
        rhs = add(mul(g, 2, v, u), neg(mul(g, 2, u, v)))
        if any(add(lhs, neg(rhs))):
            bad += 1
    print("anti-O T=id on adjoint: failing pairs per bracket:", bad)

    # anti-RB: [e1,e2]_1 = e1, bracket_2 = 0, R = diag(1, 0).
    R = [[F(1), F(0)], [F(0), F(0)]]
    fails = []
    for i, j in itertools.product(range(2), repeat=2):
        x, y = unit(2, i), unit(2, j)
        Rx, Ry = matvec(R, x), matvec(R, y)
        r = add(mul(g, 2, Rx, Ry), neg(matvec(R, add(mul(g, 2, Ry, x), mul(g, 2, y, Rx)))))
        if any(r):
            fails.append(((i, j), [str(c) for c in r]))
    print("anti-RB diag(1,0) failures:", fails)
    # converse, coefficient of k1^2 (bracket_2 = 0 so only k1^2 survives)
    conv = []
    for i, j, k in itertools.product(range(2), repeat=3):
        x, y, z = unit(2, i), unit(2, j), unit(2, k)
        Rx, Ry = matvec(R, x), matvec(R, y)
        inner = add(mul(g, 2, Rx, Ry), matvec(R, add(mul(g, 2, x, Ry), mul(g, 2, Rx, y))))
        r = mul(g, 2, inner, z)
        if any(r):
            conv.append(((i, j, k), [str(c) for c in r]))
    print("rb converse diag(1,0) failures:", conv)

    # Strong anti-RB operators over GF(5) on g = ([e1,e2] = e1, 0).
    p = 5
    count = 0
    for a, b, c, d in itertools.product(range(p), repeat=4):
        M = [[a, b], [c, d]]
        ok = True
        for i, j in itertools.product(range(2), repeat=2):
            x, y = unit(2, i), unit(2, j)
            Rx, Ry = matvec(M, x), matvec(M, y)
            r = add(mul(g, 2, Rx, Ry), neg(matvec(M, add(mul(g, 2, Ry, x), mul(g, 2, y, Rx)))))
            if any(int(v) % p for v in r):
                ok = False
        if ok:
            for i, j, k in itertools.product(range(2), repeat=3):
                x, y, z = unit(2, i), unit(2, j), unit(2, k)
                terms = []
                for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
                    terms.append(mul(g, 2, mul(g, 2, matvec(M, u), matvec(M, v)), w))
                if any(int(v) % p for v in add(*terms)):
                    ok = False
        count += ok
    print("anti-RB operators on ([e1,e2]=e1, 0) over GF(5):", count)

    # induce_from_cocycle: both brackets [e1,e2] = e1, B = [[0,1],[1,0]].
    # B(x o y, z) = B(y, [x, z]); solve for x o y with B symmetric nondegenerate.
    B = [[F(0), F(1)], [F(1), F(0)]]
    prods = {}
    for i, j in itertools.product(range(2), repeat=2):
        rhs = [sum(unit(2, j)[s] * B[s][t] * mul(g, 2, unit(2, i), unit(2, zz))[t] for s in range(2) for t in range(2))
               for zz in range(2)]
        # gram * w = rhs with gram = B (B^T = B); B is its own inverse here
        w = matvec(B, rhs)
        prods[(i, j)] = [str(c) for c in w]
    print("from-cocycle products:", prods)

    # invariance of B = identity on CA5 (star = 0).
    bad = []
    I2 = [[F(1), F(0)], [F(0), F(1)]]
    for i, j, k in itertools.product(range(2), repeat=3):
        x, y, z = unit(2, i), unit(2, j), unit(2, k)
        lhs = sum(a * b for a, b in zip(mul(a5, 2, x, y), z))
        rhs = sum(a * b for a, b in zip(y, br(a5, 2, x, z)))
        if lhs != rhs:
            bad.append(((i, j, k), str(lhs - rhs)))
    print("B=I on CA5 invariant_circ failures:", bad)

    # 3-dim [e1,e2] = e3, B = I: cyclic cocycle sum.
    h = table(3, {(0, 1, 2): 1, (1, 0, 2): -1})
    bad = []
    for i, j, k in itertools.product(range(3), repeat=3):
        x, y, z = unit(3, i), unit(3, j), unit(3, k)
        s = (sum(a * b for a, b in zip(mul(h, 3, x, y), z)) + sum(a * b for a, b in zip(mul(h, 3, y, z), x))
             + sum(a * b for a, b in zip(mul(h, 3, z, x), y)))
        if s:
            bad.append((i, j, k))
    print("3-dim cocycle failing triples:", bad)


if __name__ == "__main__":
    main()
