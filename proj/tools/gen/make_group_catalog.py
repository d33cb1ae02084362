#!/usr/bin/env python3
"""Generate data/groups.catalog: multiplication tables for the finite groups
the library ships (the Galois groups appearing in the published field tables,
plus Q64 and the order-64 tower-example group).

Groups are built from explicit constructions (cyclic, dihedral, dicyclic,
direct/semidirect/central products, matrix groups).  Element 0 is the
identity; elements are sorted by (element order, construction key) so the
emitted tables are deterministic.

Run from the repository root:
    python3 tools/gen/make_group_catalog.py data/groups.catalog
"""

import sys
from itertools import product


class Group:
    def __init__(self, elements, mul, identity):
        self.elements = list(elements)
        self._mul = mul
        self.identity = identity

    def mul(self, a, b):
        return self._mul(a, b)

    def table(self):
        """Relabelled multiplication table, identity first, deterministic order."""
        order_of = {}
        for e in self.elements:
            k, x = 1, e
            while x != self.identity:
                x = self.mul(x, e)
                k += 1
            order_of[e] = k
        elems = sorted(self.elements, key=lambda e: (order_of[e], repr(e)))
        assert elems[0] == self.identity
        idx = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        return [[idx[self.mul(elems[i], elems[j])] for j in range(n)] for i in range(n)]


def cyclic(n):
    return Group(range(n), lambda a, b: (a + b) % n, 0)


def direct(*gs):
    elems = list(product(*[g.elements for g in gs]))
    ident = tuple(g.identity for g in gs)

    def mul(a, b):
        return tuple(g.mul(x, y) for g, x, y in zip(gs, a, b))

    return Group(elems, mul, ident)


def dihedral(n):
    """Order 2n: (i, j) = r^i s^j."""
    elems = [(i, j) for i in range(n) for j in range(2)]

    def mul(a, b):
        i1, j1 = a
        i2, j2 = b
        return ((i1 + (i2 if j1 == 0 else -i2)) % n, (j1 + j2) % 2)

    return Group(elems, mul, (0, 0))


def dicyclic(n):
    """Order 4n: <a,b | a^(2n), b^2 = a^n, bab^-1 = a^-1>; (i,j) = a^i b^j."""
    elems = [(i, j) for i in range(2 * n) for j in range(2)]

    def mul(a, b):
        i1, j1 = a
        i2, j2 = b
        i = (i1 + (i2 if j1 == 0 else -i2)) % (2 * n)
        if j1 == 1 and j2 == 1:
            i = (i + n) % (2 * n)
        return (i, (j1 + j2) % 2)

    return Group(elems, mul, (0, 0))


def semidirect(n_grp, h_grp, act):
    """act(h, n) -> n; automorphism action of H on N.  Elements (n, h)."""
    elems = [(n, h) for n in n_grp.elements for h in h_grp.elements]

    def mul(a, b):
        n1, h1 = a
        n2, h2 = b
        return (n_grp.mul(n1, act(h1, n2)), h_grp.mul(h1, h2))

    return Group(elems, mul, (n_grp.identity, h_grp.identity))


def quotient(g, normal):
    """Quotient by a normal subgroup given as a set of elements."""
    normal = frozenset(normal)

    def coset(e):
        return tuple(sorted((g.mul(e, z) for z in normal), key=repr))

    cosets = sorted({coset(e) for e in g.elements}, key=repr)

    def mul(a, b):
        return coset(g.mul(a[0], b[0]))

    return Group(cosets, mul, coset(g.identity))


def central_product(g, h, zg, zh):
    """(G x H) / <(zg, zh)> for central involutions zg, zh."""
    d = direct(g, h)
    z = (zg, zh)
    sub = {d.identity, z}
    return quotient(d, sub)


def perm_group(gens, degree):
    ident = tuple(range(degree))

    def mul(a, b):  # (a*b)(x) = a(b(x))
        return tuple(a[b[i]] for i in range(degree))

    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = mul(e, g)
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    return Group(sorted(elems), mul, ident)


def sym(n):
    gens = [tuple([1, 0] + list(range(2, n)))]
    cyc = tuple(list(range(1, n)) + [0])
    return perm_group([gens[0], cyc], n)


def alt4():
    return perm_group([(1, 0, 3, 2), (1, 2, 0, 3)], 4)


def sl23():
    def mats():
        for a, b, c, d in product(range(3), repeat=4):
            if (a * d - b * c) % 3 == 1:
                yield (a, b, c, d)

    elems = list(mats())

    def mul(m, n):
        a, b, c, d = m
        e, f, g, h = n
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    return Group(elems, mul, (1, 0, 0, 1))


def f20():
    """AGL(1,5) = F5 : F5^x, order 20; elements (a, b): x -> a*x + b."""
    elems = [(a, b) for a in (1, 2, 3, 4) for b in range(5)]

    def mul(m, n):
        a, b = m
        c, d = n
        return ((a * c) % 5, (a * d + b) % 5)

    return Group(elems, mul, (1, 0))


def c4_rtimes_c4():
    """<a,b | a4, b4, bab^-1 = a^-1>; (i, j) = a^i b^j."""
    elems = [(i, j) for i in range(4) for j in range(4)]

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        i2 = i2 if j1 % 2 == 0 else (-i2) % 4
        return ((i1 + i2) % 4, (j1 + j2) % 4)

    return Group(elems, mul, (0, 0))


def c8_rtimes3_c4():
    """<a,b | a8, b4, bab^-1 = a^3>; (i, j) = a^i b^j."""
    elems = [(i, j) for i in range(8) for j in range(4)]
    act = [1, 3, 1, 3]  # 3^j mod 8 acts trivially for even j

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        return ((i1 + i2 * act[j1]) % 8, (j1 + j2) % 4)

    return Group(elems, mul, (0, 0))


def m16():
    """Modular group of order 16 = <b,a | b8, a2, aba^-1 = b^5> (the
    non-split extension of C4 by C4)."""
    elems = [(i, j) for i in range(8) for j in range(2)]

    def mul(x, y):
        i1, j1 = x
        i2, j2 = y
        return ((i1 + i2 * (5 if j1 else 1)) % 8, (j1 + j2) % 2)

    return Group(elems, mul, (0, 0))


def c2sq_rtimes_cyc(k):
    """(C2 x C2) : C_k, the order-2k*2 group where the cyclic factor swaps
    the two C2 generators."""
    n = direct(cyclic(2), cyclic(2))
    h = cyclic(k)

    def act(j, v):
        return v if j % 2 == 0 else (v[1], v[0])

    return semidirect(n, h, act)


def c3_rtimes_d8():
    """<x,y,z | x2, y2, z3, (xy)^8, yzy = z, xzx = z^-1> = D4 x* S3 of
    order 48 (normal D4, quotient S3)."""
    d8 = dihedral(8)  # x = (0,1), y = (1,1): involutions with xy of order 8

    def act(h, z):
        # action factors through the hom (i, j) -> (-1)^(i+j); x inverts z,
        # y centralizes it
        i, j = h
        return z if (i + j) % 2 == 0 else (-z) % 3

    return semidirect(cyclic(3), d8, act)


def build_all():
    s3 = sym(3)
    d4 = dihedral(4)
    q8 = dicyclic(2)
    groups = [
        (2, 1, "C2", cyclic(2)),
        (3, 1, "C3", cyclic(3)),
        (4, 1, "C4", cyclic(4)),
        (4, 2, "C2^2", direct(cyclic(2), cyclic(2))),
        (6, 2, "C6", cyclic(6)),
        (8, 1, "C8", cyclic(8)),
        (8, 2, "C2xC4", direct(cyclic(2), cyclic(4))),
        (8, 3, "D4", d4),
        (8, 4, "Q8", q8),
        (8, 5, "C2^3", direct(cyclic(2), cyclic(2), cyclic(2))),
        (10, 2, "C10", cyclic(10)),
        (12, 2, "C12", cyclic(12)),
        (12, 4, "D6", dihedral(6)),
        (12, 5, "C2xC6", direct(cyclic(2), cyclic(6))),
        (14, 2, "C14", cyclic(14)),
        (16, 1, "C16", cyclic(16)),
        (16, 2, "C4^2", direct(cyclic(4), cyclic(4))),
        (16, 3, "C2^2:C4", c2sq_rtimes_cyc(4)),
        (16, 5, "C2xC8", direct(cyclic(2), cyclic(8))),
        (16, 7, "D8", dihedral(8)),
        (16, 10, "C2^2xC4", direct(cyclic(2), cyclic(2), cyclic(4))),
        (16, 11, "C2xD4", direct(cyclic(2), d4)),
        (16, 12, "C2xQ8", direct(cyclic(2), q8)),
        (16, 13, "C4oD4", central_product(cyclic(4), d4, 2, (2, 0))),
        (18, 2, "C18", cyclic(18)),
        (18, 5, "C3xC6", direct(cyclic(3), cyclic(6))),
        (20, 2, "C20", cyclic(20)),
        (20, 4, "D10", dihedral(10)),
        (20, 5, "C2xC10", direct(cyclic(2), cyclic(10))),
        (24, 3, "SL(2,3)", sl23()),
        (24, 5, "C4xS3", direct(cyclic(4), s3)),
        (24, 6, "D12", dihedral(12)),
        (24, 9, "C2xC12", direct(cyclic(2), cyclic(12))),
        (24, 10, "C3xD4", direct(cyclic(3), d4)),
        (24, 13, "C2xA4", direct(cyclic(2), alt4())),
        (24, 14, "C2^2xS3", direct(cyclic(2), cyclic(2), s3)),
        (24, 15, "C2^2xC6", direct(cyclic(2), cyclic(2), cyclic(6))),
        (32, 5, "C2^2:C8", c2sq_rtimes_cyc(8)),
        (32, 23, "C2x(C4:C4)", direct(cyclic(2), c4_rtimes_c4())),
        (32, 37, "C2x(C4.C4)", direct(cyclic(2), m16())),
        (32, 42, "C4oD8", central_product(cyclic(4), dihedral(8), 2, (4, 0))),
        (36, 12, "S3xC6", direct(s3, cyclic(6))),
        (40, 12, "C2xF20", direct(cyclic(2), f20())),
        (48, 15, "D4:S3", c3_rtimes_d8()),
        (64, 54, "Q64", dicyclic(16)),
        (64, 67, "C2^3.D4", direct(cyclic(2), c8_rtimes3_c4())),
    ]
    return groups


def main(out_path):
    with open(out_path, "w") as out:
        for order, gid, name, g in build_all():
            tbl = g.table()
            assert len(tbl) == order, (name, len(tbl), order)
            out.write(f"group {order} {gid} {name}\n")
            for row in tbl:
                out.write(" ".join(str(v) for v in row) + "\n")
            out.write("\n")
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main(sys.argv[1])
