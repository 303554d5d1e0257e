#!/usr/bin/env python3
"""Generate quiver-with-relations presentations of regular blocks of
category O for sl_2 and sl_3.

The block algebra is realised through Soergel modules: the projective P_x
corresponds to the cyclic module C / I_{w0 x} over the coinvariant algebra C,
where I_u is spanned by the Schubert polynomials S_v with v not below u.
Morphisms are C-linear maps of cyclic modules, graded so that the algebra is
generated in degree one.  Arrows are a basis of the degree-one morphisms and
relations are the kernel of multiplication in degree two.

Usage: gen_block.py N OUT.json   (N = 2 for sl_2, 3 for sl_3)
"""

import itertools
import json
import sys
from fractions import Fraction

import sympy as sp

LETTERS = "stuvw"


def compose(a, b):
    # (a b)(i) = a(b(i)), one-line notation, 0-based
    return tuple(a[b[i]] for i in range(len(a)))


def simple(n, i):
    p = list(range(n))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def bruhat_leq(x, y):
    n = len(x)
    for i in range(n):
        for k in range(n):
            cx = sum(1 for j in range(i + 1) if x[j] >= k)
            cy = sum(1 for j in range(i + 1) if y[j] >= k)
            if cx > cy:
                return False
    return True


def reduced_word(n, p):
    # greedy left-descent stripping, lowest generator first
    word = []
    cur = p
    while length(cur) > 0:
        for i in range(n - 1):
            s = simple(n, i)
            q = compose(s, cur)
            if length(q) < length(cur):
                word.append(LETTERS[i])
                cur = q
                break
    return "".join(word) if word else "e"


def main():
    n = int(sys.argv[1])
    out = sys.argv[2]
    xs = sp.symbols("x1:%d" % (n + 1))
    elems = sorted(itertools.permutations(range(n)), key=lambda p: (length(p), reduced_word(n, p)))
    w0 = tuple(reversed(range(n)))

    # coinvariant algebra: standard monomials of the lex Groebner basis, x_i^a with a < i
    sym = [sp.Add(*[sp.Mul(*c) for c in itertools.combinations(xs, k)]) for k in range(1, n + 1)]
    gb = sp.groebner(sym, *xs, order="lex")
    mons = [sp.Mul(*[x ** e for x, e in zip(xs, exps)])
            for exps in itertools.product(*[range(i + 1) for i in range(n)])]
    mons.sort(key=lambda m: (sp.Poly(m, *xs).total_degree(), str(m)))
    mon_index = {m: i for i, m in enumerate(mons)}
    dimc = len(mons)

    def vec(f):
        r = gb.reduce(sp.expand(f))[1]
        v = [Fraction(0)] * dimc
        for term, coeff in sp.Poly(r, *xs).terms():
            m = sp.Mul(*[x ** e for x, e in zip(xs, term)])
            v[mon_index[m]] += Fraction(int(sp.fraction(coeff)[0]), int(sp.fraction(coeff)[1]))
        return v

    def deg(m):
        return sp.Poly(m, *xs).total_degree()

    # Schubert polynomials by divided differences from w0
    schub = {w0: sp.Mul(*[xs[i] ** (n - 1 - i) for i in range(n)])}
    frontier = [w0]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(n - 1):
                ws = compose(w, simple(n, i))
                if length(ws) == length(w) - 1 and ws not in schub:
                    f = schub[w]
                    g = f.subs({xs[i]: xs[i + 1], xs[i + 1]: xs[i]}, simultaneous=True)
                    schub[ws] = sp.factor(sp.cancel((f - g) / (xs[i] - xs[i + 1])))
                    nxt.append(ws)
        frontier = nxt

    M = sp.Matrix

    def span_rows(rows):
        if not rows:
            return sp.zeros(0, dimc)
        m = M([[sp.Rational(c.numerator, c.denominator) for c in r] for r in rows])
        r, piv = m.rref()
        return r[: len(piv), :]

    def ideal(u):
        return span_rows([vec(schub[v]) for v in elems if not bruhat_leq(v, u)])

    ideals = {u: ideal(u) for u in elems}
    # sanity: ideals closed under multiplication by variables
    for u, I in ideals.items():
        for r in range(I.rows):
            f = sum(I[r, j] * mons[j] for j in range(dimc))
            for x in xs:
                v = vec(f * x)
                test = I.col_join(M([[sp.Rational(c.numerator, c.denominator) for c in v]]))
                assert test.rank() == I.rows, "not an ideal"

    def reduce_mod(v, I):
        # normal form of a row vector modulo the row space of I (rref)
        v = list(v)
        for r in range(I.rows):
            piv = next(j for j in range(dimc) if I[r, j] != 0)
            if v[piv] != 0:
                c = v[piv]
                v = [v[j] - c * I[r, j] for j in range(dimc)]
        return v

    def quotient_basis(I):
        pivs = {next(j for j in range(dimc) if I[r, j] != 0) for r in range(I.rows)}
        return [j for j in range(dimc) if j not in pivs]

    soergel = {x: compose(w0, x) for x in elems}
    gdeg = {x: -length(soergel[x]) for x in elems}
    name = {x: reduced_word(n, x) for x in elems}

    def hom(a, b):
        """Basis of Hom(V_a, V_b) as polynomials c (mod I_b), grouped by map degree."""
        Ia, Ib = ideals[soergel[a]], ideals[soergel[b]]
        qb = quotient_basis(Ib)
        gens = [sum(Ia[r, j] * mons[j] for j in range(dimc)) for r in range(Ia.rows)]
        by_deg = {}
        for k in range(0, n * (n - 1) // 2 + 1):
            cand = [j for j in qb if deg(mons[j]) == k]
            if not cand:
                continue
            # c = sum a_j m_j; condition: c * g in I_b for all g
            rows = []
            for g in gens:
                cols = [reduce_mod([sp.Rational(t.numerator, t.denominator) for t in vec(mons[j] * g)], Ib) for j in cand]
                for i in range(dimc):
                    rows.append([cols[c][i] for c in range(len(cand))])
            if rows:
                ker = M(rows).nullspace()
            else:
                ker = [sp.eye(len(cand))[:, i] for i in range(len(cand))]
            polys = [sp.expand(sum(kv[i] * mons[cand[i]] for i in range(len(cand)))) for kv in ker]
            if polys:
                d = 2 * k + gdeg[b] - gdeg[a]
                by_deg.setdefault(d, []).extend(polys)
        return by_deg

    # path x -> y  <->  map P_y -> P_x  <->  Hom(V_y, V_x), value c mod I_x
    homs = {(x, y): hom(y, x) for x in elems for y in elems}
    total = 0
    for (x, y), bd in homs.items():
        for d, ps in bd.items():
            assert d >= 0, (name[x], name[y], d)
            if d == 0:
                assert x == y and len(ps) == 1
            total += len(ps)
    print("algebra dimension", total, file=sys.stderr)

    arrows = []
    for x in elems:
        for y in elems:
            for i, c in enumerate(homs[(x, y)].get(1, [])):
                arrows.append({"from": name[x], "to": name[y], "name": "%s_%s%s" % (name[x], name[y], "" if i == 0 else str(i)), "poly": c})

    def value(path, x):
        f = sp.Integer(1)
        for a in path:
            f = f * a["poly"]
        return reduce_mod([sp.Rational(t.numerator, t.denominator) for t in vec(f)], ideals[soergel[x]])

    relations = []
    for x in elems:
        for z in elems:
            paths = [(a, b) for a in arrows for b in arrows
                     if a["from"] == name[x] and a["to"] == b["from"] and b["to"] == name[z]]
            if not paths:
                continue
            cols = [value(p, x) for p in paths]
            mat = M([[cols[c][i] for c in range(len(paths))] for i in range(dimc)])
            for kv in mat.nullspace():
                den = sp.ilcm(1, 1, *[sp.fraction(t)[1] for t in kv])
                kv = kv * den
                g = sp.igcd(0, 0, *[int(t) for t in kv if t != 0])
                kv = kv / g
                rel = []
                for c, p in zip(kv, paths):
                    if c != 0:
                        rel.append({"coeff": int(c), "path": [p[0]["name"], p[1]["name"]]})
                relations.append(rel)

    order = []
    for x in elems:
        for y in elems:
            if bruhat_leq(x, y) and length(y) == length(x) + 1:
                order.append([name[x], name[y]])

    maxdeg = max(d for bd in homs.values() for d in bd)
    data = {
        "field": "Q",
        "vertices": [{"name": name[x], "length": length(x)} for x in elems],
        "order": order,
        "arrows": [{"from": a["from"], "to": a["to"], "name": a["name"]} for a in arrows],
        "relations": relations,
        "path_bound": int(maxdeg),
    }
    with open(out, "w") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")
    print("arrows", len(arrows), "relations", len(relations), "path_bound", maxdeg, file=sys.stderr)


if __name__ == "__main__":
    main()
