"""Independent brute-force oracle for values frozen into the unit tests.

Pure Python, shares no code with the C++ library: polynomial arithmetic is
carry-less multiplication with reduction, codes are enumerated naively and
determinants use cofactor expansion. Run it and compare with the constants
in tests/unit/*.cpp:

    python3 tests/oracle/oracle.py > tests/oracle/frozen.json
"""

import itertools
import json
import sys


def clmul_mod(a, b, mod, m):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= mod
    return r


def is_irreducible(f, m):
    # trial division by every polynomial of degree 1..m//2
    for g in range(2, 1 << (m // 2 + 1)):
        if g.bit_length() - 1 < 1:
            continue
        r = f
        dg = g.bit_length() - 1
        while r.bit_length() - 1 >= dg:
            r ^= g << (r.bit_length() - 1 - dg)
        if r == 0:
            return False
    return True


class GF:
    def __init__(self, m, mod=None):
        self.m, self.q = m, 1 << m
        if mod is None:
            mod = next(f for f in range((1 << m) | 1, 1 << (m + 1)) if is_irreducible(f, m))
        self.mod = mod
        self.alpha = next(a for a in range(2, self.q) if self.order(a) == self.q - 1)

    def mul(self, a, b):
        return clmul_mod(a, b, self.mod, self.m)

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def order(self, a):
        x, k = a, 1
        while x != 1:
            x, k = self.mul(x, a), k + 1
        return k

    def det(self, mat):
        n = len(mat)
        if n == 1:
            return mat[0][0]
        total = 0
        for j in range(n):
            if mat[0][j] == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total ^= self.mul(mat[0][j], self.det(minor))
        return total


def generator(f, rows, extended=False):
    pts = [f.pow(f.alpha, i) for i in range(1, f.q)]
    g = [[f.pow(x, e) if e else 1 for x in pts] for e in rows]
    if extended:
        for r in g:
            s = 0
            for v in r:
                s ^= v
            r.append(s)
    return g


def weight_distribution(f, g):
    n = len(g[0])
    counts = [0] * (n + 1)
    for msg in itertools.product(range(f.q), repeat=len(g)):
        w = 0
        for c in range(n):
            v = 0
            for coef, row in zip(msg, g):
                if coef:
                    v ^= f.mul(coef, row[c])
            w += v != 0
        counts[w] += 1
    return {str(i): c for i, c in enumerate(counts) if c}


def min_weight_design_lambda(f, g, w):
    """lambda of the 2-design formed by supports of weight-w codewords."""
    n = len(g[0])
    pair = {}
    blocks = set()
    for msg in itertools.product(range(f.q), repeat=len(g)):
        supp = []
        for c in range(n):
            v = 0
            for coef, row in zip(msg, g):
                if coef:
                    v ^= f.mul(coef, row[c])
            if v:
                supp.append(c)
        if len(supp) == w:
            blocks.add(tuple(supp))
    for b in blocks:
        for p in itertools.combinations(b, 2):
            pair[p] = pair.get(p, 0) + 1
    values = set(pair.get(p, 0) for p in itertools.combinations(range(n), 2))
    return len(blocks), sorted(values)


def dual_generator(f, g):
    # null space by brute force is too slow; solve by elimination on a copy
    k, n = len(g), len(g[0])
    a = [row[:] for row in g]
    inv = {x: next(y for y in range(1, f.q) if f.mul(x, y) == 1) for x in range(1, f.q)}
    pivots, r = [], 0
    for c in range(n):
        p = next((i for i in range(r, k) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        s = inv[a[r][c]]
        a[r] = [f.mul(s, v) for v in a[r]]
        for i in range(k):
            if i != r and a[i][c]:
                t = a[i][c]
                a[i] = [x ^ f.mul(t, y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = a[i][fc]
        basis.append(v)
    return basis


def counting(f, rows, fixed_count, include_zero):
    dom = list(range(0 if include_zero else 1, f.q))
    hist = {}
    for fixed in itertools.combinations(dom, fixed_count):
        rest = [x for x in dom if x not in fixed]
        cnt = 0
        for comp in itertools.combinations(rest, len(rows) - fixed_count):
            pts = list(fixed) + list(comp)
            mat = [[f.pow(x, e) if e else 1 for x in pts] for e in rows]
            cnt += f.det(mat) == 0
        hist[cnt] = hist.get(cnt, 0) + 1
    return {str(k): v for k, v in sorted(hist.items())}


def main():
    out = {}
    f8, f16, f32 = GF(3), GF(4), GF(5)
    out["modulus"] = {"3": f8.mod, "4": f16.mod, "5": f32.mod, "6": GF(6).mod}
    out["alpha"] = {"3": f8.alpha, "4": f16.alpha, "5": f32.alpha}
    out["gf8_alpha_sq"] = f8.mul(f8.alpha, f8.alpha)
    out["gf8_alpha_cubed"] = f8.mul(f8.mul(f8.alpha, f8.alpha), f8.alpha)
    out["gf16_mul_table_row_7"] = [f16.mul(7, b) for b in range(16)]
    out["gf32_alpha_order"] = f32.order(f32.alpha)
    out["gf16_cube_roots_of_alpha"] = sum(1 for x in range(16) if f16.pow(x, 3) == f16.alpha)
    out["gf8_f_111_roots_nonzero"] = sum(1 for x in range(1, 8) if f8.pow(x, 3) ^ x ^ 1 == 0)
    out["gf8_f_101_roots_nonzero"] = sum(1 for x in range(1, 8) if f8.pow(x, 3) ^ 1 == 0)
    # x^3 permutes GF(8); oval needs (f(x+a)+f(a))/x to permute GF(8)^*... checked
    # via the slope definition: all slopes from a point are distinct.
    def oval(f, e):
        for a in range(f.q):
            s = set()
            for x in range(f.q):
                if x == a:
                    continue
                num = f.pow(x, e) ^ f.pow(a, e)
                den = x ^ a
                inv = next(y for y in range(1, f.q) if f.mul(den, y) == 1)
                s.add(f.mul(num, inv))
            if len(s) != f.q - 1:
                return False
        return True
    out["gf8_oval_x3"] = oval(f8, 3)
    out["gf8_oval_x2"] = oval(f8, 2)
    out["gf32_oval_x6"] = oval(f32, 6)
    out["gf32_oval_x4"] = oval(f32, 4)

    codes = {
        "D_h1_q8": (f8, [0, 1, 3]),
        "H_h1_q8": (f8, [0, 2, 3]),
        "D_h2_q8": (f8, [0, 1, 5]),
        "D_h1_q16": (f16, [0, 1, 3]),
        "G2_23_q8": (f8, [0, 2, 3, 4]),
        "G2_23_q16": (f16, [0, 2, 3, 4]),
    }
    wds = {}
    for name, (f, rows) in codes.items():
        wds[name] = weight_distribution(f, generator(f, rows))
    wds["CONJ_k4_q8_rows"] = weight_distribution(f8, generator(f8, [0, 1, 2, 4]))
    out["weight_distributions"] = wds

    g = generator(f8, [0, 1, 3])
    out["D_h1_q8_dual_wd"] = weight_distribution(f8, dual_generator(f8, g))
    out["D_h1_q8_dual_min_design"] = min_weight_design_lambda(f8, dual_generator(f8, g), 3)
    out["D_h1_q8_dual_w4_design"] = min_weight_design_lambda(f8, dual_generator(f8, g), 4)
    out["D_h1_q8_primal_min_design"] = min_weight_design_lambda(f8, g, 4)

    out["counting"] = {
        "L4.3_q8": counting(f8, [0, 2, 3, 4], 2, False),
        "L4.3_q16": counting(f16, [0, 2, 3, 4], 2, False),
        "L4.1_q32": counting(f32, [0, 1, 3, 4], 2, False),
        "L5.3_q16": counting(f16, [0, 1, 2, 3, 5], 2, False),
    }
    json.dump(out, sys.stdout, indent=1, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
