"""Independent reference values for the C++ tests.

Writes reference.json next to this file. Run with --check to compare instead of write.
Everything here is brute force over Fractions: symmetry groups by trying every
permutation of the points, characters from hand-entered character tables.
"""
import itertools
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

HERE = Path(__file__).resolve().parent


def rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def solve_square(a, b):
    """x with a x = b for invertible a (lists of rows)."""
    n = len(a)
    m = [list(map(Fraction, a[i])) + [Fraction(b[i])] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def linsym_order(points):
    """Number of permutations s with a linear A, A p_i = p_s(i) for all i."""
    pts = [list(map(Fraction, p)) for p in points]
    d = len(pts[0])
    basis = []
    for i, p in enumerate(pts):
        if rank([pts[j] for j in basis] + [p]) > len(basis):
            basis.append(i)
    # coordinates of every point in the chosen basis
    bt = [[pts[j][k] for j in basis] for k in range(d)]
    sub = [r for r in range(d)]
    # pick len(basis) independent rows of bt to make it square
    rows = []
    for r in sub:
        if rank([bt[x] for x in rows] + [bt[r]]) > len(rows):
            rows.append(r)
    sq = [bt[r] for r in rows]
    coords = [solve_square(sq, [p[r] for r in rows]) for p in pts]
    for p, c in zip(pts, coords):
        assert all(sum(c[t] * pts[basis[t]][k] for t in range(len(basis))) == p[k] for k in range(d))
    count = 0
    n = len(pts)
    for s in itertools.permutations(range(n)):
        # A maps basis point b_t to p_s(b_t); then A p_i = sum c_it p_s(b_t) must equal p_s(i)
        ok = True
        for i in range(n):
            img = [sum(coords[i][t] * pts[s[basis[t]]][k] for t in range(len(basis))) for k in range(d)]
            if img != pts[s[i]]:
                ok = False
                break
        count += ok
    return count


def affsym_order(points):
    return linsym_order([list(p) + [1] for p in points])


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def matvec(a, v):
    return [sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a))]


def close(gens):
    d = len(gens[0])
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(map(tuple, matmul(s, g)))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def load_group(name):
    j = json.loads((HERE.parent / "data" / name).read_text())
    d = j["dim"]
    gens = []
    for g in j["generators"]:
        if isinstance(g, str):
            raise ValueError("cycle generators are handled by perm_matrix")
        gens.append([[Fraction(x) for x in row] for row in g])
    return close(gens)


def perm_matrix(p):
    n = len(p)
    return [[Fraction(int(p[j] == i)) for j in range(n)] for i in range(n)]


def orbit(group, v):
    v = [Fraction(x) for x in v]
    return [matvec(g, v) for g in group]


def gf2_rows(path):
    rows = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#")[0].strip()
        if line:
            rows.append([int(c) for c in line])
    return rows


def diag_points(rows):
    n = len(rows[0])
    pts = []
    for x in itertools.product((0, 1), repeat=n):
        pts.append([(-1) ** (sum(r[k] * x[k] for k in range(n)) % 2) for r in rows])
    return pts


def gl2_order(n):
    return math.prod(2**n - 2**k for k in range(n))


def caterpillar_complement(n):
    tree = {(i, i + 1) for i in range(n - 2)} | {(2, n - 1)}
    return [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in tree]


def cut_bounds(n):
    edges = caterpillar_complement(n)
    def cut(a):
        return sum(((u in a) != (v in a)) for u, v in edges)
    principal = max(cut({v}) for v in range(n))
    nonprincipal = min(
        cut(set(a))
        for k in range(2, n - 1)
        for a in itertools.combinations(range(n), k)
    )
    return principal, nonprincipal


def compute():
    out = {}
    # S3 natural representation: Irr D = {trivial, standard}; gamma = sum chi(1) chi
    chars = {"identity": (1, 2), "transposition": (1, 0), "three_cycle": (1, -1)}
    out["gamma_s3_by_class"] = {k: 1 * t + 2 * s for k, (t, s) in chars.items()}

    d4 = load_group("d4.json")
    c4 = load_group("c4.json")
    c3 = load_group("c3.json")
    c5 = load_group("c5.json")
    q8 = load_group("q8.json")
    s3 = close([perm_matrix((1, 0, 2)), perm_matrix((1, 2, 0))])
    out["orbit_affsym"] = {
        "d4_2_1": affsym_order(orbit(d4, (2, 1))),
        "c4_1_0": affsym_order(orbit(c4, (1, 0))),
        "c3_1_0": affsym_order(orbit(c3, (1, 0))),
        "c5_1_2_m3_7": affsym_order(orbit(c5, (1, 2, -3, 7))),
    }
    out["orbit_linsym"] = {
        "d4_1_0_with_repeats": linsym_order(orbit(d4, (1, 0))),
        "q8_1_0_0_0": linsym_order(orbit(q8, (1, 0, 0, 0))),
        "s3_1_2_3": linsym_order(orbit(s3, (1, 2, 3))),
    }
    # representation polytope of S3 natural rep: points are the flattened matrices
    out["birkhoff3_affsym"] = affsym_order([[x for row in g for x in row] for g in s3])

    census = {
        "dim3": ["100", "010", "001"],
        "dim4_a": ["100", "010", "001", "111"],
        "dim4_b": ["100", "010", "001", "110"],
        "dim5": ["100", "010", "001", "110", "101"],
        "dim6": ["100", "010", "001", "110", "101", "011"],
        "dim7": ["100", "010", "001", "110", "101", "011", "111"],
    }
    out["census_rows"] = census
    out["census_orders"] = {
        k: affsym_order(diag_points([[int(c) for c in r] for r in rows])) for k, rows in census.items()
    }

    ex = gf2_rows(HERE.parent / "data" / "example12x5.txt")
    # hamming form of gamma: gamma(x) = d - 2 wt(Cx), index i has x1 as the top bit
    gam = []
    for i in range(2 ** len(ex[0])):
        x = [(i >> (len(ex[0]) - 1 - k)) & 1 for k in range(len(ex[0]))]
        w = sum(sum(r[k] * x[k] for k in range(len(x))) % 2 for r in ex)
        gam.append(len(ex) - 2 * w)
    out["example12x5_gamma"] = gam

    out["ideal_bound"] = {
        f"{n}_{d}": {"count": math.comb(2**n - 1, d), "gl_order": gl2_order(n)}
        for n, d in [(2, 2), (2, 3), (3, 3), (3, 4), (3, 7), (4, 7), (4, 8)]
    }
    out["cut_bounds"] = {str(n): list(cut_bounds(n)) for n in (8, 9, 10)}
    return out


def main():
    data = compute()
    target = HERE / "reference.json"
    text = json.dumps(data, indent=1, sort_keys=True) + "\n"
    if "--check" in sys.argv:
        if target.read_text() != text:
            print("reference.json is stale")
            sys.exit(1)
        print("reference.json up to date")
        return
    target.write_text(text)
    print(text)


if __name__ == "__main__":
    main()
