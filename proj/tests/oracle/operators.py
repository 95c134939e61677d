"""Independent sympy computation of the operator dump for a fixture file.

Usage: python3 operators.py fixture.json > fixture_operators.json
"""
import json
import sys

import sympy as sp


def rat(s):
    return sp.Rational(str(s))


def mat(rows):
    return sp.Matrix([[rat(x) for x in r] for r in rows])


def idempotents(x, values):
    n = x.shape[0]
    out = []
    for i, vi in enumerate(values):
        p = sp.eye(n)
        for j, vj in enumerate(values):
            if j != i:
                p = p * (x - vj * sp.eye(n)) / (vi - vj)
        out.append(p)
    return out


def column_space(ms):
    cols = [c for m in ms for c in m.columnspace()]
    return sp.Matrix.hstack(*cols) if cols else None


def intersect(u, v):
    if u is None or v is None:
        return None
    k = sp.Matrix.hstack(u, -v).nullspace()
    if not k:
        return None
    return sp.Matrix.hstack(*[u * z[: u.shape[1], :] for z in k])


def split_map(parts, q, d):
    basis, diag = [], []
    for i, part in enumerate(parts):
        for c in part.columnspace():
            basis.append(c)
            diag.append(q ** (d - 2 * i))
    p = sp.Matrix.hstack(*basis)
    return p * sp.diag(*diag) * p.inv()


def dump(m):
    return [[str(x) for x in m.row(r)] for r in range(m.shape[0])]


def main(path):
    f = json.load(open(path))
    q, a, b, d = rat(f["q"]), rat(f["a"]), rat(f["b"]), int(f["d"])
    A, As = mat(f["A"]), mat(f["Astar"])
    n = d + 1
    I = sp.eye(n)
    theta = [a * q ** (d - 2 * i) + q ** (2 * i - d) / a for i in range(n)]
    thetas = [b * q ** (d - 2 * i) + q ** (2 * i - d) / b for i in range(n)]
    E = idempotents(A, theta)
    Es = idempotents(As, thetas)
    up = [intersect(column_space(Es[: i + 1]), column_space(E[i:])) for i in range(n)]
    down = [intersect(column_space(Es[: i + 1]), column_space(E[: n - i])) for i in range(n)]
    K = split_map(up, q, d)
    B = split_map(down, q, d)
    t = [(-1) ** i * a ** i * q ** (i * (d - i)) for i in range(n)]
    W = sum((t[i] * E[i] for i in range(n)), sp.zeros(n))
    Wi = W.inv()
    M = (a * K - B / a) / (a - 1 / a)
    N = (K.inv() / a - a * B.inv()) / (1 / a - a)
    Q = Wi * M * W
    psi = (I - B * K.inv()) * (q * (a * I - B * K.inv() / a)).inv()
    Lam = psi * (A - a * K - K.inv() / a) + K / q + q * K.inv()
    R = A - a * K - K.inv() / a
    Rminus = W * K.inv() * Wi - K.inv()
    Rplus = Wi * K * W - K
    L = As - (M.inv() + psi) / b - b * (N.inv() + psi)
    out = {"t": [str(x) for x in t]}
    for name, m in [("W", W), ("Winv", Wi), ("K", K), ("B", B), ("M", M), ("N", N), ("Q", Q),
                    ("psi", psi), ("Lambda", Lam), ("R", R), ("Rminus", Rminus), ("Rplus", Rplus),
                    ("Lscript", L)]:
        out[name] = dump(sp.simplify(m))
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main(sys.argv[1])
