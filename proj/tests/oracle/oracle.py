#!/usr/bin/env python3
"""Independent dense oracle for the frozen expected values in the C++ tests.

Cochain differentials are built by evaluating the multilinear formulas on
basis tuples (no shared indexing code with the library) and ranks are exact
integer ranks computed by FLINT.  Run with `python3 tests/oracle/oracle.py`.
"""
import itertools
from fractions import Fraction

import flint


# ---------------------------------------------------------------- algebras
# An algebra is (dim, mul) where mul(i, j) -> {k: coeff}.

def matrix_algebra(n):
    idx = {(i, j): i * n + j for i in range(n) for j in range(n)}

    def mul(a, b):
        i, j = divmod(a, n)
        k, l = divmod(b, n)
        return {idx[(i, l)]: 1} if j == k else {}
    return n * n, mul


def scalars():
    return 1, lambda a, b: {0: 1}


def dual_numbers():
    # basis 1, eps
    def mul(a, b):
        if a == 0:
            return {b: 1}
        if b == 0:
            return {a: 1}
        return {}
    return 2, mul


def upper_triangular2():
    # e11, e12, e22
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return 3, lambda a, b: table.get((a, b), {})


def zero_algebra1():
    return 1, lambda a, b: {}


def direct_sum(*parts):
    offs = []
    total = 0
    for d, _ in parts:
        offs.append(total)
        total += d

    def mul(a, b):
        for p, (d, m) in enumerate(parts):
            o = offs[p]
            if o <= a < o + d and o <= b < o + d:
                return {k + o: v for k, v in m(a - o, b - o).items()}
        return {}
    return total, mul


def lmul(alg, s, j):
    """s * e_j for s a dict over A plus key 'e' for the adjoined unit."""
    d, mul = alg
    out = {}
    for k, v in s.items():
        terms = {j: 1} if k == 'e' else mul(k, j)
        for t, c in terms.items():
            out[t] = out.get(t, 0) + v * c
    return out


def rmul(alg, j, s):
    d, mul = alg
    out = {}
    for k, v in s.items():
        terms = {j: 1} if k == 'e' else mul(j, k)
        for t, c in terms.items():
            out[t] = out.get(t, 0) + v * c
    return out


# ---------------------------------------------------------------- modules
# A bimodule is (dim, left(i, x_vec) -> vec, right(x_vec, i) -> vec).

def dual_module(alg):
    d, mul = alg

    def left(i, f):   # (e_i . f)(x) = f(x e_i)
        return [sum(c * f[k] for k, c in mul(x, i).items()) for x in range(d)]

    def right(f, i):  # (f . e_i)(x) = f(e_i x)
        return [sum(c * f[k] for k, c in mul(i, x).items()) for x in range(d)]
    return d, left, right


def act_left(alg, mod, s, f):
    m, left, _ = mod
    out = [0] * m
    for k, v in s.items():
        g = f if k == 'e' else left(k, f)
        out = [o + v * x for o, x in zip(out, g)]
    return out


def act_right(alg, mod, f, s):
    m, _, right = mod
    out = [0] * m
    for k, v in s.items():
        g = f if k == 'e' else right(f, k)
        out = [o + v * x for o, x in zip(out, g)]
    return out


# ---------------------------------------------------------------- linear algebra

def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    den = 1
    for r in rows:
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // __import__('math').gcd(den, x.denominator)
    return flint.fmpz_mat([[int(x * den) for x in r] for r in rows]).rank()


def nullspace(rows, ncols):
    """Basis (list of vectors) of {v : rows . v = 0}."""
    if ncols == 0:
        return []
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    m = flint.fmpq_mat([[flint.fmpq(int(Fraction(x).numerator), int(Fraction(x).denominator))
                         for x in r] for r in rows])
    rr, rk = m.rref()
    piv = []
    for i in range(rk):
        for j in range(ncols):
            if rr[i, j] != 0:
                piv.append(j)
                break
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(piv):
            q = rr[i, f]
            v[p] = -Fraction(int(q.p), int(q.q))
        basis.append(v)
    return basis


# ---------------------------------------------------------------- Hochschild

def tuples(d, n):
    return list(itertools.product(range(d), repeat=n))


def cochain_eval(f, n, m, d):
    """Return f as a dict tuple -> vector in X, from a flat vector."""
    out = {}
    for t in tuples(d, n):
        base = 0
        for i in t:
            base = base * d + i
        out[t] = f[base * m: base * m + m]
    return out


def flatten(vals, n, m, d):
    v = []
    for t in tuples(d, n):
        v.extend(vals[t])
    return v


def eval_multilinear(g, args, d):
    """g: dict tuple -> vec; args: list of dicts over basis; returns vec."""
    acc = None
    for combo in itertools.product(*[list(a.items()) for a in args]):
        coeff = 1
        key = []
        for k, c in combo:
            coeff *= c
            key.append(k)
        val = g[tuple(key)]
        scaled = [coeff * x for x in val]
        acc = scaled if acc is None else [p + q for p, q in zip(acc, scaled)]
    return acc


def hoch_delta_apply(alg, mod, n, f):
    d, mul = alg
    m = mod[0]
    g = cochain_eval(f, n, m, d)
    zero = [0] * m
    res = {}
    for t in tuples(d, n + 1):
        args = [{i: 1} for i in t]
        v = act_left(alg, mod, args[0], eval_multilinear(g, args[1:], d) if n > 0 else g[()])
        for i in range(1, n + 1):
            prod = mul(t[i - 1], t[i])
            new_args = args[:i - 1] + [prod] + args[i + 1:]
            if prod:
                w = eval_multilinear(g, new_args, d)
            else:
                w = zero
            v = [a + (-1) ** i * b for a, b in zip(v, w)]
        last = act_right(alg, mod, eval_multilinear(g, args[:n], d) if n > 0 else g[()], args[n])
        v = [a + (-1) ** (n + 1) * b for a, b in zip(v, last)]
        res[t] = v
    return flatten(res, n + 1, m, d)


def basis_vectors(dim):
    return [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]


def images(op, vecs):
    return [op(v) for v in vecs]


def relative_space(alg, mod, S, n):
    """Basis of C_S^n(A, X); S a list of dicts (keys: basis index or 'e')."""
    d, mul = alg
    m = mod[0]
    dim = d ** n * m
    if n == 0:
        rows = []
        for s in S:
            for col in range(m):
                pass
        # Cen_S X: s.x - x.s = 0
        cols = []
        for x in basis_vectors(m):
            cols.append([a for s in S for a in
                         [p - q for p, q in zip(act_left(alg, mod, s, x), act_right(alg, mod, x, s))]])
        rows = [list(r) for r in zip(*cols)] if cols and cols[0] else []
        return nullspace(rows, m)
    cols = []
    for f in basis_vectors(dim):
        g = cochain_eval(f, n, m, d)
        cond = []
        for s in S:
            for t in tuples(d, n):
                args = [{i: 1} for i in t]
                # rho(s a1, ...) - s . rho(a1, ...)
                a = eval_multilinear(g, [lmul(alg, s, t[0])] + args[1:], d) if lmul(alg, s, t[0]) else [0] * m
                b = act_left(alg, mod, s, g[t])
                cond.extend(p - q for p, q in zip(a, b))
                for i in range(n - 1):
                    x1 = rmul(alg, t[i], s)
                    x2 = lmul(alg, s, t[i + 1])
                    a = eval_multilinear(g, args[:i] + [x1] + args[i + 1:], d) if x1 else [0] * m
                    b = eval_multilinear(g, args[:i + 1] + [x2] + args[i + 2:], d) if x2 else [0] * m
                    cond.extend(p - q for p, q in zip(a, b))
                x = rmul(alg, t[n - 1], s)
                a = eval_multilinear(g, args[:n - 1] + [x], d) if x else [0] * m
                b = act_right(alg, mod, g[t], s)
                cond.extend(p - q for p, q in zip(a, b))
        cols.append(cond)
    rows = [list(r) for r in zip(*cols)]
    return nullspace(rows, dim)


def hochschild_dims(alg, mod, nmax, S=None):
    d = alg[0]
    m = mod[0]
    out = []
    spaces = []
    for n in range(nmax + 1):
        if S is None:
            spaces.append(basis_vectors(d ** n * m))
        else:
            spaces.append(relative_space(alg, mod, S, n))
    for n in range(nmax + 1):
        V = spaces[n]
        imgs = images(lambda v: hoch_delta_apply(alg, mod, n, v), V)
        r_out = rank(imgs, d ** (n + 1) * m)
        z = len(V) - r_out
        if n == 0:
            b = 0
        else:
            W = spaces[n - 1]
            b = rank(images(lambda v: hoch_delta_apply(alg, mod, n - 1, v), W), d ** n * m)
        out.append(z - b)
    return out


# ---------------------------------------------------------------- cyclic

def cyc_index(t, d):
    k = 0
    for i in t:
        k = k * d + i
    return k


def cyclic_delta_apply(alg, n, f, wrap=True):
    d, mul = alg
    res = []
    for t in tuples(d, n + 2):
        v = Fraction(0)
        for i in range(n + 1):
            for k, c in mul(t[i], t[i + 1]).items():
                v += (-1) ** i * c * f[cyc_index(t[:i] + (k,) + t[i + 2:], d)]
        if wrap:
            for k, c in mul(t[n + 1], t[0]).items():
                v += (-1) ** (n + 1) * c * f[cyc_index((k,) + t[1:n + 1], d)]
        res.append(v)
    return res


def cyclic_space(alg, n):
    d = alg[0]
    rows = []
    for t in tuples(d, n + 1):
        rot = t[1:] + t[:1]
        row = [0] * d ** (n + 1)
        row[cyc_index(t, d)] += 1
        row[cyc_index(rot, d)] -= (-1) ** n
        rows.append(row)
    return nullspace(rows, d ** (n + 1))


def hc_dims(alg, nmax):
    d = alg[0]
    spaces = [cyclic_space(alg, n) for n in range(nmax + 1)]
    out = []
    for n in range(nmax + 1):
        z = len(spaces[n]) - rank([cyclic_delta_apply(alg, n, v) for v in spaces[n]], d ** (n + 2))
        b = 0 if n == 0 else rank([cyclic_delta_apply(alg, n - 1, v) for v in spaces[n - 1]], d ** (n + 1))
        out.append(z - b)
    return out


def hr_dims(alg, nmax):
    d = alg[0]
    out = []
    for n in range(nmax + 1):
        full = basis_vectors(d ** (n + 1))
        z = len(full) - rank([cyclic_delta_apply(alg, n, v, wrap=False) for v in full], d ** (n + 2))
        b = 0 if n == 0 else rank([cyclic_delta_apply(alg, n - 1, v, wrap=False)
                                   for v in basis_vectors(d ** n)], d ** (n + 1))
        out.append(z - b)
    return out


def trace_dim(alg):
    d, mul = alg
    rows = []
    for i in range(d):
        for j in range(d):
            row = [0] * d
            for k, c in mul(i, j).items():
                row[k] += c
            for k, c in mul(j, i).items():
                row[k] -= c
            rows.append(row)
    return len(nullspace(rows, d))


def main():
    M2 = matrix_algebra(2)
    Q = scalars()
    D = dual_numbers()
    UT = upper_triangular2()
    M2D = direct_sum(M2, D)
    M2Q = direct_sum(M2, Q)
    QQ = direct_sum(Q, Q)

    print("H(D,D*) n<=3:", hochschild_dims(D, dual_module(D), 3))
    print("H(M2,M2*) n<=2:", hochschild_dims(M2, dual_module(M2), 2))
    print("H(UT,UT*) n<=3:", hochschild_dims(UT, dual_module(UT), 3))
    diag = [{0: 1}, {2: 1}]
    print("H_B(UT,UT*) n<=3, B=diag:", hochschild_dims(UT, dual_module(UT), 3, diag))
    print("Cen_B UT*, B=diag:", len(relative_space(UT, dual_module(UT), diag, 0)))
    print("dim C_S^1(M2,M2*), S=M2:", len(relative_space(M2, dual_module(M2), [{i: 1} for i in range(4)], 1)))
    print("H_A(D,D*) n<=3, B=A:", hochschild_dims(D, dual_module(D), 3, [{0: 1}, {1: 1}]))
    print("H(M2+D,(M2+D)*) n<=3:", hochschild_dims(M2D, dual_module(M2D), 3))
    print("trace dims UT, M2, M2+D:", trace_dim(UT), trace_dim(M2), trace_dim(M2D))
    print("HC(Q):", hc_dims(Q, 4))
    print("HC(M2):", hc_dims(M2, 3))
    print("HC(D):", hc_dims(D, 3))
    print("HC(QQ):", hc_dims(QQ, 3))
    print("HC(UT):", hc_dims(UT, 3))
    print("HC(M2+Q):", hc_dims(M2Q, 2))
    print("HC(M2+D):", hc_dims(M2D, 3))
    print("HR(zero1):", hr_dims(zero_algebra1(), 2))
    print("H(zero1, zero1*):", hochschild_dims(zero_algebra1(), dual_module(zero_algebra1()), 2))
    # rank of delta^1 for M2 with dual coefficients: domain C^1 = 16
    f_imgs = [hoch_delta_apply(M2, dual_module(M2), 1, v) for v in basis_vectors(16)]
    print("rank delta^1(M2,M2*):", rank(f_imgs, 64))
    # direct-sum cochain dims: C_B^n(M2+Q, (M2+Q)*) vs sum over parts
    idem = [{0: 1, 3: 1}, {4: 1}]
    for n in range(3):
        print("dim C_B^%d(M2+Q, dual):" % n, len(relative_space(M2Q, dual_module(M2Q), idem, n)),
              " parts:", 4 ** n * 4 + 1)


if __name__ == "__main__":
    main()
