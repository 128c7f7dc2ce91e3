"""Named verification suites behind the CLI and the acceptance tests.

Each suite function returns a list of (case_id, passed, detail) triples;
run_suite wraps one into a machine-readable report.  Case ordering is
deterministic, and randomized sweeps use fixed seeds, so reports are
reproducible.
"""

from __future__ import annotations

import itertools
import random
import time

from . import affine, fock, hall, hecke, symfunc, trace
from .scalars import (
    ONE,
    Q,
    QM1,
    Scalar,
    binom_identity,
    coset_identity,
    crazy_identity,
    qbrace,
)

SUITE_NAMES = (
    "scalars",
    "hecke",
    "affine",
    "trace-dims",
    "hall-jacobi",
    "hall-cr",
    "fock-relations",
    "fock-jm",
    "newton",
)


def _case(cases, name, ok, detail=""):
    cases.append((name, bool(ok), detail))


def suite_scalars(max_gamma_delta=8, max_coset=8, max_crazy=6):
    cases = []
    for ell in (0, 1, 2):
        for gamma in range(max_gamma_delta + 1):
            for delta in range(max_gamma_delta + 1):
                _case(
                    cases,
                    f"binom ell={ell} gamma={gamma} delta={delta}",
                    binom_identity(ell, gamma, delta),
                )
    for k in range(2, max_coset + 1):
        for p in range(1, k):
            _case(cases, f"coset part1 k={k} p={p}", coset_identity(1, k, p))
    for k in range(1, max_coset + 1):
        _case(cases, f"coset part2 k={k}", coset_identity(2, k))
    for k in range(1, max_crazy + 1):
        _case(cases, f"bracket-sum k={k}", crazy_identity(k))
    return cases


def suite_hecke(max_n=4):
    cases = []
    for n in range(2, max_n + 1):
        basis = [hecke.HeckeElement.basis(n, w) for w in hecke.all_perms(n)]
        one = hecke.HeckeElement.one(n)
        relations = []
        for i in range(1, n):
            ti = hecke.HeckeElement.generator(n, i)
            relations.append(
                (
                    f"quadratic i={i}",
                    hecke.mul(ti, ti) - ti.scale(QM1) - one.scale(Q),
                )
            )
            for j in range(i + 1, n):
                tj = hecke.HeckeElement.generator(n, j)
                if j - i > 1:
                    relations.append(
                        (f"commute i={i} j={j}", hecke.mul(ti, tj) - hecke.mul(tj, ti))
                    )
                else:
                    relations.append(
                        (
                            f"braid i={i} j={j}",
                            hecke.mul(hecke.mul(ti, tj), ti)
                            - hecke.mul(hecke.mul(tj, ti), tj),
                        )
                    )
        for name, rel in relations:
            ok = all(hecke.mul(rel, b).is_zero() for b in basis)
            _case(cases, f"n={n} {name} on full basis", ok)
        # associativity over all basis triples, with pair products cached
        prods = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                prods[(i, j)] = hecke.mul(a, b)
        ok = True
        for i, j, k in itertools.product(range(len(basis)), repeat=3):
            if hecke.mul(prods[(i, j)], basis[k]) != hecke.mul(
                basis[i], prods[(j, k)]
            ):
                ok = False
                break
        _case(cases, f"n={n} associativity on full basis", ok)
        ls = [hecke.jm(n, m) for m in range(1, n + 1)]
        ok = all(
            hecke.mul(a, b) == hecke.mul(b, a)
            for a, b in itertools.combinations(ls, 2)
        )
        _case(cases, f"n={n} jucys-murphy commutativity", ok)
    # Dipper-James eigenvalues
    for n in range(1, max_n + 1):
        for lam in symfunc.partitions_of(n):
            zs = hecke.young_symmetrizer_star(lam)
            ok = not zs.is_zero()
            for m in range(1, n + 1):
                ok = ok and hecke.mul(hecke.jm(n, m), zs) == zs.scale(
                    hecke.jm_eigenvalue(lam, m)
                )
            _case(cases, f"dipper-james lam={list(lam)}", ok)
    # the two defining forms of the content-sum central element agree
    for n in range(0, 4):
        try:
            hecke.central_element_x(n)
            _case(cases, f"central element forms agree n={n}", True)
        except AssertionError as exc:
            _case(cases, f"central element forms agree n={n}", False, str(exc))
    return cases


def _affine_slice(n, max_deg):
    keys = []
    for d in range(max_deg + 1):
        keys.extend(trace.monomial_basis(n, d))
    return [affine.AffineElement(n, {k: ONE}) for k in keys]


def suite_affine(max_n=3, max_deg=3, samples=100, seed=20240811):
    cases = []
    for n in range(2, max_n + 1):
        slice_elems = _affine_slice(n, max_deg)
        relations = []
        for i in range(1, n):
            ti = affine.AffineElement.gen_t(n, i)
            xi = affine.AffineElement.gen_x(n, i)
            xi1 = affine.AffineElement.gen_x(n, i + 1)
            relations.append(
                (
                    f"cross i={i}",
                    affine.mul(affine.mul(ti, xi1), ti) - xi.scale(Q),
                )
            )
            for j in range(1, n + 1):
                if j not in (i, i + 1):
                    xj = affine.AffineElement.gen_x(n, j)
                    relations.append(
                        (
                            f"t{i} x{j} commute",
                            affine.mul(ti, xj) - affine.mul(xj, ti),
                        )
                    )
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                xj = affine.AffineElement.gen_x(n, j)
                xk = affine.AffineElement.gen_x(n, k)
                relations.append(
                    (f"x{j} x{k} commute", affine.mul(xj, xk) - affine.mul(xk, xj))
                )
        for name, rel in relations:
            ok = all(
                affine.mul(rel, m).is_zero() for m in slice_elems
            )
            _case(cases, f"n={n} {name} on degree<={max_deg} slice", ok)
    rng = random.Random(seed)
    ok = True
    for _ in range(samples):
        n = rng.randint(2, max_n)
        elems = _affine_slice(n, max_deg)
        a, b, c = (rng.choice(elems) for _ in range(3))
        coeffs = [Scalar.from_int(rng.randint(-2, 2)) for _ in range(3)]
        a, b, c = a.scale(coeffs[0]), b.scale(coeffs[1]), c.scale(coeffs[2])
        if affine.mul(affine.mul(a, b), c) != affine.mul(a, affine.mul(b, c)):
            ok = False
            break
    _case(cases, f"associativity on {samples} random degree<={max_deg} triples", ok)
    # derived q-degenerate relations through the change of variables
    for n in range(2, max_n + 1):
        for i in range(1, n):
            yi = affine.substitute_y(affine.AffineElement.gen_x(n, i))
            yi1 = affine.substitute_y(affine.AffineElement.gen_x(n, i + 1))
            ti = affine.AffineElement.gen_t(n, i)
            one = affine.AffineElement.one(n)
            ok = affine.mul(yi, ti) == affine.mul(ti, yi1) + yi.scale(QM1) + one.scale(Q)
            ok = ok and affine.mul(ti, yi) == affine.mul(yi1, ti) + yi.scale(
                QM1
            ) + one.scale(Q)
            _case(cases, f"y-relations n={n} i={i}", ok)
        for j in range(1, n + 1):
            for k in range(1, n):
                if j in (k, k + 1):
                    continue
                yj = affine.substitute_y(affine.AffineElement.gen_x(n, j))
                tk = affine.AffineElement.gen_t(n, k)
                _case(
                    cases,
                    f"y{j} t{k} commute n={n}",
                    affine.mul(yj, tk) == affine.mul(tk, yj),
                )
    rng = random.Random(seed + 1)
    ok = True
    for _ in range(20):
        n = rng.randint(1, max_n)
        elems = _affine_slice(n, 2)
        e = rng.choice(elems)
        if affine.substitute_y_inverse(affine.substitute_y(e)) != e:
            ok = False
            break
    _case(cases, "change-of-variables round trip", ok)
    return cases


def suite_trace_dims(max_n=3, max_d=4, max_ambient_dim=5000):
    cases = []
    cache = trace.PieceCache(max_ambient_dim)
    table = trace.dimension_table(max_n, max_d, cache)
    for (n, d), cell in sorted(table.items()):
        _case(
            cases,
            f"dim ({n},{d})",
            cell["match"],
            f"computed={cell['computed']} expected={cell['expected']}",
        )
    # trace identities at small bidegree
    x, t, one = affine.AffineElement.gen_x, affine.AffineElement.gen_t, affine.AffineElement.one
    piece = cache.get(2, 1)
    e = x(2, 1) - x(2, 2) - affine.mul(x(2, 2), t(2, 1)).scale(QM1 / Q)
    _case(cases, "basic trace relation reduces to zero", trace.reduce_element(e, piece).is_zero())

    def cls(elem):
        return trace.reduce_element(elem, cache.get(elem.rank, elem.degree()))

    w11, w10, w12 = affine.w_element(1, 1), affine.w_element(1, 0), affine.w_element(1, 2)
    comm = cls(affine.juxtapose(w11, w10) - affine.juxtapose(w10, w11))
    _case(
        cases,
        "[w(1,1), w(1,0)] = {1} w(2,1)",
        comm == cls(affine.w_element(2, 1)).scale(qbrace(1)),
    )
    comm = cls(affine.juxtapose(w12, w10) - affine.juxtapose(w10, w12))
    _case(
        cases,
        "[w(1,2), w(1,0)] = {2} w(2,2)",
        comm == cls(affine.w_element(2, 2)).scale(qbrace(2)),
    )
    return cases


def suite_hall_jacobi(max_a=3, max_b=3):
    cases = []
    pts = [
        (a, b)
        for a in range(-max_a, max_a + 1)
        for b in range(max_b + 1)
        if (a, b) != (0, 0)
    ]
    bad = []
    for x, y, z in itertools.product(pts, repeat=3):
        if not hall.jacobi_check(x, y, z):
            bad.append((x, y, z))
    _case(
        cases,
        f"jacobi sweep |a|<={max_a} b<={max_b} ({len(pts) ** 3} triples)",
        not bad,
        f"failures={bad[:3]}" if bad else "",
    )
    return cases


def suite_hall_cr(max_param=4, confluence_samples=200, antihom_samples=100,
                  seed=20240811):
    cases = []
    for s in (1, -1):
        for k in range(1, max_param + 1):
            _case(
                cases,
                f"CR1 sign={s} k={k}",
                hall.cross_relation_holds("CR1", sign=s, k=k),
            )
    for s in (1, -1):
        for r in range(0, max_param + 1):
            for k in range(1, max_param + 1):
                _case(
                    cases,
                    f"CR2 sign={s} r={r} k={k}",
                    hall.cross_relation_holds("CR2", sign=s, r=r, k=k),
                )
    for s in (1, -1):
        for k in range(0, max_param + 1):
            _case(
                cases,
                f"CR3 sign={s} k={k}",
                hall.cross_relation_holds("CR3", sign=s, k=k),
            )
    for m in range(1, max_param + 1):
        for n in range(1, max_param + 1):
            _case(cases, f"CR4 m={m} n={n}", hall.cross_relation_holds("CR4", m=m, n=n))
    for n in range(2, max_param + 1):
        _case(cases, f"CR5 n={n}", hall.cross_relation_holds("CR5", n=n))

    pts = [
        (a, b) for a in range(-2, 3) for b in range(3) if (a, b) != (0, 0)
    ]
    rng = random.Random(seed)

    def normalize_random_schedule(e):
        out = hall.HallElement.zero()
        stack = list(e.terms.items())
        while stack:
            mono, coeff = stack.pop(rng.randrange(len(stack)))
            bad = [
                i
                for i in range(len(mono) - 1)
                if hall.point_key(mono[i]) > hall.point_key(mono[i + 1])
            ]
            if not bad:
                out = out + hall.HallElement({mono: coeff})
                continue
            i = rng.choice(bad)
            swapped = mono[:i] + (mono[i + 1], mono[i]) + mono[i + 2:]
            stack.append((swapped, coeff))
            for bmono, bc in hall.bracket(mono[i], mono[i + 1]).terms.items():
                stack.append((mono[:i] + bmono + mono[i + 2:], coeff * bc))
        return out

    ok = True
    for _ in range(confluence_samples):
        mono = tuple(rng.choice(pts) for _ in range(rng.randint(2, 4)))
        e = hall.HallElement({mono: ONE})
        if hall.normalize(e) != normalize_random_schedule(e):
            ok = False
            break
    _case(cases, f"straightening confluence on {confluence_samples} products", ok)

    ok = True
    for _ in range(antihom_samples):
        m1 = tuple(rng.choice(pts) for _ in range(rng.randint(1, 2)))
        m2 = tuple(rng.choice(pts) for _ in range(rng.randint(1, 2)))
        e = hall.HallElement({m1: ONE})
        f = hall.HallElement({m2: Scalar.from_int(rng.randint(1, 3))})
        lhs = hall.anti_involution(hall.mul(e, f))
        rhs = hall.mul(hall.anti_involution(f), hall.anti_involution(e))
        if lhs != rhs:
            ok = False
            break
    _case(cases, f"anti-involution anti-multiplicative on {antihom_samples} pairs", ok)
    return cases


def suite_fock_relations(max_a=2, max_b=2, truncation=8, heis_max=4,
                         vacuum_max=5, indep_max_a=3, indep_max_b=3,
                         indep_truncation=6):
    cases = []
    pts = [
        (a, b)
        for a in range(-max_a, max_a + 1)
        for b in range(max_b + 1)
        if (a, b) != (0, 0)
    ]
    bad = []
    for x, y in itertools.product(pts, repeat=2):
        if not fock.relation_check(x, y, truncation):
            bad.append((x, y))
    _case(
        cases,
        f"bracket relations |a|<={max_a} b<={max_b} N={truncation}"
        f" ({len(pts) ** 2} pairs)",
        not bad,
        f"failures={bad[:3]}" if bad else "",
    )
    for n in range(1, heis_max + 1):
        for m in range(1, heis_max + 1):
            lhs = fock.commutator(
                fock.rho((n, 0), truncation), fock.rho((-m, 0), truncation)
            )
            if n == m:
                rhs = fock.identity_operator(truncation, lhs.domain()).scale(-n)
                ok = lhs.equal_on_common_blocks(rhs)
            else:
                ok = all(not cols for cols in lhs.blocks.values())
            _case(cases, f"heisenberg n={n} m={m}", ok)
    for ell in range(1, vacuum_max + 1):
        _case(cases, f"vacuum annihilation l={ell}", fock.vacuum_annihilation(ell))
    # decomposition independence
    for a in range(-indep_max_a, indep_max_a + 1):
        for b in range(1, indep_max_b + 1):
            if a == 0:
                continue
            target = fock.rho((a, b), indep_truncation)
            ok = True
            for a1 in range(-indep_max_a, indep_max_a + 1):
                for b1 in range(0, b + 1):
                    a2, b2 = a - a1, b - b1
                    if (a1, b1) in ((0, 0), (a, b)) or (a2, b2) == (0, 0):
                        continue
                    if b2 < 0 or abs(a1) > indep_max_a or abs(a2) > indep_max_a:
                        continue
                    if a1 * b2 - b1 * a2 == 0:
                        continue
                    built = fock.rho_via((a1, b1), (a2, b2), indep_truncation)
                    if not built.equal_on_common_blocks(target):
                        ok = False
            _case(cases, f"decomposition independence ({a},{b})", ok)
    return cases


def suite_fock_jm(max_size=4):
    cases = []
    for size in range(1, max_size + 1):
        for lam in symfunc.partitions_of(size):
            _case(
                cases,
                f"content eigenvalue lam={list(lam)}",
                fock.jm_cross_check(lam),
            )
    return cases


def suite_newton(truncation=6):
    cases = []
    _case(
        cases,
        f"exp of power-sum series matches complete homogeneous N={truncation}",
        symfunc.newton_series_check(truncation),
    )
    return cases


_SUITES = {
    "scalars": suite_scalars,
    "hecke": suite_hecke,
    "affine": suite_affine,
    "trace-dims": suite_trace_dims,
    "hall-jacobi": suite_hall_jacobi,
    "hall-cr": suite_hall_cr,
    "fock-relations": suite_fock_relations,
    "fock-jm": suite_fock_jm,
    "newton": suite_newton,
}


def run_suite(name, **params):
    """Run one named suite; returns the report dict (see the CLI docs)."""
    if name not in _SUITES:
        raise ValueError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
        )
    start = time.perf_counter()
    cases = _SUITES[name](**params)
    elapsed = time.perf_counter() - start
    failures = [
        {"case": case_id, "detail": detail}
        for case_id, ok, detail in cases
        if not ok
    ]
    return {
        "suite": name,
        "cases": len(cases),
        "failures": failures,
        "wall_time": round(elapsed, 6),
    }
