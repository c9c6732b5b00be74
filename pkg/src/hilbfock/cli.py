"""
Command-line interface: dims, lehn, dunkl-verify, chern, ring, verify and
limit-check.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal
invariant failure (poles, inconsistent constructions).
"""

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import click

from . import cherednik, fock, integrals, ring
from .cherednik import InternalError
from .frobenius import (NotInvertible, UnsupportedDegeneration, default_degeneration,
                        load_algebra_file, reference_algebra)
from .heisenberg import lehn_op
from .scalar import MalformedInput, PoleAtZero

REFERENCE = ("point", "p2", "torus_like")


class BudgetError(ValueError):
    pass


class VerificationFailure(Exception):
    pass


def budget(H):
    """Largest n handled end to end: 4 for one-dimensional H, else 3."""
    return 4 if H.dim == 1 else 3


def load(name):
    if name in REFERENCE:
        return reference_algebra(name)
    path = Path(name)
    if not path.exists():
        raise MalformedInput("no such algebra file or reference name: %s" % name)
    return load_algebra_file(path)


def check_budget(H, n, force=False):
    if n < 0:
        raise BudgetError("n must be non-negative")
    if n > budget(H) and not force:
        raise BudgetError("n = %d exceeds the budget n <= %d for a %d-dimensional "
                          "algebra (use --force to override)" % (n, budget(H), H.dim))


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def emit(doc, out):
    text = json.dumps(_jsonable(doc), sort_keys=True, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def mono_json(mono):
    return [list(p) for p in mono]


def run(fn):
    """Map exceptions to exit codes."""
    try:
        fn()
    except VerificationFailure as exc:
        click.echo("verification failed: %s" % exc, err=True)
        sys.exit(1)
    except ring.ExtractionError as exc:
        click.echo("extraction error: %s" % exc, err=True)
        sys.exit(1)
    except (BudgetError, MalformedInput, NotInvertible, UnsupportedDegeneration,
            OSError) as exc:
        click.echo("input error: %s" % exc, err=True)
        sys.exit(2)
    except (PoleAtZero, InternalError) as exc:
        click.echo("internal invariant failure: %s" % exc, err=True)
        sys.exit(3)


# ---------------------------------------------------------------------------
# verification items; top-level so they can run in worker processes

def item_dunkl(name, N, degree):
    H = load(name)
    return {"check": "dunkl-commutator", "N": N, "degree": degree,
            "failures": [list(map(str, f)) for f in
                         cherednik.dunkl_commutator_check(H, N, degree)]}


def item_hecke(name, N, degree):
    H = load(name)
    return {"check": "hecke", "N": N, "degree": degree,
            "failures": [str(f) for f in cherednik.hecke_check(H, N, degree)]}


def item_cascomp(name, N, degree):
    H = load(name)
    bad = cherednik.cascomp_i_check(H, N, degree) + cherednik.cascomp_ii_check(H, N, degree)
    return {"check": "cascomp", "N": N, "degree": degree, "failures": [str(f) for f in bad]}


def bridge_element(H):
    """An even invertible u for the Calogero-Sutherland cross-check."""
    u = H.one() * 2
    for c in range(H.dim):
        if c != H.unit and not H.parity[c] and H.degrees[c] > 0:
            return u + H.basis(c)
    return u if H.dim > 1 else H.one()


def item_cts(name, n, particles=None):
    H = load(name)
    r = integrals.cts_cross_check(H, bridge_element(H), n, particles)
    fails = ["N=%d %s" % (m["N"], m["error"]) if "error" in m else
             "N=%d %s<-%s got %s want %s" % (m["N"], m["row"], m["col"], m["got"], m["want"])
             for m in r.mismatches]
    if not r.stable:
        fails.append("unstable in the particle count")
    if not r.rho_vanishes:
        fails.append("<rho,rho> does not vanish on F")
    return {"check": "cts", "n": n, "particles": r.particles, "failures": fails}


def item_chern(name, n, max_i=2):
    H = load(name)
    K = H.K
    L = lehn_op(H, K).matrix(n)
    ops = {}
    fails = []
    for i in range(max_i + 1):
        for c in range(H.dim):
            label = "ch_%d(%s)" % (i, H.labels[c])
            try:
                M = integrals.chern_op(H, K, i, H.basis(c), n)
            except InternalError as exc:
                fails.append("%s: %s" % (label, exc))
                continue
            ops[label] = M
            if not integrals.supercommute(H, M, L):
                fails.append("%s does not commute with L" % label)
            if integrals.order_bound_check(H, K, i, H.basis(c), n):
                fails.append("%s exceeds order %d" % (label, i + 1))
            if integrals.symbol_check(H, K, i, H.basis(c), n):
                fails.append("%s has the wrong symbol" % label)
    labels = sorted(ops)
    for a, x in enumerate(labels):
        for y in labels[a + 1:]:
            if not integrals.supercommute(H, ops[x], ops[y]):
                fails.append("%s and %s do not commute" % (x, y))
    return {"check": "chern", "n": n, "failures": fails}


def item_limit(name, n):
    H = load(name)
    try:
        diff = integrals.degeneration_check(H, n)
    except UnsupportedDegeneration as exc:
        return {"check": "limit", "n": n, "skipped": str(exc), "failures": []}
    return {"check": "limit", "n": n, "failures": ["%s differs" % d for d in diff]}


def item_routes(name, n):
    H = load(name)
    A = ring.route_span(H, n, "chern")
    B = ring.route_span(H, n, "dunkl")
    d = fock.dimension(H, n)
    fails = []
    if A.dim != d or B.dim != d:
        fails.append("span dimensions %d, %d but dim F^%d = %d" % (A.dim, B.dim, n, d))
    if not (A.commutative and B.commutative):
        fails.append("a generated algebra is not supercommutative")
    if not A.same_as(B):
        fails.append("the two routes span different algebras")
    return {"check": "routes", "n": n, "failures": fails}


def item_ring(name, n):
    H = load(name)
    fails = []
    try:
        T = ring.structure_constants(H, None, n)
        if n == 1 and not ring.matches_algebra(T, H):
            fails.append("F^1 table differs from H")
        if not ring.lehn_is_multiplication(H, n):
            fails.append("L is not multiplication by L(unit)")
    except ring.ExtractionError as exc:
        fails.append(str(exc))
    return {"check": "ring", "n": n, "failures": fails}


def _call(job):
    fn, args = job
    return fn(*args)


def run_items(jobs, width):
    """Results in job order, whatever the number of workers."""
    if width <= 1:
        return [_call(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=width) as pool:
        return list(pool.map(_call, jobs))


# ---------------------------------------------------------------------------
# commands

algebra_opt = click.option("--algebra", default="point", show_default=True,
                           help="reference name (point, p2, torus_like) or JSON file")
out_opt = click.option("--out", type=click.Path(dir_okay=False), default=None,
                       help="write JSON here instead of stdout")
jobs_opt = click.option("--jobs", type=int, default=1, show_default=True,
                        help="worker processes")
force_opt = click.option("--force", is_flag=True, help="ignore the size budget")


@click.group()
def main():
    """Exact operator calculus on the Fock space of a Frobenius algebra."""


@main.command()
@algebra_opt
@click.option("--n", type=int, default=5, show_default=True)
@out_opt
def dims(algebra, n, out):
    """dim F^k and its Poincare polynomial for k <= n."""
    def go():
        H = load(algebra)
        if n < 0:
            raise BudgetError("n must be non-negative")
        rows = []
        for k in range(n + 1):
            by_degree = {}
            for mono in fock.enumerate_basis(H, k):
                d = fock.cohomological_degree(H, mono)
                by_degree[d] = by_degree.get(d, 0) + 1
            rows.append({"n": k, "dim": fock.dimension(H, k),
                         "poincare": {str(d): by_degree[d] for d in sorted(by_degree)}})
        if out:
            emit({"algebra": H.name, "dims": rows}, out)
        else:
            for r in rows:
                poly = " + ".join("%d q^%s" % (c, d) for d, c in r["poincare"].items())
                click.echo("%d\t%d\t%s" % (r["n"], r["dim"], poly))
    run(go)


@main.command()
@algebra_opt
@click.option("--n", type=int, default=2, show_default=True)
@force_opt
@out_opt
def lehn(algebra, n, force, out):
    """Matrix of the Calogero-Sutherland operator L(H, K) on F^n."""
    def go():
        H = load(algebra)
        check_budget(H, n, force)
        M = lehn_op(H).matrix(n)
        emit({"algebra": H.name, "n": n,
              "basis": [mono_json(m) for m in fock.enumerate_basis(H, n)],
              "matrix": M.matrix}, out)
    run(go)


@main.command("dunkl-verify")
@algebra_opt
@click.option("--particles", type=int, default=3, show_default=True)
@click.option("--degree", type=int, default=4, show_default=True)
@jobs_opt
@out_opt
def dunkl_verify(algebra, particles, degree, jobs, out):
    """Dunkl commutativity, the Hecke relation and the Casimir identities."""
    def go():
        load(algebra)
        if particles < 1 or degree < 0:
            raise BudgetError("need --particles >= 1 and --degree >= 0")
        items = []
        for N in range(2, particles + 1):
            items += [(item_dunkl, (algebra, N, degree)),
                      (item_hecke, (algebra, N, min(degree, 3))),
                      (item_cascomp, (algebra, N, min(degree, 3)))]
        report(items, jobs, out)
    run(go)


@main.command()
@algebra_opt
@click.option("--n", type=int, default=2, show_default=True)
@click.option("--degree", "i", type=int, default=1, show_default=True,
              help="index i of ch_i")
@force_opt
@out_opt
def chern(algebra, n, i, force, out):
    """Matrices of ch_i(b) on F^n for every basis element b."""
    def go():
        H = load(algebra)
        check_budget(H, n, force)
        mats = {}
        for c in range(H.dim):
            mats[H.labels[c]] = integrals.chern_op(H, H.K, i, H.basis(c), n).matrix
        emit({"algebra": H.name, "n": n, "i": i,
              "basis": [mono_json(m) for m in fock.enumerate_basis(H, n)],
              "operators": mats}, out)
    run(go)


@main.command("ring")
@algebra_opt
@click.option("--n", type=int, default=2, show_default=True)
@click.option("--route", type=click.Choice(["chern", "dunkl", "both"]), default="chern",
              show_default=True)
@force_opt
@out_opt
def ring_cmd(algebra, n, route, force, out):
    """Structure constants of the ring on F^n."""
    def go():
        H = load(algebra)
        check_budget(H, n, force)
        if route == "both":
            T = ring.structure_constants(H, None, n, "chern")
            agree = T.constants == ring.structure_constants(H, None, n, "dunkl").constants
            T.meta["route"] = "both"
        else:
            T = ring.structure_constants(H, None, n, route)
            agree = None
        T.meta["both_routes_agree"] = agree
        emit(T.to_json(), out)
        if agree is False:
            raise VerificationFailure("the two routes give different tables")
    run(go)


@main.command("limit-check")
@algebra_opt
@click.option("--n", type=int, default=2, show_default=True)
@force_opt
@out_opt
def limit_check(algebra, n, force, out):
    """Pole-free lam -> 0 limits, independent of the degeneration direction."""
    def go():
        H = load(algebra)
        check_budget(H, n, force)
        default_degeneration(H)      # an algebra without a direction is an input error
        report([(item_limit, (algebra, k)) for k in range(1, n + 1)], 1, out)
    run(go)


@main.command()
@algebra_opt
@click.option("--n", type=int, default=None, help="largest weight (default: budget)")
@click.option("--particles", type=int, default=3, show_default=True,
              help="largest particle count for the window checks")
@click.option("--degree", type=int, default=4, show_default=True,
              help="window degree for the Dunkl checks")
@jobs_opt
@force_opt
@out_opt
def verify(algebra, n, particles, degree, jobs, force, out):
    """The full invariant suite on one algebra."""
    def go():
        H = load(algebra)
        top = budget(H) if n is None else n
        check_budget(H, top, force)
        items = []
        for N in range(2, particles + 1):
            items += [(item_dunkl, (algebra, N, degree)),
                      (item_hecke, (algebra, N, min(degree, 3))),
                      (item_cascomp, (algebra, N, min(degree, 3)))]
        for k in range(1, top + 1):
            items += [(item_cts, (algebra, k)), (item_chern, (algebra, k)),
                      (item_limit, (algebra, k)), (item_routes, (algebra, k)),
                      (item_ring, (algebra, k))]
        report(items, jobs, out)
    run(go)


def report(items, jobs, out):
    results = run_items(items, jobs)
    ok = all(not r["failures"] for r in results)
    emit({"ok": ok, "results": results}, out)
    if not ok:
        raise VerificationFailure("%d of %d checks failed"
                                  % (sum(1 for r in results if r["failures"]), len(results)))


if __name__ == "__main__":
    main()
