"""Self-verification suite behind ``cliffeq verify``.

Each check returns a :class:`CheckResult`; failures carry the first
counterexample found.  Randomized checks use a seeded generator, so
reports are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List

from .algebra import Multivector, Signature, apply_orthogonal, omega_squared
from .errors import CliffeqError, ClosureError
from .invariants import (
    brute_force_invariants,
    find_equivariant_complex_structures,
    find_equivariant_idempotents,
    invariant_subspace,
)
from .lie import (
    act_on_multivector,
    generators,
    left_mul_operator,
    right_mul_operator,
    sample_improper_elements,
    sample_so_elements,
)
from .modules import (
    algebra_dimension,
    canonical_complex_basis,
    classify_matrix_algebra,
    complex_rep_matrix,
    gamma_matrices,
    idempotent_family,
    make_complex_structure,
    make_idempotent,
    trace_form_classification,
    verify_clifford_relations,
)

PROPERTY_MAX_N = 6


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def signatures(max_n: int, min_n: int = 0) -> Iterator[Signature]:
    for n in range(min_n, max_n + 1):
        for r in range(n, -1, -1):
            yield Signature(r, n - r)


def theorem_condition(r: int, s: int) -> bool:
    n = r + s
    return (s % 2 == 1 and n % 4 in (0, 3)) or (s % 2 == 0 and n % 4 in (1, 2))


def random_rational(rng: random.Random) -> Fraction:
    num = rng.randint(-6, 6) or 1
    return Fraction(num, rng.choice((1, 1, 1, 2, 3)))


def random_multivector(sig: Signature, rng: random.Random, max_terms: int = 6) -> Multivector:
    k = rng.randint(1, min(max_terms, sig.dim))
    masks = rng.sample(range(sig.dim), k)
    return Multivector(sig, {m: random_rational(rng) for m in masks})


def random_signature(rng: random.Random, max_n: int, min_n: int = 0) -> Signature:
    n = rng.randint(min_n, max_n)
    r = rng.randint(0, n)
    return Signature(r, n - r)


def check_theorem_sweep(max_n: int) -> CheckResult:
    for sig in signatures(max_n):
        sols = find_equivariant_complex_structures(sig)
        expect = theorem_condition(sig.r, sig.s)
        if bool(sols) != expect:
            return CheckResult("theorem sweep", False, f"{sig}: found {len(sols)} solutions, rule says exists={expect}")
        if sols and set(sols) != {sig.omega, -sig.omega}:
            return CheckResult("theorem sweep", False, f"{sig}: solutions {[str(x) for x in sols]}")
        if bool(sols) != (omega_squared(sig) == -1):
            return CheckResult("theorem sweep", False, f"{sig}: existence disagrees with omega^2")
    return CheckResult("theorem sweep", True)


def check_invariant_subspace(max_n: int) -> CheckResult:
    name = "invariant subspace"
    for sig in signatures(max_n):
        basis = invariant_subspace(sig)
        want = 2 if sig.n >= 2 else sig.dim
        if len(basis) != want:
            return CheckResult(name, False, f"{sig}: dimension {len(basis)}, expected {want}")
        if sig.n >= 2 and set(basis) != {sig.scalar(1), sig.omega}:
            return CheckResult(name, False, f"{sig}: basis {[str(v) for v in basis]}")
        if sig.n <= PROPERTY_MAX_N and brute_force_invariants(sig).vectors != basis.vectors:
            return CheckResult(name, False, f"{sig}: fast path disagrees with dense oracle")
        for g in sample_so_elements(sig):
            for v in basis:
                if apply_orthogonal(g, v) != v:
                    return CheckResult(name, False, f"{sig}: {v} moved by a sampled group element")
    return CheckResult(name, True)


def check_idempotents(max_n: int) -> CheckResult:
    for sig in signatures(max_n):
        got = set(find_equivariant_idempotents(sig))
        if omega_squared(sig) == -1 or sig.n == 0:
            want = {sig.zero(), sig.scalar(1)}
        elif sig.n >= 2:
            w = sig.omega
            want = {sig.zero(), sig.scalar(1), (1 + w) / 2, (1 - w) / 2}
        else:
            continue
        if got != want:
            return CheckResult("equivariant idempotents", False, f"{sig}: {[str(x) for x in got]}")
    return CheckResult("equivariant idempotents", True)


def check_classification(max_n: int) -> CheckResult:
    for sig in signatures(max_n):
        tag, m = classify_matrix_algebra(sig.r, sig.s)
        if algebra_dimension(tag, m) != sig.dim:
            return CheckResult("classification", False, f"{sig}: {tag}({m}) has the wrong dimension")
        if (tag, m) != trace_form_classification(sig):
            return CheckResult("classification", False, f"{sig}: table {tag}({m}) disagrees with trace form")
    return CheckResult("classification", True)


def check_gamma_relations(max_n: int) -> CheckResult:
    name = "gamma relations"
    for sig in signatures(min(max_n, PROPERTY_MAX_N)):
        if omega_squared(sig) != -1:
            continue
        J = make_complex_structure(sig.omega)
        for p in idempotent_family(sig):
            if p.is_zero():
                continue
            try:
                mats = gamma_matrices(J, make_idempotent(p))
            except ClosureError:
                continue
            if not verify_clifford_relations(sig, mats):
                return CheckResult(name, False, f"{sig}, P(1) = {p}")
    return CheckResult(name, True)


def check_properties(max_n: int, cases: int = 200, seed: int = 0) -> List[CheckResult]:
    top = min(max_n, PROPERTY_MAX_N)
    rng = random.Random(seed)
    results = []

    def run(name, body):
        for _ in range(cases):
            msg = body()
            if msg:
                results.append(CheckResult(name, False, msg))
                return
        results.append(CheckResult(name, True))

    def assoc():
        sig = random_signature(rng, top)
        x, y, z = (random_multivector(sig, rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            return f"{sig}: x={x}, y={y}, z={z}"

    def leibniz():
        sig = random_signature(rng, top, 2)
        x, y = random_multivector(sig, rng), random_multivector(sig, rng)
        for L in generators(sig):
            lhs = act_on_multivector(sig, L, x * y)
            rhs = act_on_multivector(sig, L, x) * y + x * act_on_multivector(sig, L, y)
            if lhs != rhs:
                return f"{sig}, {L}: x={x}, y={y}"

    def orthogonal():
        sig = random_signature(rng, top, 2)
        x, y = random_multivector(sig, rng), random_multivector(sig, rng)
        pool = sample_so_elements(sig) + sample_improper_elements(sig)
        g = rng.choice(pool)
        if apply_orthogonal(g, x * y) != apply_orthogonal(g, x) * apply_orthogonal(g, y):
            return f"{sig}: multiplicativity fails for x={x}, y={y}"
        if apply_orthogonal(g, sig.omega) != sig.omega.scale(g.det):
            return f"{sig}: orientation rule fails for a det={g.det} map"

    def commute():
        sig = random_signature(rng, top)
        a, b = random_multivector(sig, rng), random_multivector(sig, rng)
        if right_mul_operator(a) @ left_mul_operator(b) != left_mul_operator(b) @ right_mul_operator(a):
            return f"{sig}: a={a}, b={b}"

    complex_sigs = [s for s in signatures(top) if omega_squared(s) == -1]
    bases = {}

    def homomorphism():
        sig = rng.choice(complex_sigs)
        if sig not in bases:
            bases[sig] = canonical_complex_basis(make_complex_structure(sig.omega))
        basis = bases[sig]
        x, y = random_multivector(sig, rng, 4), random_multivector(sig, rng, 4)
        if complex_rep_matrix(basis, x * y) != complex_rep_matrix(basis, x) @ complex_rep_matrix(basis, y):
            return f"{sig}: x={x}, y={y}"

    run("associativity", assoc)
    if top >= 2:
        run("leibniz rule", leibniz)
        run("orthogonal extension", orthogonal)
    run("left/right commutation", commute)
    if complex_sigs:
        run("representation homomorphism", homomorphism)
    return results


def run_all(max_n: int, cases: int = 200, seed: int = 0) -> List[CheckResult]:
    results = []
    for fn in (
        check_theorem_sweep,
        check_invariant_subspace,
        check_idempotents,
        check_classification,
        check_gamma_relations,
    ):
        try:
            results.append(fn(max_n))
        except CliffeqError as exc:
            results.append(CheckResult(fn.__name__, False, f"{type(exc).__name__}: {exc}"))
    results.extend(check_properties(max_n, cases, seed))
    return results
