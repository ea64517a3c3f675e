"""``cliffeq`` command line.

    cliffeq <subcommand> <r> <s> [--format text|json|latex] [options]
    cliffeq verify [--max-n N]

Exit status: 0 success, 1 domain error, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from .algebra import Multivector, Signature, max_dimension, omega_squared
from .errors import CliffeqError, DimensionCapError, ExprSyntaxError
from .expr import (
    format_multivector,
    multivector_to_json,
    parse_complex_element,
    parse_multivector,
    split_expressions,
)
from .invariants import (
    brute_force_invariants,
    find_equivariant_complex_structures,
    find_equivariant_idempotents,
    invariant_subspace,
)
from .lie import LieGenerator, act_on_multivector, action_matrix
from .modules import (
    ComplexBasis,
    classify_matrix_algebra,
    gamma_matrices,
    image_basis,
    make_complex_structure,
    make_idempotent,
    verify_clifford_relations,
)
from .verify import run_all


class UsageError(Exception):
    pass


def _sign(v: int) -> str:
    return "+1" if v > 0 else "-1"


def _mv(x, fmt: str) -> str:
    return format_multivector(x, "latex" if fmt == "latex" else "text")


def _emit_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cmd_omega(sig: Signature, args) -> str:
    w2 = omega_squared(sig)
    if args.format == "json":
        return _emit_json({"r": sig.r, "s": sig.s, "omega_squared": w2})
    if args.format == "latex":
        return f"\\omega^2 = {w2} \\quad \\text{{in }} Cl({sig.r},{sig.s})"
    return f"{sig}: omega^2 = {_sign(w2)}"


def cmd_classify(sig: Signature, args) -> str:
    tag, m = classify_matrix_algebra(sig.r, sig.s)
    if args.format == "json":
        return _emit_json({"r": sig.r, "s": sig.s, "algebra": tag, "m": m, "real_dimension": sig.dim})
    if args.format == "latex":
        tex = tag.replace("R", "\\mathbb{R}").replace("C", "\\mathbb{C}").replace("H", "\\mathbb{H}")
        tex = tex.replace("⊕", f"({m}) \\oplus ")
        return f"Cl({sig.r},{sig.s}) \\cong {tex}({m})"
    return f"{sig} ≅ {tag.replace('⊕', f'({m}) ⊕ ')}({m})  [real dimension {sig.dim}]"


def cmd_invariants(sig: Signature, args) -> str:
    basis = brute_force_invariants(sig) if args.oracle else invariant_subspace(sig)
    if args.format == "json":
        return _emit_json(
            {
                "r": sig.r,
                "s": sig.s,
                "dimension": len(basis),
                "basis": [multivector_to_json(v) for v in basis],
            }
        )
    items = ", ".join(_mv(v, args.format) for v in basis)
    if args.format == "latex":
        return f"\\operatorname{{span}}\\{{{items}\\}}"
    return f"{sig}: SO({sig.r},{sig.s})-invariant subspace has dimension {len(basis)}: span{{{items}}}"


def cmd_jstruct(sig: Signature, args) -> str:
    sols = find_equivariant_complex_structures(sig)
    w2 = omega_squared(sig)
    if args.format == "json":
        return _emit_json(
            {
                "r": sig.r,
                "s": sig.s,
                "omega_squared": w2,
                "exists": bool(sols),
                "solutions": [multivector_to_json(x) for x in sols],
            }
        )
    if not sols:
        if args.format == "latex":
            return f"\\text{{no equivariant complex structure exists }} (\\omega^2 = {_sign(w2)})"
        return f"no equivariant complex structure exists (ω²={_sign(w2)})"
    if args.format == "latex":
        return ", ".join(f"J(1) = {_mv(x, 'latex')}" for x in sols)
    lines = [f"{sig}: equivariant complex structures (ω²={_sign(w2)}):"]
    lines += [f"  J(1) = {_mv(x, 'text')}" for x in sols]
    return "\n".join(lines)


def cmd_idempotents(sig: Signature, args) -> str:
    sols = find_equivariant_idempotents(sig)
    if args.format == "json":
        return _emit_json({"r": sig.r, "s": sig.s, "idempotents": [multivector_to_json(x) for x in sols]})
    if args.format == "latex":
        return ", ".join(_mv(x, "latex") for x in sols)
    lines = [f"{sig}: equivariant idempotents:"] + [f"  {_mv(x, 'text')}" for x in sols]
    return "\n".join(lines)


def cmd_gamma(sig: Signature, args) -> str:
    if omega_squared(sig) != -1:
        raise CliffeqError(f"{sig} has omega^2 = +1, so there is no equivariant complex structure")
    J = make_complex_structure(sig.omega)
    P = make_idempotent(parse_multivector(sig, args.idempotent))
    basis = None
    if args.basis:
        elems = [parse_complex_element(sig, t, J.value) for t in split_expressions(args.basis)]
        basis = ComplexBasis(J, tuple(elems))
    mats = gamma_matrices(J, P, basis)
    if basis is None:
        basis = image_basis(J, P)
    complement = len(image_basis(J, P.complement()))
    relations = verify_clifford_relations(sig, mats)
    if args.format == "json":
        return _emit_json(
            {
                "r": sig.r,
                "s": sig.s,
                "J": multivector_to_json(J.value),
                "idempotent": multivector_to_json(P.p),
                "basis": [multivector_to_json(b) for b in basis],
                "complex_dimension": len(basis),
                "complement_dimension": complement,
                "gamma": [g.to_json() for g in mats],
                "clifford_relations": relations,
            }
        )
    if args.format == "latex":
        return "\n".join(f"\\gamma_{{{a}}} = {g.to_latex()}" for a, g in enumerate(mats, start=1))
    lines = [
        f"{sig}, J(1) = {_mv(J.value, 'text')}, P(1) = {_mv(P.p, 'text')}",
        f"complex dimension of im(P): {len(basis)}; of im(1-P): {complement}",
        "basis: " + ", ".join(_mv(b, "text") for b in basis),
    ]
    for a, g in enumerate(mats, start=1):
        lines.append(f"gamma_{a} =")
        lines.append(g.to_text())
    lines.append("Clifford relations: " + ("hold" if relations else "FAIL"))
    return "\n".join(lines)


def cmd_mul(sig: Signature, args) -> str:
    if not args.exprs:
        raise UsageError("mul needs at least one expression")
    out = sig.scalar(1)
    for text in args.exprs:
        out = out * parse_multivector(sig, text)
    if args.format == "json":
        return _emit_json({"r": sig.r, "s": sig.s, "result": multivector_to_json(out)})
    return _mv(out, args.format)


def _parse_generator(text: Optional[str], sig: Signature) -> LieGenerator:
    if text is None:
        raise UsageError("act needs --generator j,k")
    try:
        j, k = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--generator expects 'j,k', got {text!r}") from None
    try:
        L = LieGenerator(j, k)
        L.check(sig)
    except CliffeqError as exc:
        raise UsageError(str(exc)) from None
    return L


def cmd_act(sig: Signature, args) -> str:
    L = _parse_generator(args.generator, sig)
    if not args.exprs:
        op = action_matrix(sig, L)
        if args.format == "json":
            return _emit_json({"r": sig.r, "s": sig.s, "generator": [L.j, L.k], "operator": op.to_json()})
        lines = [f"{L} on {sig} (column -> image):"]
        for c in sig.blades():
            e = Multivector.from_blade(sig, c)
            lines.append(f"  {_mv(e, args.format)} -> {_mv(act_on_multivector(sig, L, e), args.format)}")
        return "\n".join(lines)
    x = sig.zero()
    for text in args.exprs:
        x = x + parse_multivector(sig, text)
    out = act_on_multivector(sig, L, x)
    if args.format == "json":
        return _emit_json({"r": sig.r, "s": sig.s, "generator": [L.j, L.k], "result": multivector_to_json(out)})
    return _mv(out, args.format)


COMMANDS = {
    "omega": cmd_omega,
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "jstruct": cmd_jstruct,
    "idempotents": cmd_idempotents,
    "gamma": cmd_gamma,
    "mul": cmd_mul,
    "act": cmd_act,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffeq",
        description="Exact computations in Cl(r,s): invariants, equivariant complex structures, gamma matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("r", type=int)
        p.add_argument("s", type=int)
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    for name in ("omega", "classify", "jstruct", "idempotents"):
        common(sub.add_parser(name))
    p = sub.add_parser("invariants")
    common(p)
    p.add_argument("--oracle", action="store_true", help="use the dense brute-force nullspace (n <= 6)")
    p = sub.add_parser("gamma")
    common(p)
    p.add_argument("--idempotent", default="1", metavar="EXPR")
    p.add_argument("--basis", metavar="EXPR,EXPR,...", help="complex basis of im(P); 'i' multiplies by J(1) on the right")
    p = sub.add_parser("mul")
    common(p)
    p.add_argument("exprs", nargs="*", metavar="EXPR")
    p = sub.add_parser("act")
    common(p)
    p.add_argument("exprs", nargs="*", metavar="EXPR")
    p.add_argument("--generator", metavar="j,k")
    p = sub.add_parser("verify")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _verify(args, out) -> int:
    cap = max_dimension()
    if not 0 <= args.max_n <= cap:
        raise UsageError(f"--max-n must be between 0 and the cap {cap}")
    results = run_all(args.max_n, args.cases, args.seed)
    ok = all(r.passed for r in results)
    if args.format == "json":
        out.write(
            _emit_json(
                {
                    "max_n": args.max_n,
                    "passed": ok,
                    "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
                }
            )
            + "\n"
        )
    else:
        for r in results:
            line = f"[{'PASS' if r.passed else 'FAIL'}] {r.name}"
            if r.detail:
                line += f": counterexample {r.detail}"
            out.write(line + "\n")
        out.write("all checks passed\n" if ok else "some checks FAILED\n")
    return 0 if ok else 1


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # expressions given after an option land in ``extra``
        if extra and getattr(args, "exprs", None) is not None and not any(t.startswith("-") for t in extra):
            args.exprs.extend(extra)
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _verify(args, out)
        try:
            sig = Signature(args.r, args.s)
        except (ValueError, DimensionCapError) as exc:
            raise UsageError(str(exc)) from None
        out.write(COMMANDS[args.command](sig, args) + "\n")
        return 0
    except (UsageError, ExprSyntaxError) as exc:
        err.write(f"cliffeq: error: {exc}\n")
        return 2
    except CliffeqError as exc:
        err.write(f"cliffeq: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
