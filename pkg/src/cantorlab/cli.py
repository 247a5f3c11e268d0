"""Command-line surface: set specs in, machine-readable reports out.

Set specs are TOML files::

    type = "cantor"              # | "pair" | "sequence_set"
    lambdas = ["1/3"]            # explicit list; last value repeats as tail

    type = "pair"
    q = "1/4"
    rule = "lemma44"             # | "lemma45" | "constant" | "custom"
    beta = "1/2"                 # lemma44 / lemma45
    gamma = "3/5"                # lemma45 only
    value = 2                    # constant only
    a = [1, 2]                   # custom only
    repeat = true                # custom only

    type = "sequence_set"
    alpha = "1"

Scale ranges are written in the base of the set's construction so every
comparison stays rational: ``3^-1..3^-6`` is the six scales 3**-1..3**-6,
``q^2..32`` expands q from the loaded pair spec, and a plain comma list
``1/3,1/9`` is accepted anywhere.

Exit status: 0 = success / all checks passed, 1 = a check failed or a
point query hit its depth cap, 2 = usage or spec error.  Reports embed
the resolved configuration and are byte-identical for identical inputs
and seeds.  Set CANTORLAB_THREADS to parallelize per-scale work.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction
from pathlib import Path

import click

try:
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - Python 3.10
    import tomli as tomllib

from .errors import InvalidInputError, UndecidableError
from .numerics import format_rational, parse_rational
from .setlab import (
    CantorSet,
    ConstantRule,
    CustomRule,
    GeneratorSequence,
    Lemma44Rule,
    Lemma45Rule,
    PairSpec,
    SequenceSet,
    SequenceSetSpec,
    generators_from_pair,
)
from .covers import (
    CoverProfile,
    FinitePointSet,
    brute_force_min_cover,
    chain_violations,
    compute_profile,
    min_cover_count,
)
from .dims import (
    assouad_lower_witness,
    assouad_windows,
    box_dims_from_exponents,
    box_dims_from_generators,
    box_dims_from_profile,
    equihom_check,
    ln,
    product_bracket,
    self_product_dims,
    theorem42_ratios,
    verify_product_theorem,
)

VERIFY_CHECKS = ("theorem41", "theorem42", "lemma35", "chain", "equihom6", "appendix")

CLAIMS = {
    "theorem41": "2^(j+a1-3) <= D(C,q^j)*D(D,q^j) <= 2^(j+a1) for all j >= s_2",
    "theorem42": "partial-sum ratios converge to the box-dimension targets "
                 "(C -> beta, D -> 1-beta resp. gamma)",
    "lemma35": "D(C,rho_m)/D(C,delta_m) >= 2^(m-1) at the q-run witness windows",
    "chain": "D(F,4d) <= N(F,2d) <= P(F,d) <= D(F,d) exactly at every tested d",
    "equihom6": "sampled sup/inf of local cover counts <= 6 on every window",
    "appendix": "product-bracket slopes are consistent with doubling the 1D "
                "box-dimension estimate",
}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CANTORLAB_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# spec files


def parse_spec(path: str):
    """Load and validate a TOML set spec; returns (kind, handle(s), meta)."""
    try:
        data = tomllib.loads(Path(path).read_text())
    except FileNotFoundError:
        raise click.UsageError(f"spec file not found: {path}")
    except tomllib.TOMLDecodeError as exc:
        raise click.UsageError(f"malformed TOML in {path}: {exc}")
    try:
        return _spec_from_dict(data)
    except InvalidInputError as exc:
        raise click.UsageError(f"invalid spec {path}: {exc}")
    except KeyError as exc:
        raise click.UsageError(f"spec {path} is missing required field {exc}")


def _rule_from_dict(data: dict):
    rule = data.get("rule", "lemma44")
    if rule == "lemma44":
        return Lemma44Rule(parse_rational(str(data["beta"])))
    if rule == "lemma45":
        return Lemma45Rule(parse_rational(str(data["beta"])),
                           parse_rational(str(data["gamma"])))
    if rule == "constant":
        return ConstantRule(int(data["value"]))
    if rule == "custom":
        return CustomRule([int(t) for t in data["a"]], repeat=bool(data.get("repeat", False)))
    raise InvalidInputError(f"unknown a-sequence rule {rule!r}")


def _spec_from_dict(data: dict):
    kind = data.get("type")
    if kind == "cantor":
        lambdas = [parse_rational(str(s)) for s in data["lambdas"]]
        tail = parse_rational(str(data["tail"])) if "tail" in data else None
        seq = GeneratorSequence.from_list(lambdas, tail=tail)
        return kind, CantorSet(seq), {"type": kind, **seq.describe()}
    if kind == "pair":
        spec = PairSpec(parse_rational(str(data["q"])), _rule_from_dict(data))
        return kind, spec, {"type": kind, **spec.describe()}
    if kind == "sequence_set":
        spec = SequenceSetSpec(parse_rational(str(data["alpha"])))
        return kind, SequenceSet(spec), {"type": kind,
                                         "alpha": format_rational(spec.alpha)}
    raise InvalidInputError(f"unknown set type {kind!r}")


def _single_handle(kind, handle, side: str):
    if kind != "pair":
        return handle
    return CantorSet(generators_from_pair(handle, side),
                     name=f"pair-{side.upper()}")


def _parse_scales(expr: str, handle=None) -> list[Fraction]:
    """Scale list: 'BASE^E1..E2' with integer exponents, or comma-list."""
    expr = expr.strip()
    if not expr:
        raise click.UsageError("empty scale range")
    if "^" in expr:
        base_text, _, exps = expr.partition("^")
        base_text = base_text.strip()
        if base_text == "q":
            q = getattr(handle, "q", None)
            if q is None and hasattr(handle, "seq"):
                q = handle.seq.q
            if q is None:
                raise click.UsageError("scale base 'q' needs a pair or q-power spec")
            base = Fraction(q)
        else:
            try:
                base = parse_rational(base_text)
            except InvalidInputError as exc:
                raise click.UsageError(str(exc))
        if ".." in exps:
            lo_text, _, hi_text = exps.partition("..")
            # the upper end may repeat the base: 'q^2..q^32'
            hi_text = hi_text.strip()
            if "^" in hi_text:
                hi_text = hi_text.rpartition("^")[2]
            try:
                e1, e2 = int(lo_text), int(hi_text)
            except ValueError:
                raise click.UsageError(f"bad exponent range in scale expression {expr!r}")
        else:
            try:
                e1 = e2 = int(exps)
            except ValueError:
                raise click.UsageError(f"bad exponent in scale expression {expr!r}")
        step = 1 if e2 >= e1 else -1
        scales = [base**e for e in range(e1, e2 + step, step)]
    else:
        try:
            scales = [parse_rational(tok) for tok in expr.split(",") if tok.strip()]
        except InvalidInputError as exc:
            raise click.UsageError(str(exc))
    if not scales:
        raise click.UsageError("empty scale range")
    if any(s <= 0 for s in scales):
        raise click.UsageError("scales must be positive")
    return scales


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _json_report(report: dict, output: str | None) -> None:
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", output)


def _fail(message: str, code: int = 1):
    click.echo(f"FAIL: {message}", err=True)
    sys.exit(code)


# ---------------------------------------------------------------------------
# commands


@click.group()
@click.version_option(version="0.1.0", prog_name="cantorlab")
def cli():
    """Exact covering geometry for generalised Cantor sets."""


@cli.command()
@click.option("--set", "spec_path", required=True, type=click.Path(), help="TOML set spec")
def describe(spec_path: str):
    """Resolve a set spec and print its parameters."""
    kind, handle, meta = parse_spec(spec_path)
    info = dict(meta)
    if kind == "cantor":
        info["first_lengths"] = [format_rational(handle.length(n)) for n in range(6)]
    elif kind == "pair":
        spec = handle
        info["a_prefix"] = spec.rule.prefix(10)
        info["lambda_prefix_C"] = [
            format_rational(generators_from_pair(spec, "C").lambda_at(i))
            for i in range(1, 9)]
        info["lambda_prefix_D"] = [
            format_rational(generators_from_pair(spec, "D").lambda_at(i))
            for i in range(1, 9)]
    else:
        info["first_points"] = [format_rational(handle.point(n)) for n in range(1, 7)]
    _json_report(info, None)


@cli.command()
@click.option("--set", "spec_path", required=True, type=click.Path())
@click.option("--scales", required=True, help="e.g. 3^-1..3^-6 or 1/3,1/9")
@click.option("--side", type=click.Choice(["C", "D"]), default="C",
              help="which side of a pair spec")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--output", type=click.Path(), default=None)
def cover(spec_path: str, scales: str, side: str, fmt: str, output: str | None):
    """Exact D/N/P counts at the requested scales."""
    kind, handle, meta = parse_spec(spec_path)
    target = _single_handle(kind, handle, side)
    scale_list = sorted(set(_parse_scales(scales, handle)), reverse=True)
    threads = _threads()
    try:
        if threads > 1:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                profiles = list(pool.map(lambda s: compute_profile(target, [s]), scale_list))
            entries = tuple(sorted((e for p in profiles for e in p.entries),
                                   key=lambda e: e.scale, reverse=True))
            profile = CoverProfile(entries)
        else:
            profile = compute_profile(target, scale_list)
    except UndecidableError as exc:
        _fail(f"depth cap hit at scale {format_rational(exc.scale)}")
    if fmt == "csv":
        _emit(profile.to_csv(), output)
    else:
        _json_report({"config": {**meta, "side": side, "scales": scales},
                      "profile": profile.to_rows()}, output)


@cli.command()
@click.option("--set", "spec_path", required=True, type=click.Path())
@click.option("--scales", default=None, help="profile method scale range")
@click.option("--method", type=click.Choice(["profile", "formula", "exponents"]),
              default="profile")
@click.option("--nmax", type=int, default=64, help="formula/exponents method depth")
@click.option("--alpha", "alpha_text", default=None,
              help="exponents method: the intended -log2/log q (e.g. for q = 2^(-1/alpha))")
@click.option("--side", type=click.Choice(["C", "D"]), default="C")
@click.option("--output", type=click.Path(), default=None)
def boxdim(spec_path: str, scales: str | None, method: str, nmax: int,
           alpha_text: str | None, side: str, output: str | None):
    """Box-counting dimension estimate: from a profile, from the generator
    ratios, or from the exponent structure alone (supports irrational
    bases q = 2^(-1/alpha))."""
    kind, handle, meta = parse_spec(spec_path)
    target = _single_handle(kind, handle, side)
    try:
        if method == "profile":
            if not scales:
                raise click.UsageError("profile method needs --scales")
            profile = compute_profile(target, _parse_scales(scales, handle))
            estimate = box_dims_from_profile(profile)
        elif method == "formula":
            if not isinstance(target, CantorSet):
                raise click.UsageError("formula method needs a Cantor-type set")
            estimate = box_dims_from_generators(target.seq, nmax)
        else:
            if kind != "pair":
                raise click.UsageError("exponents method needs a pair spec")
            if not alpha_text:
                raise click.UsageError("exponents method needs --alpha")
            alpha = parse_rational(alpha_text)
            exponent_fn = handle.c_exponent if side == "C" else handle.d_exponent
            estimate = box_dims_from_exponents(exponent_fn, alpha, nmax)
    except UndecidableError as exc:
        _fail(f"depth cap hit at scale {format_rational(exc.scale)}")
    except InvalidInputError as exc:
        raise click.UsageError(str(exc))
    _json_report({"config": {**meta, "side": side, "method": method,
                             "alpha": alpha_text},
                  **estimate.to_dict()}, output)


def _cantor_window_grid(target: CantorSet, levels, ks):
    return [(target.length(n), target.length(n + k)) for n in levels for k in ks]


@cli.command()
@click.option("--set", "spec_path", required=True, type=click.Path())
@click.option("--side", type=click.Choice(["C", "D"]), default="C")
@click.option("--levels", default="2,3,4,6,8", help="window levels n (Cantor sets)")
@click.option("--ks", default="2,3,4,6", help="window depths k; windows are (L_n, L_{n+k})")
@click.option("--kmax", type=int, default=32,
              help="sequence sets: windows (1/k, 1/k^2) for k = 2..kmax")
@click.option("--samples", type=int, default=64)
@click.option("--seed", type=int, default=0)
@click.option("--output", type=click.Path(), default=None)
def assouad(spec_path: str, side: str, levels: str, ks: str, kmax: int,
            samples: int, seed: int, output: str | None):
    """Sampled local-cover slopes over a window lattice."""
    kind, handle, meta = parse_spec(spec_path)
    target = _single_handle(kind, handle, side)
    if isinstance(target, CantorSet):
        grid = _cantor_window_grid(target,
                                   [int(t) for t in levels.split(",")],
                                   [int(t) for t in ks.split(",")])
    else:
        grid = [(Fraction(1, k), Fraction(1, k * k)) for k in range(2, kmax + 1)]
    try:
        report = assouad_windows(target, grid, samples=samples, seed=seed)
    except UndecidableError as exc:
        _fail(f"depth cap hit at scale {format_rational(exc.scale)}")
    _json_report({
        "config": {**meta, "side": side, "samples": samples, "seed": seed},
        "windows": [
            {"delta": format_rational(w.delta), "rho": format_rational(w.rho),
             "sup_sampled": w.sup_sampled, "slope": w.slope}
            for w in report.windows],
        "best_slope": report.best_slope,
        "upper_bound_from_lambda": report.upper_bound_from_lambda,
    }, output)


@cli.command()
@click.option("--set", "spec_path", required=True, type=click.Path())
@click.option("--side", type=click.Choice(["C", "D"]), default="C")
@click.option("--levels", default="1,2,3,4,6,12")
@click.option("--ks", default="1,2,3,6")
@click.option("--samples", type=int, default=64)
@click.option("--seed", type=int, default=0)
@click.option("--output", type=click.Path(), default=None)
def equihom(spec_path: str, side: str, levels: str, ks: str, samples: int,
            seed: int, output: str | None):
    """Sampled sup/inf ratios of local cover counts on a window grid."""
    kind, handle, meta = parse_spec(spec_path)
    target = _single_handle(kind, handle, side)
    if not isinstance(target, CantorSet):
        raise click.UsageError("equihom grids are defined for Cantor-type sets")
    grid = _cantor_window_grid(target,
                               [int(t) for t in levels.split(",")],
                               [int(t) for t in ks.split(",")])
    try:
        report = equihom_check(target, grid, samples=samples, seed=seed)
    except UndecidableError as exc:
        _fail(f"depth cap hit at scale {format_rational(exc.scale)}")
    _json_report({
        "config": {**meta, "side": side, "samples": samples, "seed": seed},
        "max_ratio": format_rational(report.max_ratio),
        "window_count": report.window_count,
        "constants": {"M": format_rational(report.constants[0]),
                      "c1": report.constants[1], "c2": report.constants[2]},
    }, output)


@cli.command()
@click.option("--q", "q_text", required=True)
@click.option("--rule", type=click.Choice(["lemma44", "lemma45", "constant", "custom"]),
              default="lemma44")
@click.option("--beta", default=None)
@click.option("--gamma", default=None)
@click.option("--value", type=int, default=None)
@click.option("--a", "a_text", default=None, help="comma list for rule=custom")
@click.option("--repeat/--no-repeat", default=False)
@click.option("--terms", type=int, default=12, help="how many generators to emit")
@click.option("--output", type=click.Path(), default=None)
def pair(q_text: str, rule: str, beta: str | None, gamma: str | None,
         value: int | None, a_text: str | None, repeat: bool, terms: int,
         output: str | None):
    """Emit the C and D generator specs produced by a (q, a) pair."""
    data = {"type": "pair", "q": q_text, "rule": rule}
    if beta is not None:
        data["beta"] = beta
    if gamma is not None:
        data["gamma"] = gamma
    if value is not None:
        data["value"] = value
    if a_text is not None:
        data["a"] = [int(t) for t in a_text.split(",")]
        data["repeat"] = repeat
    try:
        _, spec, meta = _spec_from_dict(data)
    except (InvalidInputError, KeyError) as exc:
        raise click.UsageError(f"invalid pair parameters: {exc}")
    seq_c = generators_from_pair(spec, "C")
    seq_d = generators_from_pair(spec, "D")
    _json_report({
        "config": meta,
        "C": {"type": "cantor", "q": format_rational(spec.q),
              "exponents": [spec.c_exponent(i) for i in range(1, terms + 1)],
              "lambdas": [format_rational(seq_c.lambda_at(i)) for i in range(1, terms + 1)]},
        "D": {"type": "cantor", "q": format_rational(spec.q),
              "exponents": [spec.d_exponent(i) for i in range(1, terms + 1)],
              "lambdas": [format_rational(seq_d.lambda_at(i)) for i in range(1, terms + 1)]},
    }, output)


@cli.command(name="oracle-selftest")
@click.option("--instances", type=int, default=500)
@click.option("--seed", type=int, default=0)
@click.option("--max-points", type=int, default=14)
@click.option("--output", type=click.Path(), default=None)
def oracle_selftest(instances: int, seed: int, max_points: int, output: str | None):
    """Greedy minimal cover vs. the DP oracle on random finite sets."""
    import random

    rng = random.Random(seed)
    mismatches = []
    for trial in range(instances):
        n = rng.randint(1, max_points)
        pts = sorted(set(Fraction(rng.randint(0, 64), rng.randint(1, 64))
                         for _ in range(n)))
        delta = Fraction(rng.randint(1, 32), rng.randint(1, 32))
        greedy = min_cover_count(FinitePointSet(pts), delta)
        oracle = brute_force_min_cover(pts, delta)
        if greedy != oracle:
            mismatches.append({"trial": trial, "greedy": greedy, "oracle": oracle,
                               "delta": format_rational(delta),
                               "points": [format_rational(p) for p in pts]})
    report = {
        "check": "oracle-selftest",
        "claim": "greedy minimal cover equals the DP oracle on finite sets",
        "params": {"instances": instances, "seed": seed, "max_points": max_points},
        "entries": mismatches,
        "pass": not mismatches,
    }
    _json_report(report, output)
    if mismatches:
        sys.exit(1)


# ---------------------------------------------------------------------------
# verify


@cli.command()
@click.argument("check", type=click.Choice(VERIFY_CHECKS))
@click.option("--set", "spec_path", type=click.Path(), default=None)
@click.option("--side", type=click.Choice(["C", "D"]), default="C")
@click.option("--q", "q_text", default=None)
@click.option("--rule", type=click.Choice(["lemma44", "lemma45", "constant", "custom"]),
              default="lemma44")
@click.option("--beta", default=None)
@click.option("--gamma", default=None)
@click.option("--value", type=int, default=None)
@click.option("--a", "a_text", default=None)
@click.option("--repeat/--no-repeat", default=False)
@click.option("--jmax", type=int, default=32)
@click.option("--kmax", type=int, default=200)
@click.option("--mmax", type=int, default=6)
@click.option("--tol", type=float, default=0.02)
@click.option("--scales", default=None)
@click.option("--samples", type=int, default=64)
@click.option("--seed", type=int, default=0)
@click.option("--instances", type=int, default=200)
@click.option("--output", type=click.Path(), default=None)
def verify(check: str, spec_path: str | None, side: str, q_text: str | None,
           rule: str, beta: str | None, gamma: str | None, value: int | None,
           a_text: str | None, repeat: bool, jmax: int, kmax: int, mmax: int,
           tol: float, scales: str | None, samples: int, seed: int,
           instances: int, output: str | None):
    """Run one named check and report pass/fail (exit 1 on failure)."""
    try:
        report = _run_verify(check, spec_path, side, q_text, rule, beta, gamma,
                             value, a_text, repeat, jmax, kmax, mmax, tol,
                             scales, samples, seed, instances)
    except UndecidableError as exc:
        _fail(f"depth cap hit at scale {format_rational(exc.scale)}")
    except InvalidInputError as exc:
        raise click.UsageError(str(exc))
    _json_report(report, output)
    if not report["pass"]:
        sys.exit(1)


def _pair_from_flags(q_text, rule, beta, gamma, value, a_text, repeat) -> PairSpec:
    if q_text is None:
        raise click.UsageError("this check needs --q (and rule parameters)")
    data = {"type": "pair", "q": q_text, "rule": rule}
    if beta is not None:
        data["beta"] = beta
    if gamma is not None:
        data["gamma"] = gamma
    if value is not None:
        data["value"] = value
    if a_text is not None:
        data["a"] = [int(t) for t in a_text.split(",")]
        data["repeat"] = repeat
    try:
        _, spec, _ = _spec_from_dict(data)
    except (InvalidInputError, KeyError) as exc:
        raise click.UsageError(f"invalid pair parameters: {exc}")
    return spec


def _run_verify(check, spec_path, side, q_text, rule, beta, gamma, value,
                a_text, repeat, jmax, kmax, mmax, tol, scales, samples, seed,
                instances) -> dict:
    if check == "theorem41":
        spec = _pair_from_flags(q_text, rule, beta, gamma, value, a_text, repeat)
        return verify_product_theorem(spec, range(0, jmax + 1), threads=_threads())

    if check == "theorem42":
        spec = _pair_from_flags(q_text, rule, beta, gamma, value, a_text, repeat)
        if isinstance(spec.rule, Lemma44Rule):
            target_c = Fraction(spec.rule.beta)
            target_d = 1 - target_c
        elif isinstance(spec.rule, Lemma45Rule):
            target_c = Fraction(spec.rule.beta)
            target_d = Fraction(spec.rule.gamma)
        else:
            raise click.UsageError("theorem42 targets need rule=lemma44 or lemma45")
        c_ratios, d_ratios = theorem42_ratios(spec.rule, kmax)
        err_c = abs(float(c_ratios[-1] - target_c))
        err_d = abs(float(d_ratios[-1] - target_d))
        ok = err_c <= tol and err_d <= tol
        return {
            "check": check,
            "claim": CLAIMS[check],
            "params": {**spec.describe(), "kmax": kmax, "tol": tol},
            "entries": [
                {"side": "C", "ratio": format_rational(c_ratios[-1]),
                 "target": format_rational(target_c), "error": err_c},
                {"side": "D", "ratio": format_rational(d_ratios[-1]),
                 "target": format_rational(target_d), "error": err_d},
            ],
            "pass": ok,
        }

    if check == "lemma35":
        spec = _pair_from_flags(q_text, rule, beta, gamma, value, a_text, repeat)
        entries = assouad_lower_witness(spec, side, mmax)
        rows = []
        for e in entries:
            if e.skipped:
                rows.append({"m": e.m, "skipped": True, "bound": e.bound})
            else:
                rows.append({"m": e.m, "run_start_level": e.run_start_level,
                             "delta": format_rational(e.delta),
                             "rho": format_rational(e.rho),
                             "ratio": format_rational(e.ratio),
                             "bound": e.bound, "pass": e.passed})
        tested = [e for e in entries if not e.skipped]
        return {
            "check": check,
            "claim": CLAIMS[check],
            "params": {**spec.describe(), "side": side, "mmax": mmax},
            "entries": rows,
            "pass": bool(tested) and all(e.passed for e in tested),
        }

    if check == "chain":
        import random

        entries = []
        ok = True
        rng = random.Random(seed)
        for trial in range(instances):
            n = rng.randint(1, 14)
            pts = sorted(set(Fraction(rng.randint(0, 64), rng.randint(1, 64))
                             for _ in range(n)))
            delta = Fraction(rng.randint(1, 32), rng.randint(1, 32))
            handle = FinitePointSet(pts)
            profile = compute_profile(handle, [delta, 2 * delta, 4 * delta])
            bad = chain_violations(profile)
            if bad:
                ok = False
                entries.append({"trial": trial, "violations":
                                [format_rational(b) for b in bad]})
        if spec_path:
            kind, handle, _ = parse_spec(spec_path)
            target = _single_handle(kind, handle, side)
            base_scales = _parse_scales(scales, handle) if scales else [
                target.length(n) if isinstance(target, CantorSet) else Fraction(1, 10**n)
                for n in range(1, 9)]
            all_scales = sorted({s for b in base_scales for s in (b, 2 * b, 4 * b)},
                                reverse=True)
            profile = compute_profile(target, all_scales)
            bad = chain_violations(profile)
            if bad:
                ok = False
                entries.append({"set": spec_path, "violations":
                                [format_rational(b) for b in bad]})
        return {
            "check": check,
            "claim": CLAIMS[check],
            "params": {"instances": instances, "seed": seed, "set": spec_path},
            "entries": entries,
            "pass": ok,
        }

    if check == "equihom6":
        if not spec_path:
            raise click.UsageError("equihom6 needs --set")
        kind, handle, meta = parse_spec(spec_path)
        target = _single_handle(kind, handle, side)
        if not isinstance(target, CantorSet):
            raise click.UsageError("equihom6 is defined for Cantor-type sets")
        grid = _cantor_window_grid(target, [1, 2, 3, 4, 6, 12], [1, 2, 3, 6])
        report = equihom_check(target, grid, samples=samples, seed=seed)
        return {
            "check": check,
            "claim": CLAIMS[check],
            "params": {**meta, "side": side, "samples": samples, "seed": seed,
                       "windows": report.window_count},
            "entries": [{"max_ratio": format_rational(report.max_ratio)}],
            "pass": report.max_ratio <= 6,
        }

    if check == "appendix":
        if not spec_path:
            raise click.UsageError("appendix needs --set")
        kind, handle, meta = parse_spec(spec_path)
        target = _single_handle(kind, handle, side)
        scale_list = (_parse_scales(scales, handle) if scales else
                      [target.length(n) for n in range(1, 13)]
                      if isinstance(target, CantorSet)
                      else [Fraction(1, 10**n) for n in range(1, 9)])
        profile = compute_profile(target, scale_list)
        one_d = box_dims_from_profile(profile)
        doubled = self_product_dims(profile)
        # bracket the product count at the finest scales and compare slopes
        m1, m2 = Fraction(1), Fraction(3, 2)
        finest = [s for s in sorted(profile.scales(), reverse=True)[-4:] if s < Fraction(1, 8)]
        need = sorted({x for s in finest for x in (min(8 * s / m1, Fraction(1)), s / (2 * m2))},
                      reverse=True)
        bracket_profile = compute_profile(target, need)
        entries = []
        ok = bool(finest)
        slack = 0.2
        for s in finest:
            lo, hi = product_bracket(bracket_profile, bracket_profile, s, m1, m2)
            slope_lo = ln(lo) / -ln(s) if lo > 1 else 0.0
            slope_hi = ln(hi) / -ln(s)
            consistent = (slope_lo <= doubled.upper + slack
                          and slope_hi >= doubled.lower - slack)
            ok = ok and consistent
            entries.append({"delta": format_rational(s), "bracket": [lo, hi],
                            "slope_lo": slope_lo, "slope_hi": slope_hi,
                            "pass": consistent})
        return {
            "check": check,
            "claim": CLAIMS[check],
            "params": {**meta, "side": side,
                       "one_d": one_d.to_dict(), "doubled": doubled.to_dict()},
            "entries": entries,
            "pass": ok,
        }

    raise click.UsageError(f"unknown check {check!r}")  # pragma: no cover


def main():
    cli()


if __name__ == "__main__":
    main()
