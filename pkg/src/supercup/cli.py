"""Command line interface ``supercup``."""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import click

from .classical import PrincipalFusionSpec
from .diagrams import cup_diagram
from .errors import DomainError, FusionTableRequired, InconsistencyError, ValidationError
from .functors import ds_paths, ds_power, dual, eta0_reduce, stabilize
from .fusion import (
    FusionResult,
    classical_core,
    determinant,
    image,
    is_negligible_irreducible,
    sdim,
    splice,
    tensor_blockwise,
    tensor_ground_states,
    tensor_mod_negligible,
)
from .kac import kac_composition_factors
from .weights import SuperWeight, is_maximal_atypical, weight_to_diagram

EXIT_VALIDATION = 2
EXIT_FUSION_TABLE = 3
EXIT_INCONSISTENT = 4

# -- parsing --------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, what: str):
        shown = self.text[self.i] if self.i < len(self.text) else "end of input"
        raise ValidationError(f"syntax error at position {self.i + 1}: expected {what}, found {shown!r}")

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        for ch in token:
            if self.i >= len(self.text) or self.text[self.i] != ch:
                self.error(repr(token))
            self.i += 1

    def integer(self) -> int:
        self.skip()
        j = self.i
        if j < len(self.text) and self.text[j] in "+-":
            j += 1
        k = j
        while k < len(self.text) and self.text[k].isdigit():
            k += 1
        if k == j:
            self.error("an integer")
        value = int(self.text[self.i:k])
        self.i = k
        return value

    def entries(self, closer: str) -> list[int]:
        if self.peek() == closer:
            return []
        out = [self.integer()]
        while self.peek() == ",":
            self.expect(",")
            out.append(self.integer())
        return out


def parse_weight(text: str) -> SuperWeight:
    """Parse ``gl(M|N) [a1,...,aM | b1,...,bN]``."""
    s = _Scanner(text)
    s.expect("gl")
    s.expect("(")
    m = s.integer()
    s.expect("|")
    n = s.integer()
    s.expect(")")
    s.expect("[")
    top = s.entries("|")
    s.expect("|")
    bottom = s.entries("]")
    s.expect("]")
    if s.peek():
        s.error("end of input")
    return SuperWeight(m, n, tuple(top), tuple(bottom))


# -- JSON -------------------------------------------------------------------------


def weight_json(w: Optional[SuperWeight]):
    if w is None:
        return None
    return {"m": w.m, "n": w.n, "top": list(w.top), "bottom": list(w.bottom)}


def weight_from_json(data: dict) -> SuperWeight:
    try:
        return SuperWeight(int(data["m"]), int(data["n"]), tuple(data["top"]), tuple(data["bottom"]))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed weight object: {exc}") from None


def _core_or_none(w: SuperWeight):
    if is_negligible_irreducible(w):
        return None
    return list(classical_core(w))


def _principal_or_none(w: SuperWeight):
    return eta0_reduce(w) if is_maximal_atypical(w) else None


def decomposition_json(dec) -> dict:
    return {
        "summands": [
            {
                "weight": weight_json(s.weight),
                "parity": s.parity_shift,
                "multiplicity": s.multiplicity,
                "classical": _core_or_none(s.weight),
                "principal": weight_json(_principal_or_none(s.weight)),
            }
            for s in dec.summands
        ],
        "negligible_dropped": dec.dropped_negligible,
    }


def fusion_json(res: FusionResult) -> dict:
    return {
        "level": res.level,
        "summands": [
            {
                "weight": weight_json(s.weight),
                "parity": s.parity,
                "multiplicity": s.multiplicity,
                "classical": list(s.classical),
                "principal": weight_json(s.principal),
                "label": str(s.label) if s.label is not None else None,
                "principal_dim": s.principal_dim,
                "sdim": s.sdim,
            }
            for s in res.summands
        ],
        "total_multiplicity": res.total_multiplicity(),
        "negligible_dropped": res.negligible_dropped,
        "flags": list(res.flags),
    }


# -- rendering ------------------------------------------------------------------

_GLYPHS = {
    "ascii": {"v": "v", "^": "^", "x": "x", "o": "o", "bar": "|", "left": "\\", "right": "/", "run": "_"},
    "unicode": {"v": "∨", "^": "∧", "x": "×", "o": "∘", "bar": "│", "left": "╰", "right": "╯", "run": "─"},
}
_CELL = 4


def _arc_levels(arcs) -> dict:
    """Height of each arc: one more than the tallest arc nested inside it."""
    levels: dict = {}
    for a, b in sorted(arcs, key=lambda arc: arc[1] - arc[0]):
        inner = [levels[c] for c in levels if a < c[0] and c[1] < b]
        levels[(a, b)] = 1 + max(inner, default=0)
    return levels


def render_diagram(w: SuperWeight, style: str = "ascii") -> str:
    """Symbol row over a position ruler, with cups drawn underneath."""
    if style not in _GLYPHS:
        raise ValidationError(f"unknown style {style!r}; expected ascii or unicode")
    g = _GLYPHS[style]
    d = weight_to_diagram(w)
    arcs = cup_diagram(d).arcs
    marks = set(d.support()) | {p for arc in arcs for p in arc} | {0}
    lo, hi = min(marks) - 1, max(marks) + 1
    cols = range(lo, hi + 1)
    cell = max(_CELL, 1 + max(len(str(p)) for p in (lo, hi)))
    width = cell * len(cols)

    def centre(p):
        # symbols and the last digit of the ruler share this column
        return cell * (p - lo) + cell - 2

    symbols = "".join(g[d.label(p)].rjust(cell - 1) + " " for p in cols).rstrip()
    ruler = "".join(str(p).rjust(cell - 1) + " " for p in cols).rstrip()
    lines = [symbols, ruler]
    levels = _arc_levels(arcs)
    for row in range(1, max(levels.values(), default=0) + 1):
        line = [" "] * width
        for (a, b), h in levels.items():
            if h > row:
                line[centre(a)] = line[centre(b)] = g["bar"]
            elif h == row:
                line[centre(a)], line[centre(b)] = g["left"], g["right"]
                for c in range(centre(a) + 1, centre(b)):
                    line[c] = g["run"]
        lines.append("".join(line).rstrip())
    return "\n".join(lines) + "\n"


# -- commands -------------------------------------------------------------------


class WeightParam(click.ParamType):
    name = "weight"

    def convert(self, value, param, ctx):
        if isinstance(value, SuperWeight):
            return value
        try:
            return parse_weight(value)
        except ValidationError as exc:
            self.fail(str(exc), param, ctx)


WEIGHT = WeightParam()


def _emit(ctx, payload, text: str):
    if ctx.obj["json"]:
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        click.echo(text.rstrip("\n"))


def _par(bit: int) -> str:
    return "par " if bit else ""


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Machine readable output.")
@click.option("--style", type=click.Choice(["ascii", "unicode"]), default="ascii", show_default=True)
@click.pass_context
def main(ctx, as_json, style):
    """Diagram combinatorics and tensor products for GL(m|n)."""
    ctx.ensure_object(dict)
    ctx.obj.update(json=as_json, style=style)


@main.command()
@click.argument("weight", type=WEIGHT)
@click.pass_context
def diagram(ctx, weight):
    """Draw the weight diagram with its cups."""
    d = weight_to_diagram(weight)
    payload = {
        "weight": weight_json(weight),
        "vees": sorted(d.vees),
        "crosses": sorted(d.crosses),
        "circles": sorted(d.circles),
        "cups": [list(a) for a in cup_diagram(d).sorted_arcs()],
    }
    _emit(ctx, payload, render_diagram(weight, ctx.obj["style"]))


@main.command()
@click.argument("weight", type=WEIGHT)
@click.option("--power", "k", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--paths", is_flag=True, help="Report m(lambda) and the sign of DS^n instead.")
@click.pass_context
def ds(ctx, weight, k, paths):
    """Apply the Duflo-Serganova functor."""
    if paths:
        count, sign = ds_paths(weight)
        _emit(ctx, {"paths": count, "sign": sign}, f"m = {count}, sign {'+' if sign > 0 else '-'}")
        return
    dec = ds_power(weight, k)
    lines = [f"{_par(s.parity_shift)}{s.weight}" + (f"  (x{s.multiplicity})" if s.multiplicity > 1 else "")
             for s in dec.summands]
    if not lines:
        lines = ["0"]
    if dec.dropped_negligible:
        lines.append("(negligible summands dropped)")
    _emit(ctx, decomposition_json(dec), "\n".join(lines))


@main.command("dual")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def dual_cmd(ctx, weight):
    """Highest weight of the dual irreducible."""
    w = dual(weight)
    _emit(ctx, weight_json(w), str(w))


@main.command("stabilize")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def stabilize_cmd(ctx, weight):
    """Smallest Pi-power making the weight negatively stable."""
    w, N = stabilize(weight)
    _emit(ctx, {"weight": weight_json(w), "pi_power": N}, f"Pi^{N}: {w}")


@main.command("splice")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def splice_cmd(ctx, weight):
    """Classical core and principal part."""
    sp = splice(weight)
    payload = {"classical": list(sp.classical), "principal": weight_json(sp.principal), "pi_power": sp.pi_power}
    _emit(ctx, payload, f"classical {list(sp.classical)}\nprincipal {sp.principal}\nPi^{sp.pi_power}")


@main.command("image")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def image_cmd(ctx, weight):
    """Image in the semisimplification."""
    img = image(weight)
    if img is None:
        _emit(ctx, None, "0 (negligible)")
        return
    payload = {
        "classical": list(img.classical),
        "principal": weight_json(img.principal),
        "parity": img.parity,
        "ber_core_power": img.ber_core_power,
    }
    _emit(ctx, payload, f"{_par(img.parity)}{list(img.classical)} [x] {img.principal}")


@main.command("sdim")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def sdim_cmd(ctx, weight):
    """Superdimension."""
    value = sdim(weight)
    _emit(ctx, value, str(value))


def _fusion_text(res: FusionResult) -> str:
    lines = []
    for s in res.summands:
        parts = [f"{s.multiplicity} x {list(s.classical)}"]
        if s.principal is not None:
            parts.append(str(s.principal))
        if s.label is not None:
            parts.append(str(s.label))
        lines.append(" [x] ".join(parts))
    lines += [f"note: {f}" for f in res.flags]
    return "\n".join(lines) if lines else "0 (negligible)"


@main.command("blocks")
@click.argument("w1", type=WEIGHT)
@click.argument("w2", type=WEIGHT)
@click.pass_context
def blocks_cmd(ctx, w1, w2):
    """Blocks of non-negligible summands of L(W1) (x) L(W2), with multiplicities."""
    res = tensor_blockwise(w1, w2)
    _emit(ctx, fusion_json(res), _fusion_text(res))


def _load_specs(path):
    if path is None:
        return None, None
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        spec = PrincipalFusionSpec.from_json(data)
        return spec, spec
    if isinstance(data, list) and len(data) == 2:
        return PrincipalFusionSpec.from_json(data[0]), PrincipalFusionSpec.from_json(data[1])
    raise ValidationError("fusion spec file must hold an object or a list of two objects")


def _tensor(w1, w2, specs, ground):
    if ground:
        return tensor_ground_states(w1, w2)
    return tensor_mod_negligible(w1, w2, *specs)


@main.command("tensor")
@click.argument("w1", type=WEIGHT, required=False)
@click.argument("w2", type=WEIGHT, required=False)
@click.option("--fusion", "fusion_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--ground-state", is_flag=True, help="Use the ground-state rule.")
@click.option("--batch", type=click.File("r"), help="File with one pair 'W1 ; W2' per line.")
@click.option("--jobs", type=click.IntRange(min=1), default=4, show_default=True)
@click.pass_context
def tensor_cmd(ctx, w1, w2, fusion_path, ground_state, batch, jobs):
    """Decompose L(W1) (x) L(W2) modulo negligible summands."""
    specs = _load_specs(fusion_path)
    if batch is None:
        if w1 is None or w2 is None:
            raise click.UsageError("two weights are required unless --batch is given")
        res = _tensor(w1, w2, specs, ground_state)
        _emit(ctx, fusion_json(res), _fusion_text(res))
        return
    pairs = []
    for line in batch:
        if line.strip() and not line.lstrip().startswith("#"):
            left, sep, right = line.partition(";")
            if not sep:
                raise ValidationError(f"batch line lacks ';': {line.strip()!r}")
            pairs.append((parse_weight(left), parse_weight(right)))
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(lambda p: _tensor(p[0], p[1], specs, ground_state), pairs))
    _emit(
        ctx,
        [fusion_json(r) for r in results],
        "\n\n".join(f"# {a} (x) {b}\n{_fusion_text(r)}" for (a, b), r in zip(pairs, results)),
    )


@main.command("kac")
@click.argument("weight", type=WEIGHT)
@click.pass_context
def kac_cmd(ctx, weight):
    """Composition factors of the Kac module."""
    factors = kac_composition_factors(weight)
    _emit(ctx, [weight_json(f) for f in factors], "\n".join(str(f) for f in factors))


@main.command("det")
@click.argument("weight", type=WEIGHT)
@click.option("--ell", type=int, default=None, help="Exponent l(mu) of the principal determinant.")
@click.pass_context
def det_cmd(ctx, weight, ell):
    """Determinant of X_lambda in the semisimplification."""
    d = determinant(weight, ell)
    payload = {
        "classical_exponent": d.classical_exponent,
        "principal": weight_json(d.principal),
        "principal_multiplier": d.principal_multiplier,
        "ell": d.ell,
        "principal_exponent": d.principal_exponent,
    }
    _emit(ctx, payload, str(d))


def run(argv=None) -> int:
    """Entry point returning the exit code instead of raising SystemExit."""
    try:
        main.main(args=argv, prog_name="supercup", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    except FusionTableRequired as exc:
        click.echo(f"error: {exc}", err=True)
        if exc.partial is not None:
            click.echo("blockwise result:", err=True)
            click.echo(_fusion_text(exc.partial), err=True)
        return EXIT_FUSION_TABLE
    except (ValidationError, DomainError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_VALIDATION
    except InconsistencyError as exc:
        click.echo(f"internal inconsistency: {exc}", err=True)
        return EXIT_INCONSISTENT
    except (OSError, json.JSONDecodeError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_VALIDATION
    return 0


def entry():
    sys.exit(run())
