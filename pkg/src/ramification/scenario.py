"""Declarative scenario files: load, run checks, render reports.

A scenario file is JSON::

    {
      "name": "f3",
      "base": {"residue": "GF(3)", "variables": ["t"]},
      "towers": {"L1": ["sqrt(t)"], "L2": ["root(4, 2*t)"], "L": "L1*L2"},
      "checks": ["abhyankar L1 L2", "relative L L1", "dtheta L L1 g2^2/g1"]
    }

A tower is a list of generator strings or a product ``"A*B"`` of towers
defined earlier.  A file may also hold ``{"scenarios": [...]}``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Any

from .abhyankar import compositum, corollary_check, lemma_product_check, theorem_check
from .errors import ParseError, RamificationError
from .parser import parse_element, parse_generator
from .ramify import UNDETERMINED, absolute_data, relative_data, residue_degree_over
from .residue import ResidueField, field_make
from .selfcheck import check_tower_pair
from .tower import BaseField, GroupElement, Tower, format_vector, value
from .valgroup import is_prime

CHECK_ARITY = {
    "ramify": (1, False),
    "relative": (2, False),
    "abhyankar": (2, False),
    "corollary": (2, False),
    "lemma41": (2, False),
    "value": (1, True),
    "dtheta": (2, True),
}

_FIELD = re.compile(r"^\s*(?:GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\)|(Q))\s*$")
_BASE_SPEC = re.compile(r"^\s*(.+?)\s*\[\s*([^\]]*)\]\s*$")


class ScenarioError(RamificationError):
    """A scenario file failed to parse or validate."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_residue(text: str) -> ResidueField:
    """``"Q"``, ``"GF(p)"``, ``"GF(p^s)"`` or ``"GF(q)"`` with ``q`` a prime power."""
    m = _FIELD.match(text)
    if not m:
        raise ValueError(f"bad residue field {text!r}")
    if m.group(3):
        return field_make("Q")
    q, s = int(m.group(1)), int(m.group(2) or 1)
    if m.group(2) is None and not is_prime(q):
        # GF(q) with q = p^s
        p = next((d for d in range(2, q + 1) if q % d == 0), 0)
        s = 0
        while q > 1 and q % p == 0:
            q //= p
            s += 1
        if q != 1:
            raise ValueError(f"{m.group(1)} is not a prime power")
        return field_make((p, s))
    return field_make((q, s))


def parse_base_spec(text: str) -> BaseField:
    """``"GF(3)[t]"`` or ``"Q[X,Y]"``."""
    m = _BASE_SPEC.match(text)
    if not m:
        raise ValueError(f"bad base field {text!r}; expected e.g. Q[X,Y] or GF(3)[t]")
    variables = [v.strip() for v in m.group(2).split(",") if v.strip()]
    return BaseField(parse_residue(m.group(1)), tuple(variables))


@dataclass
class Scenario:
    name: str
    base: BaseField
    towers: dict[str, Tower]
    checks: list[tuple[str, list[str], str | None, int | None]]


def _line_of(raw: str, needle: Any) -> int | None:
    pos = raw.find(json.dumps(needle, ensure_ascii=False))
    if pos < 0:
        pos = raw.find(str(needle))
    return raw.count("\n", 0, pos) + 1 if pos >= 0 else None


def _build_scenario(obj: Any, raw: str) -> Scenario:
    if not isinstance(obj, dict):
        raise ScenarioError("a scenario must be a JSON object", 1)
    unknown = set(obj) - {"name", "base", "towers", "checks", "description"}
    if unknown:
        key = sorted(unknown)[0]
        raise ScenarioError(f"unknown key {key!r}", _line_of(raw, key))
    name = str(obj.get("name", "scenario"))
    base_obj = obj.get("base")
    if not isinstance(base_obj, dict) or "residue" not in base_obj or "variables" not in base_obj:
        raise ScenarioError("'base' needs 'residue' and 'variables'", _line_of(raw, "base"))
    try:
        base = BaseField(parse_residue(str(base_obj["residue"])), tuple(base_obj["variables"]))
    except (ValueError, TypeError) as exc:
        raise ScenarioError(str(exc), _line_of(raw, "base")) from exc

    towers: dict[str, Tower] = {}
    for tname, spec in (obj.get("towers") or {}).items():
        line = _line_of(raw, tname)
        if tname in towers:
            raise ScenarioError(f"duplicate tower {tname!r}", line)
        if isinstance(spec, str):
            parts = [s.strip() for s in spec.split("*")]
            missing = [s for s in parts if s not in towers]
            if missing:
                raise ScenarioError(f"tower {tname!r} refers to undefined tower {missing[0]!r}", line)
            t = towers[parts[0]]
            for other in parts[1:]:
                t = compositum(t, towers[other])
            towers[tname] = t
            continue
        if not isinstance(spec, list):
            raise ScenarioError(f"tower {tname!r} must be a list of generators or a product of towers", line)
        gens = []
        for i, text in enumerate(spec, start=1):
            try:
                gens.append(parse_generator(str(text), base, f"g{i}"))
            except ParseError as exc:
                raise ScenarioError(f"tower {tname!r}: {exc}", _line_of(raw, text)) from exc
        try:
            towers[tname] = Tower(base, tuple(gens))
        except ValueError as exc:
            raise ScenarioError(f"tower {tname!r}: {exc}", line) from exc

    checks = []
    for item in obj.get("checks") or []:
        line = _line_of(raw, item)
        if not isinstance(item, str):
            raise ScenarioError("checks must be strings", line)
        words = item.split(None, 1)
        kind = words[0] if words else ""
        if kind not in CHECK_ARITY:
            raise ScenarioError(f"unknown check {kind!r}", line)
        nargs, has_expr = CHECK_ARITY[kind]
        rest = words[1].split(None, nargs) if len(words) > 1 else []
        args, expr = rest[:nargs], (rest[nargs] if len(rest) > nargs else None)
        if len(args) < nargs or (has_expr and expr is None) or (not has_expr and expr is not None):
            raise ScenarioError(f"malformed check {item!r}", line)
        for a in args:
            if a not in towers:
                raise ScenarioError(f"check {item!r} refers to undefined tower {a!r}", line)
        checks.append((kind, args, expr, line))
    return Scenario(name, base, towers, checks)


def load_scenarios(text: str) -> list[Scenario]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(exc.msg, exc.lineno) from exc
    if isinstance(obj, dict) and "scenarios" in obj:
        items = obj["scenarios"]
        if not isinstance(items, list):
            raise ScenarioError("'scenarios' must be a list", _line_of(text, "scenarios"))
        return [_build_scenario(o, text) for o in items]
    return [_build_scenario(obj, text)]


def load_file(path) -> list[Scenario]:
    with open(path, encoding="utf-8") as fh:
        return load_scenarios(fh.read())


# -- running ---------------------------------------------------------------


@dataclass
class CheckResult:
    check: str
    values: dict
    warning: bool = False
    error: str | None = None


def _warn(values: dict) -> bool:
    return values.get("class") == UNDETERMINED or values.get("status") == UNDETERMINED


def run_check(sc: Scenario, kind: str, args: list[str], expr: str | None) -> dict:
    ts = [sc.towers[a] for a in args]
    if kind == "ramify":
        return absolute_data(ts[0]).as_dict()
    if kind == "relative":
        return relative_data(ts[0], ts[1]).as_dict()
    if kind == "abhyankar":
        return theorem_check(ts[0], ts[1]).as_dict()
    if kind == "corollary":
        return corollary_check(ts[0], ts[1]).as_dict()
    if kind == "lemma41":
        return lemma_product_check(ts[0], ts[1]).as_dict()
    if kind == "value":
        return {"value": format_vector(value(ts[0], parse_element(expr, ts[0])))}
    if kind == "dtheta":
        theta = parse_element(expr, ts[0])
        if not isinstance(theta, GroupElement):
            raise ParseError("theta must be a product of constants, variables and generators", 0, expr)
        return {"d_theta": residue_degree_over(ts[0], ts[1], theta)}
    raise AssertionError(kind)  # pragma: no cover


def run_scenario(sc: Scenario, self_check: bool = False) -> list[CheckResult]:
    out = []
    for kind, args, expr, _line in sc.checks:
        label = " ".join([kind, *args] + ([expr] if expr else []))
        try:
            values = run_check(sc, kind, args, expr)
        except RamificationError as exc:
            out.append(CheckResult(label, {}, error=f"{type(exc).__name__}: {exc}"))
            continue
        if self_check and kind in ("ramify", "relative"):
            big = sc.towers[args[0]]
            sub = sc.towers[args[1]] if kind == "relative" else None
            values["self_check"] = check_tower_pair(big, sub)
        out.append(CheckResult(label, values, warning=_warn(values)))
    return out


def format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    s = str(v)
    return f'"{s}"' if " " in s else s


def render_text(results: list[CheckResult], name: str | None = None) -> str:
    lines = []
    for r in results:
        if r.error:
            lines.append(f"[{r.check}] error: {r.error}")
        else:
            body = " ".join(f"{k}={format_value(v)}" for k, v in r.values.items())
            lines.append(f"[{r.check}] {body}")
    warnings = sum(r.warning for r in results)
    if warnings:
        lines.append(f"warnings: {warnings}")
    if name is not None and lines:
        lines.insert(0, f"# {name}")
    return "\n".join(lines)


def render_structured(named: list[tuple[str, list[CheckResult]]]) -> str:
    docs = []
    for name, results in named:
        docs.append(
            {
                "scenario": name,
                "results": [
                    {"check": r.check, **r.values} if r.error is None else {"check": r.check, "error": r.error}
                    for r in results
                ],
                "warnings": sum(r.warning for r in results),
            }
        )
    return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2, sort_keys=False)

