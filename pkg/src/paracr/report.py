"""Report serialization: deterministic JSON and human-readable tables."""
from __future__ import annotations

import json
from importlib import resources

from .classify import ClassificationReport, DecompositionVerdict

SCHEMA_VERSION = 1

_FAMILY_CONDITIONS = {
    "A": "every subset with at least two vertices is admissible",
    "B": "admissible iff the last two chosen vertices are consecutive (i_k = i_{k-1}+1)",
    "C": "admissible iff the last chosen vertex is the end of the chain (i_k = l)",
    "D": "admissible iff i_k >= l-1 or the last two chosen vertices are consecutive",
    "E": "admissible except for the listed sets",
    "F": "admissible except for the listed sets",
    "G": "the only size->=2 subset {1,2} is admissible",
}


def _decomposition_dict(d: DecompositionVerdict) -> dict:
    return {
        "plus": list(d.plus),
        "minus": list(d.minus),
        "alternate": d.alternate,
        "plus_abelian": d.plus_abelian.abelian,
        "plus_witness": list(d.plus_abelian.witness) if d.plus_abelian.witness else None,
        "minus_abelian": d.minus_abelian.abelian,
        "minus_witness": list(d.minus_abelian.witness) if d.minus_abelian.witness else None,
        "paracr": d.paracr,
    }


def report_dict(r: ClassificationReport) -> dict:
    real = r.real_components
    return {
        "algebra": str(r.algebra),
        "real_form": r.real_form,
        "pi1": list(r.pi1),
        "admissible": r.admissible.admissible,
        "admissible_reason": r.admissible.reason,
        "witness": list(r.admissible.witness) if r.admissible.witness else None,
        "depth": r.depth,
        "fundamental": r.flags.fundamental,
        "effective": r.flags.effective,
        "nondegenerate": r.flags.nondegenerate,
        "component_count": r.component_count,
        "component_dimensions": list(r.component_dimensions),
        "real_component_count": real.count if real is not None else None,
        "singles": sorted(real.singles) if real is not None else None,
        "pairs": [list(p) for p in sorted(real.pairs)] if real is not None else None,
        "decompositions": [_decomposition_dict(d) for d in r.decompositions],
        "any_paracr": r.any_paracr,
    }


def classify_payload(r: ClassificationReport) -> dict:
    return {"schema_version": SCHEMA_VERSION, "mode": "classify", "report": report_dict(r)}


def enumerate_payload(reports: list[ClassificationReport], algebra, real_form) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": "enumerate",
        "algebra": str(algebra),
        "real_form": real_form,
        "reports": [report_dict(r) for r in reports],
    }


def tables_payload(reports: list[ClassificationReport], algebra, real_form) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": "tables",
        "algebra": str(algebra),
        "real_form": real_form,
        "condition": _FAMILY_CONDITIONS[algebra.family],
        "admissible": [list(r.pi1) for r in reports if r.admissible.admissible],
        "non_admissible": [list(r.pi1) for r in reports if not r.admissible.admissible],
        "paracr_feasible": [list(r.pi1) for r in reports if r.any_paracr],
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def load_schema() -> dict:
    text = resources.files("paracr.data").joinpath("report.schema.json").read_text()
    return json.loads(text)


# ---------------------------------------------------------------------------
# Text rendering
# ---------------------------------------------------------------------------

def _set_str(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _root_str(witness) -> str:
    return "(" + ",".join(str(c) for c in witness) + ")" if witness else "-"


def render_classify(r: ClassificationReport) -> str:
    lines = [
        f"algebra          {r.algebra}",
        f"real form        {r.real_form or '(complex)'}",
        f"pi1              {_set_str(r.pi1)}",
        f"admissible       {_verdict(r)}",
        f"depth            {r.depth}",
        f"fundamental      {r.flags.fundamental}",
        f"effective        {r.flags.effective}",
        f"nondegenerate    {r.flags.nondegenerate}",
        f"components       {r.component_count} "
        f"(dims {','.join(map(str, r.component_dimensions)) or '-'})",
    ]
    if r.real_components is not None:
        rc = r.real_components
        lines.append(
            f"real components  {rc.count} "
            f"(singles {_set_str(sorted(rc.singles))}, "
            f"pairs {','.join(_set_str(p) for p in sorted(rc.pairs)) or '{}'})"
        )
    if r.decompositions:
        lines.append("")
        lines.append(f"{'plus':<12}{'minus':<12}{'alternate':<11}{'abelian':<10}{'para-CR'}")
        for d in r.decompositions:
            abelian = d.plus_abelian.abelian and d.minus_abelian.abelian
            lines.append(
                f"{_set_str(d.plus):<12}{_set_str(d.minus):<12}"
                f"{str(d.alternate):<11}{str(abelian):<10}{d.paracr}"
            )
    return "\n".join(lines) + "\n"


def _verdict(r: ClassificationReport) -> str:
    if r.admissible.admissible:
        return "yes"
    if r.admissible.reason == "size":
        return "no (size rule: fewer than two vertices)"
    return f"no (witness root {_root_str(r.admissible.witness)})"


def render_enumerate(reports: list[ClassificationReport], algebra, real_form) -> str:
    header = f"enumeration for {algebra}" + (f", real form {real_form}" if real_form else "")
    lines = [header, "=" * len(header), ""]
    lines.append(f"{'pi1':<20}{'admissible':<12}{'depth':<7}{'comps':<7}{'splits':<8}{'para-CR'}")
    for r in reports:
        n_paracr = sum(d.paracr for d in r.decompositions)
        lines.append(
            f"{_set_str(r.pi1):<20}{str(r.admissible.admissible):<12}"
            f"{r.depth:<7}{r.component_count:<7}{len(r.decompositions):<8}{n_paracr}"
        )
    non_adm = [r.pi1 for r in reports if not r.admissible.admissible]
    feasible = [r.pi1 for r in reports if r.any_paracr]
    lines.append("")
    lines.append(f"non-admissible sets ({len(non_adm)}): "
                 + (", ".join(_set_str(s) for s in non_adm) or "none"))
    lines.append(f"sets with a para-CR split ({len(feasible)}): "
                 + (", ".join(_set_str(s) for s in feasible) or "none"))
    return "\n".join(lines) + "\n"


def render_tables(payload: dict) -> str:
    header = f"admissibility table for {payload['algebra']}"
    if payload["real_form"]:
        header += f", real form {payload['real_form']}"
    lines = [header, "=" * len(header), ""]
    lines.append(f"family rule: {payload['condition']}")
    lines.append("")
    lines.append(f"non-admissible sets ({len(payload['non_admissible'])}):")
    for s in payload["non_admissible"]:
        lines.append(f"  {_set_str(s)}")
    if not payload["non_admissible"]:
        lines.append("  none")
    lines.append("")
    lines.append(f"admissible sets: {len(payload['admissible'])}")
    lines.append(f"sets with a para-CR split ({len(payload['paracr_feasible'])}): "
                 + (", ".join(_set_str(s) for s in payload["paracr_feasible"]) or "none"))
    return "\n".join(lines) + "\n"
