"""Assembling the reconciliation report and the verification suites."""
from __future__ import annotations

import json

from .cfinite import VERIFIED, COUNTEREXAMPLE, builtin_identity_suite
from .genfunc import cartan_gf, reconcile_gf, series_expand, spinor_gf
from .horadam import PAPER_PRESETS, PRESETS
from .reconcile import canonical
from .sequences import (
    context,
    binet_term,
    cw_term,
    rational_part,
    reconcile_binet_constants,
    reconcile_examples,
    reconcile_initial_conditions,
)
from .spinor import reconcile_spinor_forms, spinor_binet, spinor_term

SECTIONS = ("Examples", "Identities", "BinetConstants", "GeneratingFunctions", "SpinorForms")

BINET_MAX_N = 64
GF_TERMS = 32


def build_report() -> dict:
    spinor_entries, notes = reconcile_spinor_forms()
    doc = {
        "Examples": [e.to_json() for e in reconcile_examples() + reconcile_initial_conditions()],
        "Identities": [r.to_json() for r in builtin_identity_suite()],
        "BinetConstants": [e.to_json() for e in reconcile_binet_constants()],
        "GeneratingFunctions": [e.to_json() for e in reconcile_gf(GF_TERMS)],
        "SpinorForms": [e.to_json() for e in spinor_entries],
    }
    summary = {}
    for section in SECTIONS:
        key = "status" if section == "Identities" else "verdict"
        counts = {}
        for item in doc[section]:
            counts[item[key]] = counts.get(item[key], 0) + 1
        summary[section] = dict(sorted(counts.items()))
    doc["notes"] = notes
    doc["summary"] = summary
    return doc


def report_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _cell(v) -> str:
    text = json.dumps(v, separators=(",", ":"), ensure_ascii=False) if not isinstance(v, str) else v
    return text.replace("|", "\\|")


def report_markdown(doc: dict) -> str:
    lines = ["# Reconciliation report", ""]
    for section in SECTIONS:
        lines += [f"## {section}", ""]
        if section == "Identities":
            lines.append("| identity | preset | coordinate | status | witness |")
            lines.append("|---|---|---|---|---|")
            for r in doc[section]:
                w = r.get("witness")
                witness = f"n={w['n']}: {w['lhs']} vs {w['rhs']}" if w else ""
                lines.append(
                    f"| {_cell(r['identity'])} | {r['preset']} | {r['coordinate']} | {r['status']} | {witness} |"
                )
        else:
            lines.append("| name | preset | paper | computed | verdict | coords |")
            lines.append("|---|---|---|---|---|---|")
            for e in doc[section]:
                lines.append(
                    f"| {_cell(e['name'])} | {e.get('preset', '')} | {_cell(e['paper'])} | "
                    f"{_cell(e['computed'])} | {e['verdict']} | {', '.join(e['coords'])} |"
                )
        lines.append("")
    lines += ["## Notes", ""]
    lines += [f"- {n}" for n in doc["notes"]]
    lines += ["", "## Summary", ""]
    for section in SECTIONS:
        counts = ", ".join(f"{k}: {v}" for k, v in doc["summary"][section].items())
        lines.append(f"- {section}: {counts}")
    return "\n".join(lines) + "\n"


def verdict_digest(doc: dict) -> list[list[str]]:
    """(section, name, preset[, coordinate], verdict) rows; the frozen golden form."""
    rows = []
    for section in SECTIONS:
        for item in doc[section]:
            if section == "Identities":
                rows.append([section, item["identity"], item["preset"], item["coordinate"], item["status"]])
            else:
                rows.append([section, item["name"], item.get("preset", ""), item["verdict"]])
    return rows


# --- verification suites ----------------------------------------------------


def _item(suite, name, preset, ok, witness=None) -> dict:
    out = {"suite": suite, "name": name, "preset": preset, "status": VERIFIED if ok else COUNTEREXAMPLE}
    if witness is not None:
        out["witness"] = witness
    return out


def verify_binet(max_n: int = BINET_MAX_N) -> list[dict]:
    items = []
    for name in PAPER_PRESETS:
        params = PRESETS[name]
        ctx = context(params)
        witness = None
        for n in range(max_n + 1):
            try:
                cartan_ok = rational_part(binet_term(ctx, n)) == cw_term(params, n)
            except ValueError:
                cartan_ok = False
            spinor_ok = canonical(spinor_binet(params, n)) == canonical(spinor_term(params, n))
            if not (cartan_ok and spinor_ok):
                witness = {"n": n, "cartan": cartan_ok, "spinor": spinor_ok}
                break
        items.append(_item("binet", f"binet = recurrence, n <= {max_n}", name, witness is None, witness))
    return items


def verify_identities() -> list[dict]:
    grouped = {}
    for r in builtin_identity_suite():
        key = (r.identity.name, r.preset)
        grouped.setdefault(key, []).append(r)
    items = []
    for (name, preset), results in grouped.items():
        ok = all(r.status == VERIFIED for r in results)
        item = _item("identities", name, preset, ok)
        item["coordinates"] = {r.coordinate: r.status for r in results}
        witnesses = {r.coordinate: r.verdict.witness for r in results if r.verdict.witness}
        if witnesses:
            item["witness"] = witnesses
        items.append(item)
    return items


def verify_genfunc(count: int = GF_TERMS) -> list[dict]:
    items = []
    for name in PAPER_PRESETS:
        params = PRESETS[name]
        want = [cw_term(params, n) for n in range(count)]
        items.append(_item("genfunc", "cartan_gf expansion", name, series_expand(cartan_gf(params), count) == want))
        want = [spinor_term(params, n) for n in range(count)]
        items.append(_item("genfunc", "spinor_gf expansion", name, series_expand(spinor_gf(params), count) == want))
    return items


SUITES = {
    "binet": verify_binet,
    "identities": verify_identities,
    "genfunc": verify_genfunc,
}


def run_suites(selection: str) -> dict:
    if selection == "none":
        names = []
    elif selection == "all":
        names = list(SUITES)
    else:
        names = [selection]
    results = []
    for name in names:
        results.extend(SUITES[name]())
    verified = [r for r in results if r["status"] == VERIFIED]
    return {
        "total": len(results),
        "verified": len(verified),
        "counterexamples": [
            {k: r[k] for k in ("suite", "name", "preset") if k in r} for r in results if r["status"] != VERIFIED
        ],
        "results": results,
    }

