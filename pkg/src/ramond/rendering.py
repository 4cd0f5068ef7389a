"""Canonical text and JSON output.

Text output prints exact rationals as p/q with positive reduced
denominator, omits unit coefficients and denominator 1, and orders terms
by the canonical monomial rank sequence.  JSON output keeps every
coefficient in explicit "p/q" form and builds objects in a fixed key
order, so identical inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .induced import CertificateReport, Lemma31Report, ModuleVector, ReductionTranscript
from .pbw import AlgebraElement


def frac_text(q: Fraction) -> str:
    return str(q)


def frac_json(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _monomial_text(mono) -> str:
    parts = []
    for g, e in mono.factors:
        s = f"{g.kind}[{g.index}]"
        parts.append(s + (f"^{e}" if e > 1 else ""))
    if mono.cexp == 1:
        parts.append("c")
    elif mono.cexp > 1:
        parts.append(f"c^{mono.cexp}")
    return "*".join(parts)


def element_text(x: AlgebraElement) -> str:
    if x.is_zero():
        return "0"
    bits = []
    for mono, q in x.sorted_terms():
        body = _monomial_text(mono)
        mag = abs(q)
        if not body:
            piece = frac_text(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{frac_text(mag)}*{body}"
        if not bits:
            if q < 0:
                # a leading negative keeps its coefficient so the output reparses
                piece = frac_text(q) + (f"*{body}" if body else "")
            bits.append(piece)
        else:
            bits.append(("+ " if q > 0 else "- ") + piece)
    return " ".join(bits)


def element_json(x: AlgebraElement) -> dict:
    terms = []
    for mono, q in x.sorted_terms():
        terms.append({
            "coeff": frac_json(q),
            "monomial": [[g.kind, g.index, e] for g, e in mono.factors],
            "cExp": mono.cexp,
        })
    return {"terms": terms}


def vector_text(v: ModuleVector) -> str:
    if v.is_zero():
        return "0"
    bits = []
    for (pair, idx), q in v.sorted_terms():
        label = v.module.base.basis_label(idx)
        mono = pair.text()
        if pair.is_zero():
            piece = f"{frac_text(abs(q))}|{label}"
        elif abs(q) == 1:
            piece = f"{mono}|{label}"
        else:
            piece = f"{frac_text(abs(q))}*{mono}|{label}"
        if not bits:
            bits.append(piece if q > 0 else "-" + piece)
        else:
            bits.append(("+ " if q > 0 else "- ") + piece)
    return " ".join(bits)


def vector_json(v: ModuleVector) -> dict:
    terms = []
    for (pair, idx), q in v.sorted_terms():
        terms.append({
            "coeff": frac_json(q),
            "k": list(pair.k),
            "i": [[n, e] for n, e in pair.i],
            "base": v.module.base.basis_label(idx),
        })
    return {"terms": terms}


def base_combo_text(base, combo) -> str:
    if not combo:
        return "0"
    bits = []
    for idx, q in sorted(combo.items()):
        label = base.basis_label(idx)
        piece = label if abs(q) == 1 else f"{frac_text(abs(q))}*{label}"
        if not bits:
            bits.append(piece if q > 0 else "-" + piece)
        else:
            bits.append(("+ " if q > 0 else "- ") + piece)
    return " ".join(bits)


def transcript_lines(tr: ReductionTranscript) -> list[str]:
    out = [f"reduction with t = {tr.t}"]
    for step in tr.steps:
        tag = "pre " if step.kind == "pre" else "step"
        out.append(f"  {tag} {step.gen!r}: {step.before.text()} -> {step.after.text()}")
    return out


def transcript_json(tr: ReductionTranscript) -> dict:
    return {
        "t": tr.t,
        "steps": [
            {
                "kind": s.kind,
                "gen": repr(s.gen),
                "before": s.before.text(),
                "after": s.after.text(),
            }
            for s in tr.steps
        ],
    }


def lemma_json(rep: Lemma31Report) -> dict:
    return {
        "module": rep.label,
        "t": rep.t,
        "jRange": rep.j_range,
        "samples": rep.samples,
        "injectivity": rep.injectivity,
        "identityChecked": list(rep.identity_checked),
        "hypothesesOk": rep.hypotheses_ok,
        "failures": rep.failures,
        "passed": rep.passed,
    }


def lemma_text(rep: Lemma31Report) -> list[str]:
    lines = [
        f"annihilation check on {rep.label}: t = {rep.t}, range {rep.j_range}, "
        f"{rep.samples} samples, L_t injectivity: {rep.injectivity}",
    ]
    if rep.identity_checked:
        js = ", ".join(str(j) for j in rep.identity_checked)
        lines.append(f"  engine identity G_j = (2/j)[L_j, G_0] verified for j = {js}")
    if not rep.hypotheses_ok:
        lines.append("  hypotheses failed; conclusion untested")
    for f in rep.failures:
        lines.append(f"  FAIL {f}")
    lines.append("  passed" if rep.passed else "  not passed")
    return lines


def certificate_json(rep: CertificateReport) -> dict:
    reductions = []
    for entry in rep.reductions:
        item = {"input": entry["input"], "ok": entry["ok"]}
        if "transcript" in entry:
            item["transcript"] = transcript_json(entry["transcript"])
        if "error" in entry:
            item["error"] = entry["error"]
        reductions.append(item)
    return {
        "module": rep.module,
        "maxLevel": rep.max_level,
        "trials": rep.trials,
        "seed": rep.seed,
        "rejected": rep.rejected,
        "tUsed": rep.t_used,
        "injectivity": rep.injectivity,
        "lemma": lemma_json(rep.lemma) if rep.lemma else None,
        "baseSimplicity": rep.base_simplicity,
        "reductions": reductions,
        "failures": rep.failures,
        "certified": rep.certified,
        "summary": rep.summary(),
    }


def certificate_text(rep: CertificateReport) -> list[str]:
    lines = [f"simplicity probe for {rep.module} "
             f"(max level {rep.max_level}, trials {rep.trials}, seed {rep.seed})"]
    if rep.rejected:
        lines.append(f"  rejected: {rep.rejected}")
        return lines
    lines.append(f"  effective t = {rep.t_used} (L_t injectivity: {rep.injectivity})")
    if rep.lemma:
        lines.extend("  " + s for s in lemma_text(rep.lemma))
    bs = rep.base_simplicity
    if bs:
        lines.append(f"  base simplicity [{bs.get('kind')}]: "
                     f"{'ok' if bs.get('ok') else 'FAILED'} - {bs.get('detail')}")
    ok = sum(1 for r in rep.reductions if r["ok"])
    lines.append(f"  reductions: {ok}/{len(rep.reductions)} landed on a nonzero base element")
    for entry in rep.reductions:
        tr = entry.get("transcript")
        mark = "ok " if entry["ok"] else "FAIL"
        gens = " ".join(repr(s.gen) for s in tr.steps) if tr else entry.get("error", "")
        lines.append(f"    {mark} {entry['input']}: {gens}")
        if tr:
            for step in tr.steps:
                tag = "pre " if step.kind == "pre" else "step"
                lines.append(f"        {tag} {step.gen!r}: {step.before.text()} -> {step.after.text()}")
    lines.append("  " + rep.summary())
    return lines


def validation_json(rep) -> dict:
    return {
        "module": rep.label,
        "indexBound": rep.index_bound,
        "basisCount": rep.basis_count,
        "pairsChecked": rep.pairs_checked,
        "violations": rep.violations,
        "ok": rep.ok,
    }


def validation_text(rep) -> list[str]:
    lines = [f"module-axiom check on {rep.label}: indices <= {rep.index_bound}, "
             f"{rep.basis_count} basis vectors, {rep.pairs_checked} checks"]
    for v in rep.violations:
        lines.append(f"  VIOLATION at ({v['x']}, {v['y']}) on {v['basis_label']}: "
                     f"lhs={v['lhs']} rhs={v['rhs']}")
    lines.append("  no violations" if rep.ok else f"  {len(rep.violations)} violations")
    return lines


def json_dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def error_json(kind: str, detail: str, witness=None) -> str:
    err = {"kind": kind, "detail": detail}
    if witness is not None:
        err["witness"] = witness
    return json_dumps({"error": err})
