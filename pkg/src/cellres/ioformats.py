"""Parsing and serialization for ideals, complexes, and result documents.

Two interchangeable ideal formats: a human text form

    vars: x,y,z
    ideal: x^2, x*y, y^2

and a JSON form ``{"nvars": 3, "generators": [[2,0,0], ...]}`` (with an
optional "vars" name list).  Complexes are JSON only: vertex labels as
exponent vectors plus either "facets" (simplicial) or "faces" with
explicit signed boundary lists (polyhedral).  All emitted documents use
canonical ordering -- faces by (dimension, vertex set), monomials and
exponent vectors lexicographically -- so byte-identical reruns are
guaranteed.
"""

from __future__ import annotations

import json
import re

from cellres.complexes import LabeledComplex, polyhedral_from_incidence, simplicial_from_facets
from cellres.errors import ParseError
from cellres.monomial import IrreducibleIdeal, Monomial, MonomialIdeal, minimalize

SCHEMA_VERSION = 1

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def default_var_names(n: int):
    if n <= 4:
        return tuple("xyzw"[:n])
    return tuple(f"z{i + 1}" for i in range(n))


def monomial_str(m: Monomial, names=None) -> str:
    names = names or default_var_names(m.nvars)
    parts = []
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append(names[i])
        elif e > 1:
            parts.append(f"{names[i]}^{e}")
    return "*".join(parts) if parts else "1"


def ideal_str(M: MonomialIdeal, names=None) -> str:
    return "(" + ", ".join(monomial_str(g, names) for g in M.gens) + ")"


def ideal_text(M: MonomialIdeal, names=None) -> str:
    """The parseable two-line text form of an ideal."""
    names = names or default_var_names(M.nvars)
    return (f"vars: {','.join(names)}\n"
            f"ideal: {', '.join(monomial_str(g, names) for g in M.gens)}\n")


def irreducible_str(irr: IrreducibleIdeal, names=None) -> str:
    return ideal_str(irr.as_ideal(), names)


def _parse_term(chunk: str, lineno: int, base_col: int, declared, seen):
    """One generator like ``x^2*y``; returns a dict var name -> exponent."""
    exps = {}
    pos = 0
    expect_factor = True
    while pos < len(chunk):
        if chunk[pos].isspace():
            pos += 1
            continue
        if not expect_factor:
            if chunk[pos] == "*":
                pos += 1
                expect_factor = True
                continue
            raise ParseError(f"expected '*' or ',', found {chunk[pos]!r}",
                             lineno, base_col + pos + 1)
        if chunk[pos] == "1":
            pos += 1
            expect_factor = False
            continue
        m = _NAME_RE.match(chunk, pos)
        if not m:
            raise ParseError(f"expected a variable name, found {chunk[pos]!r}",
                             lineno, base_col + pos + 1)
        name = m.group(0)
        col = base_col + pos + 1
        if declared is not None and name not in declared:
            raise ParseError(f"unknown variable {name!r}", lineno, col)
        if declared is None and name not in seen:
            seen.append(name)
        pos = m.end()
        exponent = 1
        if pos < len(chunk) and chunk[pos] == "^":
            pos += 1
            d = re.match(r"\d+", chunk[pos:])
            if not d:
                raise ParseError("expected an integer exponent after '^'",
                                 lineno, base_col + pos + 1)
            exponent = int(d.group(0))
            pos += d.end()
        exps[name] = exps.get(name, 0) + exponent
        expect_factor = False
    if expect_factor:
        raise ParseError("empty or dangling generator", lineno, base_col + 1)
    return exps


def parse_ideal(text: str):
    """Parse either ideal format.

    Returns (ideal, names, warnings); the ideal is minimalized and a
    warning is recorded when the input generators were not minimal.
    """
    if text.lstrip().startswith("{"):
        return _parse_ideal_json(text)

    declared = None
    term_sites = []  # (chunk, lineno, col)
    in_ideal = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.lower().startswith("vars:"):
            if in_ideal:
                raise ParseError("'vars:' must come before 'ideal:'", lineno, 1)
            names = [v.strip() for v in stripped[5:].split(",")]
            if not all(_NAME_RE.fullmatch(v) for v in names):
                raise ParseError("bad variable list", lineno, 1)
            if len(set(names)) != len(names):
                raise ParseError("repeated variable name", lineno, 1)
            declared = names
            continue
        if stripped.lower().startswith("ideal:"):
            in_ideal = True
            body = line[line.lower().index("ideal:") + 6:]
            base = line.lower().index("ideal:") + 6
        elif in_ideal:
            body = line
            base = 0
        else:
            raise ParseError("expected 'vars:' or 'ideal:'", lineno, 1)
        col = base
        for chunk in body.split(","):
            if chunk.strip():
                term_sites.append((chunk, lineno, col))
            col += len(chunk) + 1
    if not in_ideal:
        raise ParseError("missing 'ideal:' line", len(text.splitlines()) or 1, 1)
    if not term_sites:
        raise ParseError("no generators given", len(text.splitlines()), 1)

    seen = []
    parsed = [_parse_term(chunk, lineno, col, declared, seen)
              for chunk, lineno, col in term_sites]
    names = tuple(declared if declared is not None else seen)
    gens = [Monomial(tuple(term.get(v, 0) for v in names)) for term in parsed]
    return _finish_ideal(len(names), gens, names)


def _parse_ideal_json(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from None
    try:
        nvars = int(doc["nvars"])
        raw = doc["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"ideal document needs 'nvars' and 'generators': {exc}") from None
    gens = []
    for vec in raw:
        if len(vec) != nvars or any(int(e) < 0 for e in vec):
            raise ParseError(f"bad exponent vector {vec!r}")
        gens.append(Monomial(int(e) for e in vec))
    names = tuple(doc.get("vars") or default_var_names(nvars))
    if len(names) != nvars:
        raise ParseError("'vars' length does not match 'nvars'")
    return _finish_ideal(nvars, gens, names)


def _finish_ideal(nvars, gens, names):
    warnings = []
    minimal = minimalize(gens)
    if set(minimal) != set(gens):
        kept = ", ".join(monomial_str(g, names) for g in minimal)
        warnings.append(f"generators were not minimal; reduced to {kept}")
    return MonomialIdeal(nvars, minimal), names, warnings


def parse_complex(text: str):
    """Parse the JSON complex format; returns (complex, names or None)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if "labels" not in doc:
        raise ParseError("complex document needs 'labels'")
    labels = [Monomial(int(e) for e in vec) for vec in doc["labels"]]
    names = tuple(doc["vars"]) if doc.get("vars") else None
    if "facets" in doc:
        X = simplicial_from_facets(labels, [tuple(map(int, f)) for f in doc["facets"]])
    elif "faces" in doc:
        X = polyhedral_from_incidence(labels, doc["faces"])
    else:
        raise ParseError("complex document needs 'facets' or 'faces'")
    return X, names


def ideal_doc(M: MonomialIdeal, names=None) -> dict:
    names = names or default_var_names(M.nvars)
    return {
        "nvars": M.nvars,
        "vars": list(names),
        "generators": [list(g.exps) for g in M.gens],
        "pretty": [monomial_str(g, names) for g in M.gens],
    }


def complex_doc(X: LabeledComplex, names=None) -> dict:
    names = names or default_var_names(X.nvars)
    simplicial = all(len(f.vertices) == f.dim + 1 for f in X.faces if f.dim >= 0)
    faces = []
    for f in X.faces:
        if f.dim < 0:
            continue
        entry = {
            "id": f.id,
            "dim": f.dim,
            "vertices": sorted(f.vertices),
            "label": list(f.label.exps),
            "label_str": monomial_str(f.label, names),
        }
        if f.dim == 0:
            entry["vertex"] = next(iter(f.vertices))
        else:
            entry["boundary"] = [[sid, sign] for sid, sign in f.boundary]
        faces.append(entry)
    return {
        "labels": [list(m.exps) for m in X.labels],
        "vars": list(names),
        "dim": X.dim,
        "is_simplicial": simplicial,
        "faces": faces,
        "facet_ids": sorted(f.id for f in X.facets()),
    }


def decomposition_doc(dec, names=None) -> dict:
    names = names or default_var_names(dec.ideal.nvars)
    return {
        "method": dec.method,
        "components": [list(c.exponent.exps) for c in dec.components],
        "pretty": [irreducible_str(c, names) for c in dec.components],
        "verified": dec.is_irredundant(),
    }


def dbar_factors_str(entry, names=None) -> str:
    names = names or default_var_names(entry.alpha.nvars)
    parts = []
    for i in sorted(entry.K):
        e = entry.alpha.exps[i]
        power = names[i] if e == 1 else f"{names[i]}^{e}"
        parts.append(f"∂̄[1/{power}]")
    return "∧".join(parts)


def residue_entry_doc(entry, names=None) -> dict:
    names = names or default_var_names(entry.alpha.nvars)
    return {
        "K": sorted(entry.K),
        "tau": sorted(entry.tau),
        "face": entry.face_id,
        "alpha": list(entry.alpha.exps),
        "annihilator": list(entry.annihilator.exponent.exps),
        "annihilator_str": irreducible_str(entry.annihilator, names),
        "factors": dbar_factors_str(entry, names),
        "status": entry.status,
        "rule": entry.rule,
        "has_smooth_factor": entry.has_smooth_factor,
    }


def residue_doc(current, names=None) -> dict:
    names = names or default_var_names(current.ideal.nvars)
    return {
        "ideal": ideal_doc(current.ideal, names),
        "entries": [residue_entry_doc(e, names) for e in current.entries],
    }


def duality_doc(report, names=None) -> dict:
    names = names or default_var_names(report.lower.nvars)
    return {
        "verdict": report.verdict,
        "lower": [list(g.exps) for g in report.lower.gens],
        "lower_str": ideal_str(report.lower, names),
        "upper": [list(g.exps) for g in report.upper.gens],
        "upper_str": ideal_str(report.upper, names),
    }


def pairs_doc(pairs, names, nvars) -> list:
    names = names or default_var_names(nvars)
    return [{
        "K": sorted(p.K),
        "K_vars": [names[i] for i in sorted(p.K)],
        "tau": sorted(p.tau),
        "label": list(p.label.exps),
        "annihilator": list(p.annihilator().exponent.exps),
        "annihilator_str": irreducible_str(p.annihilator(), names),
    } for p in pairs]


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"
