"""Corpus files, removal reports, and report emission.

A corpus is a UTF-8 JSON file: either a bare list of entries or an
object with an "entries" list.  Each entry:

    {
      "name": "entry-003",
      "basis": {"exceptional": [0, 1], "threshold": 2,
                "modulus": 2, "residues": [0]},
      "remove": [2],
      "order_cap": 64,       // optional, default from ADDBASIS_CAP or 64
      "window": 512,         // optional, default 512
      "ap_flag": true        // optional; checked against the actual shape
    }

For each entry the runner computes the order h of the base set, the
exact order after removing the listed elements, the removal parameters
(k, d, eta, mu), every applicable upper bound, and the two structural
checks (decomposition of the h-fold sumset, unit-adjoining
construction).  An entry whose base set or reduced set is not a basis,
or whose order search hits the cap, becomes a skip with a reason rather
than a crash.

Report tables carry a fixed column order so diffs stay meaningful:

    name,h,exact,k,d,eta,mu,nash,farhi_d,farhi_eta,farhi_mu,
    remark_d,cor2,min_bound,min_slack

Rows are sorted by entry name; two runs over the same corpus emit
byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from importlib import resources

from .basis import (
    decomposition_check,
    default_cap,
    nfold_thresholds,
    order,
    remove_and_order,
    removal_parameters,
    theorem5_construction_check,
    RemovalParameters,
)
from .bounds import compare_all, BoundValue
from .errors import (
    CapExceeded,
    HoleAboveThreshold,
    NotABasis,
    ParseError,
    UnknownFormat,
    ValidationError,
)
from .intset import EventuallyPeriodicSet, FiniteIntSet, make_eps

__all__ = [
    "CorpusEntry",
    "EntrySkip",
    "RemovalReport",
    "REPORT_COLUMNS",
    "load_corpus",
    "run_entry",
    "run_corpus",
    "emit_report",
    "gen_corpus",
    "entry_to_dict",
    "corpus_to_json",
    "golden_corpus_path",
]

REPORT_COLUMNS = [
    "name", "h", "exact", "k", "d", "eta", "mu",
    "nash", "farhi_d", "farhi_eta", "farhi_mu", "remark_d", "cor2",
    "min_bound", "min_slack",
]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    basis: EventuallyPeriodicSet
    raw_basis: dict = field(compare=False)
    remove: tuple
    order_cap: int | None = None
    window: int = 512
    ap_flag: bool | None = None

    def cap(self) -> int:
        return self.order_cap if self.order_cap is not None else default_cap()


@dataclass(frozen=True)
class EntrySkip:
    name: str
    reason: str
    cap_related: bool = False


@dataclass(frozen=True)
class RemovalReport:
    name: str
    h: int
    exact: int
    params: RemovalParameters
    bounds: tuple
    decomposition_ok: bool
    construction_ok: bool

    def bound_map(self) -> dict:
        return {bv.name: bv.value for bv in self.bounds}

    def min_bound(self) -> int:
        return min(bv.value for bv in self.bounds if bv.certified)

    def min_slack(self) -> int:
        return self.min_bound() - self.exact

    def violations(self) -> list:
        """Bound names the exact order exceeds, plus failed checks."""
        out = [bv.name for bv in self.bounds if bv.certified and bv.value < self.exact]
        if not self.decomposition_ok:
            out.append("decomposition")
        if not self.construction_ok:
            out.append("construction")
        return out


def _entry_field(raw: dict, name: str, key: str, types, required=True, where="entry"):
    if key not in raw:
        if required:
            raise ParseError(f"entry {name!r}: missing {where} field {key!r}")
        return None
    val = raw[key]
    if not isinstance(val, types) or isinstance(val, bool) and types is not bool:
        raise ParseError(f"entry {name!r}: {where} field {key!r} has the wrong type")
    return val


def _int_list(raw: dict, name: str, key: str, where="entry"):
    val = _entry_field(raw, name, key, list, where=where)
    for x in val:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ParseError(f"entry {name!r}: {where} field {key!r} must hold integers")
    return val


def _load_entry(raw, index: int) -> CorpusEntry:
    if not isinstance(raw, dict):
        raise ParseError(f"entry #{index} is not an object")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError(f"entry #{index}: missing or empty name")
    basis_raw = _entry_field(raw, name, "basis", dict)
    exceptional = _int_list(basis_raw, name, "exceptional", where="basis")
    threshold = _entry_field(basis_raw, name, "threshold", int, where="basis")
    modulus = _entry_field(basis_raw, name, "modulus", int, where="basis")
    residues = _int_list(basis_raw, name, "residues", where="basis")
    try:
        basis = make_eps(exceptional, threshold, modulus, residues)
    except (ValueError, HoleAboveThreshold) as exc:
        raise ValidationError(f"entry {name!r}: bad basis literal: {exc}") from exc

    remove = _int_list(raw, name, "remove")
    if not remove:
        raise ValidationError(f"entry {name!r}: remove must list at least one element")
    for x in remove:
        if x not in basis:
            raise ValidationError(f"entry {name!r}: removed element {x} is not in the basis")
    remove = tuple(sorted(set(remove)))

    order_cap = _entry_field(raw, name, "order_cap", int, required=False)
    if order_cap is not None and order_cap < 1:
        raise ValidationError(f"entry {name!r}: order_cap must be positive")
    window = _entry_field(raw, name, "window", int, required=False)
    if window is None:
        window = 512
    elif window < 2:
        raise ValidationError(f"entry {name!r}: window must be at least 2")

    ap_flag = None
    if "ap_flag" in raw:
        ap_flag = raw["ap_flag"]
        if not isinstance(ap_flag, bool):
            raise ParseError(f"entry {name!r}: ap_flag must be a boolean")
        actual = FiniteIntSet(remove).is_ap()
        if ap_flag != actual:
            raise ValidationError(
                f"entry {name!r}: ap_flag says {ap_flag} but the removed set "
                f"{'is' if actual else 'is not'} an arithmetic progression"
            )

    return CorpusEntry(
        name=name,
        basis=basis,
        raw_basis={
            "exceptional": list(exceptional),
            "threshold": threshold,
            "modulus": modulus,
            "residues": list(residues),
        },
        remove=remove,
        order_cap=order_cap,
        window=window,
        ap_flag=ap_flag,
    )


def load_corpus(path) -> list:
    """Parse and validate a corpus file. ParseError for malformed input,
    ValidationError for well-formed input that breaks an invariant."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if isinstance(doc, dict):
        doc = doc.get("entries")
    if not isinstance(doc, list):
        raise ParseError(f"{path}: expected a list of entries or an 'entries' key")
    entries = [_load_entry(raw, i) for i, raw in enumerate(doc)]
    seen = set()
    for e in entries:
        if e.name in seen:
            raise ValidationError(f"duplicate entry name {e.name!r}")
        seen.add(e.name)
    return entries


def run_entry(entry: CorpusEntry):
    """RemovalReport for the entry, or EntrySkip when it has no order
    within the cap."""
    cap = entry.cap()
    try:
        h = order(entry.basis, cap).order
    except NotABasis as exc:
        return EntrySkip(entry.name, f"base set is not a basis: {exc}")
    except CapExceeded:
        return EntrySkip(entry.name, f"no order of the base set within cap {cap}",
                         cap_related=True)
    xs = FiniteIntSet(entry.remove)
    try:
        exact = remove_and_order(entry.basis, xs, cap).order
    except NotABasis as exc:
        return EntrySkip(entry.name, f"reduced set is not a basis: {exc}")
    except CapExceeded:
        return EntrySkip(entry.name, f"no order of the reduced set within cap {cap}",
                         cap_related=True)
    reduced = entry.basis.remove_finite(xs)
    params = removal_parameters(reduced, xs)
    bounds = tuple(compare_all(h, params))
    deco = decomposition_check(entry.basis, xs, h)
    cons = theorem5_construction_check(entry.basis, xs, cap)
    return RemovalReport(
        name=entry.name,
        h=h,
        exact=exact,
        params=params,
        bounds=bounds,
        decomposition_ok=deco,
        construction_ok=cons,
    )


def run_corpus(entries) -> tuple:
    """(reports, skips), reports sorted by name."""
    reports, skips = [], []
    for e in entries:
        res = run_entry(e)
        if isinstance(res, EntrySkip):
            skips.append(res)
        else:
            reports.append(res)
    reports.sort(key=lambda r: r.name)
    skips.sort(key=lambda s: s.name)
    return reports, skips


def _report_row(r: RemovalReport) -> dict:
    bm = r.bound_map()
    return {
        "name": r.name,
        "h": r.h,
        "exact": r.exact,
        "k": r.params.k,
        "d": r.params.d,
        "eta": r.params.eta,
        "mu": r.params.mu,
        "nash": bm.get("nash"),
        "farhi_d": bm.get("farhi_d"),
        "farhi_eta": bm.get("farhi_eta"),
        "farhi_mu": bm.get("farhi_mu"),
        "remark_d": bm.get("remark_d"),
        "cor2": bm.get("cor2"),
        "min_bound": r.min_bound(),
        "min_slack": r.min_slack(),
    }


def emit_report(reports, fmt: str) -> str:
    """Render reports as csv, md, or json text with the fixed column order."""
    rows = [_report_row(r) for r in sorted(reports, key=lambda r: r.name)]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(REPORT_COLUMNS)
        for row in rows:
            w.writerow(["" if row[c] is None else row[c] for c in REPORT_COLUMNS])
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(REPORT_COLUMNS) + " |",
                 "|" + "|".join(" --- " for _ in REPORT_COLUMNS) + "|"]
        for row in rows:
            cells = ["" if row[c] is None else str(row[c]) for c in REPORT_COLUMNS]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"reports": rows}, indent=2) + "\n"
    raise UnknownFormat(f"unknown report format {fmt!r}")


def entry_to_dict(e: CorpusEntry) -> dict:
    """Literal dict for an entry, as it would appear in a corpus file."""
    out = {"name": e.name, "basis": dict(e.raw_basis), "remove": list(e.remove)}
    if e.order_cap is not None:
        out["order_cap"] = e.order_cap
    out["window"] = e.window
    if e.ap_flag is not None:
        out["ap_flag"] = e.ap_flag
    return out


def corpus_to_json(entries) -> str:
    dicts = [entry_to_dict(e) if isinstance(e, CorpusEntry) else e for e in entries]
    return json.dumps({"entries": dicts}, indent=2) + "\n"


def golden_corpus_path():
    """Path of the corpus that ships with the package."""
    return resources.files("addbasis").joinpath("data/golden.json")


def gen_corpus(seed: int, count: int, max_order: int = 8, cap: int = 64) -> list:
    """Randomized corpus entries as JSON-ready dicts, deterministic in seed.

    Draws eventually periodic sets over the naturals with modulus <= 12,
    at most 4 exceptional elements below the threshold, and 1..4 removed
    elements, keeping only entries where both the base set and the
    reduced set have an order within reach (h <= max_order, reduced
    order and h*mu within the cap).  The verification window is sized
    from the fold thresholds so the windowed oracle sees settled tails.
    """
    rng = random.Random(seed)
    out = []
    idx = 0
    while len(out) < count:
        g = rng.randint(1, 12)
        residues = sorted(rng.sample(range(g), rng.randint(1, g)))
        threshold = rng.randint(0, 24)
        pool = range(max(0, threshold - 12), threshold)
        n_exc = min(rng.randint(0, 4), len(pool))
        exceptional = sorted(rng.sample(pool, n_exc))
        try:
            basis = make_eps(exceptional, threshold, g, residues)
        except ValueError:
            continue
        try:
            h = order(basis, max_order).order
        except (NotABasis, CapExceeded):
            continue
        elems = basis.enumerate_window(basis.min_element(),
                                       threshold + 2 * g + 9).elements
        k = rng.randint(1, min(4, len(elems)))
        remove = sorted(rng.sample(elems, k))
        xs = FiniteIntSet(remove)
        try:
            exact = remove_and_order(basis, xs, cap).order
        except (NotABasis, CapExceeded):
            continue
        reduced = basis.remove_finite(xs)
        params = removal_parameters(reduced, xs)
        if h * params.mu > cap:
            continue
        thr = max(nfold_thresholds(basis, h) + nfold_thresholds(reduced, exact))
        window = max(512, 2 * (thr + 2 * g + 2))
        entry = {
            "name": f"entry-{idx:03d}",
            "basis": {
                "exceptional": exceptional,
                "threshold": threshold,
                "modulus": g,
                "residues": residues,
            },
            "remove": remove,
            "order_cap": cap,
            "window": window,
        }
        if rng.random() < 0.4:
            entry["ap_flag"] = xs.is_ap()
        out.append(entry)
        idx += 1
    return out
