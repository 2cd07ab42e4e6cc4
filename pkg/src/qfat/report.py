"""Report records and serialization for the command-line toolkit.

One JSON schema for every command: {schema, config, records, summary}.
CSV flattens each record to one row per (record, weight) pair followed by
summary rows; the column order is fixed (kind, record, field, t, poly,
weight, count, extra).  Byte determinism: with timing disabled (the
default) the serialized output depends only on the config.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field as dc_field
from typing import Optional

SCHEMA = "qfat-report-v1"


@dataclass
class RunConfig:
    command: str
    p: Optional[int] = None
    e: Optional[int] = None
    n: Optional[int] = None
    t: Optional[int] = None
    extra: dict = dc_field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"command": self.command}
        for key in ("p", "e", "n", "t"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        out.update(self.extra)
        return out


@dataclass
class ReportRecord:
    input: dict
    spectrum: Optional[dict] = None
    classification: Optional[dict] = None
    bounds: Optional[dict] = None
    timing_s: Optional[float] = None
    extra: dict = dc_field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"input": self.input}
        if self.spectrum is not None:
            out["spectrum"] = self.spectrum
        if self.classification is not None:
            out["classification"] = self.classification
        if self.bounds is not None:
            out["bounds"] = self.bounds
        if self.timing_s is not None:
            out["timing_s"] = self.timing_s
        out.update(self.extra)
        return out


def spectrum_dict(spec) -> dict:
    """Serialized WeightSpectrum; re-asserts the counting identity."""
    q, rank = spec.q, spec.rank
    total = sum(ni * (q**i - 1) // (q - 1) for i, ni in spec.counts.items())
    total += (q**spec.infinity_weight - 1) // (q - 1)
    if total != (q**rank - 1) // (q - 1):
        raise AssertionError("weight spectrum identity violated at serialization")
    return {
        "counts": {str(i): int(c) for i, c in sorted(spec.counts.items())},
        "infinity_weight": int(spec.infinity_weight),
        "size": int(spec.size),
        "r": int(spec.r),
        "max_weight": int(spec.max_weight),
    }


def poly_input_dict(f, t: Optional[int]) -> dict:
    ctx = f.ctx
    out = {
        "p": ctx.p,
        "e": ctx.e,
        "n": ctx.n,
        "poly": [
            {"slot": i, "coords": list(ctx.coeffs_of(c))}
            for i, c in enumerate(f.codes)
            if c
        ],
    }
    if t is not None:
        out["t"] = t
    return out


def render_json(config: RunConfig, records: list[ReportRecord], summary: dict) -> str:
    doc = {
        "schema": SCHEMA,
        "config": config.as_dict(),
        "records": [r.as_dict() for r in records],
        "summary": summary,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


CSV_COLUMNS = ("kind", "record", "field", "t", "poly", "weight", "count", "extra")


def render_csv(config: RunConfig, records: list[ReportRecord], summary: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for idx, rec in enumerate(records):
        inp = rec.input
        field_str = "{p}^{e}^{n}".format(
            p=inp.get("p", ""), e=inp.get("e", ""), n=inp.get("n", "")
        )
        poly_str = _poly_str(inp.get("poly"))
        t = inp.get("t", "")
        if rec.spectrum:
            for w, c in sorted(rec.spectrum["counts"].items(), key=lambda kv: int(kv[0])):
                writer.writerow(["spectrum", idx, field_str, t, poly_str, w, c, ""])
            if rec.spectrum["infinity_weight"]:
                writer.writerow(
                    ["spectrum", idx, field_str, t, poly_str, "inf",
                     rec.spectrum["infinity_weight"], ""]
                )
            if rec.classification:
                writer.writerow(
                    ["classification", idx, field_str, t, poly_str, "",
                     rec.classification.get("r", ""), json.dumps(rec.classification, sort_keys=True)]
                )
        else:
            writer.writerow(
                ["record", idx, field_str, t, poly_str, "", "",
                 json.dumps(rec.as_dict(), sort_keys=True)]
            )
    for key in sorted(summary):
        writer.writerow(["summary", "", "", "", "", "", "", json.dumps({key: summary[key]}, sort_keys=True)])
    return buf.getvalue()


def _poly_str(poly) -> str:
    if not poly:
        return ""
    return ";".join(
        ",".join(str(d) for d in term["coords"]) + "@" + str(term["slot"])
        for term in poly
    )
