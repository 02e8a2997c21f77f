"""Curvature-table export and re-import (CSV, 12 significant digits)."""

from __future__ import annotations

import csv
import io
from typing import Iterable, TextIO

from .fabric import Fabric
from .grid import Orientation
from .inversive import Circle, GeneralizedCircle

FIELDS = [
    "family",
    "orientation",
    "strip",
    "index",
    "kappa_signed",
    "kappa_unsigned",
    "shape",
    "cx",
    "cy",
    "radius",
]


def _num(x: float) -> str:
    return f"{x:.12g}"


def _shape_cols(g: GeneralizedCircle) -> list[str]:
    if isinstance(g, Circle):
        return ["circle", _num(g.center.x), _num(g.center.y), _num(g.radius)]
    return ["line", "", "", ""]


def table_rows(fabric: Fabric) -> Iterable[list[str]]:
    for o in Orientation:
        for fc in fabric.frames(o):
            yield ["frame", o.value, "", str(fc.index), _num(fc.kappa), _num(abs(fc.kappa))] + _shape_cols(fc.shape)
    for o in Orientation:
        for ch in fabric.chains(o):
            for n in ch.indices:
                yield [
                    "chain",
                    o.value,
                    str(ch.strip),
                    str(n),
                    _num(ch.bends[n]),
                    _num(ch.kappas[n]),
                ] + _shape_cols(ch.members[n])


def write_table(fabric: Fabric, fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(FIELDS)
    w.writerows(table_rows(fabric))


def table_csv(fabric: Fabric) -> str:
    buf = io.StringIO()
    write_table(fabric, buf)
    return buf.getvalue()


def read_table(fh: TextIO) -> list[dict]:
    rows = []
    for row in csv.DictReader(fh):
        for key in ("kappa_signed", "kappa_unsigned", "cx", "cy", "radius"):
            row[key] = float(row[key]) if row[key] else None
        row["index"] = int(row["index"])
        row["strip"] = int(row["strip"]) if row["strip"] else None
        rows.append(row)
    return rows
