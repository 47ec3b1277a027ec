"""Reading and validating the curve CSV files written by gmac-secrecy.

The file contract is the only coupling to the producer: a header line
`model,param_json,R0,R1,alpha_star`, one curve per file, floats parsed as
finite reals, params embedded as a JSON object.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

EXPECTED_HEADER = ["model", "param_json", "R0", "R1", "alpha_star"]


class CsvFormatError(ValueError):
    """The file exists but does not follow the curve CSV contract."""


@dataclass(frozen=True)
class CurveFile:
    path: Path
    model: str
    params: dict
    r0: tuple
    r1: tuple
    alpha_star: tuple

    def __len__(self) -> int:
        return len(self.r0)


def _parse_float(path: Path, line: int, name: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError as exc:
        raise CsvFormatError(f"{path}, line {line}: {name}={raw!r} is not a number") from exc
    if not math.isfinite(value):
        raise CsvFormatError(f"{path}, line {line}: {name}={raw!r} is not finite")
    return value


def read_curve_csv(path: str | Path) -> CurveFile:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"missing curve file: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != EXPECTED_HEADER:
            raise CsvFormatError(
                f"{path}: header {header} does not match {EXPECTED_HEADER}"
            )
        model = None
        params = None
        r0, r1, alpha = [], [], []
        for line, row in enumerate(reader, start=2):
            if len(row) != 5:
                raise CsvFormatError(f"{path}, line {line}: expected 5 columns, got {len(row)}")
            if model is None:
                model = row[0]
                try:
                    params = json.loads(row[1])
                except json.JSONDecodeError as exc:
                    raise CsvFormatError(
                        f"{path}, line {line}: param_json is not valid JSON"
                    ) from exc
            elif row[0] != model:
                raise CsvFormatError(
                    f"{path}, line {line}: model changed from {model!r} to {row[0]!r}"
                )
            r0.append(_parse_float(path, line, "R0", row[2]))
            r1.append(_parse_float(path, line, "R1", row[3]))
            alpha.append(_parse_float(path, line, "alpha_star", row[4]))
    if not r0:
        raise CsvFormatError(f"{path}: no data rows")
    return CurveFile(path, model, params, tuple(r0), tuple(r1), tuple(alpha))
