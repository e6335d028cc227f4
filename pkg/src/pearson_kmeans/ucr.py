"""Reader and writer for UCR-style labelled time-series text files.

Grammar, one series per non-blank line::

    line   := label SEP value (SEP value)+
    SEP    := ","  (optionally surrounded by blanks)
            | one or more blanks/tabs

The separator is detected once per file: comma if the first non-blank line
contains a comma, whitespace otherwise. ``label`` is kept as an opaque
string (``"1"`` and ``"1.0"`` are different classes). Every value must
parse as a finite float and all lines must carry the same number of values.
Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConstantSeriesError, EmptyDatasetError, LengthMismatchError, ParseError
from .series_core import Dataset, NormalizationConvention, validate_and_normalize_dataset


@dataclass(frozen=True)
class LabeledDataset:
    """Normalized series with their class labels.

    ``dropped_lines`` lists 1-based line numbers of constant series that
    were removed on load.
    """

    dataset: Dataset
    class_labels: tuple[str, ...]
    name: str = "dataset"
    dropped_lines: tuple[int, ...] = field(default=())

    @property
    def class_count(self) -> int:
        return len(set(self.class_labels))

    @property
    def n(self) -> int:
        return self.dataset.n

    @property
    def T(self) -> int:
        return self.dataset.T


def _split(line: str, comma: bool) -> list[str]:
    if comma:
        return [f.strip() for f in line.split(",")]
    return line.split()


def parse_ucr(lines: Iterable[str]) -> tuple[list[str], list[np.ndarray], list[int]]:
    """Parse raw lines into labels, sample vectors and source line numbers."""
    labels, rows, line_numbers = [], [], []
    comma = None
    width = None
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if comma is None:
            comma = "," in text
        fields = _split(text, comma)
        if len(fields) < 3:
            raise ParseError(
                f"expected a label and at least 2 values, found {len(fields)} field(s)",
                line=lineno,
            )
        label, raw_values = fields[0], fields[1:]
        if not label:
            raise ParseError("empty class label", line=lineno)
        values = []
        for col, raw in enumerate(raw_values, start=2):
            try:
                v = float(raw)
            except ValueError:
                raise ParseError(f"field {col} is not a number: {raw!r}", line=lineno) from None
            if not math.isfinite(v):
                raise ParseError(f"field {col} is not finite: {raw!r}", line=lineno)
            values.append(v)
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise LengthMismatchError(
                f"line {lineno}: {len(values)} values, expected {width}"
            )
        labels.append(label)
        rows.append(np.array(values))
        line_numbers.append(lineno)
    return labels, rows, line_numbers


def load_ucr(
    path: str | os.PathLike,
    convention: NormalizationConvention = NormalizationConvention.UNIT_NORM,
    drop_constant: bool = False,
    name: str | None = None,
) -> LabeledDataset:
    """Read a UCR-style file and z-score normalize every row."""
    with open(path, encoding="utf-8") as fh:
        labels, rows, line_numbers = parse_ucr(fh)
    if not rows:
        raise EmptyDatasetError(f"{path}: no series found")
    try:
        dataset, dropped = validate_and_normalize_dataset(
            rows, convention, drop_constant=drop_constant, labels=labels
        )
    except ConstantSeriesError as exc:
        bad = [line_numbers[i] for i in exc.rows]
        raise ConstantSeriesError(
            f"{path}: constant series on lines {bad}; pass drop_constant to skip them",
            rows=bad,
        ) from None
    except EmptyDatasetError:
        raise EmptyDatasetError(f"{path}: every series is constant") from None
    if name is None:
        name = os.path.splitext(os.path.basename(os.fspath(path)))[0]
    return LabeledDataset(
        dataset=dataset,
        class_labels=dataset.labels,
        name=name,
        dropped_lines=tuple(line_numbers[i] for i in dropped),
    )


def format_ucr(labels: Sequence[str], rows, delimiter: str = ",") -> str:
    """Render series as UCR text; values use ``repr`` so they round-trip exactly."""
    rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    if len(labels) != rows.shape[0]:
        raise LengthMismatchError(f"{len(labels)} labels for {rows.shape[0]} rows")
    lines = []
    for label, row in zip(labels, rows):
        label = str(label)
        if not label or "," in label or any(ch.isspace() for ch in label):
            raise ValueError(f"label {label!r} cannot be written unambiguously")
        lines.append(delimiter.join([label] + [repr(float(v)) for v in row]))
    return "\n".join(lines) + "\n"


def write_ucr(path: str | os.PathLike, labels: Sequence[str], rows, delimiter: str = ",") -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_ucr(labels, rows, delimiter))
