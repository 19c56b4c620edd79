"""Serializable experiment reports and their writers.

A report carries every numeric series with per-point error bounds, any
spectra, the verdicts with their thresholds, and the full configuration that
produced it, so re-running the embedded config reproduces the series
bit-for-bit.  Writers emit report.json, one CSV per series (columns index,
value, error_bound), and a rendered PNG next to each CSV.
"""
from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

SeriesRow = tuple[float, float, float]  # (index, value, error_bound)


@dataclass
class ExperimentReport:
    experiment: str
    status: str                      # pass | fail | inconclusive
    domain: dict | None = None
    symbols: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)
    series: dict = field(default_factory=dict)     # name -> list[SeriesRow]
    spectra: dict = field(default_factory=dict)    # label -> list[float]
    verdict: str | None = None
    theorem_prediction: str | None = None
    agreement: bool | None = None
    tolerances: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)
    runtimes: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    def add_series(self, name: str, rows) -> None:
        self.series[name] = [
            (float(i), float(v), float(e)) for i, v, e in rows
        ]

    def to_json_dict(self) -> dict:
        return asdict(self)


def exit_code(report: ExperimentReport) -> int:
    if report.status == "pass":
        return 0
    if report.status == "inconclusive":
        return 3
    return 2


def write_report(report: ExperimentReport, out_dir: str | Path, fmt: str = "both") -> list[Path]:
    """Write report artifacts into out_dir; returns the created paths.

    fmt "json" writes report.json only; "csv" writes the delimited series
    (plus rendered figures); "both" writes everything.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    created: list[Path] = []
    if fmt in ("json", "both"):
        path = out / "report.json"
        with open(path, "w") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, default=_jsonable)
        created.append(path)
    if fmt in ("csv", "both"):
        for name, rows in report.series.items():
            path = out / f"{name}.csv"
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["index", "value", "error_bound"])
                for idx, val, err in rows:
                    writer.writerow([repr(idx), repr(val), repr(err)])
            created.append(path)
            created.append(_render_series(out, name, rows))
        for label, values in report.spectra.items():
            path = out / f"spectrum_{label}.csv"
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["index", "value", "error_bound"])
                for k, val in enumerate(values):
                    writer.writerow([k, repr(float(val)), repr(0.0)])
            created.append(path)
        if report.spectra:
            created.append(_render_spectra(out, report.spectra))
    return created


def _jsonable(obj):
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if hasattr(obj, "tolist"):
        return obj.tolist()
    if hasattr(obj, "__dict__"):
        return vars(obj)
    return str(obj)


def _render_series(out: Path, name: str, rows) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    idx = [r[0] for r in rows]
    val = [r[1] for r in rows]
    err = [r[2] for r in rows]
    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    if any(e > 0 for e in err):
        ax.errorbar(idx, val, yerr=err, fmt="o-", ms=3, lw=1, capsize=2)
    else:
        ax.plot(idx, val, "o-", ms=3, lw=1)
    ax.set_xlabel("index")
    ax.set_ylabel(name)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = out / f"{name}.png"
    fig.savefig(path, dpi=140)
    plt.close(fig)
    return path


def _render_spectra(out: Path, spectra: dict) -> Path:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.0, 3.8))
    for label, values in spectra.items():
        ax.plot(range(1, len(values) + 1), values, "o", ms=3, label=str(label))
    ax.set_xlabel("rank")
    ax.set_ylabel("eigenvalue")
    ax.set_yscale("symlog", linthresh=1e-12)
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = out / "spectra.png"
    fig.savefig(path, dpi=140)
    plt.close(fig)
    return path
