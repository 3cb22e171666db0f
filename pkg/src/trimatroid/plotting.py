"""Optional PNG figures for reports and queries (matplotlib, Agg backend)."""

from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .matroid import Matroid, triangles  # noqa: E402
from .report import VerificationReport  # noqa: E402

_COLORS = {"pass": "#4c956c", "fail": "#d1495b", "skip": "#b8b8b8"}
_CLASS = re.compile(r"class n=(\d+) r=(\d+) kind=(\w+) .* verdict=(\w+)")


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def _slug(text: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")


def status_figure(report: VerificationReport, path: Path) -> Path:
    counts = report.counts()
    fig, ax = plt.subplots(figsize=(5, 2.6))
    keys = list(counts)
    ax.barh(keys, [counts[k] for k in keys], color=[_COLORS[k] for k in keys])
    for i, k in enumerate(keys):
        ax.text(counts[k], i, f" {counts[k]}", va="center")
    ax.set_xlabel("checks")
    ax.set_title(report.command)
    fig.tight_layout()
    return _save(fig, path)


def class_figure(report: VerificationReport, path: Path) -> Path | None:
    """Scatter of minor classes by size and rank, coloured by verdict."""
    points = []
    for check in report.checks:
        for note in check.notes:
            hit = _CLASS.match(note)
            if hit:
                n, r, kind, verdict = hit.groups()
                points.append((int(n), int(r), kind, verdict))
    if not points:
        return None
    fig, ax = plt.subplots(figsize=(5.5, 4))
    for kind, marker in (("counted", "o"), ("whirl", "s"), ("small", "^")):
        for verdict, color in (("ok", _COLORS["pass"]), ("fails", _COLORS["fail"])):
            sel = [(n, r) for n, r, k, v in points if k == kind and v == verdict]
            if sel:
                ax.scatter([n for n, _ in sel], [r for _, r in sel], marker=marker, s=70,
                           color=color, edgecolor="black", label=f"{kind}, {verdict}")
    ax.set_xlabel("elements")
    ax.set_ylabel("rank")
    ax.set_title("3-connected minor classes")
    ax.legend(fontsize=8, loc="upper left")
    fig.tight_layout()
    return _save(fig, path)


def triangle_figure(m: Matroid, path: Path) -> Path:
    counts = triangles(m).counts
    fig, ax = plt.subplots(figsize=(max(4, 0.35 * m.n + 1.5), 3))
    ax.bar(range(m.n), counts, color="#2e86ab")
    ax.set_xticks(range(m.n))
    ax.set_xticklabels(m.labels, rotation=90 if m.n > 12 else 0)
    ax.set_ylabel("triangles through element")
    ax.set_title(m.name or "triangle profile")
    fig.tight_layout()
    return _save(fig, path)


def report_figures(report: VerificationReport, directory: str | Path) -> list[Path]:
    directory = Path(directory)
    stem = _slug(report.command)
    out = [status_figure(report, directory / f"{stem}-status.png")]
    extra = class_figure(report, directory / f"{stem}-classes.png")
    if extra is not None:
        out.append(extra)
    return out
