"""Writing a certificate report: JSON, tab-separated summaries and figures."""
from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from ..cubicgeom.batch import count_points_batch
from ..jacinv import invariant_discriminant
from .claims import CertificateReport
from .objects import build_fiber

_CHUNK = 32


def fiber_point_counts(p: int) -> list[tuple[int, int, bool]]:
    """(u, #W_u(F_p), smooth) for every residue u mod p; smoothness via T^2 + 64 S^3 (p >= 5)."""
    fibers = [build_fiber(u).reduce(p) for u in range(p)]
    coeffs = np.array([C.coeffs for C in fibers], dtype=np.int64)
    counts = np.concatenate([count_points_batch(coeffs[i:i + _CHUNK], p) for i in range(0, p, _CHUNK)])
    return [(u, int(n), invariant_discriminant(C) != 0) for u, (n, C) in enumerate(zip(counts, fibers))]


def write_json(report: CertificateReport, path: Path) -> None:
    Path(path).write_text(report.to_json() + "\n")


def write_claims_tsv(report: CertificateReport, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["id", "verdict", "millis", "anchor"])
        for c in report.claims:
            w.writerow([c.id, c.verdict, c.millis, c.anchor])


def write_hasse_tsv(rows, path: Path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["p", "u", "points", "trace", "smooth"])
        for p, u, n, smooth in rows:
            w.writerow([p, u, n, p + 1 - n, int(smooth)])


def plot_hasse(rows, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    smooth = [(p, p + 1 - n) for p, _, n, s in rows if s]
    singular = [(p, p + 1 - n) for p, _, n, s in rows if not s]
    primes = sorted({r[0] for r in rows})
    grid = np.linspace(min(primes), max(primes), 200)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    ax.fill_between(grid, -2 * np.sqrt(grid), 2 * np.sqrt(grid), color="0.9", label=r"$|a| \leq 2\sqrt{p}$")
    if smooth:
        ax.scatter(*zip(*smooth), s=4, alpha=0.5, label="smooth fibers")
    if singular:
        ax.scatter(*zip(*singular), s=18, marker="x", color="C3", label="singular fibers")
    ax.set_xscale("log")
    ax.set_xlabel("p")
    ax.set_ylabel(r"$a_p = p + 1 - N_p$")
    ax.set_title(r"$N_p$ = number of $\mathbf{F}_p$-points of $W_u$, all residues $u$", fontsize="small")
    ax.legend(frameon=False, fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_timings(report: CertificateReport, path: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    colors = {"Verified": "C2", "Failed": "C3", "Unknown": "C1", "AssumedExternal": "0.6"}
    ids = [c.id for c in report.claims]
    ms = [max(c.millis, 1) for c in report.claims]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.bar(ids, ms, color=[colors[c.verdict] for c in report.claims])
    ax.set_yscale("log")
    ax.set_ylabel("ms")
    handles = [plt.Rectangle((0, 0), 1, 1, color=v) for v in colors.values()]
    ax.legend(handles, colors.keys(), frameon=False, fontsize="small", ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def hasse_violations(rows) -> list:
    return [(p, u, n) for p, u, n, s in rows if s and (p + 1 - n) ** 2 > 4 * p]


def write_report(report: CertificateReport, outdir: Path, hasse_primes=None) -> dict[str, Path]:
    """Write certificate.json, claims.tsv, fiber_counts.tsv and two PNG figures into ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    primes = list(hasse_primes) if hasse_primes is not None else list(report.config.sweep) + [max(report.config.constants.bad_primes)]
    rows = [(p, u, n, s) for p in primes for u, n, s in fiber_point_counts(p)]
    paths = {
        "json": outdir / "certificate.json",
        "claims": outdir / "claims.tsv",
        "counts": outdir / "fiber_counts.tsv",
        "hasse": outdir / "hasse_bound.png",
        "timings": outdir / "claim_timings.png",
    }
    write_json(report, paths["json"])
    write_claims_tsv(report, paths["claims"])
    write_hasse_tsv(rows, paths["counts"])
    plot_hasse(rows, paths["hasse"])
    plot_timings(report, paths["timings"])
    (outdir / "digest.txt").write_text(report.digest() + "\n")
    return paths


def summary_line(report: CertificateReport) -> str:
    tally = {}
    for c in report.claims:
        tally[c.verdict] = tally.get(c.verdict, 0) + 1
    parts = ", ".join(f"{n} {v}" for v, n in sorted(tally.items()))
    n = len(report.claims)
    return f"{n} claim{'s' if n != 1 else ''}: {parts}; digest {report.digest()[:16]}"
