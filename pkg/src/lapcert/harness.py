"""Corpus scans: certificates against oracles, with verdicts and reports.

A scan never stops at a violation; every counterexample is collected and
the caller (normally the CLI) turns the count into an exit status.
"""

from __future__ import annotations

import csv
import dataclasses
import hashlib
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .certificates import CertId, Certificate, Kind, evaluate_all
from .errors import GraphFormatError, LapcertError
from .families import FAMILIES, expand_family_range, generate_family
from .graph import Graph
from .io import parse_edge_list, parse_graph6, write_graph6
from .oracles import ExactInvariants, OracleCaps, compute_invariants
from .spectral import SpectralSummary, summarize

SCHEMA_VERSION = "1.0"
WORKERS_ENV = "LAPCERT_WORKERS"
EQUALITY_RTOL = 1e-6

CONFIRMED = "confirmed"
VACUOUS = "vacuous"
INAPPLICABLE = "inapplicable"
SKIPPED = "skipped"
VIOLATION = "VIOLATION"
VERDICTS = (CONFIRMED, VACUOUS, INAPPLICABLE, SKIPPED, VIOLATION)
CERT_ORDER = [c.value for c in CertId]


@dataclass(frozen=True)
class ScanConfig:
    """What to scan and how.

    ``sources`` entries are graph6 files (``.g6``/``.graph6``), edge-list
    files, or family specs such as ``path:4..12``. ``theta_scale`` multiplies
    theta before the certificates are evaluated; anything other than 1 is a
    negative control and is expected to produce violations.
    """

    sources: tuple[str, ...]
    subset_samples: int = 200
    seed: int = 0
    oracle_caps: OracleCaps = field(default_factory=OracleCaps)
    tolerance: float = 1e-9
    forwarding: bool = True
    theta_scale: float = 1.0
    workers: int | None = None


@dataclass
class ReportRow:
    graph_id: str
    n: int
    m: int
    graph6: str
    summary: dict
    certificates: list[dict]
    invariants: dict


@dataclass
class Report:
    rows: list[ReportRow]
    summary: dict
    config: dict
    generated_at: str = ""

    @property
    def violations(self) -> int:
        return self.summary["violations"]

    def content_hash(self) -> str:
        """SHA-256 of the JSON rendering with the timestamp removed."""
        return hashlib.sha256(render_json(self, timestamp=False)).hexdigest()


def _is_family(source: str) -> bool:
    name = source.partition(":")[0]
    return name in FAMILIES and not Path(source).exists()


def load_sources(sources: tuple[str, ...] | list[str]) -> list[tuple[str, Graph]]:
    """Resolve sources into ``(graph_id, graph)`` pairs in input order.

    Unreadable or malformed files raise :class:`LapcertError` naming the file
    and line.
    """
    out: list[tuple[str, Graph]] = []
    for source in sources:
        if _is_family(source):
            for spec in expand_family_range(source):
                out.append((str(spec), generate_family(spec)))
            continue
        path = Path(source)
        try:
            text = path.read_text()
        except OSError as exc:
            raise LapcertError(f"{source}: cannot read ({exc.strerror or exc})") from exc
        if path.suffix in (".g6", ".graph6"):
            for lineno, line in enumerate(text.splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    out.append((f"{path.name}:{lineno}", parse_graph6(line)))
                except GraphFormatError as exc:
                    raise LapcertError(f"{source}:{lineno}: {exc}") from exc
        else:
            try:
                out.append((path.name, parse_edge_list(text)))
            except GraphFormatError as exc:
                raise LapcertError(f"{source}:{exc.line or 1}: {exc}") from exc
    return out


def verdict(cert: Certificate, inv: ExactInvariants, tol: float = 1e-9) -> tuple[str, float | None]:
    """Compare one certificate with the oracle; returns ``(verdict, tightness ratio)``."""
    if not cert.applicable:
        return INAPPLICABLE, None
    if cert.kind is Kind.CHECK:
        return (CONFIRMED if cert.value else VIOLATION), None
    truth = getattr(inv, cert.target)
    if truth is None:
        return SKIPPED, None
    if cert.kind is Kind.SUFFICIENT:
        if not cert.value:
            return VACUOUS, None
        return (CONFIRMED if truth else VIOLATION), None
    value = cert.value
    ratio = value / truth if math.isfinite(truth) and truth != 0 else None
    if cert.kind is Kind.EQUALITY:
        return (CONFIRMED if value == truth else VIOLATION), ratio
    if cert.kind is Kind.LOWER:
        inexact = (cert.target == "xi" and not inv.xi_exact) or (cert.target == "pi" and not inv.pi_exact)
        if value > truth + tol:
            return VIOLATION, ratio
        if inexact:
            # the oracle value is only an upper bound on the invariant
            return SKIPPED, None
        return (VACUOUS if cert.vacuous else CONFIRMED), ratio
    if value < truth - tol:
        return VIOLATION, ratio
    return CONFIRMED, ratio


def _summary_record(s: SpectralSummary) -> dict:
    return dataclasses.asdict(s)


def evaluate_graph(graph_id: str, g: Graph, config: ScanConfig) -> ReportRow:
    s = summarize(g)
    if config.theta_scale != 1.0:
        s = dataclasses.replace(s, theta=s.theta * config.theta_scale)
    certs = evaluate_all(g, s, samples=config.subset_samples, seed=config.seed)
    inv = compute_invariants(g, config.oracle_caps, forwarding=config.forwarding)
    records = []
    for c in certs:
        v, ratio = verdict(c, inv, config.tolerance)
        rec = c.record()
        truth = getattr(inv, c.target) if c.target else None
        rec["oracle"] = truth
        rec["verdict"] = v
        rec["ratio"] = ratio
        rec["equality"] = ratio is not None and abs(ratio - 1.0) <= EQUALITY_RTOL
        records.append(rec)
    return ReportRow(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        graph6=write_graph6(g),
        summary=_summary_record(s),
        certificates=records,
        invariants=inv.record(),
    )


def _evaluate_item(args: tuple[str, Graph, ScanConfig]) -> ReportRow:
    return evaluate_graph(*args)


def summarize_rows(rows: list[ReportRow]) -> dict:
    counts = {cid: {v: 0 for v in VERDICTS} for cid in CERT_ORDER}
    for row in rows:
        for rec in row.certificates:
            counts[rec["id"]][rec["verdict"]] += 1
    violations = sum(c[VIOLATION] for c in counts.values())
    return {"graphs": len(rows), "violations": violations, "verdicts": counts}


def _worker_count(config: ScanConfig) -> int:
    if config.workers is not None:
        return max(1, config.workers)
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def scan(config: ScanConfig) -> Report:
    items = load_sources(config.sources)
    work = [(gid, g, config) for gid, g in items]
    workers = _worker_count(config)
    if workers > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_evaluate_item, work, chunksize=max(1, len(work) // (4 * workers))))
    else:
        rows = [_evaluate_item(w) for w in work]
    cfg = {
        "sources": list(config.sources),
        "subset_samples": config.subset_samples,
        "seed": config.seed,
        "oracle_caps": dataclasses.asdict(config.oracle_caps),
        "tolerance": config.tolerance,
        "forwarding": config.forwarding,
        "theta_scale": config.theta_scale,
    }
    return Report(
        rows=rows,
        summary=summarize_rows(rows),
        config=cfg,
        generated_at=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )


def _clean(x):
    """Round floats to 12 significant digits; infinities become strings."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        if math.isnan(x):
            return None
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    return x


def _row_record(row: ReportRow) -> dict:
    return {
        "graph_id": row.graph_id,
        "n": row.n,
        "m": row.m,
        "graph6": row.graph6,
        "summary": row.summary,
        "invariants": row.invariants,
        "certificates": row.certificates,
    }


def render_json(report: Report, *, timestamp: bool = True) -> bytes:
    doc = {"schema_version": SCHEMA_VERSION}
    if timestamp:
        doc["generated_at"] = report.generated_at
    doc["config"] = report.config
    doc["summary"] = report.summary
    doc["rows"] = [_row_record(r) for r in report.rows]
    return (json.dumps(_clean(doc), indent=2) + "\n").encode()


SUMMARY_FIELDS = ["d", "delta", "Delta", "sigma1", "sigma_max", "theta"]
INVARIANT_FIELDS = ["kappa", "kappa_prime", "alpha", "chi", "hamiltonian", "gamma", "beta", "xi", "xi_exact", "pi", "pi_exact"]
CERT_FIELDS = ["applicable", "value", "verdict", "ratio"]


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return f"{x:.12g}"
    return str(x)


def render_csv(report: Report) -> bytes:
    header = ["graph_id", "n", "m", "graph6"] + SUMMARY_FIELDS + INVARIANT_FIELDS
    header += [f"{cid}.{f}" for cid in CERT_ORDER for f in CERT_FIELDS]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in report.rows:
        by_id = {rec["id"]: rec for rec in row.certificates}
        cells = [row.graph_id, row.n, row.m, row.graph6]
        cells += [row.summary[k] for k in SUMMARY_FIELDS]
        cells += [row.invariants[k] for k in INVARIANT_FIELDS]
        for cid in CERT_ORDER:
            rec = by_id.get(cid, {})
            cells += [rec.get(f) for f in CERT_FIELDS]
        w.writerow([_csv_cell(c) for c in cells])
    return buf.getvalue().encode()


def report_render(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        return render_json(report)
    if fmt == "csv":
        return render_csv(report)
    raise ValueError(f"unknown report format {fmt!r}; expected json or csv")
