"""Plain-text reports (pure: values in, text out).

StrictUndefined: a value the template asks for but the caller did not pass
raises instead of rendering blank. No timestamps, so output is byte-stable.
"""
from __future__ import annotations

from jinja2 import Environment, PackageLoader, StrictUndefined

from surface_bundles.invariants import euler_characteristic, h1_mod_n, h1_total_space, signature
from surface_bundles.models import (
    CertificateReport,
    MonodromyFactorization,
    SeparationReport,
    VerificationReport,
)

_env = Environment(
    loader=PackageLoader("surface_bundles.render", "templates"),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)


def render_invariants(f: MonodromyFactorization, *, mod: int | None = None,
                      with_signature: bool = False, with_euler: bool = False) -> str:
    """H1 of the total space, plus the optional mod-n rank, Euler characteristic and signature."""
    tpl = _env.get_template("invariants.txt.j2")
    return tpl.render(
        subject=str(f.provenance), fiber_genus=f.fiber_genus, base_genus=f.base_genus,
        h1=h1_total_space(f),
        mod=dict(n=mod, rank=h1_mod_n(f, mod)) if mod is not None else None,
        euler=euler_characteristic(f) if with_euler else None,
        signature=signature(f) if with_signature else None,
    )


def render_verification(report: VerificationReport) -> str:
    return _env.get_template("verification.txt.j2").render(report=report)


def render_certificate(report: CertificateReport) -> str:
    return _env.get_template("certificate.txt.j2").render(report=report)


def render_separation(report: SeparationReport) -> str:
    rows = list(zip(report.labels, report.groups))
    return _env.get_template("separation.txt.j2").render(report=report, rows=rows)
