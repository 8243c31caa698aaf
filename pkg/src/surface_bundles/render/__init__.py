"""Report renderer: pure functions from result models to text."""

from surface_bundles.render.reports import (  # noqa: F401
    render_certificate,
    render_invariants,
    render_separation,
    render_verification,
)
