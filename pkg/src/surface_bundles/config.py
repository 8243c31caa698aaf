"""
Configuration settings for surface_bundles.

Environment variables (a `.env` file in the working directory is honoured):
    SURFACE_BUNDLES_LOG_LEVEL       logging level for the CLI (default WARNING)
    SURFACE_BUNDLES_LOG_FORMAT      "text" or "json"
    SURFACE_BUNDLES_MAX_WORKERS     concurrency of batch verification
    SURFACE_BUNDLES_KIM_WORD        "single" (w = v4) or "squared" (w = v4^2) at genus 2
    SURFACE_BUNDLES_PENNER_MAX_POWER  highest matrix power tried by the growth certificate
    SURFACE_BUNDLES_POWER_ITERATIONS  power-iteration steps for the dilatation estimate
"""
import os

from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("SURFACE_BUNDLES_LOG_LEVEL", "WARNING").upper()
LOG_FORMAT = os.getenv("SURFACE_BUNDLES_LOG_FORMAT", "text").lower()
MAX_WORKERS = int(os.getenv("SURFACE_BUNDLES_MAX_WORKERS", "4"))
KIM_WORD = os.getenv("SURFACE_BUNDLES_KIM_WORD", "single").lower()
PENNER_MAX_POWER = int(os.getenv("SURFACE_BUNDLES_PENNER_MAX_POWER", "64"))
POWER_ITERATIONS = int(os.getenv("SURFACE_BUNDLES_POWER_ITERATIONS", "200"))

# Generation defaults (the smallest instance of the construction)
GENERATION_DEFAULTS = {
    "g": 2,
    "h": 2,
    "n": 3,
    "k": 1,
}

# Parameter bounds checked before any work is done
PARAMETER_BOUNDS = {
    "fiber_genus_min": 2,
    "base_genus_min": 2,       # pipeline bundles; h = 1 goes through the torus family
    "lonne_power_min": 3,      # exponents 1 and 2 are excluded by the embedding theorem
    "torus_power_min": 1,
    "mod_min": 2,
}

# Surface-group generator names used in records and pairing tables
SURFACE_GENERATOR_PREFIXES = {
    "gamma": "g",
    "delta": "d",
}

# Report wording, kept here so templates and tests agree
REPORT_LABELS = {
    "fiber_sum_verdict": "fiber sum indecomposable (injective monodromy)",
    "section_sum_verdict": "section sum indecomposable (irreducible monodromy)",
    "lonne_hypothesis": "Lonne exponent hypothesis n not in {1, 2}",
}

LOG_FORMATS = ("text", "json")
