"""
General enums for use across the surface_bundles package.

Naming conventions:
- Values are the lowercase tokens that appear in files and on the command line,
  so `Enum(value)` doubles as the parser for those tokens.
- One docstring per enum; per-value comments only where the token is not obvious.
"""
from enum import Enum, IntEnum


class MapOrder(Enum):
    """How a GroupMap treats products: images keep or reverse the letter order."""
    HOMOMORPHISM = "homomorphism"
    ANTI_HOMOMORPHISM = "anti-homomorphism"


class WordOrder(Enum):
    """Reading convention of a TwistWord."""
    LEFT = "left"      # functional composition: the rightmost twist acts first
    RIGHT = "right"    # application order: the leftmost twist acts first


class VerificationLevel(Enum):
    """Where the relator identity of a factorization was established."""
    RAAG = "raag"
    BRAID = "braid"
    HOMOLOGY = "homology"


class KimWordVariant(Enum):
    """Reading of the Kim word at genus 2 (identical for g >= 3)."""
    SINGLE = "single"      # w = v4
    SQUARED = "squared"    # w = v4^2


class ProvenanceKind(Enum):
    """Which construction produced a factorization."""
    XN = "xn"
    TORUS = "torus"
    FIBER_SUM = "fiber-sum"
    SECTION_SUM = "section-sum"
    MANUAL = "manual"


class SumKind(Enum):
    """Gluing operation for two bundles."""
    FIBER = "fiber"
    SECTION = "section"


class CheckStatus(Enum):
    """Outcome of one certificate sub-check."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"    # e.g. link condition when no dissection was supplied


class BatchStatus(Enum):
    """Status of a batch run."""
    SUCCESS = "success"
    PARTIAL = "partial"    # some items succeeded, some failed
    ERROR = "error"


class ExitStatus(IntEnum):
    """Process exit codes of the command-line front end."""
    OK = 0
    PARSE_ERROR = 2        # same code argparse uses for bad arguments
    PRECONDITION = 3
    VERIFICATION_FAILED = 4
