"""
Runtime Configuration

All tunables are read once from the environment (or a local .env file)
when this module is imported. Every name carries the TETRACHROME_ prefix.

DESK SCALE:
- The structure detectors are Θ(n^7) in the worst case, so full pipeline
  runs are capped at MAX_VERTICES unless the caller passes force=True.
- The brute-force oracle is capped separately; it exists for testing only.
"""
import os
from dotenv import load_dotenv

load_dotenv()

# ============================================================================
# SIZE CEILINGS
# ============================================================================

MAX_VERTICES = int(os.getenv("TETRACHROME_MAX_VERTICES", "64"))

# brute_k_colorable refuses k=4 instances above this size
ORACLE_MAX_VERTICES = int(os.getenv("TETRACHROME_ORACLE_MAX_VERTICES", "20"))

# ============================================================================
# SAFETY NETS
# ============================================================================

# After every chromatic contraction, re-check (P6,C5)-freeness of the
# reduced graph while it has fewer vertices than this. 0 turns it off.
VERIFY_BELOW = int(os.getenv("TETRACHROME_VERIFY_BELOW", "48"))

# ============================================================================
# GENERATOR / REPORTING
# ============================================================================

REPAIR_LIMIT = int(os.getenv("TETRACHROME_REPAIR_LIMIT", "50"))

ANALYZE_CAP = int(os.getenv("TETRACHROME_ANALYZE_CAP", "10000"))

LOG_LEVEL = os.getenv("TETRACHROME_LOG_LEVEL", "WARNING").upper()
