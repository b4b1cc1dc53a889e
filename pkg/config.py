"""
Configuration for the Thompson's group F core toolkit

Environment variables and settings for the decision procedures.
See docs/configuration.md for all available options.
"""
import os
from dotenv import load_dotenv

load_dotenv()

# ===========================================
# Word Problem Configuration
# ===========================================
# Node expansions allowed per word pair before a check gives up with Unknown
DEFAULT_BUDGET = int(os.getenv("FCORE_BUDGET", "100000"))

# ===========================================
# Quotient Enumeration Configuration
# ===========================================
# Hard limit on distinct quotients of one automaton (CapExceeded past this)
QUOTIENT_CAP = int(os.getenv("FCORE_QUOTIENT_CAP", "10000"))

# ===========================================
# Jones Family Configuration
# ===========================================
# Largest prime accepted by verify_jones_core (the core has p^2+p+2 vertices)
MAX_JONES_PRIME = int(os.getenv("FCORE_MAX_JONES_PRIME", "7"))

# ===========================================
# Output Configuration
# ===========================================
VERBOSE = os.getenv("FCORE_VERBOSE", "false").lower() == "true"

# Fill colour per vertex type in DOT exports, as type=colour pairs
DOT_COLORS_RAW = os.getenv(
    "FCORE_DOT_COLORS",
    "root=gold,left=lightblue,right=lightpink,middle=palegreen",
)


def parse_dot_colors(raw: str) -> dict[str, str]:
    """Parse `type=colour` pairs separated by commas."""
    colors = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"Bad colour entry '{item}' (expected type=colour)")
        kind, color = (part.strip() for part in item.split("=", 1))
        colors[kind] = color
    return colors


# ===========================================
# Validation
# ===========================================
def validate_config():
    """Validate configuration values"""
    problems = []

    if DEFAULT_BUDGET <= 0:
        problems.append(f"FCORE_BUDGET must be positive (got {DEFAULT_BUDGET})")
    if QUOTIENT_CAP <= 0:
        problems.append(f"FCORE_QUOTIENT_CAP must be positive (got {QUOTIENT_CAP})")
    if MAX_JONES_PRIME < 2:
        problems.append(f"FCORE_MAX_JONES_PRIME must be at least 2 (got {MAX_JONES_PRIME})")

    try:
        colors = parse_dot_colors(DOT_COLORS_RAW)
        unknown = set(colors) - {"root", "left", "right", "middle"}
        if unknown:
            problems.append(f"FCORE_DOT_COLORS has unknown vertex types: {', '.join(sorted(unknown))}")
    except ValueError as e:
        problems.append(f"FCORE_DOT_COLORS: {e}")

    if problems:
        raise ValueError(
            "Invalid configuration:\n  " + "\n  ".join(problems)
        )

    return True
