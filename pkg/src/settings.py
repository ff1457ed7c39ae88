from pathlib import Path

import toml

PROJECT_ROOT = Path(__file__).resolve().parent.parent
CONFIG_DIR = PROJECT_ROOT / "etc"

try:
    config = toml.load(CONFIG_DIR / "local_config.toml")
except FileNotFoundError:
    config = toml.load(CONFIG_DIR / "config.toml")

SOLVER_TOL = config["solver"]["tol"]
SOLVER_INITIAL_GAP = config["solver"]["initial_gap"]
SOLVER_MAX_BRACKET_SHRINKS = config["solver"]["max_bracket_shrinks"]
SOLVER_MAX_ITERATIONS = config["solver"]["max_iterations"]

MASS_TOL = config["tolerances"]["mass"]
ASSERTION_TOL = config["tolerances"]["assertion"]
FD_STEP = config["tolerances"]["finite_difference_step"]
FD_RTOL = config["tolerances"]["finite_difference_rtol"]

DEFAULT_SEED = config["simulation"]["seed"]
DEFAULT_THREADS = config["simulation"]["threads"]
REMOVAL_CONVENTION = config["simulation"]["removal_convention"]
FLOOR_SLACK = config["simulation"]["floor_slack"]

PAGERANK_DAMPING = config["pagerank"]["damping"]
PAGERANK_RADIUS = config["pagerank"]["radius"]

LOCAL_LIMIT_CUTOFF = config["local_limit"]["cutoff"]
LOCAL_LIMIT_SAMPLES = config["local_limit"]["samples"]
LOCAL_LIMIT_BATCH_SIZE = config["local_limit"]["batch_size"]

LOG_LEVEL = config["logging"]["level"]
LOG_FORMAT = config["logging"]["format"]
