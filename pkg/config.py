# config.py
import os

DB_PATH = os.environ.get("DB_PATH", "reports.db")

# Random coefficient bound B for l.s.o.p. and omega draws
DEFAULT_BOUND = int(os.environ.get("GEL_BOUND", "97"))
DEFAULT_TRIALS = int(os.environ.get("GEL_TRIALS", "16"))
COUNTEREXAMPLE_TRIALS = int(os.environ.get("GEL_CE_TRIALS", "20"))
DEFAULT_SEED = int(os.environ.get("GEL_SEED", "1"))

# Attempts before lsop_random gives up
LSOP_ATTEMPTS = int(os.environ.get("GEL_LSOP_ATTEMPTS", "64"))

# Face enumeration cap (vertices)
MAX_VERTICES = int(os.environ.get("GEL_MAX_VERTICES", "16"))

# Bit size of the random primes used by the mod-p fast path
PRIME_BITS = int(os.environ.get("GEL_PRIME_BITS", "31"))

LOG_LEVEL = os.environ.get("GEL_LOG_LEVEL", "WARNING")
