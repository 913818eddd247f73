import os
import importlib.util

###############################################################
# Initialize some variables: the values may be redefined later

numpy_found = importlib.util.find_spec("numpy") is not None
torch_found = importlib.util.find_spec("torch") is not None

script_folder = os.path.dirname(os.path.abspath(__file__))

cache_folder = (
    ""  # init cache_folder... should be populated with the set_cache_folder() function
)

# Set the verbosity option: print progress of the solvers. This is a boolean: False or True
verbose = (
    bool(int(os.environ["PYEQUIPART_VERBOSE"]))
    if "PYEQUIPART_VERBOSE" in os.environ
    else False
)

# Array backend used by the cell reductions. One of "auto", "numpy", "torch", "torch_cpu", "torch_gpu"
backend = (
    str(os.environ["PYEQUIPART_BACKEND"])
    if "PYEQUIPART_BACKEND" in os.environ
    else "auto"
)

# Number of workers for multi-start solvers and branch-parallel enumerations
n_jobs = (
    int(os.environ["PYEQUIPART_JOBS"])
    if "PYEQUIPART_JOBS" in os.environ
    else (os.cpu_count() or 1)
)

# Minimal angle between the lines spanned by two configuration vectors
delta_tol = (
    float(os.environ["PYEQUIPART_DELTA_TOL"])
    if "PYEQUIPART_DELTA_TOL" in os.environ
    else 1e-8
)

# Number of cells reduced at once
chunk_size = (
    int(os.environ["PYEQUIPART_CHUNK"]) if "PYEQUIPART_CHUNK" in os.environ else 65536
)

# Store enumerations of Gray cycles in the cache folder
use_cache = (
    bool(int(os.environ["PYEQUIPART_CACHE"]))
    if "PYEQUIPART_CACHE" in os.environ
    else True
)

# Run the acceptance-size regression suites
slow_tests = (
    bool(int(os.environ["PYEQUIPART_SLOW_TESTS"]))
    if "PYEQUIPART_SLOW_TESTS" in os.environ
    else False
)
