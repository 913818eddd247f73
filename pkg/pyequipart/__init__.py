import os

###########################################################
# Set version

with open(
    os.path.join(os.path.abspath(os.path.dirname(__file__)), "version"),
    encoding="utf-8",
) as v:
    __version__ = v.read().rstrip()

###########################################################
# Utils

import pyequipart.config
from .common.set_path import set_cache_folder, clean_pyequipart

set_cache_folder()

from .arrangement import Configuration, Hyperplane, residual, test_map
from .measures import orthant_masses, total_mass

if pyequipart.config.numpy_found:
    from .test.install import test_numpy_bindings

if pyequipart.config.torch_found:
    from .test.install import test_torch_bindings
