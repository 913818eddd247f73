import pyequipart.config

default_dtype = "float64"  # cell reductions always run in double precision

from .utils import numpytools

__all__ = ["numpytools"]
