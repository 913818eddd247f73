import torch

default_dtype = torch.float64  # cell reductions always run in double precision

from .utils import torchtools

__all__ = ["torchtools"]
